#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhgr/field.hpp"

namespace qhgr {

/// Univariate polynomial over a FieldCtx, coefficients low degree first with
/// trailing zeros removed.
class Poly {
 public:
  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldCtx field);
  Poly(FieldCtx field, std::vector<Fe> coeffs);

  static Poly constant(const FieldCtx& field, const Fe& c);
  static Poly monomial(const FieldCtx& field, const Fe& c, int exponent);
  static Poly variable(const FieldCtx& field);
  static Poly from_ints(const FieldCtx& field, const std::vector<i64>& coeffs);
  /// Parses "c0 + c1*x + c2*x^2"; extension-field coefficients go in
  /// parentheses, e.g. "(1 + a)*x^2 + 3".
  static Poly parse(const FieldCtx& field, std::string_view text);

  const FieldCtx& field() const { return field_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fe coeff(int i) const;
  Fe leading() const;

  Poly monic() const;
  Poly scaled(const Fe& s) const;
  Poly shifted(int k) const;  // multiply by x^k
  Poly derivative() const;
  Fe eval(const Fe& x) const;

  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();
  FieldCtx field_;
  std::vector<Fe> c_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

PolyDivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus);

bool is_squarefree(const Poly& f);

/// Exact irreducibility test. Finite fields: distinct-degree screening with
/// gcd(f, x^(q^i) - x). Q: integer factor search (degree <= 64). Throws
/// MathError beyond the degree cap or for unsupported fields. Requires f
/// nonconstant.
bool is_irreducible(const Poly& f);

/// Distinct-degree factorization of a squarefree polynomial over a finite
/// field: pairs (d, product of all monic irreducible factors of degree d).
std::vector<std::pair<int, Poly>> distinct_degree_factorization(const Poly& f);

/// Degrees of the irreducible factors of a squarefree polynomial over a
/// finite field, ascending.
std::vector<int> factor_degrees(const Poly& f);

/// Monic irreducible factors of a squarefree polynomial over a small finite
/// field (Cantor-Zassenhaus with a fixed seed), sorted by (degree, text).
std::vector<Poly> factor_squarefree(const Poly& f);

/// Rebuilds a polynomial over another field from integer-valued
/// coefficients (Q -> GF(p) reduction, Q -> number field embedding).
Poly map_rational_coefficients(const Poly& f, const FieldCtx& target);

}  // namespace qhgr
