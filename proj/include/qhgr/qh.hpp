#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhgr/diagram.hpp"
#include "qhgr/field.hpp"

namespace qhgr {

/// An element of QH*(Gr(k,n); F) = H*(Gr(k,n); F) (x) F[q, q^-1]. Terms are
/// keyed by (diagram, q power); zero coefficients are never stored.
class QhElement {
 public:
  using Terms = std::map<GradedBasisElement, Fe>;

  QhElement(GrContext ctx, FieldCtx field);

  static QhElement unit(const GrContext& ctx, const FieldCtx& field);
  static QhElement schubert(const GrContext& ctx, const FieldCtx& field, const YoungDiagram& d, int q_power = 0);
  /// x_j, the column of j boxes.
  static QhElement special(const GrContext& ctx, const FieldCtx& field, int j);
  /// Grammar: terms separated by + or -, each a '*'-product of an optional
  /// coefficient, an optional q or q^m, and sigma[r1,r2,...] (also written
  /// s[...]); sigma[-] is the unit class.
  static QhElement parse(const GrContext& ctx, const FieldCtx& field, std::string_view text);

  const GrContext& ctx() const { return ctx_; }
  const FieldCtx& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Fe coefficient(const YoungDiagram& d, int q_power) const;

  /// Adds c * q^q_power * sigma_d in place.
  void add_term(const YoungDiagram& d, int q_power, const Fe& c);

  /// The common degree when every term has the same degree; nullopt for
  /// zero or inhomogeneous elements.
  std::optional<int> degree() const;
  bool is_homogeneous(int degree) const;

  std::string to_string() const;

  QhElement scaled(const Fe& s) const;
  friend QhElement operator+(const QhElement& a, const QhElement& b);
  friend QhElement operator-(const QhElement& a, const QhElement& b);
  friend QhElement operator-(const QhElement& a);
  friend bool operator==(const QhElement& a, const QhElement& b);

 private:
  GrContext ctx_;
  FieldCtx field_;
  Terms terms_;
};

/// x_j * e by the quantum Pieri rule, 1 <= j <= k.
QhElement pieri_multiply(const QhElement& e, int j);

/// V_{j,0} * e (a row of j boxes), 1 <= j <= n - k, computed in the
/// transposed Grassmannian.
QhElement transposed_pieri_multiply(const QhElement& e, int j);

/// Integer polynomial in x_1..x_k: exponent vector (index i-1 holds the
/// power of x_i) -> coefficient.
using SpecialPolynomial = std::map<std::vector<int>, i64>;

/// sigma_D as a polynomial in the column classes: det(x_{c_i + j - i}) over
/// the column lengths c of D, with x_0 = 1 and x_r = 0 outside 0..k.
SpecialPolynomial giambelli_expand(const GrContext& ctx, const YoungDiagram& d);

std::string to_string(const SpecialPolynomial& p);

/// Integer expansion of sigma_a * sigma_b: list of (basis element, coefficient).
/// Results are cached per (k, n, a, b); the cache is safe for concurrent use.
using IntegerExpansion = std::vector<std::pair<GradedBasisElement, i64>>;
const IntegerExpansion& schubert_product(const GrContext& ctx, const YoungDiagram& a, const YoungDiagram& b);

/// Bilinear quantum product. Throws std::invalid_argument on mismatched
/// context or field.
QhElement quantum_product(const QhElement& a, const QhElement& b);

/// a^e for e >= 0.
QhElement quantum_power(const QhElement& a, int e);

/// Multiplies by q^m.
QhElement q_shift(const QhElement& a, int m);

/// Number of cached structure-constant entries (diagnostics).
std::size_t structure_cache_size();

}  // namespace qhgr
