#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhgr/number_theory.hpp"

namespace qhgr {

/// Raised when an operation is mathematically unsupported for the given
/// inputs (wrong characteristic, exhausted search, degree cap exceeded).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind {
  Rationals,
  PrimeField,
  ExtField,     // GF(p^m) = GF(p)[a]/(modulus)
  NumberField,  // Q[w]/(modulus), used for cyclotomic fields
};

/// A field element. The storage alternative is fixed by the owning FieldCtx:
/// u64 for GF(p), residue vector of length m for GF(p^m), mpq_class for Q and
/// a length-deg vector of rationals for number fields. Storage is always
/// normalized, so structural equality is field equality.
class Fe {
 public:
  using Residues = std::vector<u64>;
  using RatVec = std::vector<mpq_class>;
  using Storage = std::variant<u64, Residues, mpq_class, RatVec>;

  Fe() = default;
  explicit Fe(Storage s) : s_(std::move(s)) {}

  const Storage& storage() const { return s_; }

  friend bool operator==(const Fe& a, const Fe& b) { return a.s_ == b.s_; }

 private:
  Storage s_{u64{0}};
};

/// Immutable description of a working field; cheap to copy and safe to share
/// between threads.
class FieldCtx {
 public:
  static FieldCtx rationals();
  static FieldCtx prime_field(u64 p);
  /// GF(p^m) with an explicit monic modulus of degree m (low degree first).
  /// Throws std::invalid_argument when the modulus is not irreducible.
  static FieldCtx extension(u64 p, std::vector<u64> modulus);
  /// Q[w]/(modulus) for a monic irreducible rational modulus.
  static FieldCtx number_field(std::vector<mpq_class> modulus, int cyclotomic_order = 0);
  /// Q(w) with w a primitive N-th root of unity.
  static FieldCtx cyclotomic(int order);
  /// "Q", "GF(p)", "GF(p^m)" (the latter through make_extension).
  static FieldCtx parse(std::string_view spec);

  FieldKind kind() const;
  u64 characteristic() const;
  /// Degree over the prime field (1 for Q and GF(p)).
  int degree() const;
  /// Number of elements when finite and representable.
  std::optional<u64> order() const;
  bool is_finite() const;
  std::string name() const;
  /// For cyclotomic number fields, the N with w a primitive N-th root.
  int cyclotomic_order() const;
  const std::vector<u64>& residue_modulus() const;
  const std::vector<mpq_class>& rational_modulus() const;

  Fe zero() const;
  Fe one() const;
  Fe from_int(i64 v) const;
  Fe from_mpz(const mpz_class& v) const;
  /// Throws MathError when the denominator vanishes in characteristic p.
  Fe from_rational(const mpq_class& v) const;
  /// The class of the adjoined generator (ExtField / NumberField only).
  Fe adjoined_generator() const;
  /// Builds an element from its coordinates on the power basis 1, a, a^2, ...
  Fe from_coordinates(const std::vector<i64>& coords) const;

  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe mul(const Fe& a, const Fe& b) const;
  /// Throws std::domain_error on zero.
  Fe inv(const Fe& a) const;
  Fe div(const Fe& a, const Fe& b) const;
  Fe pow(const Fe& a, i64 e) const;
  Fe pow(const Fe& a, const mpz_class& e) const;

  bool is_zero(const Fe& a) const;
  bool is_one(const Fe& a) const;
  /// True when the element lies in the prime subfield (GF(p) or Q).
  bool in_prime_subfield(const Fe& a) const;
  /// Integer value of a prime-subfield element in GF(p): residue in [0, p).
  u64 prime_residue(const Fe& a) const;
  const mpq_class& rational_value(const Fe& a) const;

  /// Finite fields: bijection [0, q) <-> elements, power-basis digits base p.
  Fe element_at(u64 index) const;
  u64 index_of(const Fe& a) const;
  /// Deterministic multiplicative generator: the smallest-index element of
  /// order q - 1.
  Fe primitive_element() const;

  std::string format(const Fe& a) const;
  Fe parse_element(std::string_view text) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b);
  friend bool operator!=(const FieldCtx& a, const FieldCtx& b) { return !(a == b); }

  struct Impl;

 private:
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// GF(p^m) with the first irreducible monic modulus in a fixed enumeration
/// (lower coefficients read as base-p digits, c0 least significant).
/// m = 1 returns the prime field. Throws std::invalid_argument for non-prime p.
FieldCtx make_extension(u64 p, int m);

/// The n distinct n-th roots of unity, listed as powers z^0, z^1, ... of
/// z = g^((q-1)/n) for the deterministic generator g (finite fields), or
/// z = w^(N/n) in the cyclotomic field Q(w_N). Throws MathError when the
/// characteristic divides n or the field lacks the roots.
std::vector<Fe> nth_roots_of_unity(const FieldCtx& field, u64 n);

/// The n-th cyclotomic polynomial over Z, low degree first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

}  // namespace qhgr
