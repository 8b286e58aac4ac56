#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhgr/diagram.hpp"
#include "qhgr/field.hpp"
#include "qhgr/matrix.hpp"
#include "qhgr/poly.hpp"
#include "qhgr/qh.hpp"

namespace qhgr {

/// Basis of QH^0: q^(-|D|/n) sigma_D for every D with n | |D|.
std::vector<GradedBasisElement> qh0_basis(const GrContext& ctx);

/// Matrix of b -> a*b on graded_basis(ctx, degree); column j is the image of
/// the j-th basis element. Throws std::invalid_argument unless a is
/// homogeneous of degree 0.
SquareMatrix mult_matrix(const QhElement& a, int degree);

enum class DegreeZeroElement {
  Primary,  // sigma_empty - q^-1 x_2 * v_1
  Variant,  // q^-1 x_2 * v_1
};

/// The degree-zero element of Gr(2,n) built from v_1 = sigma_(n-3,1)
/// (v_1 = 0 when n < 4). Requires n >= 3.
QhElement special_degree_zero_element(int n, const FieldCtx& field, DegreeZeroElement which = DegreeZeroElement::Primary);

/// Its action on the degree n-2 piece of QH(Gr(2,n)), computed in the ring.
SquareMatrix degree_zero_action(int n, const FieldCtx& field, DegreeZeroElement which = DegreeZeroElement::Primary);

/// The same action written down directly: tridiagonal with -1 off the
/// diagonal, +1 in the top-left corner and, for even n, +1 in the
/// bottom-right corner.
SquareMatrix closed_form_matrix(int n, const FieldCtx& field);

/// R_l with R_0 = 1, R_1 = 1 + x + x^2, R_l = (x^2+1) R_{l-1} - x^2 R_{l-2}.
Poly r_polynomial(int l);

/// The polynomial x^D pi(-x - 1/x) that the characteristic polynomial of the
/// degree-zero action must produce: 1 + x + ... + x^(n-1) for odd n and
/// (x+1)(1 + ... + x^(n-1)) for even n.
Poly charpoly_target(int n);

/// Expands x^D pi(-x - 1/x) with D = deg pi. Throws std::invalid_argument
/// when the Laurent expansion has negative powers (deg pi > D).
Poly laurent_substitution(const Poly& pi, int shift);

/// pi over Q with x^D pi(-x-1/x) = charpoly_target(n), D = floor((n-1)/2) for
/// odd n and n/2 for even n. Throws std::invalid_argument for n < 3.
Poly closed_form_charpoly(int n);

/// True when char_poly-like pi satisfies the identity for n.
bool satisfies_charpoly_identity(const Poly& pi, int n);

/// Whether {p, -1} generates (Z/nZ)^x. Throws std::invalid_argument unless
/// gcd(p, n) = 1.
bool generates_units(u64 p, u64 n);

/// Orbits of {a, -a} -> {pa, -pa} on the pairs {a, -a mod n}, a != 0.
struct OrbitDecomposition {
  u64 n = 0;
  u64 p = 0;
  /// Each orbit lists pairs (a, n-a) with a <= n-a, ascending.
  std::vector<std::vector<std::pair<u64, u64>>> orbits;

  std::size_t count() const { return orbits.size(); }
  std::vector<int> sizes() const;
  std::string to_string() const;
};

/// Orbits sorted by (size, smallest representative). Requires gcd(n, p) = 1.
OrbitDecomposition orbit_decomposition(u64 n, u64 p);

/// The rule verdict: k = 1, or k = 2 with n prime, n != char and, in
/// characteristic p, {|F|, -1} generating (Z/nZ)^x. Uses min(k, n-k).
bool rule_is_graded_field(int k, int n, u64 characteristic, u64 field_order);

struct FieldTest {
  bool is_field = false;
  std::string method;  // "rule-only", "irreducibility", "exhaustive", ...
  std::optional<bool> irreducible;
  std::optional<bool> units_criterion;
  std::optional<bool> exhaustive;
  bool rule = false;
  std::vector<std::string> evidence;
};

/// Exhaustive search over QH^0 up to scalars; returns a zero divisor's
/// coordinates on qh0_basis, or nullopt when there is none. Requires a
/// finite field with |F|^dim <= limit (throws MathError otherwise).
std::optional<std::vector<Fe>> find_zero_divisor(const GrContext& ctx, const FieldCtx& field,
                                                 u64 limit = 1'000'000);

/// Whether QH(Gr(k,n); F) is a graded field, with the evidence gathered.
FieldTest is_graded_field(const GrContext& ctx, const FieldCtx& field);

struct ClassifierVerdict {
  enum class Diameter { FiniteWithBound, Infinite, Unknown };

  int k = 0;
  int n = 0;
  u64 characteristic = 0;
  bool is_graded_field = false;
  Diameter diameter = Diameter::Unknown;
  int bound = 0;  // meaningful for FiniteWithBound
  std::optional<int> orbit_count;
  std::optional<std::vector<int>> field_dims;
  std::vector<std::string> reasons;

  /// {k, n, char, isGradedField, diameter:{kind,bound?}, orbitCount?, fieldDims?, reasons}
  std::string to_json() const;
};

/// Throws std::invalid_argument for invalid (k, n) or non-prime nonzero char.
ClassifierVerdict classify(int k, int n, u64 characteristic);

/// Smallest prime p != n below 10^4 with generates_units(p, n). Throws
/// std::invalid_argument for composite n and MathError when none is found.
u64 witness_prime(u64 n);

}  // namespace qhgr
