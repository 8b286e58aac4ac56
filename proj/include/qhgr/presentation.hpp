#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhgr/diagram.hpp"
#include "qhgr/field.hpp"
#include "qhgr/qh.hpp"

namespace qhgr {

/// e_i(values); e_0 = 1. Throws std::out_of_range unless 0 <= i <= size.
Fe elementary_sym(const FieldCtx& field, const std::vector<Fe>& values, int i);

/// h_i(values) through h_r = sum_{i>=1} (-1)^(i-1) e_i h_{r-i}; h_0 = 1.
Fe complete_sym(const FieldCtx& field, const std::vector<Fe>& values, int i);

/// Y_r = det(x_{1+j-i})_{r x r} in x_1..x_k (x_j = 0 for j > k), via
/// Y_r = x_1 Y_{r-1} - x_2 Y_{r-2} + ... .
SpecialPolynomial y_polynomial(int r, int k);

/// A multiset of roots of unity, recorded as exponents of the canonical
/// primitive root (ascending, repeats allowed) together with the values.
struct AdmissibleMultiset {
  std::vector<int> exponents;
  std::vector<Fe> roots;

  /// "[0,2]"
  std::string to_string() const;
};

/// Everything needed to evaluate QH(Gr(k,n); F) at roots of unity.
/// Write n = p^d * m with gcd(m, p) = 1 (d = 0 in characteristic 0). The
/// distinct roots are the m-th roots of unity zeta^0..zeta^(m-1); each may
/// repeat up to p^d times.
struct EvContext {
  GrContext ctx;
  FieldCtx source;     // coefficient field of the QH elements
  FieldCtx splitting;  // field holding the roots and xi
  Fe xi;               // xi^n = -(-1)^k
  Fe zeta;             // primitive m-th root of unity
  std::vector<Fe> roots;
  int multiplicity_cap = 1;
  u64 root_order = 1;  // m

  /// The multiset parsed from "[0,2]"; validates multiplicities.
  AdmissibleMultiset multiset(std::string_view text) const;
};

/// Builds the splitting field and xi. xi = 1 when xi^n = 1 is allowed (k odd
/// or characteristic 2); otherwise xi is a primitive 2m-th root of unity.
/// The source must be Q or a prime field.
EvContext make_ev_context(const GrContext& ctx, const FieldCtx& source);

/// All admissible multisets of size k in lexicographic exponent order.
std::vector<AdmissibleMultiset> admissible_multisets(const EvContext& ev);

/// Admissible multisets of size k drawn from the n-th roots of unity that
/// already lie in `field` (propagates MathError when they do not).
std::vector<AdmissibleMultiset> admissible_multisets(const FieldCtx& field, int k, int n);

/// The image of x_i: xi^i e_i(zeta_J).
Fe ev_special(const EvContext& ev, const AdmissibleMultiset& j, int i);

/// ev_J(a): q -> 1, x_i -> xi^i e_i(zeta_J), other classes via Giambelli.
Fe ev_map(const EvContext& ev, const AdmissibleMultiset& j, const QhElement& a);

struct IdealCheck {
  std::string generator;  // "h_5" or "h_6+1"
  Fe value;
  bool vanishes = false;
};

struct IdealReport {
  std::string multiset;
  std::vector<IdealCheck> checks;
  bool all_vanish() const;
};

/// Evaluates h_{n-k+1..n-1}(xi zeta_J) and h_n(xi zeta_J) + (-1)^k.
IdealReport verify_ideal_vanishing(const EvContext& ev, const AdmissibleMultiset& j);

/// Membership of a splitting-field element in the subfield generated by the
/// roots of unity over the prime field.
bool in_root_subfield(const EvContext& ev, const Fe& value);

}  // namespace qhgr
