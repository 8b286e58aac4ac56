#include "qhgr/degree_zero.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace qhgr {

std::vector<GradedBasisElement> qh0_basis(const GrContext& ctx) { return graded_basis(ctx, 0); }

SquareMatrix mult_matrix(const QhElement& a, int degree) {
  if (!a.is_homogeneous(0)) throw std::invalid_argument("mult_matrix: element is not homogeneous of degree 0");
  const auto basis = graded_basis(a.ctx(), degree);
  SquareMatrix m(a.field(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const QhElement image =
        quantum_product(a, QhElement::schubert(a.ctx(), a.field(), basis[col].diagram, basis[col].q_power));
    for (std::size_t row = 0; row < basis.size(); ++row) {
      m.at(row, col) = image.coefficient(basis[row].diagram, basis[row].q_power);
    }
  }
  return m;
}

QhElement special_degree_zero_element(int n, const FieldCtx& field, DegreeZeroElement which) {
  if (n < 3) throw std::invalid_argument("the degree-zero element needs n >= 3");
  const GrContext ctx(2, n);
  QhElement shifted(ctx, field);
  if (n >= 4) {
    const QhElement v1 = QhElement::schubert(ctx, field, YoungDiagram({n - 3, 1}));
    shifted = q_shift(pieri_multiply(v1, 2), -1);
  }
  if (which == DegreeZeroElement::Variant) return shifted;
  return QhElement::unit(ctx, field) - shifted;
}

SquareMatrix degree_zero_action(int n, const FieldCtx& field, DegreeZeroElement which) {
  return mult_matrix(special_degree_zero_element(n, field, which), n - 2);
}

SquareMatrix closed_form_matrix(int n, const FieldCtx& field) {
  if (n < 3) throw std::invalid_argument("closed_form_matrix: n >= 3 required");
  const std::size_t size = static_cast<std::size_t>(n % 2 ? (n - 1) / 2 : n / 2);
  SquareMatrix m(field, size);
  const Fe minus_one = field.from_int(-1);
  for (std::size_t i = 0; i + 1 < size; ++i) {
    m.at(i, i + 1) = minus_one;
    m.at(i + 1, i) = minus_one;
  }
  m.at(0, 0) = field.add(m.at(0, 0), field.one());
  if (n % 2 == 0) m.at(size - 1, size - 1) = field.add(m.at(size - 1, size - 1), field.one());
  return m;
}

Poly r_polynomial(int l) {
  const FieldCtx q = FieldCtx::rationals();
  if (l < 0) throw std::invalid_argument("r_polynomial: negative index");
  Poly prev = Poly::from_ints(q, {1});
  if (l == 0) return prev;
  Poly cur = Poly::from_ints(q, {1, 1, 1});
  const Poly x2_plus_1 = Poly::from_ints(q, {1, 0, 1});
  const Poly x2 = Poly::from_ints(q, {0, 0, 1});
  for (int i = 2; i <= l; ++i) {
    Poly next = x2_plus_1 * cur - x2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly charpoly_target(int n) {
  const FieldCtx q = FieldCtx::rationals();
  Poly geometric = Poly::from_ints(q, std::vector<i64>(static_cast<std::size_t>(n), 1));
  if (n % 2) return geometric;
  return Poly::from_ints(q, {1, 1}) * geometric;
}

Poly laurent_substitution(const Poly& pi, int shift) {
  const FieldCtx& f = pi.field();
  if (pi.degree() > shift) throw std::invalid_argument("laurent_substitution: degree exceeds the shift");
  const Poly x2_plus_1 = Poly::from_ints(f, {1, 0, 1});
  Poly acc(f);
  Poly power = Poly::from_ints(f, {1});  // (x^2+1)^i
  for (int i = 0; i <= pi.degree(); ++i) {
    Fe c = pi.coeff(i);
    if (i % 2) c = f.neg(c);
    acc = acc + (power.scaled(c)).shifted(shift - i);
    power = power * x2_plus_1;
  }
  return acc;
}

Poly closed_form_charpoly(int n) {
  if (n < 3) throw std::invalid_argument("closed_form_charpoly: n >= 3 required");
  const FieldCtx q = FieldCtx::rationals();
  const int shift = n % 2 ? (n - 1) / 2 : n / 2;
  Poly residual = charpoly_target(n);
  std::vector<Fe> coeffs(static_cast<std::size_t>(shift) + 1, q.zero());
  // x^(shift-i) (-1)^i (x^2+1)^i has top degree shift + i, so peel from the top.
  for (int i = shift; i >= 0; --i) {
    Fe c = residual.coeff(shift + i);
    if (i % 2) c = q.neg(c);
    coeffs[static_cast<std::size_t>(i)] = c;
    Poly single = Poly::monomial(q, c, i);
    residual = residual - laurent_substitution(single, shift);
  }
  if (!residual.is_zero()) throw std::logic_error("closed_form_charpoly: target is not palindromic");
  return Poly(q, std::move(coeffs));
}

bool satisfies_charpoly_identity(const Poly& pi, int n) {
  const int shift = n % 2 ? (n - 1) / 2 : n / 2;
  if (pi.degree() != shift) return false;
  return laurent_substitution(pi, shift) == map_rational_coefficients(charpoly_target(n), pi.field());
}

bool generates_units(u64 p, u64 n) {
  if (n == 0 || gcd_u64(p % n, n) != 1) throw std::invalid_argument("generates_units: gcd(p, n) must be 1");
  if (n <= 2) return true;
  std::set<u64> group{1};
  std::vector<u64> frontier{1};
  const u64 gens[2] = {p % n, n - 1};
  while (!frontier.empty()) {
    const u64 a = frontier.back();
    frontier.pop_back();
    for (u64 g : gens) {
      const u64 b = mul_mod(a, g, n);
      if (group.insert(b).second) frontier.push_back(b);
    }
  }
  u64 units = 0;
  for (u64 a = 1; a < n; ++a) units += gcd_u64(a, n) == 1;
  return group.size() == units;
}

std::vector<int> OrbitDecomposition::sizes() const {
  std::vector<int> out;
  for (const auto& o : orbits) out.push_back(static_cast<int>(o.size()));
  return out;
}

std::string OrbitDecomposition::to_string() const {
  std::string out;
  for (const auto& o : orbits) {
    if (!out.empty()) out += ", ";
    out += "{";
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (i) out += ",";
      out += "{" + std::to_string(o[i].first) + "," + std::to_string(o[i].second) + "}";
    }
    out += "}";
  }
  return out;
}

OrbitDecomposition orbit_decomposition(u64 n, u64 p) {
  if (n < 2) throw std::invalid_argument("orbit_decomposition: n >= 2 required");
  if (gcd_u64(p % n, n) != 1) throw std::invalid_argument("orbit_decomposition: gcd(n, p) must be 1");
  OrbitDecomposition out{n, p, {}};
  auto rep = [n](u64 a) { return std::min(a, n - a); };
  std::vector<bool> seen(n / 2 + 1, false);
  for (u64 a = 1; a <= n / 2; ++a) {
    if (seen[a]) continue;
    std::vector<std::pair<u64, u64>> orbit;
    u64 b = a;
    while (!seen[b]) {
      seen[b] = true;
      orbit.emplace_back(b, n - b);
      b = rep(mul_mod(b, p % n, n));
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front().first < y.front().first;
  });
  return out;
}

bool rule_is_graded_field(int k, int n, u64 characteristic, u64 field_order) {
  if (2 * k > n) k = n - k;
  if (k <= 1) return true;
  if (k != 2) return false;
  if (!is_prime(static_cast<u64>(n))) return false;
  if (characteristic == 0) return true;
  if (characteristic == static_cast<u64>(n)) return false;
  return generates_units(field_order % static_cast<u64>(n), static_cast<u64>(n));
}

// ---------------------------------------------------------------- exhaustive oracle

namespace {

// T[i][j] = coordinates of b_i * b_j on the QH^0 basis.
std::vector<std::vector<std::vector<i64>>> qh0_structure(const GrContext& ctx) {
  const auto basis = qh0_basis(ctx);
  std::map<GradedBasisElement, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t d = basis.size();
  std::vector<std::vector<std::vector<i64>>> t(d, std::vector<std::vector<i64>>(d, std::vector<i64>(d, 0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [key, c] : schubert_product(ctx, basis[i].diagram, basis[j].diagram)) {
        GradedBasisElement target{key.diagram, key.q_power + basis[i].q_power + basis[j].q_power};
        t[i][j][index.at(target)] += c;
      }
    }
  }
  return t;
}

bool singular_mod_p(std::vector<u64> m, std::size_t d, u64 p) {
  for (std::size_t col = 0, row = 0; col < d; ++col) {
    std::size_t pivot = row;
    while (pivot < d && m[pivot * d + col] == 0) ++pivot;
    if (pivot == d) return true;
    if (pivot != row) {
      for (std::size_t c = 0; c < d; ++c) std::swap(m[pivot * d + c], m[row * d + c]);
    }
    const u64 inv = pow_mod(m[row * d + col], p - 2, p);
    for (std::size_t r = row + 1; r < d; ++r) {
      const u64 factor = mul_mod(m[r * d + col], inv, p);
      if (factor == 0) continue;
      for (std::size_t c = col; c < d; ++c) {
        m[r * d + c] = (m[r * d + c] + p - mul_mod(factor, m[row * d + c], p)) % p;
      }
    }
    ++row;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Fe>> find_zero_divisor(const GrContext& ctx, const FieldCtx& field, u64 limit) {
  if (!field.is_finite()) throw MathError("exhaustive search needs a finite field");
  const auto t = qh0_structure(ctx);
  const std::size_t d = t.size();
  const u64 q = *field.order();
  u64 total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > limit / q) throw MathError("exhaustive search space exceeds the limit");
    total *= q;
  }
  const bool prime = field.kind() == FieldKind::PrimeField;
  const u64 p = field.characteristic();

  // Projective representatives: leading coordinate `lead` equals 1.
  std::vector<u64> digits(d, 0);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::fill(digits.begin(), digits.end(), 0);
    digits[lead] = prime ? 1 : field.index_of(field.one());
    const std::size_t free = d - lead - 1;
    u64 count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (u64 idx = 0; idx < count; ++idx) {
      u64 rest = idx;
      for (std::size_t i = lead + 1; i < d; ++i) {
        digits[i] = rest % q;
        rest /= q;
      }
      if (prime) {
        std::vector<u64> m(d * d, 0);
        for (std::size_t i = 0; i < d; ++i) {
          if (digits[i] == 0) continue;
          for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
              const i64 c = t[i][j][l];
              if (c == 0) continue;
              const u64 cm = static_cast<u64>(((c % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
              m[l * d + j] = (m[l * d + j] + mul_mod(cm, digits[i], p)) % p;
            }
          }
        }
        if (singular_mod_p(std::move(m), d, p)) {
          std::vector<Fe> out;
          for (u64 v : digits) out.push_back(field.from_int(static_cast<i64>(v)));
          return out;
        }
      } else {
        std::vector<Fe> coords;
        for (u64 v : digits) coords.push_back(field.element_at(v));
        SquareMatrix m(field, d);
        for (std::size_t i = 0; i < d; ++i) {
          if (field.is_zero(coords[i])) continue;
          for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
              if (t[i][j][l] == 0) continue;
              m.at(l, j) = field.add(m.at(l, j), field.mul(field.from_int(t[i][j][l]), coords[i]));
            }
          }
        }
        if (rank(m) < d) return coords;
      }
    }
  }
  return std::nullopt;
}

FieldTest is_graded_field(const GrContext& ctx_in, const FieldCtx& field) {
  FieldTest out;
  const int n = ctx_in.n();
  const u64 p = field.characteristic();
  const u64 order = field.is_finite() ? *field.order() : 0;
  int k = ctx_in.k();
  if (k == n) {
    out.is_field = out.rule = true;
    out.method = "rule-only";
    out.evidence.push_back("Gr(n,n) is a point");
    return out;
  }
  if (2 * k > n) {
    k = n - k;
    out.evidence.push_back("using Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  const GrContext ctx(k, n);
  out.rule = rule_is_graded_field(k, n, p, order);
  bool decided = false;

  if (k == 1) {
    out.is_field = true;
    out.method = "rule-only";
    out.evidence.push_back("k=1: QH^0 is spanned by the unit");
    decided = true;
  } else if (k == 2 && n % 2 == 1 && n >= 3) {
    if (p != 0 && gcd_u64(p, static_cast<u64>(n)) != 1) {
      if (p == static_cast<u64>(n)) {
        out.is_field = false;
        out.method = "rule-only";
        out.evidence.push_back("n=p excluded");
        decided = true;
      }
    } else {
      const Poly pi = map_rational_coefficients(closed_form_charpoly(n), field);
      out.irreducible = is_irreducible(pi);
      out.units_criterion = is_prime(static_cast<u64>(n)) &&
                            (p == 0 || generates_units(order % static_cast<u64>(n), static_cast<u64>(n)));
      out.is_field = *out.irreducible;
      out.method = "irreducibility";
      out.evidence.push_back(std::string("characteristic polynomial is ") +
                             (*out.irreducible ? "irreducible" : "reducible") + " over " + field.name());
      if (*out.units_criterion != *out.irreducible) out.evidence.push_back("unit-group criterion disagrees");
      decided = true;
    }
  }

  if (field.is_finite()) {
    const std::size_t dim = qh0_basis(ctx).size();
    u64 space = 1;
    bool small = true;
    for (std::size_t i = 0; i < dim && small; ++i) {
      if (space > 1'000'000 / order) small = false;
      else space *= order;
    }
    if (small) {
      const auto witness = find_zero_divisor(ctx, field);
      out.exhaustive = !witness.has_value();
      if (witness) {
        std::string coords;
        for (const Fe& c : *witness) coords += (coords.empty() ? "" : ",") + field.format(c);
        out.evidence.push_back("zero divisor with coordinates [" + coords + "]");
      } else {
        out.evidence.push_back("no zero divisor among " + std::to_string(space - 1) + " nonzero elements");
      }
      if (!decided) {
        out.is_field = *out.exhaustive;
        out.method = "exhaustive";
        decided = true;
      } else if (*out.exhaustive != out.is_field) {
        out.evidence.push_back("exhaustive search disagrees");
      }
    }
  }

  if (!decided) {
    out.is_field = out.rule;
    out.method = "rule-only";
  }
  return out;
}

// ---------------------------------------------------------------- classifier

std::string ClassifierVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["char"] = characteristic;
  j["isGradedField"] = is_graded_field;
  nlohmann::ordered_json dia;
  switch (diameter) {
    case Diameter::FiniteWithBound:
      dia["kind"] = "FiniteWithBound";
      dia["bound"] = bound;
      break;
    case Diameter::Infinite:
      dia["kind"] = "Infinite";
      break;
    case Diameter::Unknown:
      dia["kind"] = "Unknown";
      break;
  }
  j["diameter"] = dia;
  if (orbit_count) j["orbitCount"] = *orbit_count;
  if (field_dims) j["fieldDims"] = *field_dims;
  j["reasons"] = reasons;
  return j.dump();
}

ClassifierVerdict classify(int k, int n, u64 characteristic) {
  if (k < 1 || n < 1 || k > n) throw std::invalid_argument("classify: need 1 <= k <= n");
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw std::invalid_argument("classify: characteristic must be 0 or a prime");
  }
  ClassifierVerdict v;
  v.k = k;
  v.n = n;
  v.characteristic = characteristic;
  int kk = k;
  if (2 * kk > n) {
    kk = n - kk;
    v.reasons.push_back("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") = Gr(" + std::to_string(kk) + "," +
                        std::to_string(n) + ")");
  }
  v.is_graded_field = rule_is_graded_field(kk, n, characteristic, characteristic);
  if (kk == 0) {
    v.reasons.push_back("a point: QH is F[q, q^-1]");
  } else if (kk == 1) {
    v.reasons.push_back("k=1: projective space, QH^0 = F");
  } else if (kk == 2) {
    if (!is_prime(static_cast<u64>(n))) {
      v.reasons.push_back("k=2 with n composite: QH^0 is not a field");
    } else if (characteristic == static_cast<u64>(n)) {
      v.reasons.push_back("k=2 with n = char: excluded");
    } else if (characteristic == 0) {
      v.reasons.push_back("k=2 with n prime over characteristic 0: QH^0 is a field");
    } else {
      v.reasons.push_back(std::string("k=2 with n prime: {p,-1} ") +
                          (v.is_graded_field ? "generates" : "does not generate") + " (Z/nZ)^x");
    }
  } else {
    v.reasons.push_back("k>=3: dimension and divisibility count rules out a field");
  }

  if (v.is_graded_field) {
    v.diameter = ClassifierVerdict::Diameter::FiniteWithBound;
    v.bound = (2 * kk * (n - kk)) / n;
    v.reasons.push_back("graded field: diameter at most floor(2 dim_C / n) = " + std::to_string(v.bound));
  } else if (characteristic == 0 && kk % 2 == 0 && n % 2 == 0 && kk < n && kk > 0) {
    v.diameter = ClassifierVerdict::Diameter::Infinite;
    v.reasons.push_back("Gr(2a,2b) with a<b over characteristic 0: infinite diameter");
  } else {
    v.reasons.push_back("diameter not decided by the known criteria");
  }

  if (kk == 2 && characteristic != 0 && gcd_u64(characteristic, static_cast<u64>(n)) == 1) {
    const OrbitDecomposition orbits = orbit_decomposition(static_cast<u64>(n), characteristic);
    v.orbit_count = static_cast<int>(orbits.count());
    v.field_dims = orbits.sizes();
    v.reasons.push_back("QH^0 splits into " + std::to_string(orbits.count()) + " field summands");
  }
  return v;
}

u64 witness_prime(u64 n) {
  if (!is_prime(n)) throw std::invalid_argument("witness_prime: n must be prime");
  for (u64 p : primes_up_to(10'000)) {
    if (p == n) continue;
    if (generates_units(p, n)) return p;
  }
  throw MathError("witness_prime: no prime below 10^4 works for n = " + std::to_string(n));
}

}  // namespace qhgr
