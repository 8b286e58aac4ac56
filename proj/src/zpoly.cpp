#include "qhgr/zpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qhgr/poly.hpp"

namespace qhgr {

namespace {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

ZPoly reduce_mod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(a);
  return a;
}

ZPoly symmetric_mod(ZPoly a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly primitive_part(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

Poly to_fp(const ZPoly& a, const FieldCtx& F) {
  std::vector<Fe> c;
  for (const auto& v : a) c.push_back(F.from_mpz(v));
  return Poly(F, std::move(c));
}

ZPoly from_fp(const Poly& a) {
  ZPoly out;
  for (const auto& c : a.coeffs()) out.emplace_back(std::to_string(a.field().prime_residue(c)));
  trim(out);
  return out;
}

ZPoly derivative(const ZPoly& a) {
  ZPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

Poly to_q(const ZPoly& a) {
  FieldCtx Q = FieldCtx::rationals();
  std::vector<Fe> c;
  for (const auto& v : a) c.push_back(Q.from_mpz(v));
  return Poly(Q, std::move(c));
}

std::set<int> subset_degree_sums(const std::vector<int>& degrees) {
  std::set<int> sums{0};
  for (int d : degrees) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

struct LiftResult {
  ZPoly u;  // monic, lifted first factor
  ZPoly w;  // lifted cofactor with leading coefficient lc(g)
};

// Lifts g = u*w mod p to g = u*w mod p^a (u monic).
LiftResult hensel_lift(const ZPoly& g, const Poly& u0, const Poly& w0, const mpz_class& p, int a) {
  const FieldCtx& F = u0.field();
  // s*u + t*w = 1 over GF(p) via the extended Euclidean algorithm.
  Poly r0 = u0;
  Poly r1 = w0;
  Poly s0 = Poly::constant(F, F.one());
  Poly s1(F);
  Poly t0(F);
  Poly t1 = Poly::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw std::logic_error("hensel_lift: factors are not coprime mod p");
  const Fe scale = F.inv(r0.leading());
  const Poly s = s0.scaled(scale);
  const Poly t = t0.scaled(scale);

  ZPoly u = from_fp(u0);
  ZPoly w = from_fp(w0);
  // Force lc(w) = lc(g) exactly.
  w.back() = g.back();
  mpz_class pj = p;
  for (int j = 1; j < a; ++j) {
    ZPoly e = sub(g, mul(u, w));
    for (auto& c : e) {
      if (c % pj != 0) throw std::logic_error("hensel_lift: congruence lost");
      c /= pj;
    }
    Poly ep = to_fp(e, F);
    auto [q, du] = divmod(t * ep, u0);
    Poly dw = s * ep + q * w0;
    ZPoly duz = from_fp(du);
    ZPoly dwz = from_fp(dw);
    for (auto& c : duz) c *= pj;
    for (auto& c : dwz) c *= pj;
    u = add(u, duz);
    w = add(w, dwz);
    pj *= p;
    u = reduce_mod(u, pj);
    w = reduce_mod(w, pj);
  }
  return {u, w};
}

}  // namespace

ZPoly primitive_integer_poly(const Poly& f) {
  const FieldCtx& F = f.field();
  if (F.kind() != FieldKind::Rationals) throw std::invalid_argument("primitive_integer_poly: field must be Q");
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, F.rational_value(c).get_den());
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    mpq_class scaled = F.rational_value(c) * den;
    out.push_back(scaled.get_num());
  }
  return primitive_part(std::move(out));
}

std::optional<ZPoly> exact_divide(const ZPoly& g, const ZPoly& h) {
  if (h.empty()) throw std::domain_error("exact_divide: division by zero");
  ZPoly r = g;
  trim(r);
  if (r.empty()) return ZPoly{};
  if (deg(r) < deg(h)) return std::nullopt;
  ZPoly q(static_cast<std::size_t>(deg(r) - deg(h)) + 1, 0);
  while (!r.empty() && deg(r) >= deg(h)) {
    if (r.back() % h.back() != 0) return std::nullopt;
    mpz_class c = r.back() / h.back();
    const std::size_t shift = static_cast<std::size_t>(deg(r) - deg(h));
    q[shift] = c;
    for (std::size_t i = 0; i < h.size(); ++i) r[shift + i] -= c * h[i];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

std::optional<ZPoly> find_rational_factor(const ZPoly& input) {
  ZPoly g = primitive_part(input);
  const int d = deg(g);
  if (d > kRationalIrreducibilityDegreeCap) {
    throw MathError("find_rational_factor: degree " + std::to_string(d) + " exceeds the cap of " +
                    std::to_string(kRationalIrreducibilityDegreeCap));
  }
  if (d <= 1) return std::nullopt;
  if (g[0] == 0) return ZPoly{0, 1};

  // Repeated factors show up in gcd(g, g').
  Poly common = gcd(to_q(g), to_q(derivative(g)));
  if (common.degree() > 0) return primitive_integer_poly(common);

  // Screen factor degrees modulo several good primes.
  std::set<int> allowed;
  for (int i = 1; i < d; ++i) allowed.insert(i);
  u64 best_prime = 0;
  std::size_t best_count = 0;
  int good = 0;
  for (u64 p = 3; good < 12 && p < 2000; p += 2) {
    if (!is_prime(p)) continue;
    if (g.back() % mpz_class(std::to_string(p)) == 0) continue;
    FieldCtx F = FieldCtx::prime_field(p);
    Poly gp = to_fp(g, F);
    if (!is_squarefree(gp)) continue;
    ++good;
    std::vector<int> degrees = factor_degrees(gp);
    if (degrees.size() == 1) return std::nullopt;
    std::set<int> sums = subset_degree_sums(degrees);
    std::set<int> kept;
    std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(),
                          std::inserter(kept, kept.begin()));
    allowed = std::move(kept);
    if (allowed.empty()) return std::nullopt;
    if (best_prime == 0 || degrees.size() < best_count) {
      best_prime = p;
      best_count = degrees.size();
    }
  }
  if (best_prime == 0) throw MathError("find_rational_factor: no good prime found");

  const mpz_class p(std::to_string(best_prime));
  FieldCtx F = FieldCtx::prime_field(best_prime);
  Poly gp = to_fp(g, F);
  std::vector<Poly> modular = factor_squarefree(gp);
  const std::size_t r = modular.size();

  // Coefficient bound for lc(g)/lc(h) * h, h any factor of g.
  mpz_class norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = abs(g.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(d));
  int a = 1;
  mpz_class P = p;
  while (P <= 2 * bound) {
    P *= p;
    ++a;
  }

  // Lift the factorization one factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly target = g;
  Poly lc_fp = Poly::constant(F, F.from_mpz(g.back()));
  for (std::size_t i = 0; i + 1 < r; ++i) {
    Poly rest = lc_fp;
    for (std::size_t j = i + 1; j < r; ++j) rest = rest * modular[j];
    LiftResult lr = hensel_lift(target, modular[i], rest, p, a);
    lifted.push_back(lr.u);
    target = lr.w;
  }
  {
    // Last factor: target / lc(g) mod P, monic.
    mpz_class inv;
    mpz_class lc = g.back() % P;
    if (lc < 0) lc += P;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t());
    ZPoly last = target;
    for (auto& c : last) c *= inv;
    lifted.push_back(reduce_mod(last, P));
  }

  // Recombine subsets of size s <= r/2.
  std::vector<int> lifted_deg;
  for (const auto& f : lifted) lifted_deg.push_back(deg(f));
  for (std::size_t s = 1; 2 * s <= r; ++s) {
    std::vector<bool> choose(r, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      int total = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (choose[i]) total += lifted_deg[i];
      }
      if (!allowed.count(total)) continue;
      ZPoly candidate{g.back()};
      for (std::size_t i = 0; i < r; ++i) {
        if (choose[i]) candidate = reduce_mod(mul(candidate, lifted[i]), P);
      }
      candidate = primitive_part(symmetric_mod(candidate, P));
      if (deg(candidate) < 1 || deg(candidate) >= d) continue;
      if (exact_divide(g, candidate)) return candidate;
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return std::nullopt;
}

}  // namespace qhgr
