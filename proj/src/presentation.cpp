#include "qhgr/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "text_util.hpp"

namespace qhgr {

namespace {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Y_r coefficient overflow");
  return r;
}

// Coefficients of prod (1 + v t): entry i is e_i.
std::vector<Fe> elementary_all(const FieldCtx& f, const std::vector<Fe>& values) {
  std::vector<Fe> e{f.one()};
  for (const Fe& v : values) {
    e.push_back(f.zero());
    for (std::size_t i = e.size() - 1; i > 0; --i) e[i] = f.add(e[i], f.mul(e[i - 1], v));
  }
  return e;
}

std::vector<Fe> complete_all(const FieldCtx& f, const std::vector<Fe>& values, int upto) {
  const std::vector<Fe> e = elementary_all(f, values);
  std::vector<Fe> h{f.one()};
  for (int r = 1; r <= upto; ++r) {
    Fe acc = f.zero();
    for (int i = 1; i <= r && i < static_cast<int>(e.size()); ++i) {
      Fe term = f.mul(e[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(r - i)]);
      acc = (i % 2) ? f.add(acc, term) : f.sub(acc, term);
    }
    h.push_back(acc);
  }
  return h;
}

Fe embed(const EvContext& ev, const Fe& c) {
  if (ev.source.kind() == FieldKind::Rationals) return ev.splitting.from_rational(ev.source.rational_value(c));
  return ev.splitting.from_int(static_cast<i64>(ev.source.prime_residue(c)));
}

Fe eval_special_polynomial(const FieldCtx& f, const SpecialPolynomial& p, const std::vector<Fe>& x) {
  Fe acc = f.zero();
  for (const auto& [exps, c] : p) {
    Fe term = f.from_int(c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i]) term = f.mul(term, f.pow(x[i], exps[i]));
    }
    acc = f.add(acc, term);
  }
  return acc;
}

}  // namespace

Fe elementary_sym(const FieldCtx& field, const std::vector<Fe>& values, int i) {
  if (i < 0 || i > static_cast<int>(values.size())) throw std::out_of_range("elementary_sym: index out of range");
  return elementary_all(field, values)[static_cast<std::size_t>(i)];
}

Fe complete_sym(const FieldCtx& field, const std::vector<Fe>& values, int i) {
  if (i < 0) throw std::out_of_range("complete_sym: negative index");
  return complete_all(field, values, i)[static_cast<std::size_t>(i)];
}

SpecialPolynomial y_polynomial(int r, int k) {
  if (r < 0 || k < 1) throw std::invalid_argument("y_polynomial: need r >= 0 and k >= 1");
  std::vector<SpecialPolynomial> y{{{std::vector<int>(static_cast<std::size_t>(k), 0), 1}}};
  for (int s = 1; s <= r; ++s) {
    SpecialPolynomial next;
    for (int i = 1; i <= std::min(s, k); ++i) {
      const i64 sign = (i % 2) ? 1 : -1;
      for (const auto& [exps, c] : y[static_cast<std::size_t>(s - i)]) {
        std::vector<int> e = exps;
        ++e[static_cast<std::size_t>(i - 1)];
        i64& slot = next[e];
        slot = checked_add(slot, sign * c);
      }
    }
    std::erase_if(next, [](const auto& t) { return t.second == 0; });
    y.push_back(std::move(next));
  }
  return y.back();
}

std::string AdmissibleMultiset::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exponents[i]);
  }
  return out + "]";
}

AdmissibleMultiset EvContext::multiset(std::string_view text) const {
  std::string s = detail::strip_spaces(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("multiset must look like [0,2]");
  s = s.substr(1, s.size() - 2);
  AdmissibleMultiset out;
  std::vector<int> count(roots.size(), 0);
  std::size_t start = 0;
  while (!s.empty() && start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int e = 0;
    try {
      e = std::stoi(part);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad multiset entry '" + part + "'");
    }
    if (e < 0 || e >= static_cast<int>(roots.size())) throw std::invalid_argument("multiset exponent out of range");
    if (++count[static_cast<std::size_t>(e)] > multiplicity_cap) throw std::invalid_argument("multiplicity too large");
    out.exponents.push_back(e);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  if (static_cast<int>(out.exponents.size()) != ctx.k()) throw std::invalid_argument("multiset must have k entries");
  for (int e : out.exponents) out.roots.push_back(roots[static_cast<std::size_t>(e)]);
  return out;
}

EvContext make_ev_context(const GrContext& ctx, const FieldCtx& source) {
  const int n = ctx.n();
  const int k = ctx.k();
  if (source.kind() == FieldKind::Rationals) {
    const FieldCtx splitting = FieldCtx::cyclotomic(2 * n);
    const Fe omega = splitting.adjoined_generator();
    const Fe zeta = splitting.pow(omega, 2);
    const Fe xi = (k % 2) ? splitting.one() : omega;
    std::vector<Fe> roots;
    for (int i = 0; i < n; ++i) roots.push_back(splitting.pow(zeta, i));
    return EvContext{ctx, source, splitting, xi, zeta, std::move(roots), 1, static_cast<u64>(n)};
  }
  if (source.kind() != FieldKind::PrimeField) {
    throw MathError("evaluation maps are implemented for Q and prime fields only");
  }
  const u64 p = source.characteristic();
  const auto split = split_prime_power(static_cast<u64>(n), p);
  const u64 m = split.cofactor;
  const bool xi_trivial = (k % 2) == 1 || p == 2;
  const u64 big = xi_trivial ? m : 2 * m;
  const int e = big == 1 ? 1 : static_cast<int>(multiplicative_order(p % big, big));
  const FieldCtx splitting = make_extension(p, e);
  const u64 q = *splitting.order();
  const Fe g = splitting.primitive_element();
  const Fe omega = splitting.pow(g, static_cast<i64>((q - 1) / big));
  const Fe zeta = splitting.pow(omega, static_cast<i64>(big / m));
  const Fe xi = xi_trivial ? splitting.one() : omega;
  std::vector<Fe> roots;
  for (u64 i = 0; i < m; ++i) roots.push_back(splitting.pow(zeta, static_cast<i64>(i)));
  const int cap = static_cast<int>(checked_pow(p, split.exponent));
  return EvContext{ctx, source, splitting, xi, zeta, std::move(roots), cap, m};
}

namespace {

std::vector<AdmissibleMultiset> enumerate_multisets(const std::vector<Fe>& roots, int cap, int k) {
  std::vector<AdmissibleMultiset> out;
  std::vector<int> current;
  const int m = static_cast<int>(roots.size());
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == k) {
      AdmissibleMultiset j;
      j.exponents = current;
      for (int e : current) j.roots.push_back(roots[static_cast<std::size_t>(e)]);
      out.push_back(std::move(j));
      return;
    }
    for (int e = start; e < m; ++e) {
      const int used = static_cast<int>(std::count(current.begin(), current.end(), e));
      if (used >= cap) continue;
      current.push_back(e);
      rec(e);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<AdmissibleMultiset> admissible_multisets(const EvContext& ev) {
  return enumerate_multisets(ev.roots, ev.multiplicity_cap, ev.ctx.k());
}

std::vector<AdmissibleMultiset> admissible_multisets(const FieldCtx& field, int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("admissible_multisets: need 1 <= k <= n");
  const u64 p = field.characteristic();
  const auto split = split_prime_power(static_cast<u64>(n), p);
  const int cap = p == 0 ? 1 : static_cast<int>(checked_pow(p, split.exponent));
  return enumerate_multisets(nth_roots_of_unity(field, split.cofactor), cap, k);
}

Fe ev_special(const EvContext& ev, const AdmissibleMultiset& j, int i) {
  const FieldCtx& f = ev.splitting;
  return f.mul(f.pow(ev.xi, i), elementary_sym(f, j.roots, i));
}

Fe ev_map(const EvContext& ev, const AdmissibleMultiset& j, const QhElement& a) {
  if (a.ctx() != ev.ctx) throw std::invalid_argument("ev_map: Grassmannian mismatch");
  if (a.field() != ev.source) throw std::invalid_argument("ev_map: coefficient field mismatch");
  const FieldCtx& f = ev.splitting;
  std::vector<Fe> x;
  for (int i = 1; i <= ev.ctx.k(); ++i) x.push_back(ev_special(ev, j, i));
  std::map<YoungDiagram, Fe> memo;
  Fe acc = f.zero();
  for (const auto& [key, c] : a.terms()) {
    auto it = memo.find(key.diagram);
    if (it == memo.end()) {
      it = memo.emplace(key.diagram, eval_special_polynomial(f, giambelli_expand(ev.ctx, key.diagram), x)).first;
    }
    acc = f.add(acc, f.mul(embed(ev, c), it->second));
  }
  return acc;
}

bool IdealReport::all_vanish() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdealCheck& c) { return c.vanishes; });
}

IdealReport verify_ideal_vanishing(const EvContext& ev, const AdmissibleMultiset& j) {
  const FieldCtx& f = ev.splitting;
  const int n = ev.ctx.n();
  const int k = ev.ctx.k();
  std::vector<Fe> shifted;
  for (const Fe& z : j.roots) shifted.push_back(f.mul(ev.xi, z));
  const std::vector<Fe> h = complete_all(f, shifted, n);
  IdealReport report{j.to_string(), {}};
  for (int r = n - k + 1; r <= n - 1; ++r) {
    const Fe& v = h[static_cast<std::size_t>(r)];
    report.checks.push_back({"h_" + std::to_string(r), v, f.is_zero(v)});
  }
  const Fe last = f.add(h[static_cast<std::size_t>(n)], f.from_int(k % 2 ? -1 : 1));
  report.checks.push_back({"h_" + std::to_string(n) + (k % 2 ? "-1" : "+1"), last, f.is_zero(last)});
  return report;
}

bool in_root_subfield(const EvContext& ev, const Fe& value) {
  const FieldCtx& f = ev.splitting;
  if (f.characteristic() == 0) {
    const int n = ev.ctx.n();
    if (n % 2) return true;  // -zeta generates all 2n-th roots
    // Q(zeta_n) is the fixed field of w -> w^(1+n) inside Q(w_2n).
    const auto& coords = std::get<Fe::RatVec>(value.storage());
    const Fe w = f.adjoined_generator();
    Fe image = f.zero();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (sgn(coords[i]) == 0) continue;
      image = f.add(image, f.mul(f.from_rational(coords[i]), f.pow(w, static_cast<i64>(i) * (1 + n))));
    }
    return image == value;
  }
  const u64 p = f.characteristic();
  const int e0 = ev.root_order == 1 ? 1 : static_cast<int>(multiplicative_order(p % ev.root_order, ev.root_order));
  return f.pow(value, static_cast<i64>(checked_pow(p, e0))) == value;
}

}  // namespace qhgr
