#include "qhgr/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qhgr/zpoly.hpp"
#include "text_util.hpp"

namespace qhgr {

Poly::Poly(FieldCtx field) : field_(std::move(field)) {}

Poly::Poly(FieldCtx field, std::vector<Fe> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
}

Poly Poly::constant(const FieldCtx& field, const Fe& c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldCtx& field, const Fe& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  std::vector<Fe> coeffs(static_cast<std::size_t>(exponent) + 1, field.zero());
  coeffs.back() = c;
  return Poly(field, std::move(coeffs));
}

Poly Poly::variable(const FieldCtx& field) { return monomial(field, field.one(), 1); }

Poly Poly::from_ints(const FieldCtx& field, const std::vector<i64>& coeffs) {
  std::vector<Fe> c;
  c.reserve(coeffs.size());
  for (i64 v : coeffs) c.push_back(field.from_int(v));
  return Poly(field, std::move(c));
}

Poly Poly::parse(const FieldCtx& field, std::string_view text) {
  Poly acc(field);
  for (const auto& term : detail::split_monomial_sum(text, 'x')) {
    Fe c = term.coefficient.empty() ? field.one() : field.parse_element(term.coefficient);
    if (term.negative) c = field.neg(c);
    acc = acc + monomial(field, c, term.exponent);
  }
  return acc;
}

Fe Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return c_[static_cast<std::size_t>(i)];
}

Fe Poly::leading() const {
  if (c_.empty()) return field_.zero();
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

Poly Poly::scaled(const Fe& s) const {
  std::vector<Fe> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(field_.mul(c, s));
  return Poly(field_, std::move(out));
}

Poly Poly::shifted(int k) const {
  if (c_.empty()) return *this;
  std::vector<Fe> out(static_cast<std::size_t>(k), field_.zero());
  out.insert(out.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
  std::vector<Fe> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(field_.mul(field_.from_int(static_cast<i64>(i)), c_[i]));
  return Poly(field_, std::move(out));
}

Fe Poly::eval(const Fe& x) const {
  Fe acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (field_.is_zero(c_[i])) continue;
    std::string term = detail::format_monomial(field_.format(c_[i]), 'x', static_cast<int>(i));
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& f = a.field_;
  std::vector<Fe> out(std::max(a.c_.size(), b.c_.size()), f.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = f.add(out[i], b.c_[i]);
  return Poly(f, std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Fe> out;
  for (const auto& c : a.c_) out.push_back(a.field_.neg(c));
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  const auto& f = a.field_;
  if (a.c_.empty() || b.c_.empty()) return Poly(f);
  std::vector<Fe> out(a.c_.size() + b.c_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (f.is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(f, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldCtx& f = a.field();
  std::vector<Fe> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<Fe> q(static_cast<std::size_t>(a.degree() - db) + 1, f.zero());
  const Fe lead_inv = f.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const Fe c = f.mul(r[static_cast<std::size_t>(i)], lead_inv);
    if (f.is_zero(c)) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = f.sub(r[idx], f.mul(c, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus) {
  if (exponent < 0) throw std::invalid_argument("powmod: negative exponent");
  const FieldCtx& f = base.field();
  Poly result = Poly::constant(f, f.one()) % modulus;
  Poly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mulmod(result, b, modulus);
    if (i + 1 < bits) b = mulmod(b, b, modulus);
  }
  return result;
}

bool is_squarefree(const Poly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

mpz_class field_order_mpz(const FieldCtx& f) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), f.characteristic(), static_cast<unsigned long>(f.degree()));
  return q;
}

void require_finite(const FieldCtx& f, const char* what) {
  if (!f.is_finite()) throw MathError(std::string(what) + ": requires a finite field");
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: polynomial must be nonconstant");
  if (f.degree() == 1) return true;
  const FieldCtx& F = f.field();
  if (F.kind() == FieldKind::Rationals) {
    if (f.degree() > kRationalIrreducibilityDegreeCap) {
      throw MathError("is_irreducible over Q: degree " + std::to_string(f.degree()) + " exceeds the cap of " +
                      std::to_string(kRationalIrreducibilityDegreeCap));
    }
    return !find_rational_factor(primitive_integer_poly(f)).has_value();
  }
  require_finite(F, "is_irreducible");
  const Poly g = f.monic();
  const mpz_class q = field_order_mpz(F);
  const Poly x = Poly::variable(F);
  Poly h = x;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = powmod(h, q, g);
    if (gcd(g, h - x).degree() > 0) return false;
  }
  return true;
}

std::vector<std::pair<int, Poly>> distinct_degree_factorization(const Poly& f) {
  const FieldCtx& F = f.field();
  require_finite(F, "distinct_degree_factorization");
  if (!is_squarefree(f)) throw std::invalid_argument("distinct_degree_factorization: input must be squarefree");
  std::vector<std::pair<int, Poly>> out;
  Poly g = f.monic();
  const mpz_class q = field_order_mpz(F);
  const Poly x = Poly::variable(F);
  Poly h = x;
  int d = 0;
  while (g.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, g);
    Poly part = gcd(g, h - x);
    if (part.degree() > 0) {
      out.emplace_back(d, part);
      g = divmod(g, part).quotient;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g.degree(), g);
  return out;
}

std::vector<int> factor_degrees(const Poly& f) {
  std::vector<int> out;
  for (const auto& [d, part] : distinct_degree_factorization(f)) {
    for (int i = 0; i < part.degree() / d; ++i) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Poly random_poly(const FieldCtx& F, int degree_below, std::mt19937_64& rng) {
  const u64 q = *F.order();
  std::vector<Fe> c;
  for (int i = 0; i < degree_below; ++i) c.push_back(F.element_at(rng() % q));
  return Poly(F, std::move(c));
}

void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldCtx& F = g.field();
  const mpz_class q = field_order_mpz(F);
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  for (;;) {
    Poly a = random_poly(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(F);
    if (F.characteristic() == 2) {
      // Trace map a + a^2 + ... + a^(2^(m d - 1)).
      Poly t = a % g;
      b = t;
      const int steps = F.degree() * d - 1;
      for (int i = 0; i < steps; ++i) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      b = powmod(a, (qd - 1) / 2, g) - Poly::constant(F, F.one());
    }
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(divmod(g, h).quotient, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f) {
  const FieldCtx& F = f.field();
  require_finite(F, "factor_squarefree");
  if (!F.order()) throw MathError("factor_squarefree: field too large");
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<Poly> out;
  for (const auto& [d, part] : distinct_degree_factorization(f)) equal_degree_split(part, d, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return out;
}

Poly map_rational_coefficients(const Poly& f, const FieldCtx& target) {
  std::vector<Fe> out;
  const FieldCtx& src = f.field();
  for (const auto& c : f.coeffs()) {
    if (src.kind() == FieldKind::Rationals) {
      out.push_back(target.from_rational(src.rational_value(c)));
    } else if (src.kind() == FieldKind::PrimeField && target.characteristic() == src.characteristic()) {
      out.push_back(target.from_int(static_cast<i64>(src.prime_residue(c))));
    } else {
      throw std::invalid_argument("map_rational_coefficients: unsupported source field " + src.name());
    }
  }
  return Poly(target, std::move(out));
}

}  // namespace qhgr
