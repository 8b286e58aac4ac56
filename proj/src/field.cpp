#include "qhgr/field.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qhgr/poly.hpp"
#include "qhgr/zpoly.hpp"
#include "text_util.hpp"

namespace qhgr {

struct FieldCtx::Impl {
  FieldKind kind = FieldKind::Rationals;
  u64 p = 0;
  int m = 1;
  std::vector<u64> modulus_residues;        // ExtField, monic, size m + 1
  std::vector<mpq_class> modulus_rationals;  // NumberField, monic, size m + 1
  int cyclotomic = 0;
  std::optional<u64> order;

  mutable std::once_flag generator_once;
  mutable Fe generator;
};

namespace {

using Residues = Fe::Residues;
using RatVec = Fe::RatVec;

u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// Polynomial helpers over GF(p) / Q used for extension-field arithmetic.
struct ResidueOps {
  u64 p;
  u64 zero() const { return 0; }
  u64 one() const { return 1; }
  bool is_zero(u64 a) const { return a == 0; }
  u64 add(u64 a, u64 b) const { return add_mod(a, b, p); }
  u64 sub(u64 a, u64 b) const { return sub_mod(a, b, p); }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p); }
  u64 inv(u64 a) const { return pow_mod(a, p - 2, p); }
};

struct RationalOps {
  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class inv(const mpq_class& a) const { return 1 / a; }
};

template <class T, class Ops>
void trim_poly(std::vector<T>& a, const Ops& ops) {
  while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

// Product reduced modulo a monic modulus of degree m; result has length m.
template <class T, class Ops>
std::vector<T> mul_reduce(const std::vector<T>& a, const std::vector<T>& b, const std::vector<T>& modulus,
                          const Ops& ops) {
  const std::size_t m = modulus.size() - 1;
  std::vector<T> prod(2 * m, ops.zero());
  for (std::size_t i = 0; i < m; ++i) {
    if (ops.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      prod[i + j] = ops.add(prod[i + j], ops.mul(a[i], b[j]));
    }
  }
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    T c = prod[d];
    if (ops.is_zero(c)) continue;
    prod[d] = ops.zero();
    for (std::size_t i = 0; i < m; ++i) {
      prod[d - m + i] = ops.sub(prod[d - m + i], ops.mul(c, modulus[i]));
    }
  }
  prod.resize(m);
  return prod;
}

// Remainder and quotient of polynomial division (divisor nonzero).
template <class T, class Ops>
void divmod_poly(std::vector<T> a, const std::vector<T>& b, std::vector<T>& q, std::vector<T>& r,
                 const Ops& ops) {
  trim_poly(a, ops);
  const std::size_t db = b.size() - 1;
  const T lead_inv = ops.inv(b.back());
  q.assign(a.size() >= b.size() ? a.size() - db : 0, ops.zero());
  while (a.size() >= b.size()) {
    T c = ops.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ops.sub(a[shift + i], ops.mul(c, b[i]));
    }
    trim_poly(a, ops);
  }
  r = std::move(a);
}

template <class T, class Ops>
std::vector<T> poly_sub_mul(const std::vector<T>& a, const std::vector<T>& q, const std::vector<T>& b,
                            const Ops& ops) {
  // a - q*b
  std::vector<T> out(std::max(a.size(), q.size() + b.size()), ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = ops.sub(out[i + j], ops.mul(q[i], b[j]));
    }
  }
  trim_poly(out, ops);
  return out;
}

// Inverse of a (length m, nonzero) modulo the irreducible modulus.
template <class T, class Ops>
std::vector<T> inv_reduce(const std::vector<T>& a, const std::vector<T>& modulus, const Ops& ops) {
  const std::size_t m = modulus.size() - 1;
  std::vector<T> r0 = modulus;
  std::vector<T> r1 = a;
  trim_poly(r1, ops);
  std::vector<T> t0;
  std::vector<T> t1{ops.one()};
  while (!r1.empty()) {
    std::vector<T> q;
    std::vector<T> r;
    divmod_poly(r0, r1, q, r, ops);
    std::vector<T> t2 = poly_sub_mul(t0, q, t1, ops);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant; the inverse is t0 / r0.
  T scale = ops.inv(r0[0]);
  std::vector<T> out(m, ops.zero());
  for (std::size_t i = 0; i < t0.size() && i < m; ++i) out[i] = ops.mul(t0[i], scale);
  return out;
}

bool all_zero_from(const Residues& v, std::size_t start) {
  return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(start), v.end(), [](u64 x) { return x == 0; });
}
bool all_zero_from(const RatVec& v, std::size_t start) {
  return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(start), v.end(),
                     [](const mpq_class& x) { return sgn(x) == 0; });
}

u64 reduce_signed(i64 v, u64 p) {
  i64 r = v % static_cast<i64>(p);
  if (r < 0) r += static_cast<i64>(p);
  return static_cast<u64>(r);
}

u64 reduce_mpz(const mpz_class& v, u64 p) {
  mpz_class r = v % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- factories

FieldCtx FieldCtx::rationals() {
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::Rationals;
  return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::prime_field(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p) requires prime p, got " + std::to_string(p));
  if (p >= (1ULL << 62)) throw std::invalid_argument("prime too large");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::PrimeField;
  impl->p = p;
  impl->order = p;
  return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::extension(u64 p, std::vector<u64> modulus) {
  FieldCtx base = prime_field(p);
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw std::invalid_argument("extension modulus must be monic of degree >= 1");
  }
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m == 1) return base;
  std::vector<Fe> coeffs;
  for (u64 c : modulus) coeffs.push_back(base.from_int(static_cast<i64>(c)));
  if (!is_irreducible(Poly(base, coeffs))) throw std::invalid_argument("extension modulus is reducible");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::ExtField;
  impl->p = p;
  impl->m = m;
  impl->modulus_residues = std::move(modulus);
  try {
    impl->order = checked_pow(p, m);
  } catch (const std::overflow_error&) {
    impl->order = std::nullopt;
  }
  return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::number_field(std::vector<mpq_class> modulus, int cyclotomic_order) {
  while (!modulus.empty() && sgn(modulus.back()) == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw std::invalid_argument("number field modulus must be monic of degree >= 1");
  }
  if (modulus.size() == 2) return rationals();
  std::vector<Fe> coeffs;
  FieldCtx q = rationals();
  for (const auto& c : modulus) coeffs.push_back(q.from_rational(c));
  if (!is_irreducible(Poly(q, coeffs))) throw std::invalid_argument("number field modulus is reducible");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::NumberField;
  impl->m = static_cast<int>(modulus.size()) - 1;
  impl->modulus_rationals = std::move(modulus);
  impl->cyclotomic = cyclotomic_order;
  return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::cyclotomic(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<mpq_class> modulus;
  for (const auto& c : cyclotomic_polynomial(order)) modulus.emplace_back(c);
  if (modulus.size() == 2) {
    // Q itself (orders 1 and 2); keep the order for root bookkeeping.
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Rationals;
    impl->cyclotomic = order;
    return FieldCtx(std::move(impl));
  }
  return number_field(std::move(modulus), order);
}

FieldCtx FieldCtx::parse(std::string_view spec) {
  std::string s = detail::strip_spaces(spec);
  if (s == "Q") return rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(3, s.size() - 4);
    std::size_t caret = inner.find('^');
    try {
      std::size_t used = 0;
      if (caret == std::string::npos) {
        u64 p = std::stoull(inner, &used);
        if (used != inner.size()) throw std::invalid_argument("trailing characters");
        return prime_field(p);
      }
      std::string ps = inner.substr(0, caret);
      std::string ms = inner.substr(caret + 1);
      u64 p = std::stoull(ps, &used);
      if (used != ps.size()) throw std::invalid_argument("trailing characters");
      int m = std::stoi(ms, &used);
      if (used != ms.size()) throw std::invalid_argument("trailing characters");
      return make_extension(p, m);
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("bad field spec '" + std::string(spec) + "': " + e.what());
    }
  }
  throw std::invalid_argument("bad field spec '" + std::string(spec) + "' (expected Q, GF(p) or GF(p^m))");
}

// ---------------------------------------------------------------- queries

FieldKind FieldCtx::kind() const { return impl_->kind; }
u64 FieldCtx::characteristic() const { return impl_->p; }
int FieldCtx::degree() const { return impl_->m; }
std::optional<u64> FieldCtx::order() const { return impl_->order; }
bool FieldCtx::is_finite() const {
  return impl_->kind == FieldKind::PrimeField || impl_->kind == FieldKind::ExtField;
}
int FieldCtx::cyclotomic_order() const { return impl_->cyclotomic; }
const std::vector<u64>& FieldCtx::residue_modulus() const { return impl_->modulus_residues; }
const std::vector<mpq_class>& FieldCtx::rational_modulus() const { return impl_->modulus_rationals; }

std::string FieldCtx::name() const {
  switch (impl_->kind) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "GF(" + std::to_string(impl_->p) + ")";
    case FieldKind::ExtField:
      return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->m) + ")";
    case FieldKind::NumberField:
      if (impl_->cyclotomic > 0) return "Q(w_" + std::to_string(impl_->cyclotomic) + ")";
      return "Q[w]/(deg " + std::to_string(impl_->m) + ")";
  }
  return "?";
}

bool operator==(const FieldCtx& a, const FieldCtx& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m &&
         a.impl_->modulus_residues == b.impl_->modulus_residues &&
         a.impl_->modulus_rationals == b.impl_->modulus_rationals;
}

// ---------------------------------------------------------------- constructors of elements

Fe FieldCtx::zero() const { return from_int(0); }
Fe FieldCtx::one() const { return from_int(1); }

Fe FieldCtx::from_int(i64 v) const {
  const Impl& f = *impl_;
  switch (f.kind) {
    case FieldKind::Rationals:
      return Fe(mpq_class(static_cast<long>(v)));
    case FieldKind::PrimeField:
      return Fe(reduce_signed(v, f.p));
    case FieldKind::ExtField: {
      Residues r(static_cast<std::size_t>(f.m), 0);
      r[0] = reduce_signed(v, f.p);
      return Fe(std::move(r));
    }
    case FieldKind::NumberField: {
      RatVec r(static_cast<std::size_t>(f.m), mpq_class(0));
      r[0] = mpq_class(static_cast<long>(v));
      return Fe(std::move(r));
    }
  }
  return Fe();
}

Fe FieldCtx::from_mpz(const mpz_class& v) const { return from_rational(mpq_class(v)); }

Fe FieldCtx::from_rational(const mpq_class& v) const {
  const Impl& f = *impl_;
  switch (f.kind) {
    case FieldKind::Rationals:
      return Fe(v);
    case FieldKind::NumberField: {
      RatVec r(static_cast<std::size_t>(f.m), mpq_class(0));
      r[0] = v;
      return Fe(std::move(r));
    }
    case FieldKind::PrimeField:
    case FieldKind::ExtField: {
      u64 num = reduce_mpz(v.get_num(), f.p);
      u64 den = reduce_mpz(v.get_den(), f.p);
      if (den == 0) throw MathError("denominator divisible by the characteristic: " + v.get_str());
      u64 value = mul_mod(num, pow_mod(den, f.p - 2, f.p), f.p);
      if (f.kind == FieldKind::PrimeField) return Fe(value);
      Residues r(static_cast<std::size_t>(f.m), 0);
      r[0] = value;
      return Fe(std::move(r));
    }
  }
  return Fe();
}

Fe FieldCtx::adjoined_generator() const {
  const Impl& f = *impl_;
  if (f.kind == FieldKind::ExtField) {
    Residues r(static_cast<std::size_t>(f.m), 0);
    r[1] = 1;
    return Fe(std::move(r));
  }
  if (f.kind == FieldKind::NumberField) {
    RatVec r(static_cast<std::size_t>(f.m), mpq_class(0));
    r[1] = 1;
    return Fe(std::move(r));
  }
  throw std::logic_error("adjoined_generator: field has no adjoined generator");
}

Fe FieldCtx::from_coordinates(const std::vector<i64>& coords) const {
  Fe acc = zero();
  Fe power = one();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    acc = add(acc, mul(from_int(coords[i]), power));
    if (i + 1 < coords.size()) {
      if (impl_->kind == FieldKind::Rationals || impl_->kind == FieldKind::PrimeField) {
        if (coords[i + 1] != 0) throw std::invalid_argument("from_coordinates: field has degree 1");
        continue;
      }
      power = mul(power, adjoined_generator());
    }
  }
  return acc;
}

// ---------------------------------------------------------------- arithmetic

Fe FieldCtx::add(const Fe& a, const Fe& b) const {
  const Impl& f = *impl_;
  switch (f.kind) {
    case FieldKind::Rationals:
      return Fe(mpq_class(std::get<mpq_class>(a.storage()) + std::get<mpq_class>(b.storage())));
    case FieldKind::PrimeField:
      return Fe(add_mod(std::get<u64>(a.storage()), std::get<u64>(b.storage()), f.p));
    case FieldKind::ExtField: {
      const auto& x = std::get<Residues>(a.storage());
      const auto& y = std::get<Residues>(b.storage());
      Residues r(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) r[i] = add_mod(x[i], y[i], f.p);
      return Fe(std::move(r));
    }
    case FieldKind::NumberField: {
      const auto& x = std::get<RatVec>(a.storage());
      const auto& y = std::get<RatVec>(b.storage());
      RatVec r(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
      return Fe(std::move(r));
    }
  }
  return Fe();
}

Fe FieldCtx::neg(const Fe& a) const {
  const Impl& f = *impl_;
  switch (f.kind) {
    case FieldKind::Rationals:
      return Fe(mpq_class(-std::get<mpq_class>(a.storage())));
    case FieldKind::PrimeField:
      return Fe(sub_mod(0, std::get<u64>(a.storage()), f.p));
    case FieldKind::ExtField: {
      Residues r = std::get<Residues>(a.storage());
      for (auto& c : r) c = sub_mod(0, c, f.p);
      return Fe(std::move(r));
    }
    case FieldKind::NumberField: {
      RatVec r = std::get<RatVec>(a.storage());
      for (auto& c : r) c = -c;
      return Fe(std::move(r));
    }
  }
  return Fe();
}

Fe FieldCtx::sub(const Fe& a, const Fe& b) const { return add(a, neg(b)); }

Fe FieldCtx::mul(const Fe& a, const Fe& b) const {
  const Impl& f = *impl_;
  switch (f.kind) {
    case FieldKind::Rationals:
      return Fe(mpq_class(std::get<mpq_class>(a.storage()) * std::get<mpq_class>(b.storage())));
    case FieldKind::PrimeField:
      return Fe(mul_mod(std::get<u64>(a.storage()), std::get<u64>(b.storage()), f.p));
    case FieldKind::ExtField:
      return Fe(mul_reduce(std::get<Residues>(a.storage()), std::get<Residues>(b.storage()),
                           f.modulus_residues, ResidueOps{f.p}));
    case FieldKind::NumberField:
      return Fe(mul_reduce(std::get<RatVec>(a.storage()), std::get<RatVec>(b.storage()), f.modulus_rationals,
                           RationalOps{}));
  }
  return Fe();
}

Fe FieldCtx::inv(const Fe& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  const Impl& f = *impl_;
  switch (f.kind) {
    case FieldKind::Rationals:
      return Fe(mpq_class(1 / std::get<mpq_class>(a.storage())));
    case FieldKind::PrimeField:
      return Fe(pow_mod(std::get<u64>(a.storage()), f.p - 2, f.p));
    case FieldKind::ExtField:
      return Fe(inv_reduce(std::get<Residues>(a.storage()), f.modulus_residues, ResidueOps{f.p}));
    case FieldKind::NumberField:
      return Fe(inv_reduce(std::get<RatVec>(a.storage()), f.modulus_rationals, RationalOps{}));
  }
  return Fe();
}

Fe FieldCtx::div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

Fe FieldCtx::pow(const Fe& a, i64 e) const {
  if (e < 0) return pow(inv(a), -e);
  Fe result = one();
  Fe base = a;
  auto ue = static_cast<u64>(e);
  while (ue > 0) {
    if (ue & 1) result = mul(result, base);
    ue >>= 1;
    if (ue > 0) base = mul(base, base);
  }
  return result;
}

Fe FieldCtx::pow(const Fe& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), mpz_class(-e));
  Fe result = one();
  Fe base = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return result;
}

bool FieldCtx::is_zero(const Fe& a) const {
  switch (impl_->kind) {
    case FieldKind::Rationals:
      return sgn(std::get<mpq_class>(a.storage())) == 0;
    case FieldKind::PrimeField:
      return std::get<u64>(a.storage()) == 0;
    case FieldKind::ExtField:
      return all_zero_from(std::get<Residues>(a.storage()), 0);
    case FieldKind::NumberField:
      return all_zero_from(std::get<RatVec>(a.storage()), 0);
  }
  return false;
}

bool FieldCtx::is_one(const Fe& a) const { return a == one(); }

bool FieldCtx::in_prime_subfield(const Fe& a) const {
  switch (impl_->kind) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return true;
    case FieldKind::ExtField:
      return all_zero_from(std::get<Residues>(a.storage()), 1);
    case FieldKind::NumberField:
      return all_zero_from(std::get<RatVec>(a.storage()), 1);
  }
  return false;
}

u64 FieldCtx::prime_residue(const Fe& a) const {
  if (impl_->kind == FieldKind::PrimeField) return std::get<u64>(a.storage());
  if (impl_->kind == FieldKind::ExtField && in_prime_subfield(a)) return std::get<Residues>(a.storage())[0];
  throw std::logic_error("prime_residue: not a prime-subfield element of a finite field");
}

const mpq_class& FieldCtx::rational_value(const Fe& a) const {
  if (impl_->kind == FieldKind::Rationals) return std::get<mpq_class>(a.storage());
  if (impl_->kind == FieldKind::NumberField && in_prime_subfield(a)) return std::get<RatVec>(a.storage())[0];
  throw std::logic_error("rational_value: not a rational element");
}

// ---------------------------------------------------------------- enumeration

Fe FieldCtx::element_at(u64 index) const {
  const Impl& f = *impl_;
  if (!is_finite() || !f.order) throw std::logic_error("element_at: field is not a small finite field");
  if (index >= *f.order) throw std::out_of_range("element_at: index out of range");
  if (f.kind == FieldKind::PrimeField) return Fe(index);
  Residues r(static_cast<std::size_t>(f.m), 0);
  for (int i = 0; i < f.m; ++i) {
    r[static_cast<std::size_t>(i)] = index % f.p;
    index /= f.p;
  }
  return Fe(std::move(r));
}

u64 FieldCtx::index_of(const Fe& a) const {
  const Impl& f = *impl_;
  if (f.kind == FieldKind::PrimeField) return std::get<u64>(a.storage());
  if (f.kind != FieldKind::ExtField) throw std::logic_error("index_of: field is not finite");
  const auto& r = std::get<Residues>(a.storage());
  u64 index = 0;
  for (std::size_t i = r.size(); i-- > 0;) index = index * f.p + r[i];
  return index;
}

Fe FieldCtx::primitive_element() const {
  const Impl& f = *impl_;
  if (!is_finite() || !f.order) throw std::logic_error("primitive_element: field is not a small finite field");
  std::call_once(f.generator_once, [&] {
    const u64 group = *f.order - 1;
    const auto factors = prime_factors(group);
    for (u64 idx = 1; idx < *f.order; ++idx) {
      Fe g = element_at(idx);
      bool generates = std::all_of(factors.begin(), factors.end(), [&](u64 r) {
        return !is_one(pow(g, static_cast<i64>(group / r)));
      });
      if (generates) {
        f.generator = g;
        return;
      }
    }
    f.generator = one();  // trivial group (order 2 field)
  });
  return f.generator;
}

// ---------------------------------------------------------------- text

std::string FieldCtx::format(const Fe& a) const {
  const Impl& f = *impl_;
  switch (f.kind) {
    case FieldKind::Rationals:
      return format_rational(std::get<mpq_class>(a.storage()));
    case FieldKind::PrimeField:
      return std::to_string(std::get<u64>(a.storage()));
    case FieldKind::ExtField:
    case FieldKind::NumberField: {
      const char symbol = f.kind == FieldKind::ExtField ? 'a' : 'w';
      std::vector<std::string> parts;
      for (int i = 0; i < f.m; ++i) {
        std::string coef;
        if (f.kind == FieldKind::ExtField) {
          u64 c = std::get<Residues>(a.storage())[static_cast<std::size_t>(i)];
          if (c == 0) continue;
          coef = std::to_string(c);
        } else {
          const mpq_class& c = std::get<RatVec>(a.storage())[static_cast<std::size_t>(i)];
          if (sgn(c) == 0) continue;
          coef = format_rational(c);
        }
        parts.push_back(detail::format_monomial(coef, symbol, i));
      }
      if (parts.empty()) return "0";
      if (parts.size() == 1) return parts.front();
      std::string out = "(" + parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].front() == '-') {
          out += " - " + parts[i].substr(1);
        } else {
          out += " + " + parts[i];
        }
      }
      return out + ")";
    }
  }
  return "?";
}

Fe FieldCtx::parse_element(std::string_view text) const {
  const Impl& f = *impl_;
  const char symbol = f.kind == FieldKind::ExtField ? 'a' : (f.kind == FieldKind::NumberField ? 'w' : '\0');
  std::string s = detail::strip_spaces(text);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Fe acc = zero();
  for (const auto& term : detail::split_monomial_sum(s, symbol == '\0' ? '#' : symbol)) {
    mpq_class coef(1);
    if (!term.coefficient.empty()) {
      try {
        coef = mpq_class(term.coefficient);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad field element '" + std::string(text) + "'");
      }
      if (coef.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
      coef.canonicalize();
    }
    if (term.negative) coef = -coef;
    Fe value = from_rational(coef);
    if (term.exponent > 0) {
      if (symbol == '\0') throw std::invalid_argument("field has no generator symbol: " + std::string(text));
      value = mul(value, pow(adjoined_generator(), term.exponent));
    }
    acc = add(acc, value);
  }
  return acc;
}

// ---------------------------------------------------------------- free functions

FieldCtx make_extension(u64 p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("make_extension: p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("make_extension: m must be positive");
  FieldCtx base = FieldCtx::prime_field(p);
  if (m == 1) return base;
  const u64 candidates = checked_pow(p, m);
  for (u64 idx = 0; idx < candidates; ++idx) {
    std::vector<u64> modulus(static_cast<std::size_t>(m) + 1, 0);
    u64 rest = idx;
    for (int i = 0; i < m; ++i) {
      modulus[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    modulus[static_cast<std::size_t>(m)] = 1;
    if (modulus[0] == 0) continue;  // divisible by the variable
    std::vector<Fe> coeffs;
    for (u64 c : modulus) coeffs.push_back(base.from_int(static_cast<i64>(c)));
    if (is_irreducible(Poly(base, coeffs))) return FieldCtx::extension(p, modulus);
  }
  throw MathError("make_extension: no irreducible modulus found");
}

std::vector<Fe> nth_roots_of_unity(const FieldCtx& field, u64 n) {
  if (n == 0) throw std::invalid_argument("nth_roots_of_unity: n must be positive");
  std::vector<Fe> roots;
  if (n == 1) {
    roots.push_back(field.one());
    return roots;
  }
  const u64 p = field.characteristic();
  if (p != 0 && n % p == 0) {
    throw MathError("nth_roots_of_unity: characteristic " + std::to_string(p) + " divides n = " +
                    std::to_string(n) + " (unsupported characteristic)");
  }
  Fe z;
  if (field.is_finite()) {
    if (!field.order()) throw MathError("nth_roots_of_unity: field order too large");
    const u64 q = *field.order();
    if ((q - 1) % n != 0) {
      throw MathError("nth_roots_of_unity: " + std::to_string(n) + " does not divide |F^x| = " +
                      std::to_string(q - 1));
    }
    z = field.pow(field.primitive_element(), static_cast<i64>((q - 1) / n));
  } else {
    const int big = field.cyclotomic_order();
    if (n == 2 && big == 0) {
      z = field.from_int(-1);
    } else {
      if (big == 0 || static_cast<u64>(big) % n != 0) {
        throw MathError("nth_roots_of_unity: field " + field.name() + " lacks primitive " + std::to_string(n) +
                        "-th roots");
      }
      if (field.kind() == FieldKind::Rationals) {
        z = field.from_int(n == 1 ? 1 : -1);
      } else {
        z = field.pow(field.adjoined_generator(), static_cast<i64>(static_cast<u64>(big) / n));
      }
    }
  }
  Fe power = field.one();
  for (u64 i = 0; i < n; ++i) {
    roots.push_back(power);
    power = field.mul(power, z);
  }
  return roots;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<mpz_class> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<mpz_class> den = cyclotomic_polynomial(d);
    // exact division by a monic integer polynomial
    const std::size_t dd = den.size() - 1;
    std::vector<mpz_class> q(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1;; --i) {
      mpz_class c = num[i];
      std::size_t shift = i - dd;
      q[shift] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[shift + j] -= c * den[j];
      if (i == dd) break;
    }
    num = std::move(q);
  }
  return num;
}

}  // namespace qhgr
