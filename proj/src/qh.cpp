#include "qhgr/qh.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "text_util.hpp"

namespace qhgr {

namespace {

const std::string kSigma = "\xCF\x83";  // UTF-8 sigma

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("structure constant overflow");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("structure constant overflow");
  return r;
}

using ZElement = std::map<GradedBasisElement, i64>;

void accumulate(ZElement& acc, const GradedBasisElement& key, i64 c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) acc.erase(it);
  }
}

// x_j * sigma_d: the list of (diagram, q increment) with multiplicity one each.
std::vector<std::pair<YoungDiagram, int>> pieri_terms(const GrContext& ctx, const YoungDiagram& d, int j) {
  const int k = ctx.k();
  const int cols = ctx.cols();
  std::vector<std::pair<YoungDiagram, int>> out;
  std::vector<int> rows(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = d.row(i);

  // Classical: a vertical strip of j boxes.
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != j) continue;
    std::vector<int> next = rows;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (mask & (1u << i)) {
        int v = ++next[static_cast<std::size_t>(i)];
        if (v > cols) ok = false;
      }
    }
    for (int i = 1; i < k && ok; ++i) {
      if (next[static_cast<std::size_t>(i)] > next[static_cast<std::size_t>(i - 1)]) ok = false;
    }
    if (ok) out.emplace_back(YoungDiagram(next), 0);
  }

  // Quantum: drop the full top row, then a vertical strip of k - j boxes
  // from what is left; the remainder must still be a diagram.
  if (k >= 1 && rows[0] == cols) {
    std::vector<int> rest(rows.begin() + 1, rows.end());
    const int remove = k - j;
    const int m = static_cast<int>(rest.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != remove) continue;
      std::vector<int> next = rest;
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (mask & (1u << i)) {
          if (next[static_cast<std::size_t>(i)] == 0) ok = false;
          --next[static_cast<std::size_t>(i)];
        }
      }
      for (int i = 1; i < m && ok; ++i) {
        if (next[static_cast<std::size_t>(i)] > next[static_cast<std::size_t>(i - 1)]) ok = false;
      }
      if (ok) out.emplace_back(YoungDiagram(next), 1);
    }
  }
  return out;
}

ZElement pieri_z(const GrContext& ctx, const ZElement& e, int j) {
  ZElement out;
  for (const auto& [key, c] : e) {
    for (const auto& [d, dq] : pieri_terms(ctx, key.diagram, j)) {
      accumulate(out, {d, key.q_power + dq}, c);
    }
  }
  return out;
}

void check_same(const QhElement& a, const QhElement& b) {
  if (a.ctx() != b.ctx()) throw std::invalid_argument("QH elements live in different Grassmannians");
  if (a.field() != b.field()) throw std::invalid_argument("QH elements use different coefficient fields");
}

// ---------------------------------------------------------------- cache

struct CacheKey {
  int k, n;
  std::vector<int> a, b;
  friend bool operator<(const CacheKey& x, const CacheKey& y) {
    return std::tie(x.k, x.n, x.a, x.b) < std::tie(y.k, y.n, y.a, y.b);
  }
};

struct StructureCache {
  std::shared_mutex mutex;
  // std::map never moves its nodes, so references handed out stay valid.
  std::map<CacheKey, IntegerExpansion> table;
};

StructureCache& cache() {
  static StructureCache instance;
  return instance;
}

IntegerExpansion compute_product(const GrContext& ctx, const YoungDiagram& a, const YoungDiagram& b) {
  ZElement total;
  for (const auto& [exponents, coef] : giambelli_expand(ctx, a)) {
    ZElement current{{GradedBasisElement{b, 0}, 1}};
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      for (int e = 0; e < exponents[i]; ++e) current = pieri_z(ctx, current, static_cast<int>(i) + 1);
    }
    for (const auto& [key, c] : current) accumulate(total, key, checked_mul(c, coef));
  }
  return IntegerExpansion(total.begin(), total.end());
}

// ---------------------------------------------------------------- parsing helpers

// Splits at '*' outside brackets.
std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == '*') {
      out.emplace_back();
      continue;
    }
    out.back() += c;
  }
  return out;
}

// Splits a sum into signed terms; a sign right after '^' or '*' belongs to
// the factor (q^-1, 2*-3) and brackets protect sigma[-].
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const bool glued = i > 0 && (s[i - 1] == '^' || s[i - 1] == '*');
    if (depth == 0 && (c == '+' || c == '-') && !glued) {
      if (!cur.empty()) out.push_back(cur);
      cur = std::string(1, c);
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- QhElement

QhElement::QhElement(GrContext ctx, FieldCtx field) : ctx_(ctx), field_(std::move(field)) {}

QhElement QhElement::unit(const GrContext& ctx, const FieldCtx& field) { return schubert(ctx, field, YoungDiagram()); }

QhElement QhElement::schubert(const GrContext& ctx, const FieldCtx& field, const YoungDiagram& d, int q_power) {
  if (!d.fits(ctx)) throw std::invalid_argument("diagram " + d.to_string() + " does not fit Gr(" +
                                                std::to_string(ctx.k()) + "," + std::to_string(ctx.n()) + ")");
  QhElement e(ctx, field);
  e.add_term(d, q_power, field.one());
  return e;
}

QhElement QhElement::special(const GrContext& ctx, const FieldCtx& field, int j) {
  if (j < 0 || j > ctx.k()) throw std::invalid_argument("special class x_j needs 0 <= j <= k");
  // In Gr(n,n) the column does not fit and x_j is a pure q-term.
  if (j == 0 || YoungDiagram::column(j).fits(ctx)) return schubert(ctx, field, YoungDiagram::column(j));
  return pieri_multiply(unit(ctx, field), j);
}

QhElement QhElement::parse(const GrContext& ctx, const FieldCtx& field, std::string_view text) {
  std::string s = detail::strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty element");
  QhElement out(ctx, field);
  if (s == "0") return out;
  for (std::string term : split_terms(s)) {
    if (term.empty()) throw std::invalid_argument("malformed element '" + std::string(text) + "'");
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw std::invalid_argument("malformed element '" + std::string(text) + "'");
    Fe coef = field.one();
    int q_power = 0;
    std::optional<YoungDiagram> diagram;
    for (const std::string& factor : split_factors(term)) {
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + std::string(text) + "'");
      std::string body;
      if (factor.rfind(kSigma, 0) == 0) body = factor.substr(kSigma.size());
      else if (factor.front() == 's') body = factor.substr(1);
      if (!body.empty() || factor == "s") {
        if (diagram) throw std::invalid_argument("two diagrams in one term: '" + term + "'");
        if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
          throw std::invalid_argument("bad Schubert symbol '" + factor + "'");
        }
        diagram = YoungDiagram::parse(body.substr(1, body.size() - 2));
      } else if (factor.front() == 'q') {
        if (factor == "q") {
          q_power += 1;
        } else if (factor.size() > 2 && factor[1] == '^') {
          std::string e = factor.substr(2);
          if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
          std::size_t used = 0;
          int v = 0;
          try {
            v = std::stoi(e, &used);
          } catch (const std::logic_error&) {
            throw std::invalid_argument("bad q exponent in '" + factor + "'");
          }
          if (used != e.size()) throw std::invalid_argument("bad q exponent in '" + factor + "'");
          q_power += v;
        } else {
          throw std::invalid_argument("bad factor '" + factor + "'");
        }
      } else {
        coef = field.mul(coef, field.parse_element(factor));
      }
    }
    if (!diagram) diagram = YoungDiagram();  // bare coefficient or q power means a multiple of the unit
    if (!diagram->fits(ctx)) throw std::invalid_argument("diagram " + diagram->to_string() + " does not fit");
    out.add_term(*diagram, q_power, negative ? field.neg(coef) : coef);
  }
  return out;
}

Fe QhElement::coefficient(const YoungDiagram& d, int q_power) const {
  auto it = terms_.find({d, q_power});
  return it == terms_.end() ? field_.zero() : it->second;
}

void QhElement::add_term(const YoungDiagram& d, int q_power, const Fe& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(GradedBasisElement{d, q_power}, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

std::optional<int> QhElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree(ctx_);
  for (const auto& [key, c] : terms_) {
    if (key.degree(ctx_) != d) return std::nullopt;
  }
  return d;
}

bool QhElement::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree(ctx_) == degree; });
}

std::string QhElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string coef = field_.format(c);
    bool negative = false;
    if (!coef.empty() && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    std::string term;
    if (coef != "1") term += coef + "*";
    if (key.q_power == 1) term += "q*";
    else if (key.q_power != 0) term += "q^" + std::to_string(key.q_power) + "*";
    term += kSigma + "[" + key.diagram.to_string() + "]";
    if (first) out += negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

QhElement QhElement::scaled(const Fe& s) const {
  QhElement out(ctx_, field_);
  for (const auto& [key, c] : terms_) out.add_term(key.diagram, key.q_power, field_.mul(c, s));
  return out;
}

QhElement operator+(const QhElement& a, const QhElement& b) {
  check_same(a, b);
  QhElement out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.diagram, key.q_power, c);
  return out;
}

QhElement operator-(const QhElement& a) { return a.scaled(a.field_.neg(a.field_.one())); }

QhElement operator-(const QhElement& a, const QhElement& b) { return a + (-b); }

bool operator==(const QhElement& a, const QhElement& b) {
  return a.ctx_ == b.ctx_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- products

QhElement pieri_multiply(const QhElement& e, int j) {
  const GrContext& ctx = e.ctx();
  if (j < 1 || j > ctx.k()) throw std::invalid_argument("pieri_multiply: j must lie in 1..k");
  QhElement out(ctx, e.field());
  for (const auto& [key, c] : e.terms()) {
    for (const auto& [d, dq] : pieri_terms(ctx, key.diagram, j)) out.add_term(d, key.q_power + dq, c);
  }
  return out;
}

QhElement transposed_pieri_multiply(const QhElement& e, int j) {
  const GrContext& ctx = e.ctx();
  if (j < 1 || j > ctx.cols()) throw std::invalid_argument("transposed_pieri_multiply: j must lie in 1..n-k");
  const GrContext dual = ctx.dual();
  QhElement out(ctx, e.field());
  for (const auto& [key, c] : e.terms()) {
    for (const auto& [d, dq] : pieri_terms(dual, conjugate(ctx, key.diagram), j)) {
      out.add_term(conjugate(dual, d), key.q_power + dq, c);
    }
  }
  return out;
}

SpecialPolynomial giambelli_expand(const GrContext& ctx, const YoungDiagram& d) {
  if (!d.fits(ctx)) throw std::invalid_argument("giambelli_expand: diagram does not fit");
  const int k = ctx.k();
  const YoungDiagram conj = conjugate(ctx, d);
  const int m = conj.length();  // number of columns of d
  const std::vector<int> zero(static_cast<std::size_t>(k), 0);
  if (m == 0) return {{zero, 1}};

  // Permutation expansion of det(x_{c_i + j - i}), row by row; a state is
  // the set of columns already used.
  std::map<unsigned, SpecialPolynomial> states{{0u, {{zero, 1}}}};
  for (int row = 0; row < m; ++row) {
    std::map<unsigned, SpecialPolynomial> next;
    for (const auto& [used, poly] : states) {
      for (int col = 0; col < m; ++col) {
        if (used & (1u << col)) continue;
        const int index = conj.row(row) + col - row;
        if (index < 0 || index > k) continue;
        // Sign: one inversion per already-used column to the right.
        const int inversions = __builtin_popcount(used >> (col + 1));
        const i64 sign = (inversions % 2) ? -1 : 1;
        SpecialPolynomial& target = next[used | (1u << col)];
        for (const auto& [exps, c] : poly) {
          std::vector<int> e = exps;
          if (index > 0) ++e[static_cast<std::size_t>(index - 1)];
          i64& slot = target[e];
          slot = checked_add(slot, checked_mul(sign, c));
        }
      }
    }
    states.clear();
    for (auto& [used, poly] : next) {
      std::erase_if(poly, [](const auto& t) { return t.second == 0; });
      if (!poly.empty()) states.emplace(used, std::move(poly));
    }
  }
  auto it = states.find((1u << m) - 1);
  return it == states.end() ? SpecialPolynomial{} : it->second;
}

std::string to_string(const SpecialPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : p) {
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    const i64 mag = c < 0 ? -c : c;
    std::string term = mono.empty() ? std::to_string(mag) : (mag == 1 ? mono : std::to_string(mag) + "*" + mono);
    if (first) out += (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

const IntegerExpansion& schubert_product(const GrContext& ctx, const YoungDiagram& a, const YoungDiagram& b) {
  if (!a.fits(ctx) || !b.fits(ctx)) throw std::invalid_argument("schubert_product: diagram does not fit");
  StructureCache& c = cache();
  CacheKey key{ctx.k(), ctx.n(), a.rows(), b.rows()};
  {
    std::shared_lock lock(c.mutex);
    auto it = c.table.find(key);
    if (it != c.table.end()) return it->second;
  }
  IntegerExpansion value = compute_product(ctx, a, b);
  std::unique_lock lock(c.mutex);
  return c.table.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t structure_cache_size() {
  StructureCache& c = cache();
  std::shared_lock lock(c.mutex);
  return c.table.size();
}

QhElement quantum_product(const QhElement& a, const QhElement& b) {
  check_same(a, b);
  const FieldCtx& f = a.field();
  QhElement out(a.ctx(), f);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const Fe c = f.mul(ca, cb);
      for (const auto& [key, z] : schubert_product(a.ctx(), ka.diagram, kb.diagram)) {
        out.add_term(key.diagram, key.q_power + ka.q_power + kb.q_power, f.mul(c, f.from_int(z)));
      }
    }
  }
  return out;
}

QhElement quantum_power(const QhElement& a, int e) {
  if (e < 0) throw std::invalid_argument("quantum_power: negative exponent");
  QhElement out = QhElement::unit(a.ctx(), a.field());
  for (int i = 0; i < e; ++i) out = quantum_product(a, out);
  return out;
}

QhElement q_shift(const QhElement& a, int m) {
  QhElement out(a.ctx(), a.field());
  for (const auto& [key, c] : a.terms()) out.add_term(key.diagram, key.q_power + m, c);
  return out;
}

}  // namespace qhgr
