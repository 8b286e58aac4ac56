#include "qhgr/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qhgr {

SquareMatrix::SquareMatrix(FieldCtx field, std::size_t size)
    : field_(std::move(field)), n_(size), a_(size * size, field_.zero()) {}

SquareMatrix SquareMatrix::identity(const FieldCtx& field, std::size_t size) {
  SquareMatrix m(field, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = field.one();
  return m;
}

SquareMatrix SquareMatrix::from_ints(const FieldCtx& field, const std::vector<std::vector<i64>>& rows) {
  SquareMatrix m(field, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("SquareMatrix::from_ints: not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

bool SquareMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (!field_.is_zero(x)) return false;
  }
  return true;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < n_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) out << ", ";
      out << field_.format(at(r, c));
    }
    out << "]\n";
  }
  return out.str();
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  SquareMatrix out(a.field_, a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
  return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const FieldCtx& f = a.field_;
  SquareMatrix out(f, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Fe& x = a.at(i, k);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
    }
  }
  return out;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.a_ == b.a_;
}

SquareMatrix SquareMatrix::scaled(const Fe& s) const {
  SquareMatrix out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.mul(a_[i], s);
  return out;
}

Poly char_poly(const SquareMatrix& input) {
  const FieldCtx& f = input.field();
  const std::size_t n = input.size();
  SquareMatrix h = input;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && f.is_zero(h.at(pivot, col))) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(pivot, j), h.at(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, pivot), h.at(i, col + 1));
    }
    const Fe inv = f.inv(h.at(col + 1, col));
    for (std::size_t r = col + 2; r < n; ++r) {
      const Fe factor = f.mul(h.at(r, col), inv);
      if (f.is_zero(factor)) continue;
      for (std::size_t j = 0; j < n; ++j) h.at(r, j) = f.sub(h.at(r, j), f.mul(factor, h.at(col + 1, j)));
      for (std::size_t i = 0; i < n; ++i) h.at(i, col + 1) = f.add(h.at(i, col + 1), f.mul(factor, h.at(i, r)));
    }
  }
  // p_k = det(xI - H_k) via the standard Hessenberg recurrence.
  std::vector<Poly> p;
  p.emplace_back(Poly::constant(f, f.one()));
  const Poly x = Poly::variable(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = (x - Poly::constant(f, h.at(k - 1, k - 1))) * p[k - 1];
    Fe prod = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h.at(k - i, k - i - 1));
      if (f.is_zero(prod)) break;
      const Fe coef = f.mul(prod, h.at(k - i - 1, k - 1));
      next = next - p[k - i - 1].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  Poly result = p[n];
  if (n % 2 == 1) result = -result;
  return result;
}

namespace {

// Row-reduces `basis` (kept in echelon form with pivot columns) against v.
// Returns true if v was independent (and appends it).
struct Echelon {
  const FieldCtx& f;
  std::vector<std::vector<Fe>> rows;
  std::vector<std::size_t> pivots;
  // Combination coefficients: each stored row as a combination of inputs.
  std::vector<std::vector<Fe>> combos;

  // Returns the combination of the earlier inputs equal to v when dependent.
  std::optional<std::vector<Fe>> insert(std::vector<Fe> v, std::size_t input_index) {
    std::vector<Fe> combo(input_index + 1, f.zero());
    combo[input_index] = f.one();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Fe c = v[pivots[r]];
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, rows[r][j]));
      for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] = f.sub(combo[j], f.mul(c, combos[r][j]));
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && f.is_zero(v[pivot])) ++pivot;
    if (pivot == v.size()) return combo;  // combo . inputs = 0
    const Fe inv = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, inv);
    for (auto& x : combo) x = f.mul(x, inv);
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    combos.push_back(std::move(combo));
    return std::nullopt;
  }
};

}  // namespace

Poly min_poly(const SquareMatrix& m) {
  const FieldCtx& f = m.field();
  const std::size_t n = m.size();
  Echelon ech{f, {}, {}, {}};
  SquareMatrix power = SquareMatrix::identity(f, n);
  for (std::size_t d = 0; d <= n; ++d) {
    auto dependency = ech.insert(power.entries(), d);
    if (dependency) {
      // sum_j combo[j] M^j = 0 with combo[d] = 1 up to normalization.
      std::vector<Fe> coeffs = *dependency;
      return Poly(f, std::move(coeffs)).monic();
    }
    power = power * m;
  }
  throw std::logic_error("min_poly: no dependency found (impossible by Cayley-Hamilton)");
}

SquareMatrix evaluate_at(const Poly& p, const SquareMatrix& m) {
  const FieldCtx& f = m.field();
  SquareMatrix acc(f, m.size());
  const SquareMatrix id = SquareMatrix::identity(f, m.size());
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + id.scaled(p.coeff(i));
  return acc;
}

std::size_t rank(const SquareMatrix& m) {
  const FieldCtx& f = m.field();
  Echelon ech{f, {}, {}, {}};
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<Fe> row(m.entries().begin() + static_cast<std::ptrdiff_t>(i * m.size()),
                        m.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * m.size()));
    if (!ech.insert(std::move(row), i)) ++r;
  }
  return r;
}

}  // namespace qhgr
