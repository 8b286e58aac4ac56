#pragma once

#include <string>
#include <vector>

#include "qhgr/field.hpp"
#include "qhgr/poly.hpp"

namespace qhgr {

/// Dense square matrix over a FieldCtx, row-major.
class SquareMatrix {
 public:
  SquareMatrix(FieldCtx field, std::size_t size);
  static SquareMatrix identity(const FieldCtx& field, std::size_t size);
  static SquareMatrix from_ints(const FieldCtx& field, const std::vector<std::vector<i64>>& rows);

  const FieldCtx& field() const { return field_; }
  std::size_t size() const { return n_; }
  const Fe& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Fe& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<Fe>& entries() const { return a_; }

  bool is_zero() const;
  std::string to_string() const;

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);
  SquareMatrix scaled(const Fe& s) const;

 private:
  FieldCtx field_;
  std::size_t n_;
  std::vector<Fe> a_;
};

/// det(M - xI), so the leading coefficient is (-1)^size.
Poly char_poly(const SquareMatrix& m);

/// Monic minimal polynomial of m.
Poly min_poly(const SquareMatrix& m);

/// p(M) by Horner's rule.
SquareMatrix evaluate_at(const Poly& p, const SquareMatrix& m);

/// Rank by Gaussian elimination.
std::size_t rank(const SquareMatrix& m);

}  // namespace qhgr
