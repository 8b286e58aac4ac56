#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qhgr {

/// Gr(k, n): complex k-planes in C^n. The minimal Chern number is n, which
/// is also the complex degree of the quantum parameter q.
class GrContext {
 public:
  GrContext(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int cols() const { return n_ - k_; }
  int minimal_chern_number() const { return n_; }
  int dimension() const { return k_ * (n_ - k_); }
  /// The transposed context Gr(n - k, n).
  GrContext dual() const { return GrContext(n_ - k_, n_); }

  friend bool operator==(const GrContext&, const GrContext&) = default;
  friend auto operator<=>(const GrContext&, const GrContext&) = default;

 private:
  int k_;
  int n_;
};

/// Young diagram stored as weakly decreasing row lengths, trailing zeros
/// removed. The default-constructed diagram is empty.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument for negative or increasing rows.
  explicit YoungDiagram(std::vector<int> rows);

  /// j boxes in the first column (the special class x_j).
  static YoungDiagram column(int j);
  /// A single row of j boxes.
  static YoungDiagram row_of(int j);
  /// "3,1" or "-" for the empty diagram.
  static YoungDiagram parse(std::string_view text);

  const std::vector<int>& rows() const { return rows_; }
  int row(int i) const { return i < static_cast<int>(rows_.size()) ? rows_[static_cast<std::size_t>(i)] : 0; }
  int length() const { return static_cast<int>(rows_.size()); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool fits(const GrContext& ctx) const;

  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  /// Canonical order: by size, then rows lexicographically descending, so
  /// (11) < (10,1) < (9,2) within a graded piece.
  friend std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b);

 private:
  std::vector<int> rows_;
};

/// A monomial q^qPower * sigma_D of the additive basis of QH*.
struct GradedBasisElement {
  YoungDiagram diagram;
  int q_power = 0;

  int degree(const GrContext& ctx) const { return diagram.size() + ctx.n() * q_power; }

  friend bool operator==(const GradedBasisElement&, const GradedBasisElement&) = default;
  /// Ordered by q power first, then canonical diagram order.
  friend std::strong_ordering operator<=>(const GradedBasisElement& a, const GradedBasisElement& b);
};

/// All diagrams in the k x (n-k) rectangle in canonical order; binom(n,k) of them.
std::vector<YoungDiagram> enumerate_diagrams(const GrContext& ctx);

/// The transpose of d, which lives in Gr(n-k, n).
YoungDiagram conjugate(const GrContext& ctx, const YoungDiagram& d);

/// All (D, m) with |D| + n*m = degree, in canonical order.
std::vector<GradedBasisElement> graded_basis(const GrContext& ctx, int degree);

}  // namespace qhgr
