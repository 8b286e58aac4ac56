#include "qhgr/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text_util.hpp"

namespace qhgr {

GrContext::GrContext(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n < 1 || k > n) {
    throw std::invalid_argument("Gr(k,n) requires 1 <= k <= n, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
  }
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw std::invalid_argument("Young diagram rows must be nonnegative");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("Young diagram rows must be weakly decreasing");
  }
}

YoungDiagram YoungDiagram::column(int j) { return YoungDiagram(std::vector<int>(static_cast<std::size_t>(j), 1)); }

YoungDiagram YoungDiagram::row_of(int j) { return j == 0 ? YoungDiagram() : YoungDiagram(std::vector<int>{j}); }

YoungDiagram YoungDiagram::parse(std::string_view text) {
  std::string s = detail::strip_spaces(text);
  if (s == "-" || s.empty()) return YoungDiagram();
  std::vector<int> rows;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad diagram '" + std::string(text) + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad diagram '" + std::string(text) + "'");
    rows.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return YoungDiagram(std::move(rows));
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool YoungDiagram::fits(const GrContext& ctx) const {
  return length() <= ctx.k() && (rows_.empty() || rows_.front() <= ctx.cols());
}

std::string YoungDiagram::to_string() const {
  if (rows_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rows_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Descending lexicographic on rows.
  return b.rows_ <=> a.rows_;
}

std::strong_ordering operator<=>(const GradedBasisElement& a, const GradedBasisElement& b) {
  if (auto c = a.q_power <=> b.q_power; c != 0) return c;
  return a.diagram <=> b.diagram;
}

namespace {

void enumerate_rec(const GrContext& ctx, std::vector<int>& rows, int max_len, std::vector<YoungDiagram>& out) {
  if (static_cast<int>(rows.size()) == ctx.k()) {
    out.emplace_back(rows);
    return;
  }
  for (int len = 0; len <= max_len; ++len) {
    rows.push_back(len);
    enumerate_rec(ctx, rows, len, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(const GrContext& ctx) {
  std::vector<YoungDiagram> out;
  std::vector<int> rows;
  enumerate_rec(ctx, rows, ctx.cols(), out);
  std::sort(out.begin(), out.end());
  return out;
}

YoungDiagram conjugate(const GrContext& ctx, const YoungDiagram& d) {
  if (!d.fits(ctx)) throw std::invalid_argument("conjugate: diagram does not fit the context");
  std::vector<int> cols;
  const int width = d.row(0);
  for (int c = 0; c < width; ++c) {
    int height = 0;
    while (height < d.length() && d.row(height) > c) ++height;
    cols.push_back(height);
  }
  return YoungDiagram(std::move(cols));
}

std::vector<GradedBasisElement> graded_basis(const GrContext& ctx, int degree) {
  std::vector<GradedBasisElement> out;
  const int n = ctx.n();
  for (const auto& d : enumerate_diagrams(ctx)) {
    const int rest = degree - d.size();
    // floor-safe divisibility for negative degrees
    if (((rest % n) + n) % n != 0) continue;
    out.push_back({d, rest / n});
  }
  std::sort(out.begin(), out.end(), [](const GradedBasisElement& a, const GradedBasisElement& b) {
    return a.diagram < b.diagram;
  });
  return out;
}

}  // namespace qhgr
