#pragma once

// Internal helpers for the "c0 + c1*x + c2*x^2" family of text formats.

#include <string>
#include <string_view>
#include <vector>

namespace qhgr::detail {

struct TextTerm {
  bool negative = false;
  std::string coefficient;  // empty means 1; parentheses already stripped
  int exponent = 0;
};

std::string trim(std::string_view s);
std::string strip_spaces(std::string_view s);

/// Splits a sum of monomials in `symbol`. Accepts forms like "3", "-x",
/// "2*x^3", "(1+a)*x", "x^2". Throws std::invalid_argument on malformed input.
std::vector<TextTerm> split_monomial_sum(std::string_view text, char symbol);

/// Formats a single monomial "coef*sym^e" with the conventional elisions.
std::string format_monomial(const std::string& coef, char symbol, int exponent);

}  // namespace qhgr::detail
