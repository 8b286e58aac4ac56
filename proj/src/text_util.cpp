#include "text_util.hpp"

#include <cctype>
#include <stdexcept>

namespace qhgr::detail {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

namespace {

TextTerm parse_term(std::string_view raw, bool negative, char symbol) {
  TextTerm term;
  term.negative = negative;
  std::string t(raw);
  if (t.empty()) throw std::invalid_argument("empty term");
  std::string coef;
  std::string mono;
  if (t.front() == '(') {
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses: " + t);
    coef = t.substr(1, close - 1);
    std::string rest = t.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '*') throw std::invalid_argument("expected '*' after coefficient: " + t);
      mono = rest.substr(1);
    }
  } else {
    std::size_t sym = t.find(symbol);
    if (sym == std::string::npos) {
      coef = t;
    } else {
      coef = t.substr(0, sym);
      if (!coef.empty()) {
        if (coef.back() != '*') throw std::invalid_argument("expected '*' before symbol: " + t);
        coef.pop_back();
      }
      mono = t.substr(sym);
    }
  }
  term.coefficient = coef;
  if (mono.empty()) {
    term.exponent = 0;
    if (coef.empty()) throw std::invalid_argument("empty term");
    return term;
  }
  if (mono.front() != symbol) throw std::invalid_argument("expected symbol in term: " + t);
  if (mono.size() == 1) {
    term.exponent = 1;
  } else {
    if (mono[1] != '^') throw std::invalid_argument("expected '^' in term: " + t);
    std::string e = mono.substr(2);
    if (e.empty()) throw std::invalid_argument("missing exponent: " + t);
    std::size_t used = 0;
    int value = std::stoi(e, &used);
    if (used != e.size() || value < 0) throw std::invalid_argument("bad exponent: " + t);
    term.exponent = value;
  }
  return term;
}

}  // namespace

std::vector<TextTerm> split_monomial_sum(std::string_view text, char symbol) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty expression");
  std::vector<TextTerm> out;
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  int depth = 0;
  std::size_t start = pos;
  for (std::size_t i = pos; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool split = (i == s.size()) || (depth == 0 && (c == '+' || c == '-') && i > start &&
                                      s[i - 1] != '^' && s[i - 1] != '/' && s[i - 1] != '*');
    if (split) {
      out.push_back(parse_term(std::string_view(s).substr(start, i - start), negative, symbol));
      if (i < s.size()) {
        negative = c == '-';
        start = i + 1;
      }
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses");
  return out;
}

std::string format_monomial(const std::string& coef, char symbol, int exponent) {
  if (exponent == 0) return coef;
  std::string mono(1, symbol);
  if (exponent != 1) mono += "^" + std::to_string(exponent);
  if (coef == "1") return mono;
  if (coef == "-1") return "-" + mono;
  return coef + "*" + mono;
}

}  // namespace qhgr::detail
