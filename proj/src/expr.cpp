#include "takiff/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace takiff {

namespace {

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' || c == '.';
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  Rational number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    return rat_from_string(text.substr(start, pos - start));
  }

  std::string label() {
    std::size_t start = pos;
    ++pos;
    while (pos < text.size() && is_label_char(text[pos])) ++pos;
    // trailing '*' belongs to the label (dual-basis names) only when it is
    // not followed by another label or number
    if (pos < text.size() && text[pos] == '*') {
      const std::size_t after = pos + 1;
      const bool operand_follows =
          after < text.size() &&
          (is_label_start(text[after]) || std::isdigit(static_cast<unsigned char>(text[after])));
      if (!operand_follows) ++pos;
    }
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

RatVec parse_element(const LieAlgebra& algebra, std::string_view text) {
  Parser p{text};
  RatVec out(algebra.dim(), Rational(0));
  bool expect_term = true;
  Rational sign(1);
  while (!p.done()) {
    char c = p.peek();
    if (c == '+' || c == '-') {
      if (expect_term && c == '-') {
        sign = -sign;
        ++p.pos;
        continue;
      }
      if (expect_term) {
        ++p.pos;
        continue;
      }
      sign = (c == '-') ? Rational(-1) : Rational(1);
      ++p.pos;
      expect_term = true;
      continue;
    }
    if (!expect_term)
      throw std::invalid_argument("expected '+' or '-' near position " + std::to_string(p.pos) +
                                  " in '" + std::string(text) + "'");
    Rational coeff = sign;
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= p.number();
      saw_number = true;
      p.skip_ws();
      if (p.pos < p.text.size() && p.peek() == '*') {
        ++p.pos;
        p.skip_ws();
      }
    }
    if (!p.done() && is_label_start(p.peek())) {
      std::string name = p.label();
      auto idx = algebra.label_index(name);
      if (!idx)
        throw std::invalid_argument("unknown basis label '" + name + "' in algebra '" +
                                    algebra.name() + "'");
      out[*idx] += coeff;
    } else if (saw_number) {
      if (!is_zero(coeff))
        throw std::invalid_argument("constant term '" + rat_to_string(coeff) +
                                    "' is not an element");
    } else {
      throw std::invalid_argument("expected a term near position " + std::to_string(p.pos) +
                                  " in '" + std::string(text) + "'");
    }
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !(text.find_first_not_of(" \t") == std::string_view::npos))
    throw std::invalid_argument("dangling operator in '" + std::string(text) + "'");
  return out;
}

Jet parse_jet(const AlgebraPtr& algebra, std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw std::invalid_argument("empty jet expression");
  std::string_view body = text.substr(first, last - first + 1);
  std::vector<RatVec> coeffs;
  if (body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unterminated '[' in jet expression");
    body = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t semi = body.find(';', start);
      std::string_view piece =
          semi == std::string_view::npos ? body.substr(start) : body.substr(start, semi - start);
      coeffs.push_back(parse_element(*algebra, piece));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
  } else {
    coeffs.push_back(parse_element(*algebra, body));
  }
  return make_jet(algebra, std::move(coeffs));
}

}  // namespace takiff
