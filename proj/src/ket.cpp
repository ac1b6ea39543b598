#include "tangle4/ket.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace tangle4 {

namespace {

int label_index(const std::string& label) {
  int index = 0;
  for (char c : label) {
    index = (index << 1) | (c - '0');
  }
  return index;
}

std::string index_label(int index) {
  std::string label(4, '0');
  for (int j = 0; j < 4; ++j) {
    label[j] = static_cast<char>('0' + ((index >> (3 - j)) & 1));
  }
  return label;
}

// Recursive-descent parser for ket expressions and complex literals.
// Positions in errors are zero-based offsets into the original text.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KetExpression parse_expression() {
    skip_ws();
    if (at_end()) {
      fail("empty ket expression");
    }
    KetExpression expr;
    expr.terms.push_back(parse_term(leading_sign()));
    skip_ws();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') {
        fail("expected '+' or '-' between terms");
      }
      ++pos_;
      expr.terms.push_back(parse_term(c == '-' ? -1.0 : 1.0));
      skip_ws();
    }
    return expr;
  }

  Complex parse_whole_complex() {
    skip_ws();
    if (at_end()) {
      fail("empty complex literal");
    }
    const Complex value = parse_signed_sum();
    skip_ws();
    if (!at_end()) {
      fail("unexpected trailing characters after complex literal");
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t position) const {
    throw parse_error(message, position);
  }

  double leading_sign() {
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const char c = peek();
      ++pos_;
      return c == '-' ? -1.0 : 1.0;
    }
    return 1.0;
  }

  KetTerm parse_term(double sign) {
    skip_ws();
    if (at_end()) {
      fail("expected a term");
    }
    Complex coeff{1.0, 0.0};
    if (peek() != '|') {
      coeff = parse_product();
      skip_ws();
    }
    if (at_end() || peek() != '|') {
      fail("expected '|' to open a ket");
    }
    return KetTerm{sign * coeff, parse_label()};
  }

  std::string parse_label() {
    ++pos_;  // consume '|'
    const std::size_t start = pos_;
    std::string label;
    while (!at_end() && peek() != '>') {
      label.push_back(peek());
      ++pos_;
    }
    if (at_end()) {
      fail_at("unterminated ket, expected '>'", text_.size());
    }
    ++pos_;  // consume '>'
    if (label.size() != 4) {
      fail_at("basis label must have exactly 4 bits, found " + std::to_string(label.size()),
              start);
    }
    for (std::size_t k = 0; k < label.size(); ++k) {
      if (label[k] != '0' && label[k] != '1') {
        fail_at("basis label may contain only '0' and '1'", start + k);
      }
    }
    return label;
  }

  Complex parse_signed_sum() {
    const double sign = leading_sign();  // must run before parse_product
    Complex total = sign * parse_product();
    skip_ws();
    while (!at_end() && (peek() == '+' || peek() == '-')) {
      const char c = peek();
      ++pos_;
      total += (c == '-' ? -1.0 : 1.0) * parse_product();
      skip_ws();
    }
    return total;
  }

  Complex parse_product() {
    Complex value = parse_atom();
    for (;;) {
      skip_ws();
      if (at_end()) {
        break;
      }
      const char c = peek();
      if (c == '*') {
        ++pos_;
        skip_ws();
        if (!at_end() && peek() == '|') {
          break;  // '*' was a coefficient-ket separator
        }
        value *= parse_atom();
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        const std::size_t denom_pos = pos_;
        const Complex denom = parse_atom();
        if (denom == Complex{}) {
          fail_at("division by zero in coefficient", denom_pos);
        }
        value /= denom;
      } else {
        break;
      }
    }
    return value;
  }

  Complex parse_atom() {
    skip_ws();
    if (at_end()) {
      fail("expected a number, 'i', 'sqrt(...)' or '(...)'");
    }
    const char c = peek();
    Complex value;
    if (c == 'i') {
      ++pos_;
      return Complex{0.0, 1.0};
    }
    if (c == '(') {
      ++pos_;
      value = parse_signed_sum();
      skip_ws();
      if (at_end() || peek() != ')') {
        fail("expected ')'");
      }
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      value = Complex{parse_number(), 0.0};
    } else if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      skip_ws();
      if (at_end() || peek() != '(') {
        fail("expected '(' after sqrt");
      }
      ++pos_;
      skip_ws();
      const std::size_t arg_pos = pos_;
      const double arg = parse_number();
      if (arg < 0.0) {
        fail_at("sqrt argument must be nonnegative", arg_pos);
      }
      skip_ws();
      if (at_end() || peek() != ')') {
        fail("expected ')' after sqrt argument");
      }
      ++pos_;
      value = Complex{std::sqrt(arg), 0.0};
    } else {
      fail("unexpected character in coefficient");
    }
    if (!at_end() && peek() == 'i') {
      ++pos_;
      value *= Complex{0.0, 1.0};
    }
    return value;
  }

  double parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (!at_end() && peek() == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
      }
    }
    const bool has_digits = pos_ > start && !(pos_ == start + 1 && text_[start] == '.');
    if (!has_digits) {
      fail_at("expected a number", start);
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = mark;  // bare 'e' is not an exponent
      } else {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          ++pos_;
        }
      }
    }
    double out = 0.0;
    const auto result = std::from_chars(text_.data() + start, text_.data() + pos_, out);
    if (result.ec != std::errc()) {
      fail_at("invalid number", start);
    }
    return out;
  }
};

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

PureState4 KetExpression::to_state() const {
  PureState4 state;
  for (const KetTerm& term : terms) {
    state[label_index(term.label)] += term.coefficient;
  }
  return state;
}

KetExpression parse_ket_expression(std::string_view text) {
  return Parser(text).parse_expression();
}

PureState4 parse_ket(std::string_view text) { return parse_ket_expression(text).to_state(); }

Complex parse_complex(std::string_view text) { return Parser(text).parse_whole_complex(); }

std::string format_complex(Complex value) {
  if (value.imag() == 0.0) {
    return format_double(value.real());
  }
  if (value.real() == 0.0) {
    return format_double(value.imag()) + "i";
  }
  std::string out = "(" + format_double(value.real());
  if (!std::signbit(value.imag())) {
    out += "+";
  }
  return out + format_double(value.imag()) + "i)";
}

std::string format_ket(const PureState4& state) {
  std::string out;
  for (int i = 0; i < PureState4::kDim; ++i) {
    const Complex a = state[i];
    if (a == Complex{}) {
      continue;
    }
    const bool negative = a.real() != 0.0 ? a.real() < 0.0 : a.imag() < 0.0;
    const Complex magnitude = negative ? -a : a;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (magnitude != Complex{1.0, 0.0}) {
      out += format_complex(magnitude);
    }
    out += "|" + index_label(i) + ">";
  }
  if (out.empty()) {
    out = "0|0000>";
  }
  return out;
}

}  // namespace tangle4
