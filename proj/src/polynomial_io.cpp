#include "frobroot/error.hpp"
#include "frobroot/polynomial.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace frobroot {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const RingPtr& ring, std::string_view text)
      : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial f = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::syntax_error,
         "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial parse_sum() {
    skip_ws();
    Polynomial sum(ring_);
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = parse_term();
    sum = negate ? sum - t : sum + t;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      t = parse_term();
      sum = c == '-' ? sum - t : sum + t;
    }
    return sum;
  }

  Polynomial parse_term() {
    if (!at_factor_start()) error("expected a coefficient, variable or '('");
    Polynomial product = parse_factor();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (!at_factor_start()) error("expected a factor after '*'");
        product = product * parse_factor();
      } else if (at_factor_start()) {
        product = product * parse_factor();
      } else {
        break;
      }
    }
    return product;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      base = base.pow(parse_exponent());
    }
    return base;
  }

  std::uint64_t parse_exponent() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      error("expected a nonnegative integer exponent after '^'");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<Exponent>::max()) {
        fail(ErrorCode::exponent_overflow,
             "column " + std::to_string(pos_ + 1) + ": exponent exceeds 32 bits");
      }
      ++pos_;
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      error("exponent must be followed by '*', whitespace or an operator");
    }
    return value;
  }

  Polynomial parse_atom() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_sum();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& field = ring_->field();
      PrimeField::Value value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = field.add(field.mul(value, field.reduce(10)),
                          field.reduce(static_cast<std::uint64_t>(text_[pos_] - '0')));
        ++pos_;
      }
      return Polynomial::constant(ring_, value);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    auto index = ring_->variable_index(name);
    if (!index) {
      fail(ErrorCode::unknown_name, "column " + std::to_string(start + 1) +
                                        ": unknown variable '" + std::string(name) + "'");
    }
    return Polynomial::variable(ring_, *index);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolynomialParser(ring, text).parse();
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.monomial.is_one()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += to_string(t.monomial, *f.ring());
    } else {
      out += std::to_string(t.coeff) + '*' + to_string(t.monomial, *f.ring());
    }
  }
  return out;
}

}  // namespace frobroot
