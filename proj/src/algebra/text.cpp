#include "qstar/algebra/text.hpp"

#include <cctype>

#include "qstar/error.hpp"

namespace qstar::algebra {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Polynomial polynomial() {
    Polynomial sum(n_);
    skip_space();
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      sum += term() * Rational(sign);
      first = false;
    }
    if (first) fail("empty polynomial");
    return sum;
  }

 private:
  Polynomial term() {
    Polynomial p = factor();
    skip_space();
    while (!at_end() && peek() == '*') {
      get();
      skip_space();
      p = p * factor();
      skip_space();
    }
    return p;
  }

  Polynomial factor() {
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      mpz_class num(integer_text());
      mpz_class den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        get();
        skip_space();
        den = mpz_class(integer_text());
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(n_, q);
    }
    Polynomial base(n_);
    if (c == 'x') {
      get();
      expect('[');
      const int a = small_integer();
      expect(',');
      const int b = small_integer();
      expect(']');
      if (a == b) fail("x[" + std::to_string(a) + "," + std::to_string(a) + "] is not a variable");
      try {
        base = Polynomial::x(a, b, n_);
      } catch (const Error& e) {
        fail(e.what());
      }
    } else if (c == 'y') {
      get();
      expect('[');
      const int i = small_integer();
      expect(']');
      try {
        base = Polynomial::y(i, n_);
      } catch (const Error& e) {
        fail(e.what());
      }
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip_space();
    if (!at_end() && peek() == '^') {
      get();
      skip_space();
      const int e = small_integer();
      Polynomial out = Polynomial::constant(n_, 1);
      for (int k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  std::string integer_text() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) digits += get();
    if (digits.empty()) fail("expected an integer");
    return digits;
  }

  int small_integer() {
    skip_space();
    const std::string digits = integer_text();
    skip_space();
    if (digits.size() > 4) fail("index too large");
    return std::stoi(digits);
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error("parse error at column " + std::to_string(pos_ + 1) + ": " + message + " in '" +
                std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
  check_ring_size(n);
  return Parser(text, n).polynomial();
}

std::vector<Polynomial> parse_ideal(std::string_view text, int n) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) out.push_back(parse_polynomial(line, n));
    start = end + 1;
  }
  return out;
}

std::string format_ideal(std::span<const Polynomial> generators, std::string_view header) {
  std::string out;
  if (!header.empty()) out += "# " + std::string(header) + "\n";
  for (const auto& g : generators) out += g.to_string() + "\n";
  return out;
}

}  // namespace qstar::algebra
