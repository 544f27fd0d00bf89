#include "qstar/algebra/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "qstar/error.hpp"

namespace qstar::algebra {

namespace {

bool ambient_greater(const Term& a, const Term& b) {
  return a.monomial.ambient_compare(b.monomial) > 0;
}

}  // namespace

Polynomial::Polynomial(int n) : n_(n) { check_ring_size(n); }

Polynomial Polynomial::constant(int n, const Rational& c) {
  return monomial(Monomial(n), c);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.n());
  if (c != 0) {
    p.terms_.push_back({c, m});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

Polynomial Polynomial::variable(const Variable& v) { return monomial(Monomial::of(v)); }

Polynomial Polynomial::x(int a, int b, int n) {
  if (a == b) return Polynomial(n);
  const auto sv = signed_x(a, b, n);
  return monomial(Monomial::of(sv.variable), sv.sign);
}

Polynomial Polynomial::y(int i, int n) { return variable(Variable::y(i, n)); }

Polynomial Polynomial::from_terms(int n, std::vector<Term> terms) {
  Polynomial p(n);
  for (const auto& t : terms) {
    if (t.monomial.n() != n) throw Error("term from a different ring");
  }
  std::sort(terms.begin(), terms.end(), ambient_greater);
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (n_ != other.n_ && n_ != 0 && other.n_ != 0) {
    throw Error("polynomials from different rings (n=" + std::to_string(n_) + " vs n=" +
                std::to_string(other.n_) + ")");
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return 0;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.bidegree() != terms_.front().monomial.bidegree()) return false;
  }
  return true;
}

std::pair<int, int> Polynomial::bidegree() const {
  if (is_zero()) throw Error("zero polynomial has no bidegree");
  if (!is_homogeneous()) throw Error("polynomial is not bihomogeneous: " + to_string());
  return terms_.front().monomial.bidegree();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial out(n_ != 0 ? n_ : other.n_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && ambient_greater(*a, *b))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || ambient_greater(*b, *a)) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back({std::move(c), a->monomial});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  const int n = n_ != 0 ? n_ : other.n_;
  if (is_zero() || other.is_zero()) return n == 0 ? Polynomial() : Polynomial(n);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      acc[s.monomial * t.monomial] += s.coeff * t.coeff;
    }
  }
  Polynomial out(n);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({std::move(c), m});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), ambient_greater);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return n_ == 0 ? Polynomial() : Polynomial(n_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (n_ != 0 && m.n() != n_) throw Error("term from a different ring");
  Polynomial out(m.n());
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the ambient order.
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.monomial * m});
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (n_ != 0 && static_cast<int>(values.size()) != variable_count(n_)) {
    throw Error("evaluation point has wrong dimension");
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i : t.monomial.support()) {
      for (int e = 0; e < t.monomial.exponent(i); ++e) v *= values[static_cast<std::size_t>(i)];
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coeff);
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += t.monomial.to_string();
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) {
      return false;
    }
  }
  return true;
}

Polynomial dot(std::span<const Polynomial> coefficients, std::span<const Polynomial> generators) {
  if (coefficients.size() != generators.size()) throw Error("dot product length mismatch");
  int n = 0;
  for (const auto& g : generators) n = std::max(n, g.n());
  Polynomial sum = n == 0 ? Polynomial() : Polynomial(n);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_zero()) sum += coefficients[i] * generators[i];
  }
  return sum;
}

}  // namespace qstar::algebra
