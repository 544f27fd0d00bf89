#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "qstar/algebra/monomial.hpp"

namespace qstar::algebra {

using Rational = mpq_class;

struct Term {
  Rational coeff;
  Monomial monomial;
};

/// Sparse polynomial in S_n with exact rational coefficients.
///
/// Terms are kept in ambient-descending order with no zero coefficients and
/// no repeated monomials; the zero polynomial has no terms. Leading terms
/// with respect to a MonomialOrder are computed on demand (see order.hpp).
class Polynomial {
 public:
  Polynomial() = default;
  /// The zero polynomial of S_n.
  explicit Polynomial(int n);
  static Polynomial constant(int n, const Rational& c);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(const Variable& v);
  /// Signed x[a,b]: -x[b,a] when a > b, zero when a == b.
  static Polynomial x(int a, int b, int n);
  static Polynomial y(int i, int n);
  /// Builds a polynomial from arbitrary terms, merging repeats and dropping
  /// zeros.
  static Polynomial from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;
  bool is_homogeneous() const;
  /// Bidegree of every term, or throws when the polynomial is not
  /// bihomogeneous or is zero.
  std::pair<int, int> bidegree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

  /// c * m * (*this).
  Polynomial mul_term(const Rational& c, const Monomial& m) const;

  /// Substitutes values indexed by canonical variable number.
  Rational evaluate(std::span<const Rational> values) const;

  /// Human-readable form in the text grammar, e.g. `x[1,2]*x[3,4] - 1/2*y[1]`.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& other) const;

  std::vector<Term> terms_;
  int n_ = 0;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Sum of coefficients[i] * generators[i].
Polynomial dot(std::span<const Polynomial> coefficients, std::span<const Polynomial> generators);

}  // namespace qstar::algebra
