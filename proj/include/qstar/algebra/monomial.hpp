#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qstar::algebra {

/// Largest supported number of polygon vertices. The ring S_n has
/// n(n-1)/2 + n variables, which must fit the dense exponent array below.
inline constexpr int kMaxN = 10;
inline constexpr int kMaxVariables = 64;

/// Number of variables of S_n = K[x_ij, y_i].
constexpr int variable_count(int n) { return n * (n - 1) / 2 + n; }
constexpr int x_variable_count(int n) { return n * (n - 1) / 2; }

void check_ring_size(int n);

enum class VarKind : std::uint8_t { X, Y };

/// A ring variable x[i,j] (1 <= i < j <= n) or y[i] (1 <= i <= n).
///
/// Variables are numbered canonically: x[1,2], x[1,3], ..., x[1,n], x[2,3],
/// ..., x[n-1,n], then y[1], ..., y[n].
class Variable {
 public:
  static Variable y(int i, int n);
  /// x[i,j] with i < j. Use signed_x for unordered index pairs.
  static Variable x(int i, int j, int n);
  static Variable from_index(int index, int n);

  VarKind kind() const { return kind_; }
  int first() const { return a_; }
  /// Second index of an x-variable; 0 for y.
  int second() const { return b_; }
  int n() const { return n_; }
  int index() const;

  std::string to_string() const;

  friend bool operator==(const Variable&, const Variable&) = default;

 private:
  Variable(VarKind kind, int a, int b, int n) : kind_(kind), a_(a), b_(b), n_(n) {}

  VarKind kind_;
  int a_;
  int b_;
  int n_;
};

/// Result of normalizing x[a,b] under antisymmetry x_ab = -x_ba.
struct SignedVariable {
  Variable variable;
  int sign;
};

/// Normalizes x[a,b] to x[min,max] with sign -1 when a > b. Rejects a == b
/// (x_aa = 0 must be handled by the caller) and out-of-range indices.
SignedVariable signed_x(int a, int b, int n);

/// Monomial over the variables of S_n, stored as a dense exponent array.
/// Exponents are capped at 255.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial 1 of S_n.
  explicit Monomial(int n);
  static Monomial of(const Variable& v, int power = 1);
  static Monomial from_exponents(int n, const std::vector<int>& exponents);

  int n() const { return n_; }
  int variable_count() const { return algebra::variable_count(n_); }
  int exponent(int var_index) const { return exp_[static_cast<std::size_t>(var_index)]; }
  int exponent(const Variable& v) const { return exponent(v.index()); }

  int degree() const { return xdeg_ + ydeg_; }
  /// (degree in x-variables, degree in y-variables).
  std::pair<int, int> bidegree() const { return {xdeg_, ydeg_}; }
  bool is_one() const { return degree() == 0; }

  /// Variable indices with nonzero exponent, ascending.
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_squarefree() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Fixed ambient order used for canonical storage and printing: total
  /// degree first, then lexicographic on the canonical variable numbering
  /// with x[1,2] most significant.
  std::strong_ordering ambient_compare(const Monomial& other) const;

  std::size_t hash() const;
  std::string to_string() const;

  const std::uint8_t* data() const { return exp_.data(); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.exp_ == b.exp_;
  }

 private:
  void check_same_ring(const Monomial& other) const;

  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint8_t n_ = 0;
  std::uint16_t xdeg_ = 0;
  std::uint16_t ydeg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of S_n of bidegree (dx, dy), in ambient-descending order.
std::vector<Monomial> monomials_of_bidegree(int n, int dx, int dy);

}  // namespace qstar::algebra
