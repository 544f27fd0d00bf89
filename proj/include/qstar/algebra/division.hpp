#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "qstar/algebra/order.hpp"

namespace qstar::algebra {

/// Record of a division f = sum_i quotients[i] * divisors[i] + remainder.
struct ReductionTrace {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  std::size_t steps = 0;
};

/// S(f, g) = (L / LT(f)) f - (L / LT(g)) g with L = lcm(LM(f), LM(g)); the
/// leading terms, coefficients included, cancel exactly.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Multivariate division. At every step the current leading term is divided
/// by the first divisor (in list order) whose leading monomial divides it;
/// terms no divisor can touch move to the remainder.
ReductionTrace reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

/// Memoized normal forms of monomials modulo a Groebner basis.
///
/// Valid only when `basis` is a Groebner basis for `order`: then the normal
/// form is unique and the memo is independent of the reduction path. Safe to
/// share between threads.
class NormalFormCache {
 public:
  NormalFormCache(std::vector<Polynomial> basis, MonomialOrder order);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }

  /// True when no leading monomial of the basis divides m.
  bool is_standard(const Monomial& m) const;
  const Polynomial& of(const Monomial& m) const;
  Polynomial of(const Polynomial& p) const;
  std::size_t cached() const;

 private:
  Polynomial compute(const Monomial& m) const;

  std::vector<Polynomial> basis_;
  MonomialOrder order_;
  std::vector<Monomial> leads_;
  std::vector<Rational> lead_coeffs_;
  std::vector<std::vector<Term>> tails_;
  mutable std::unordered_map<Monomial, Polynomial, MonomialHash> memo_;
  mutable std::shared_mutex mutex_;
};

}  // namespace qstar::algebra
