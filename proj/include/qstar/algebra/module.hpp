#pragma once

#include <span>
#include <vector>

#include "qstar/algebra/groebner.hpp"

namespace qstar::algebra {

/// Division in the free module S^k under the Schreyer order induced by a
/// generator list G: m e_a > m' e_b iff LM(m LM(g_a)) > LM(m' LM(g_b)), ties
/// going to the smaller position. Schreyer's theorem makes the trace
/// syzygies of a Groebner basis a Groebner basis of the syzygy module for
/// this order, so reduction to zero decides membership.
class SchreyerReducer {
 public:
  SchreyerReducer(std::vector<Polynomial> generators, MonomialOrder order,
                  std::vector<SyzygyVector> basis);

  struct Result {
    /// Coefficient of each basis vector.
    std::vector<Polynomial> quotients;
    std::vector<Polynomial> remainder;
    bool remainder_is_zero() const;
  };

  /// Divides v by the basis, always picking the first basis vector whose
  /// leading module term divides the current one.
  Result reduce(const std::vector<Polynomial>& v) const;
  bool contains(const std::vector<Polynomial>& v) const { return reduce(v).remainder_is_zero(); }

 private:
  struct Lead {
    std::size_t position;
    Monomial monomial;
    Rational coeff;
  };
  Lead leading(const std::vector<Polynomial>& v) const;

  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  std::vector<SyzygyVector> basis_;
  std::vector<Monomial> gen_leads_;
  std::vector<Lead> basis_leads_;
};

}  // namespace qstar::algebra
