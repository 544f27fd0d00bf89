#pragma once

#include <random>

#include "qstar/algebra/order.hpp"

namespace qstar_test {

using qstar::algebra::Monomial;
using qstar::algebra::MonomialOrder;
using qstar::algebra::Polynomial;

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline Monomial random_monomial(int n, std::mt19937_64& rng, int max_degree) {
  std::vector<int> e(static_cast<std::size_t>(qstar::algebra::variable_count(n)), 0);
  const int d = uniform(rng, 0, max_degree);
  for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(e.size()) - 1))];
  return Monomial::from_exponents(n, e);
}

inline Polynomial random_polynomial(int n, std::mt19937_64& rng, int terms, int max_degree) {
  std::vector<qstar::algebra::Term> out;
  for (int k = 0; k < terms; ++k) {
    out.push_back({qstar::algebra::Rational(uniform(rng, -3, 3), uniform(rng, 1, 3)),
                   random_monomial(n, rng, max_degree)});
  }
  return Polynomial::from_terms(n, std::move(out));
}

/// Total degree first, then a random mix of the other layer kinds.
inline MonomialOrder random_order(int n, std::mt19937_64& rng) {
  using namespace qstar::algebra;
  std::vector<OrderLayer> layers{TotalDegree{}};
  const int nv = variable_count(n);
  const int extra = uniform(rng, 0, 3);
  for (int k = 0; k < extra; ++k) {
    const Direction dir = uniform(rng, 0, 1) == 0 ? Direction::LargerIsGreater : Direction::LargerIsSmaller;
    switch (uniform(rng, 0, 2)) {
      case 0: {
        std::vector<std::int64_t> w(static_cast<std::size_t>(nv));
        for (auto& x : w) x = uniform(rng, -4, 4);
        layers.push_back(WeightVector{w, dir});
        break;
      }
      case 1: {
        std::vector<Variable> vars;
        for (int i = 0; i < nv; ++i) {
          if (uniform(rng, 0, 2) == 0) vars.push_back(Variable::from_index(i, n));
        }
        layers.push_back(RestrictedDegree{vars, dir});
        break;
      }
      default: {
        std::vector<Variable> vars;
        for (int i = nv - 1; i >= 0; --i) {
          if (uniform(rng, 0, 2) == 0) vars.push_back(Variable::from_index(i, n));
        }
        layers.push_back(RestrictedLex{vars});
        break;
      }
    }
  }
  return MonomialOrder(n, layers, "random");
}

}  // namespace qstar_test
