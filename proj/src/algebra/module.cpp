#include "qstar/algebra/module.hpp"

#include <map>
#include <optional>

#include "qstar/error.hpp"

namespace qstar::algebra {

SchreyerReducer::SchreyerReducer(std::vector<Polynomial> generators, MonomialOrder order,
                                 std::vector<SyzygyVector> basis)
    : generators_(std::move(generators)), order_(std::move(order)), basis_(std::move(basis)) {
  for (const auto& g : generators_) gen_leads_.push_back(order_.leading_monomial(g));
  for (const auto& s : basis_) {
    if (s.coefficients.size() != generators_.size()) throw Error("syzygy has wrong length");
    basis_leads_.push_back(leading(s.coefficients));
  }
}

bool SchreyerReducer::Result::remainder_is_zero() const {
  for (const auto& p : remainder) {
    if (!p.is_zero()) return false;
  }
  return true;
}

SchreyerReducer::Lead SchreyerReducer::leading(const std::vector<Polynomial>& v) const {
  std::optional<Lead> best;
  Monomial best_image;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (const auto& t : v[a].terms()) {
      const Monomial image = t.monomial * gen_leads_[a];
      // Positions are scanned in increasing order, so a tie keeps the
      // earlier (greater) position.
      if (!best || order_.greater(image, best_image)) {
        best = Lead{a, t.monomial, t.coeff};
        best_image = image;
      }
    }
  }
  if (!best) throw Error("zero module element has no leading term");
  return *best;
}

SchreyerReducer::Result SchreyerReducer::reduce(const std::vector<Polynomial>& v) const {
  if (v.size() != generators_.size()) throw Error("module element has wrong length");
  using Key = std::pair<std::size_t, Monomial>;
  auto cmp = [this](const Key& a, const Key& b) {
    const auto c = order_.compare(a.second * gen_leads_[a.first], b.second * gen_leads_[b.first]);
    if (c != 0) return c > 0;
    return a.first < b.first;
  };
  std::map<Key, Rational, decltype(cmp)> work(cmp);
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (const auto& t : v[a].terms()) work.emplace(Key{a, t.monomial}, t.coeff);
  }

  const int n = order_.n();
  std::vector<std::vector<Term>> quotient_terms(basis_.size());
  std::vector<std::vector<Term>> remainder_terms(v.size());
  while (!work.empty()) {
    auto top = work.begin();
    const auto [pos, m] = top->first;
    const Rational c = top->second;
    std::size_t chosen = basis_.size();
    for (std::size_t k = 0; k < basis_leads_.size(); ++k) {
      if (basis_leads_[k].position == pos && basis_leads_[k].monomial.divides(m)) {
        chosen = k;
        break;
      }
    }
    if (chosen == basis_.size()) {
      remainder_terms[pos].push_back({c, m});
      work.erase(top);
      continue;
    }
    const Monomial u = m / basis_leads_[chosen].monomial;
    const Rational factor = c / basis_leads_[chosen].coeff;
    quotient_terms[chosen].push_back({factor, u});
    const auto& s = basis_[chosen].coefficients;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (const auto& t : s[a].terms()) {
        auto [it, inserted] = work.try_emplace(Key{a, t.monomial * u}, 0);
        it->second -= factor * t.coeff;
        if (it->second == 0) work.erase(it);
      }
    }
  }

  Result result;
  for (auto& q : quotient_terms) result.quotients.push_back(Polynomial::from_terms(n, std::move(q)));
  for (auto& r : remainder_terms) result.remainder.push_back(Polynomial::from_terms(n, std::move(r)));
  return result;
}

}  // namespace qstar::algebra
