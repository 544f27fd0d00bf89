#include "qstar/algebra/division.hpp"

#include <map>
#include <mutex>

#include "qstar/error.hpp"

namespace qstar::algebra {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw Error("S-polynomial of a zero polynomial");
  const Term& lf = order.leading_term(f);
  const Term& lg = order.leading_term(g);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.mul_term(Rational(1) / lf.coeff, l / lf.monomial) -
         g.mul_term(Rational(1) / lg.coeff, l / lg.monomial);
}

ReductionTrace reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  const int n = order.n();
  if (f.n() != 0 && f.n() != n) throw Error("dividend ring does not match the order");
  std::vector<Monomial> leads;
  std::vector<Rational> lead_coeffs;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw Error("division by the zero polynomial");
    if (g.n() != n) throw Error("divisor ring does not match the order");
    const Term& lt = order.leading_term(g);
    leads.push_back(lt.monomial);
    lead_coeffs.push_back(lt.coeff);
  }

  auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
  std::map<Monomial, Rational, decltype(cmp)> work(cmp);
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);

  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;
  ReductionTrace trace;

  while (!work.empty()) {
    auto top = work.begin();
    const Monomial m = top->first;
    const Rational c = top->second;
    std::size_t chosen = divisors.size();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (leads[i].divides(m)) {
        chosen = i;
        break;
      }
    }
    if (chosen == divisors.size()) {
      remainder_terms.push_back({c, m});
      work.erase(top);
      continue;
    }
    ++trace.steps;
    const Monomial u = m / leads[chosen];
    const Rational factor = c / lead_coeffs[chosen];
    quotient_terms[chosen].push_back({factor, u});
    for (const auto& t : divisors[chosen].terms()) {
      const Monomial tm = t.monomial * u;
      auto [it, inserted] = work.try_emplace(tm, 0);
      it->second -= factor * t.coeff;
      if (it->second == 0) work.erase(it);
    }
  }

  trace.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) trace.quotients.push_back(Polynomial::from_terms(n, std::move(q)));
  trace.remainder = Polynomial::from_terms(n, std::move(remainder_terms));
  return trace;
}

NormalFormCache::NormalFormCache(std::vector<Polynomial> basis, MonomialOrder order)
    : basis_(std::move(basis)), order_(std::move(order)) {
  for (const auto& g : basis_) {
    if (g.is_zero()) throw Error("zero polynomial in a Groebner basis");
    const std::size_t lead = order_.leading_index(g);
    leads_.push_back(g.terms()[lead].monomial);
    lead_coeffs_.push_back(g.terms()[lead].coeff);
    std::vector<Term> tail;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i != lead) tail.push_back(g.terms()[i]);
    }
    tails_.push_back(std::move(tail));
  }
}

bool NormalFormCache::is_standard(const Monomial& m) const {
  for (const auto& l : leads_) {
    if (l.divides(m)) return false;
  }
  return true;
}

std::size_t NormalFormCache::cached() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

const Polynomial& NormalFormCache::of(const Monomial& m) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  }
  Polynomial nf = compute(m);
  std::unique_lock lock(mutex_);
  // Another thread may have inserted the same (identical) value meanwhile.
  return memo_.try_emplace(m, std::move(nf)).first->second;
}

Polynomial NormalFormCache::compute(const Monomial& m) const {
  std::size_t chosen = leads_.size();
  for (std::size_t i = 0; i < leads_.size(); ++i) {
    if (leads_[i].divides(m)) {
      chosen = i;
      break;
    }
  }
  if (chosen == leads_.size()) return Polynomial::monomial(m);
  // c*L + tail = g, so u*L = -(u*tail)/c modulo the ideal.
  const Monomial u = m / leads_[chosen];
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : tails_[chosen]) {
    const Rational scale = -t.coeff / lead_coeffs_[chosen];
    for (const auto& r : of(u * t.monomial).terms()) acc[r.monomial] += scale * r.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (c != 0) terms.push_back({std::move(c), mono});
  }
  return Polynomial::from_terms(m.n(), std::move(terms));
}

Polynomial NormalFormCache::of(const Polynomial& p) const {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : p.terms()) {
    for (const auto& r : of(t.monomial).terms()) acc[r.monomial] += t.coeff * r.coeff;
  }
  std::vector<Term> terms;
  for (auto& [mono, c] : acc) {
    if (c != 0) terms.push_back({std::move(c), mono});
  }
  return Polynomial::from_terms(order_.n(), std::move(terms));
}

}  // namespace qstar::algebra
