#include "qstar/algebra/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "qstar/error.hpp"
#include "qstar/parallel.hpp"

namespace qstar::algebra {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(count * (count - (count > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

void check_nonzero(std::span<const Polynomial> gs) {
  for (const auto& g : gs) {
    if (g.is_zero()) throw Error("zero polynomial in generator list");
  }
}

}  // namespace

CriterionResult buchberger_criterion(std::span<const Polynomial> generators,
                                     const MonomialOrder& order, bool skip_coprime) {
  check_nonzero(generators);
  std::vector<Monomial> leads;
  for (const auto& g : generators) leads.push_back(order.leading_monomial(g));
  const auto pairs = all_pairs(generators.size());

  struct Outcome {
    bool skipped = false;
    Polynomial remainder;
    std::size_t steps = 0;
  };
  std::vector<Outcome> outcomes(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    if (skip_coprime && leads[i].coprime(leads[j])) {
      outcomes[k].skipped = true;
      return;
    }
    auto trace = reduce(s_polynomial(generators[i], generators[j], order), generators, order);
    outcomes[k].remainder = std::move(trace.remainder);
    outcomes[k].steps = trace.steps;
  });

  CriterionResult result;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto& o = outcomes[k];
    if (o.skipped) {
      ++result.pairs_skipped;
      continue;
    }
    ++result.pairs_checked;
    result.reduction_steps += o.steps;
    if (!o.remainder.is_zero() && !result.failure) {
      result.holds = false;
      result.failure = PairFailure{pairs[k].first, pairs[k].second, std::move(o.remainder)};
    }
  }
  return result;
}

std::vector<Polynomial> buchberger_complete(std::span<const Polynomial> generators,
                                            const MonomialOrder& order,
                                            std::size_t pair_budget) {
  check_nonzero(generators);
  std::vector<Polynomial> basis(generators.begin(), generators.end());
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(order.leading_monomial(g));

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };
  std::vector<Pair> queue;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i].coprime(leads[j])) continue;
      queue.push_back({i, j, leads[i].lcm(leads[j])});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair p = *best;
    queue.erase(best);
    if (++processed > pair_budget) {
      throw Error("Buchberger completion exceeded the pair budget of " +
                  std::to_string(pair_budget));
    }
    auto trace = reduce(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
    if (trace.remainder.is_zero()) continue;
    const Term& lt = order.leading_term(trace.remainder);
    basis.push_back(trace.remainder * (Rational(1) / lt.coeff));
    leads.push_back(lt.monomial);
    add_pairs_for(basis.size() - 1);
  }
  return basis;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    return a.ambient_compare(b) < 0;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> out;
  // Ascending by degree, so any divisor of m is already in `out`.
  for (const auto& m : monomials) {
    if (!in_monomial_ideal(m, out)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.ambient_compare(b) > 0; });
  return out;
}

std::vector<Monomial> initial_ideal(std::span<const Polynomial> basis, const MonomialOrder& order) {
  const auto criterion = buchberger_criterion(basis, order, true);
  if (!criterion.holds) {
    throw Error("generators are not a Groebner basis: S(" +
                std::to_string(criterion.failure->first) + "," +
                std::to_string(criterion.failure->second) + ") leaves " +
                criterion.failure->remainder.to_string());
  }
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(order.leading_monomial(g));
  return minimal_monomials(std::move(leads));
}

bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> generators) {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> standard_monomials(std::span<const Monomial> initial, int dx, int dy, int n) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_bidegree(n, dx, dy)) {
    if (!in_monomial_ideal(m, initial)) out.push_back(std::move(m));
  }
  return out;
}

Polynomial evaluate_syzygy(const SyzygyVector& s, std::span<const Polynomial> generators) {
  return dot(s.coefficients, generators);
}

std::vector<SyzygyVector> syzygies_from_traces(std::span<const Polynomial> basis,
                                               const MonomialOrder& order) {
  check_nonzero(basis);
  const int n = order.n();
  const auto pairs = all_pairs(basis.size());
  std::vector<SyzygyVector> out(pairs.size());
  std::vector<std::string> failures(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    const Term& li = order.leading_term(basis[i]);
    const Term& lj = order.leading_term(basis[j]);
    const Monomial l = li.monomial.lcm(lj.monomial);
    const Polynomial mi = Polynomial::monomial(l / li.monomial, Rational(1) / li.coeff);
    const Polynomial mj = Polynomial::monomial(l / lj.monomial, Rational(1) / lj.coeff);
    auto trace = reduce(basis[i] * mi - basis[j] * mj, basis, order);
    if (!trace.remainder.is_zero()) {
      failures[k] = "S(" + std::to_string(i) + "," + std::to_string(j) + ")";
      return;
    }
    SyzygyVector s;
    s.name = "S(" + std::to_string(i) + "," + std::to_string(j) + ")";
    s.coefficients.assign(basis.size(), Polynomial(n));
    for (std::size_t a = 0; a < basis.size(); ++a) s.coefficients[a] = -trace.quotients[a];
    s.coefficients[i] += mi;
    s.coefficients[j] -= mj;
    out[k] = std::move(s);
  });
  for (const auto& f : failures) {
    if (!f.empty()) throw Error("not a Groebner basis: " + f + " does not reduce to zero");
  }
  return out;
}

}  // namespace qstar::algebra
