#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qstar/algebra/division.hpp"

namespace qstar::algebra {

struct PairFailure {
  std::size_t first;
  std::size_t second;
  Polynomial remainder;
};

struct CriterionResult {
  bool holds = true;
  /// Lowest-indexed pair whose S-polynomial leaves a nonzero remainder.
  std::optional<PairFailure> failure;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reduction_steps = 0;
};

/// Buchberger's criterion: every S-pair reduces to zero modulo G. With
/// skip_coprime, pairs whose leading monomials are coprime are not reduced
/// (their S-polynomials always reduce to zero). Pairs are reduced in
/// parallel and folded in (i, j) order.
CriterionResult buchberger_criterion(std::span<const Polynomial> generators,
                                     const MonomialOrder& order, bool skip_coprime = true);

/// Completes G to a Groebner basis of the ideal it generates. Pairs are
/// processed smallest-lcm first (normal strategy, ties broken by index);
/// coprime pairs are skipped. Nonzero remainders are appended made monic.
/// Throws once more than pair_budget pairs have been reduced.
std::vector<Polynomial> buchberger_complete(std::span<const Polynomial> generators,
                                            const MonomialOrder& order,
                                            std::size_t pair_budget = 200000);

/// Inclusion-minimal monic leading monomials, sorted ambient-descending.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> monomials);

/// Minimal generators of the initial ideal of a Groebner basis. Throws when
/// the criterion fails.
std::vector<Monomial> initial_ideal(std::span<const Polynomial> basis, const MonomialOrder& order);

bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> generators);

/// Monomials of bidegree (dx, dy) outside the monomial ideal, sorted
/// ambient-descending.
std::vector<Monomial> standard_monomials(std::span<const Monomial> initial, int dx, int dy, int n);

/// Relation vector: sum_i coefficients[i] * generators[i] == 0.
struct SyzygyVector {
  std::string name;
  std::vector<Polynomial> coefficients;
};

Polynomial evaluate_syzygy(const SyzygyVector& s, std::span<const Polynomial> generators);

/// Schreyer syzygies: for every pair i < j the reduction of S(g_i, g_j) to
/// zero gives (L/LT g_i) e_i - (L/LT g_j) e_j - sum_k q_k e_k. Requires G to
/// be a Groebner basis; these vectors generate the syzygy module of G.
std::vector<SyzygyVector> syzygies_from_traces(std::span<const Polynomial> basis,
                                               const MonomialOrder& order);

}  // namespace qstar::algebra
