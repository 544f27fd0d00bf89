#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstar/algebra/polynomial.hpp"

namespace qstar::cotangent {

using algebra::Monomial;
using algebra::Polynomial;
using Bidegree = std::pair<int, int>;

/// Images of the bundle generators (Pfaffians, then f_1, ..., f_n) under a
/// homomorphism J_n -> S_n / J_n, each in normal form.
using Assignment = std::vector<Polynomial>;

/// The piece of T^1(S_n / J_n) of bidegree delta: homomorphisms sending each
/// generator g to bidegree deg(g) + delta, modulo the derivations.
struct T1Slice {
  int n = 0;
  Bidegree delta{0, 0};
  std::size_t hom_dim = 0;
  std::size_t der_dim = 0;
  std::size_t t1_dim = 0;
  /// Homomorphisms whose classes form a basis of the slice.
  std::vector<Assignment> basis;
  /// Every derivation image satisfies the syzygy constraints.
  bool derivations_in_hom = false;
  /// Every basis element re-checked against all trace syzygies by plain
  /// division.
  bool basis_verified = false;
  /// Number of torus-graded pieces the slice splits into.
  std::size_t pieces = 0;

  bool consistent() const;
};

/// Computes one slice with exact linear algebra over normal forms modulo
/// the Groebner basis of J_n. Requires 5 <= n <= 10. The constraints come
/// from the trace syzygies of pairs with overlapping leading monomials, or
/// of every pair when `all_pairs`; both give the same slice.
T1Slice t1_slice(int n, Bidegree delta, bool with_basis = true, bool all_pairs = false);

/// Every delta for which each target bidegree deg(g) + delta, empty ones
/// included, is componentwise at most max_target, and some target is
/// nonempty.
std::vector<Bidegree> window_shifts(Bidegree max_target);
std::vector<T1Slice> t1_window(int n, Bidegree max_target, bool with_basis = false, bool all_pairs = false);

struct ClassCheck {
  bool in_hom = false;
  bool in_derivation_image = false;
};

/// Decides whether the assignment is a homomorphism of bidegree delta and
/// whether it is induced by a derivation.
ClassCheck classify_assignment(int n, Bidegree delta, const Assignment& images);

/// Phi_2345 -> y_1, Phi_1345 -> -y_2, Phi_1245 -> y_3, Phi_1235 -> -y_4,
/// Phi_1234 -> y_5, every f_i -> 0 (n = 5).
Assignment five_pfaffian_class();

struct LemmaSample {
  int alpha = 0;
  int beta = 0;
  Monomial z_c;
  Monomial z_d;
  Polynomial normal_form;
  /// Every monomial of the normal form is z_d times a monomial in the
  /// variables x[i,j] with alpha <= i < j <= beta.
  bool holds = false;
};

/// Reduces z_c z_d modulo J_n and checks the factorization. Throws when the
/// hypotheses fail: z_c must use only C-indexed and z_d only D-indexed
/// x-variables, and z_d must be free of crossing pairs.
LemmaSample check_lemma_instance(int n, int alpha, int beta, const Monomial& z_c, const Monomial& z_d);

struct LemmaReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::size_t failures = 0;
  /// Samples where z_c z_d was not already in normal form.
  std::size_t nontrivial = 0;
  /// One extra sample per trial with beta - alpha >= 3 and a crossing pair
  /// x[a,c] x[b,d] inside z_c, so the product is never in normal form.
  std::size_t targeted_failures = 0;
  std::size_t targeted_nontrivial = 0;
  std::optional<LemmaSample> first_failure;

  bool passed() const { return failures == 0 && targeted_failures == 0; }
};

/// Random samples with alpha <= beta uniform and z_c, z_d of degree at most
/// 4, plus the targeted samples.
LemmaReport check_normal_form_lemma(int n, int trials, std::uint64_t seed);

}  // namespace qstar::cotangent
