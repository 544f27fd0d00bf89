#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qstar/algebra/groebner.hpp"
#include "qstar/complexes/complex.hpp"

namespace qstar::grassmann {

using algebra::Monomial;
using algebra::MonomialOrder;
using algebra::Polynomial;

enum class IdealKind { I2n, Jn };

/// Generators in canonical order: Pfaffians lexicographic in (i, j, k, l),
/// then f_1, ..., f_n for the bundle ideal.
struct IdealSpec {
  int n = 0;
  IdealKind kind = IdealKind::I2n;
  std::vector<Polynomial> generators;
  std::vector<std::string> names;
};

/// x[i,j] x[k,l] - x[i,k] x[j,l] + x[i,l] x[j,k] for i < j < k < l.
Polynomial pfaffian(int i, int j, int k, int l, int n);
/// Row i of the skew matrix (x_ab) times (y_1, ..., y_n).
Polynomial quadric_f(int i, int n);
/// f_i - x[i,j] y[j], with x[i,j] = -x[j,i] when j < i.
Polynomial quadric_f_without(int i, int j, int n);

/// Plücker ideal of G(2, n): the C(n, 4) Pfaffians.
IdealSpec grassmannian_ideal(int n);
/// The Pfaffians followed by f_1, ..., f_n.
IdealSpec bundle_ideal(int n);

std::size_t pfaffian_count(int n);
/// Index of the given Pfaffian in either generator list.
std::size_t pfaffian_position(int i, int j, int k, int l, int n);
/// Index of f_i in the bundle generator list.
std::size_t quadric_position(int i, int n);
/// All quadruples i < j < k < l in lexicographic order.
std::vector<std::array<int, 4>> quadruples(int n);

/// Grading by the torus of GL_n acting on both factors: x[i,j] has degree
/// e_i + e_j and y[j] has degree -e_j. Every generator is homogeneous.
using TorusDegree = std::array<int, algebra::kMaxN>;
TorusDegree torus_degree(const Monomial& m);
/// Throws when p is zero or not homogeneous.
TorusDegree torus_degree(const Polynomial& p);
TorusDegree operator+(const TorusDegree& a, const TorusDegree& b);
TorusDegree operator-(const TorusDegree& a, const TorusDegree& b);
/// Monomials of bidegree (dx, dy) grouped by torus degree, each group
/// ambient-descending. Empty when dx or dy is negative.
std::map<TorusDegree, std::vector<Monomial>> monomials_by_torus_degree(int n, int dx, int dy);

/// (b - a)(n - b + a): the arc length of x[a,b] times its complement.
std::int64_t circular_weight(int a, int b, int n);
/// Total degree, then the circular weight on x-variables (y weight 0).
MonomialOrder circular_order(int n);
/// The refinement stack whose initial ideal of the bundle ideal is the
/// Stanley-Reisner ideal of K_n * Delta_{2n-4}:
///   total degree;
///   degree in {y_2, ..., y_{n-1}}, larger is smaller;
///   degree in x[n-1,n], larger is smaller;
///   lexicographic on y_n > y_1 > y_2 > ... > y_{n-1};
///   circular weight.
MonomialOrder bundle_order(int n);
/// One line per layer of an order built here.
std::vector<std::string> describe_layers(const MonomialOrder& order);

struct CircularCheck {
  int n = 0;
  std::size_t quadruples = 0;
  std::size_t failures = 0;
  std::optional<std::array<int, 4>> first_failure;
};

/// Checks LT(Pfaffian_ijkl) = x[i,k] x[j,l] under circular_order(n) for all
/// quadruples.
CircularCheck check_circular_leading_terms(int n);

/// The bundle complex K_n * Delta_{2n-4}; the simplex factor carries the
/// polygon edges e[i,i+1] and the free vertices y_2, ..., y_{n-1}.
complexes::SimplicialComplex bundle_complex(int n);
/// The Grassmannian complex A_n * Delta_{n-1} on the diagonals and the n
/// polygon edges.
complexes::SimplicialComplex grassmannian_complex(int n);

struct InitialIdealReport {
  int n = 0;
  /// "paper" for the bundle order, "circular" for the Plücker ideal.
  std::string order;
  std::vector<std::string> order_layers;
  std::size_t generator_count = 0;
  bool gb_holds = false;
  std::vector<Monomial> initial_generators;
  std::vector<Monomial> sr_generators;
  bool match = false;
  bool leading_terms_squarefree = false;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reduction_steps = 0;
  std::optional<algebra::PairFailure> failure;
  /// Set when the completion cross-check ran: true when completing the
  /// generators added no leading monomial outside the initial ideal.
  std::optional<bool> completion_adds_nothing;
  double seconds = 0;

  bool passed() const;
};

/// Buchberger's criterion for the bundle ideal under bundle_order(n), and a
/// comparison of its initial ideal with the Stanley-Reisner ideal of the
/// bundle complex under the standard labeling.
InitialIdealReport verify_bundle_initial_ideal(int n, bool completion_crosscheck = false);
/// The same for the Plücker ideal, the circular order, and A_n * Delta_{n-1}.
InitialIdealReport verify_grassmannian_initial_ideal(int n, bool completion_crosscheck = false);

struct DegreeReport {
  int n = 0;
  /// 2/(n-1) C(2(n-2), n-2) + 1/(n-2) C(2(n-3), n-3).
  algebra::Rational formula;
  std::size_t facet_count = 0;
  /// Leading coefficient of the Hilbert polynomial of the Stanley-Reisner
  /// ring of the bundle complex, times (dim - 1)!.
  algebra::Rational hilbert_degree;
  std::size_t krull_dimension = 0;

  bool consistent() const;
};

DegreeReport degree_check(int n);

struct VanishingReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
};

/// Evaluates every bundle generator at points (minors of a random rank-2
/// integer 2 x n matrix M, a random rational y with M y = 0).
VanishingReport check_vanishing(int n, int trials, std::uint64_t seed);

/// Point of the bundle: values indexed by canonical variable number.
std::vector<algebra::Rational> bundle_point(int n, std::uint64_t seed);

struct CaseReplay {
  /// 1: S(f_i, f_j); 2: S(f_1, f_n); 3: S(f_j, Pfaffian_ijkn);
  /// 4: S(f_{n-1}, Pfaffian_1j(n-1)n).
  int family = 0;
  std::string pair;
  bool reduces_to_zero = false;
  /// +1 or -1 when the expansion certificate equals plus or minus the
  /// S-polynomial; 0 when it equals neither.
  int certificate_sign = 0;
  /// The same comparison for the displayed short form of the S-polynomial.
  int short_form_sign = 0;
};

/// Recomputes each S-pair of the four non-coprime families, reduces it
/// modulo the bundle generators, and compares it with the closed-form
/// expansions in terms of Pfaffians and the f_i.
std::vector<CaseReplay> replay_s_pair_cases(int n);

}  // namespace qstar::grassmann
