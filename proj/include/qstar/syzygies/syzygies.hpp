#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstar/algebra/groebner.hpp"

namespace qstar::syzygies {

using algebra::Polynomial;
using algebra::SyzygyVector;

/// x[i,j] f_k - x[i,k] f_j + x[j,k] f_i plus the y_r Pfaffian terms, over the
/// bundle generator list. Requires 1 <= i < j < k <= n and n >= 4.
SyzygyVector syzygy_rijk(int i, int j, int k, int n);

/// sum_i y_i f_i = 0 over the bundle generator list.
SyzygyVector euler_syzygy(int n);

/// Row r of M v = 0, where M is the skew matrix of x on the quintuple
/// q = (i, j, k, l, m) and v = (Phi_jklm, -Phi_iklm, Phi_ijlm, -Phi_ijkm,
/// Phi_ijkl). Over the bundle generator list when `bundle_list`, otherwise
/// over the Plücker list. Throws unless r is in q.
SyzygyVector syzygy_r5(int r, const std::array<int, 5>& q, int n, bool bundle_list = true);

std::vector<SyzygyVector> rijk_family(int n);
std::vector<SyzygyVector> r5_family(int n, bool bundle_list = true);

/// Bidegree of sum_a coefficient_a e_a where e_a has the bidegree of
/// generator a. Throws when the vector is zero or not bihomogeneous.
std::pair<int, int> syzygy_bidegree(const SyzygyVector& s, const std::vector<Polynomial>& generators);

struct FamilyMembership {
  std::string family;
  std::size_t count = 0;
  /// Every vector dots to zero against the generators.
  bool all_vanish = false;
  bool all_bidegree_three = false;
  /// Every vector reduces to zero modulo the trace syzygies.
  bool all_members = false;
  std::optional<std::string> first_nonmember;
};

/// Dimensions of one bigraded piece of the syzygy module of the bundle ideal.
struct DimensionRow {
  int dx = 0;
  int dy = 0;
  /// Kernel of the evaluation map S^k -> S in this bidegree.
  std::size_t full = 0;
  /// Span of the trace syzygies.
  std::size_t trace = 0;
  /// Span of the R_ijk family, the Euler syzygy and the Plücker trace
  /// syzygies.
  std::size_t families = 0;
};

struct GenerationReport {
  int n = 0;
  std::string order;
  std::size_t generator_count = 0;
  std::size_t trace_syzygies = 0;
  std::vector<FamilyMembership> families;
  /// (f_2, -f_1, 0, ...) over (f_1, f_2, ...): vanishes and is a member.
  bool koszul_vanishes = false;
  bool koszul_member = false;
  int degree_bound = 0;
  std::vector<DimensionRow> dimensions;

  /// Trace syzygies span the full module in every computed bidegree.
  bool traces_complete() const;
  /// The families span the full module in every computed bidegree.
  bool families_generate() const;
  bool passed() const;
};

/// Membership of the explicit families in the trace syzygy module of the
/// bundle ideal, and a bidegree-wise dimension comparison for all target
/// bidegrees of total degree 3 .. degree_bound. Requires 4 <= n <= 7.
/// Trace syzygies have total degree 3 or 4, so agreement up to 4 shows the
/// families generate the whole module.
GenerationReport verify_generation(int n, int degree_bound = 4);

struct PluckerComparison {
  int n = 0;
  /// Dimension of the linear syzygies of the Plücker ideal.
  std::size_t full = 0;
  /// Span of the 5 C(n, 5) vectors R^r.
  std::size_t r5_span = 0;
};

/// Linear syzygies of the Plücker ideal against the span of the R^r family.
PluckerComparison compare_plucker_syzygies(int n);

/// JSON array of {name, coefficients} with coefficients as polynomial text.
std::string export_json(const std::vector<SyzygyVector>& syzygies, int indent = 2);

}  // namespace qstar::syzygies
