#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/algebra/monomial.hpp"

namespace qstar::complexes {

enum class LabelKind : std::uint8_t { Diagonal, Edge, W, V, Free };

/// Vertex of one of the complexes built here: a diagonal d[i,j] of the
/// n-gon, a polygon edge e[i,j], a suspension point w1/w2, the stellar
/// vertex v, or a plain simplex vertex free[k].
struct VertexLabel {
  LabelKind kind = LabelKind::Free;
  int a = 0;
  int b = 0;

  /// Requires 2 <= j - i <= n - 2, which also excludes the edge (1, n).
  static VertexLabel diagonal(int i, int j, int n);
  static VertexLabel edge(int i, int j);
  static VertexLabel w(int which);
  static VertexLabel v();
  static VertexLabel free(int k);
  /// Inverse of to_string: `d[1,3]`, `e[1,2]`, `w1`, `w2`, `v`, `free[k]`.
  static VertexLabel parse(std::string_view text);

  std::string to_string() const;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// A face as a bitmask over the vertex list of its complex.
using Face = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

int face_size(Face f);

/// Finite abstract simplicial complex stored by its facets.
///
/// Vertices are kept sorted; facets are inclusion-maximal, sorted, and
/// cover every vertex. The complex {empty set} (a single empty facet) is the
/// join identity; a complex with no facets at all is not representable.
class SimplicialComplex {
 public:
  SimplicialComplex() : facets_{0} {}
  /// Facets may be given redundantly; non-maximal ones are dropped.
  /// Vertices that appear in no facet become singleton facets.
  SimplicialComplex(std::vector<VertexLabel> vertices,
                    const std::vector<std::vector<VertexLabel>>& facets);
  static SimplicialComplex from_masks(std::vector<VertexLabel> vertices, std::vector<Face> facets);

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Index of a vertex label, or -1.
  int index_of(const VertexLabel& label) const;
  /// Throws if a label is not a vertex.
  Face face_of(const std::vector<VertexLabel>& labels) const;
  std::vector<VertexLabel> labels_of(Face f) const;

  bool contains(Face f) const;
  /// Largest facet size minus one; -1 for {empty set}.
  int dimension() const;

  /// Every face including the empty one, sorted by (size, mask).
  std::vector<Face> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  void normalize();

  std::vector<VertexLabel> vertices_;
  std::vector<Face> facets_;
};

/// Full simplex on the given vertices; with no vertices this is {empty set}.
SimplicialComplex simplex(std::vector<VertexLabel> vertices);
/// Boundary of the simplex on the given vertices.
SimplicialComplex simplex_boundary(std::vector<VertexLabel> vertices);
/// Two vertices w1, w2 and no edge.
SimplicialComplex zero_sphere();

/// Complex of pairwise non-crossing diagonals of the n-gon; facets are the
/// triangulations.
SimplicialComplex associahedron(int n);
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// Replaces every facet F containing `face` by the |face| facets
/// (F minus u) + {new_vertex}, u in face.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      const std::vector<VertexLabel>& face,
                                      const VertexLabel& new_vertex);
/// Stellar subdivision of the suspension of the associahedron at the edge
/// {d[1,n-1], w1}.
SimplicialComplex kn_complex(int n);

std::vector<Face> minimal_nonfaces(const SimplicialComplex& k);
/// The complex whose faces are the vertex subsets containing no listed
/// non-face.
SimplicialComplex complex_from_nonfaces(std::vector<VertexLabel> vertices,
                                        const std::vector<std::vector<VertexLabel>>& nonfaces);

using Labeling = std::map<VertexLabel, algebra::Variable>;

/// Diagonals and edges to x[i,j], w1 to y[1], v to y[n], w2 to x[1,n],
/// free[k] to y[k].
algebra::Variable standard_variable(const VertexLabel& label, int n);
Labeling standard_labeling(const SimplicialComplex& k, int n);

/// Squarefree monomials of the minimal non-faces, ambient-descending.
/// Throws when the labeling is not injective or misses a vertex.
std::vector<algebra::Monomial> stanley_reisner_ideal(const SimplicialComplex& k,
                                                     const Labeling& labeling);

/// f[k] = number of faces with k vertices; f[0] = 1 counts the empty face.
std::vector<std::size_t> f_vector(const SimplicialComplex& k);
/// Alternating sum f[1] - f[2] + f[3] - ..., the reduced Euler
/// characteristic plus one (2 for a 2-sphere, 0 for a circle).
long euler_characteristic(const SimplicialComplex& k);
bool is_pure(const SimplicialComplex& k);
/// Pure, and every codimension-one face lies in exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& k);
/// All minimal non-faces have two vertices.
bool is_flag(const SimplicialComplex& k);

/// Text form: one facet per line, labels separated by spaces; `{}` is the
/// empty facet.
std::string to_text(const SimplicialComplex& k);
SimplicialComplex from_text(std::string_view text);

}  // namespace qstar::complexes
