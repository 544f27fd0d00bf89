#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstar/complexes/complex.hpp"

namespace qstar::hull {

using Point = std::vector<long>;
using complexes::SimplicialComplex;
using complexes::VertexLabel;

/// Dimension of the affine span; -1 for no points.
int affine_dimension(const std::vector<Point>& points);

/// Lattice points in R^d, pairwise distinct.
struct LatticePolytope {
  int dimension = 0;
  std::vector<Point> points;
  int affine_dimension = 0;

  static LatticePolytope from_points(std::vector<Point> points);
};

/// Facet { p : normal . p >= offset } with a primitive integral inner
/// normal; `points` lists the input indices on the facet.
struct Facet {
  std::vector<long> normal;
  long offset = 0;
  std::vector<std::size_t> points;
};

/// Every facet of the convex hull, by brute force over affinely independent
/// d-subsets. Requires a full-dimensional point set. Sorted by point list.
std::vector<Facet> hull_facets(const std::vector<Point>& points);

/// Facets whose inner normal has a positive `height` coordinate.
std::vector<Facet> lower_facets(const std::vector<Point>& points, std::size_t height);

struct Triangulation {
  /// Vertex free[i + 1] stands for input point i.
  SimplicialComplex complex;
  /// Determinant of each projected facet's edge vectors.
  std::vector<long> determinants;
  bool unimodular = false;
  /// For every pair of facets the difference of their lifting functions
  /// separates them and vanishes exactly on the shared vertices.
  bool proper_intersections = false;
  /// Input points that are vertices of some facet.
  std::size_t covered_points = 0;
};

/// Projects lower facets by dropping the height coordinate. Throws unless
/// every facet is a simplex and the projected points are distinct.
Triangulation triangulation_complex(const std::vector<Point>& points, const std::vector<Facet>& facets,
                                    std::size_t height);

/// A vertex bijection carrying the facets of k onto the facets of l, found
/// by backtracking over degree-compatible assignments.
std::optional<std::map<VertexLabel, VertexLabel>> complexes_isomorphic(const SimplicialComplex& k,
                                                                       const SimplicialComplex& l);

struct Reflexivity {
  bool reflexive = false;
  std::size_t facet_count = 0;
  /// Lattice distance of each facet from the origin.
  std::vector<long> distances;
};

/// Throws unless the polytope is full-dimensional with the origin in its
/// interior.
Reflexivity reflexivity_check(const LatticePolytope& p);

/// Drops one coordinate from every point.
std::vector<Point> project(const std::vector<Point>& points, std::size_t coordinate);

/// The 13 columns of the five-dimensional example; the origin is last.
std::vector<Point> k6_lift_points();

/// Plain-text matrix, one row per line, whitespace separated; the columns
/// are the points.
std::vector<Point> parse_matrix(const std::string& text);
/// JSON {"points": [[...], ...]} or {"matrix": [[row], ...]}.
std::vector<Point> parse_points_json(const std::string& text);

struct LiftReport {
  std::size_t point_count = 0;
  std::size_t lower_facet_count = 0;
  Triangulation triangulation;
  /// Witness bijection from the triangulation's vertices to K_6 * Delta_0.
  std::optional<std::map<VertexLabel, VertexLabel>> witness;
  /// The origin column maps to the cone vertex.
  bool origin_to_cone = false;
  Reflexivity reflexivity;

  bool passed() const;
};

/// Lower facets with the last coordinate as height, their projection, the
/// comparison with K_6 * Delta_0 and the reflexivity of the projection.
LiftReport analyze_example(const std::vector<Point>& points, std::size_t height);
LiftReport analyze_k6_lift();

}  // namespace qstar::hull
