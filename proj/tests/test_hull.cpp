#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qstar/complexes/complex.hpp"
#include "qstar/error.hpp"
#include "qstar/hull/hull.hpp"

using namespace qstar::hull;
using qstar::Error;
using qstar::complexes::SimplicialComplex;
using qstar::complexes::VertexLabel;

TEST_CASE("lower facets in the plane") {
  const std::vector<Point> pts{{0, 0}, {1, 1}, {2, 0}};
  const auto all = hull_facets(pts);
  CHECK(all.size() == 3);
  const auto lower = lower_facets(pts, 1);
  REQUIRE(lower.size() == 1);
  CHECK(lower[0].points == std::vector<std::size_t>{0, 2});
  CHECK(lower[0].normal == std::vector<long>{0, 1});
  CHECK(lower[0].offset == 0);
}

TEST_CASE("a lifted unit square splits into two unimodular triangles") {
  const std::vector<Point> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
  const auto lower = lower_facets(pts, 2);
  REQUIRE(lower.size() == 2);
  const auto t = triangulation_complex(pts, lower, 2);
  CHECK(t.unimodular);
  CHECK(t.proper_intersections);
  CHECK(t.covered_points == 4);
  CHECK(t.complex.facets().size() == 2);
}

TEST_CASE("a flat lift is not a triangulation") {
  const std::vector<Point> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(triangulation_complex(pts, lower_facets(pts, 2), 2), Error);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(hull_facets({{0, 0}, {1, 1}, {2, 2}}), Error);
  CHECK_THROWS_AS(hull_facets({{0, 0}, {1}}), Error);
  CHECK_THROWS_AS(LatticePolytope::from_points({{0, 0}, {0, 0}}), Error);
  CHECK(affine_dimension({{0, 0}, {1, 1}, {2, 2}}) == 1);
}

TEST_CASE("isomorphism search") {
  using qstar::complexes::kn_complex;
  const auto triangle_boundary =
      SimplicialComplex({VertexLabel::free(1), VertexLabel::free(2), VertexLabel::free(3)},
                        {{VertexLabel::free(1), VertexLabel::free(2)},
                         {VertexLabel::free(2), VertexLabel::free(3)},
                         {VertexLabel::free(1), VertexLabel::free(3)}});
  const auto path = SimplicialComplex({VertexLabel::free(1), VertexLabel::free(2), VertexLabel::free(3)},
                                      {{VertexLabel::free(1), VertexLabel::free(2)},
                                       {VertexLabel::free(2), VertexLabel::free(3)}});
  CHECK(!complexes_isomorphic(triangle_boundary, path).has_value());

  // K_5 against a copy with shuffled vertex labels.
  const auto k5 = kn_complex(5);
  std::vector<qstar::complexes::Face> masks;
  std::vector<std::size_t> perm(k5.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto f : k5.facets()) {
    qstar::complexes::Face g = 0;
    for (std::size_t v = 0; v < perm.size(); ++v) {
      if (f >> v & 1) g |= qstar::complexes::Face{1} << perm[v];
    }
    masks.push_back(g);
  }
  std::vector<VertexLabel> labels;
  for (std::size_t v = 0; v < perm.size(); ++v) labels.push_back(VertexLabel::free(static_cast<int>(v) + 1));
  const auto shuffled = SimplicialComplex::from_masks(labels, masks);
  const auto witness = complexes_isomorphic(k5, shuffled);
  REQUIRE(witness.has_value());
  for (auto f : k5.facets()) {
    std::vector<VertexLabel> image;
    for (std::size_t v = 0; v < perm.size(); ++v) {
      if (f >> v & 1) image.push_back(witness->at(k5.vertices()[v]));
    }
    CHECK(std::find(shuffled.facets().begin(), shuffled.facets().end(), shuffled.face_of(image)) !=
          shuffled.facets().end());
  }
}

TEST_CASE("reflexive squares") {
  const auto unit = LatticePolytope::from_points({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  const auto r = reflexivity_check(unit);
  CHECK(r.reflexive);
  CHECK(r.facet_count == 4);
  const auto big = LatticePolytope::from_points({{-2, -2}, {-2, 2}, {2, -2}, {2, 2}});
  CHECK(!reflexivity_check(big).reflexive);
  const auto off = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(reflexivity_check(off), Error);
}

TEST_CASE("matrix parsing") {
  const auto pts = parse_matrix("1 0 -1\n0 1 0\n");
  CHECK(pts == std::vector<Point>{{1, 0}, {0, 1}, {-1, 0}});
  CHECK(parse_points_json(R"({"points": [[1, 0], [0, 1]]})") == std::vector<Point>{{1, 0}, {0, 1}});
  CHECK(parse_points_json(R"({"matrix": [[1, 0], [0, 1]]})") == std::vector<Point>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(parse_matrix("1 x\n"), Error);
  CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), Error);
  CHECK_THROWS_AS(parse_points_json("{}"), Error);
}

TEST_CASE("the thirteen-point lift triangulates as K_6 joined with a cone point") {
  const auto report = analyze_k6_lift();
  CHECK(report.point_count == 13);
  CHECK(report.lower_facet_count == 33);
  CHECK(report.triangulation.unimodular);
  CHECK(report.triangulation.proper_intersections);
  CHECK(report.triangulation.covered_points == 13);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->size() == 13);
  CHECK(report.origin_to_cone);
  CHECK(report.reflexivity.reflexive);
  CHECK(report.passed());
}
