#include <doctest.h>

#include <bit>
#include <random>

#include "qstar/complexes/complex.hpp"
#include "qstar/error.hpp"

using namespace qstar::complexes;
using qstar::Error;

namespace {

// Catalan number C_k.
std::size_t catalan(int k) {
  std::size_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

bool crossing(const VertexLabel& d, const VertexLabel& e) {
  return (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b);
}

// Triangulations as maximal sets of pairwise non-crossing diagonals, found
// by brute force over subsets of size n - 3.
std::size_t brute_force_triangulations(int n) {
  std::vector<VertexLabel> diags;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (j - i <= n - 2) diags.push_back(VertexLabel::diagonal(i, j, n));
    }
  }
  std::size_t count = 0;
  const std::size_t m = diags.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != n - 3) continue;
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = a + 1; b < m && ok; ++b) {
        if ((mask >> a & 1) && (mask >> b & 1) && crossing(diags[a], diags[b])) ok = false;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("vertex labels round trip through text") {
  for (const auto& l : {VertexLabel::diagonal(1, 3, 5), VertexLabel::edge(2, 3), VertexLabel::w(1),
                        VertexLabel::w(2), VertexLabel::v(), VertexLabel::free(7)}) {
    CHECK(VertexLabel::parse(l.to_string()) == l);
  }
  CHECK_THROWS_AS(VertexLabel::diagonal(1, 5, 5), Error);
  CHECK_THROWS_AS(VertexLabel::diagonal(1, 2, 5), Error);
  CHECK_THROWS_AS(VertexLabel::parse("q[1]"), Error);
  CHECK_THROWS_AS(VertexLabel::parse("d[1,x]"), Error);
}

TEST_CASE("empty complex is the join identity") {
  const SimplicialComplex empty;
  CHECK(empty.dimension() == -1);
  CHECK(f_vector(empty) == std::vector<std::size_t>{1});
  const auto a5 = associahedron(5);
  CHECK(join(empty, a5) == a5);
  CHECK(join(a5, empty) == a5);
  CHECK(associahedron(3) == empty);
  CHECK(simplex({}) == empty);
}

TEST_CASE("associahedron facets are the triangulations") {
  for (int n = 3; n <= 9; ++n) {
    const auto a = associahedron(n);
    CHECK(a.facets().size() == catalan(n - 2));
    CHECK(a.dimension() == n - 4);
    CHECK(a.vertex_count() == static_cast<std::size_t>(n * (n - 3) / 2));
    if (n <= 8) CHECK(a.facets().size() == brute_force_triangulations(n));
    if (n >= 4) {
      CHECK(is_pseudomanifold(a));
      CHECK(is_flag(a));
      CHECK(euler_characteristic(a) == 1 + ((n - 4) % 2 == 0 ? 1 : -1));
    }
  }
  // The pentagon.
  CHECK(f_vector(associahedron(5)) == std::vector<std::size_t>{1, 5, 5});
}

TEST_CASE("stellar subdivision of the suspended associahedron") {
  // Facets through the subdivided edge {d[1,n-1], w1} are the triangulations
  // containing d[1,n-1] (one per triangulation of an (n-1)-gon), each
  // replaced by two.
  const std::vector<std::size_t> expected = {12, 33, 98, 306, 990};
  for (int n = 5; n <= 9; ++n) {
    const auto k = kn_complex(n);
    const std::size_t oracle = 2 * catalan(n - 2) + catalan(n - 3);
    CHECK(k.facets().size() == oracle);
    CHECK(k.facets().size() == expected[static_cast<std::size_t>(n - 5)]);
    CHECK(k.dimension() == n - 3);
    CHECK(is_pseudomanifold(k));
    CHECK(euler_characteristic(k) == 1 + ((n - 3) % 2 == 0 ? 1 : -1));
    CHECK(k.index_of(VertexLabel::v()) >= 0);
    CHECK(!k.contains(k.face_of({VertexLabel::diagonal(1, n - 1, n), VertexLabel::w(1)})));
  }
  CHECK(f_vector(kn_complex(5)) == std::vector<std::size_t>{1, 8, 18, 12});
  CHECK_THROWS_AS(kn_complex(4), Error);
}

TEST_CASE("stellar subdivision keeps the Euler characteristic") {
  std::mt19937_64 rng(11);
  for (int n = 4; n <= 8; ++n) {
    const auto base = join(associahedron(n), zero_sphere());
    std::vector<Face> faces;
    for (Face f : base.faces()) {
      if (face_size(f) >= 2) faces.push_back(f);
    }
    for (int trial = 0; trial < 5; ++trial) {
      const Face f = faces[rng() % faces.size()];
      const auto sub = stellar_subdivision(base, base.labels_of(f), VertexLabel::v());
      CHECK(euler_characteristic(sub) == euler_characteristic(base));
      CHECK(is_pseudomanifold(sub));
    }
  }
  const auto a5 = associahedron(5);
  CHECK_THROWS_AS(stellar_subdivision(a5, {VertexLabel::diagonal(1, 3, 5), VertexLabel::diagonal(2, 4, 5)},
                                      VertexLabel::v()),
                  Error);
  CHECK_THROWS_AS(stellar_subdivision(a5, {VertexLabel::diagonal(1, 3, 5)}, VertexLabel::v()), Error);
  const auto a6 = associahedron(6);
  CHECK_THROWS_AS(stellar_subdivision(a6, {VertexLabel::diagonal(1, 3, 6), VertexLabel::diagonal(1, 4, 6)},
                                      VertexLabel::diagonal(1, 5, 6)),
                  Error);
}

TEST_CASE("small stellar subdivisions") {
  const std::vector<VertexLabel> tri = {VertexLabel::free(0), VertexLabel::free(1), VertexLabel::free(2)};
  const auto cycle = stellar_subdivision(simplex_boundary(tri), {tri[0], tri[1]}, VertexLabel::v());
  CHECK(cycle.facets().size() == 4);
  CHECK(cycle.vertex_count() == 4);
  CHECK(is_pseudomanifold(cycle));
  CHECK(euler_characteristic(cycle) == 0);
  const auto split = stellar_subdivision(simplex(tri), {tri[0], tri[1]}, VertexLabel::v());
  CHECK(split.facets().size() == 2);
  CHECK(split.dimension() == 2);
}

TEST_CASE("small associahedra and joins") {
  const auto a4 = associahedron(4);
  CHECK(a4.vertex_count() == 2);
  CHECK(a4.facets().size() == 2);
  CHECK(a4.dimension() == 0);
  const auto square = join(zero_sphere(), simplex_boundary({VertexLabel::free(1), VertexLabel::free(2)}));
  CHECK(square.facets().size() == 4);
  CHECK(is_pseudomanifold(square));
  CHECK(euler_characteristic(square) == 0);
  CHECK(join(associahedron(5), zero_sphere()).facets().size() == 10);
  CHECK(f_vector(simplex({VertexLabel::free(0), VertexLabel::free(1), VertexLabel::free(2)})) ==
        std::vector<std::size_t>{1, 3, 3, 1});
}

TEST_CASE("associahedron non-faces are the crossing pairs") {
  for (int n = 5; n <= 8; ++n) {
    const auto a = associahedron(n);
    const auto nonfaces = minimal_nonfaces(a);
    CHECK(nonfaces.size() == static_cast<std::size_t>(n * (n - 1) * (n - 2) * (n - 3) / 24));
    for (Face f : nonfaces) {
      const auto labels = a.labels_of(f);
      REQUIRE(labels.size() == 2);
      CHECK(crossing(labels[0], labels[1]));
    }
  }
}

TEST_CASE("cone points never enter a minimal non-face") {
  const auto k = join(kn_complex(6), simplex({VertexLabel::free(2), VertexLabel::free(3)}));
  const auto base = kn_complex(6);
  CHECK(minimal_nonfaces(k).size() == minimal_nonfaces(base).size());
  CHECK(minimal_nonfaces(base).size() == 15 + 6);
  for (int n = 5; n <= 8; ++n) CHECK(is_flag(kn_complex(n)));
}

TEST_CASE("join counts facets multiplicatively") {
  const auto a = associahedron(6);
  const auto s = simplex_boundary({VertexLabel::free(1), VertexLabel::free(2), VertexLabel::free(3)});
  const auto j = join(a, s);
  CHECK(j.facets().size() == a.facets().size() * 3);
  CHECK(j.dimension() == a.dimension() + s.dimension() + 1);
  CHECK_THROWS_AS(join(a, a), Error);
}

TEST_CASE("minimal non-faces determine the complex") {
  for (int n = 5; n <= 8; ++n) {
    const auto k = kn_complex(n);
    std::vector<std::vector<VertexLabel>> nonfaces;
    for (Face f : minimal_nonfaces(k)) nonfaces.push_back(k.labels_of(f));
    CHECK(complex_from_nonfaces(k.vertices(), nonfaces) == k);
  }
  const auto tri = simplex_boundary({VertexLabel::free(1), VertexLabel::free(2), VertexLabel::free(3)});
  CHECK(minimal_nonfaces(tri).size() == 1);
  CHECK(!is_flag(tri));
}

TEST_CASE("Stanley-Reisner ideal of K_5 with the standard labeling") {
  const int n = 5;
  const auto k = kn_complex(n);
  const auto sr = stanley_reisner_ideal(k, standard_labeling(k, n));
  // Crossing diagonals, w1 w2, the subdivided edge, and v against w2 and
  // the two diagonals outside the link of d[1,4].
  std::vector<std::string> text;
  for (const auto& m : sr) text.push_back(m.to_string());
  CHECK(sr.size() == 5 + 1 + 1 + 3);
  for (const auto& m : sr) CHECK(m.is_squarefree());
  const auto has = [&](const std::string& s) {
    return std::find(text.begin(), text.end(), s) != text.end();
  };
  CHECK(has("x[1,3]*x[2,4]"));
  CHECK(has("x[1,5]*y[1]"));
  CHECK(has("x[1,4]*y[1]"));
  CHECK(has("x[1,5]*y[5]"));
  Labeling bad = standard_labeling(k, n);
  bad.insert_or_assign(VertexLabel::v(), qstar::algebra::Variable::y(1, n));
  CHECK_THROWS_AS(stanley_reisner_ideal(k, bad), Error);
}

TEST_CASE("text serialization round trip") {
  const auto k = kn_complex(6);
  CHECK(from_text(to_text(k)) == k);
  const SimplicialComplex empty;
  CHECK(to_text(empty) == "{}\n");
  CHECK(from_text(to_text(empty)) == empty);
  CHECK_THROWS_AS(from_text("\n# nothing\n"), Error);
}
