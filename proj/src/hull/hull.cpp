#include "qstar/hull/hull.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qstar/algebra/linear.hpp"
#include "qstar/error.hpp"
#include "qstar/parallel.hpp"

namespace qstar::hull {

using complexes::Face;

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t check_points(const std::vector<Point>& points) {
  if (points.empty()) throw Error("no points given");
  const std::size_t d = points.front().size();
  if (d == 0) throw Error("points must have at least one coordinate");
  for (const auto& p : points) {
    if (p.size() != d) throw Error("points have different dimensions");
  }
  return d;
}

/// Generalized cross product of the rows p_i - p_0; zero when the points
/// are affinely dependent.
std::vector<mpz_class> normal_of(const std::vector<Point>& points, const std::vector<std::size_t>& subset) {
  const std::size_t d = points.front().size();
  Matrix diffs;
  for (std::size_t i = 1; i < subset.size(); ++i) {
    std::vector<mpz_class> row;
    for (std::size_t k = 0; k < d; ++k) row.emplace_back(points[subset[i]][k] - points[subset[0]][k]);
    diffs.push_back(std::move(row));
  }
  std::vector<mpz_class> normal(d);
  for (std::size_t k = 0; k < d; ++k) {
    Matrix minor;
    for (const auto& row : diffs) {
      std::vector<mpz_class> r;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != k) r.push_back(row[c]);
      }
      minor.push_back(std::move(r));
    }
    normal[k] = determinant(minor);
    if (k % 2 == 1) normal[k] = -normal[k];
  }
  mpz_class g = 0;
  for (const auto& a : normal) g = gcd(g, a);
  if (g != 0) {
    for (auto& a : normal) a /= g;
  }
  return normal;
}

mpz_class dot(const std::vector<mpz_class>& a, const Point& p) {
  mpz_class s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * p[k];
  return s;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("coordinate overflow");
  return z.get_si();
}

VertexLabel point_label(std::size_t i) { return VertexLabel::free(static_cast<int>(i) + 1); }

}  // namespace

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  const std::size_t d = check_points(points);
  algebra::IntegerEchelon echelon(d);
  for (const auto& p : points) {
    algebra::SparseVector v;
    for (std::size_t k = 0; k < d; ++k) {
      if (p[k] != points.front()[k]) v.emplace_back(k, algebra::Rational(p[k] - points.front()[k]));
    }
    if (!v.empty()) echelon.insert(v);
  }
  return static_cast<int>(echelon.rank());
}

LatticePolytope LatticePolytope::from_points(std::vector<Point> points) {
  LatticePolytope p;
  p.dimension = static_cast<int>(check_points(points));
  std::set<Point> seen;
  for (const auto& q : points) {
    if (!seen.insert(q).second) throw Error("points must be pairwise distinct");
  }
  p.affine_dimension = hull::affine_dimension(points);
  p.points = std::move(points);
  return p;
}

std::vector<Facet> hull_facets(const std::vector<Point>& points) {
  const std::size_t d = check_points(points);
  if (affine_dimension(points) != static_cast<int>(d)) throw Error("point set is not full-dimensional");
  const auto candidates = subsets(points.size(), d);
  std::vector<std::optional<Facet>> found(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t c) {
    auto normal = normal_of(points, candidates[c]);
    if (std::all_of(normal.begin(), normal.end(), [](const mpz_class& a) { return a == 0; })) return;
    mpz_class offset = dot(normal, points[candidates[c].front()]);
    bool above = true;
    bool below = true;
    for (const auto& p : points) {
      const int s = sgn(mpz_class(dot(normal, p) - offset));
      if (s < 0) above = false;
      if (s > 0) below = false;
    }
    if (!above && !below) return;
    if (!above) {
      for (auto& a : normal) a = -a;
      offset = -offset;
    }
    Facet f;
    for (const auto& a : normal) f.normal.push_back(to_long(a));
    f.offset = to_long(offset);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (dot(normal, points[i]) == offset) f.points.push_back(i);
    }
    found[c] = std::move(f);
  });
  std::map<std::vector<std::size_t>, Facet> unique;
  for (auto& f : found) {
    if (f) unique.emplace(f->points, std::move(*f));
  }
  std::vector<Facet> out;
  for (auto& [key, f] : unique) out.push_back(std::move(f));
  return out;
}

std::vector<Facet> lower_facets(const std::vector<Point>& points, std::size_t height) {
  const std::size_t d = check_points(points);
  if (height >= d) throw Error("height coordinate out of range");
  std::vector<Facet> out;
  for (auto& f : hull_facets(points)) {
    if (f.normal[height] > 0) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Point> project(const std::vector<Point>& points, std::size_t coordinate) {
  std::vector<Point> out;
  for (const auto& p : points) {
    if (coordinate >= p.size()) throw Error("projection coordinate out of range");
    Point q;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k != coordinate) q.push_back(p[k]);
    }
    out.push_back(std::move(q));
  }
  return out;
}

Triangulation triangulation_complex(const std::vector<Point>& points, const std::vector<Facet>& facets,
                                    std::size_t height) {
  const std::size_t d = check_points(points);
  if (height >= d) throw Error("height coordinate out of range");
  const auto projected = project(points, height);
  if (std::set<Point>(projected.begin(), projected.end()).size() != projected.size()) {
    throw Error("projected points are not distinct");
  }
  if (points.size() > complexes::kMaxVertices) throw Error("too many points for a complex");
  Triangulation t;
  std::vector<char> used(points.size(), 0);
  for (const auto& f : facets) {
    if (f.points.size() != d) {
      throw Error("lower facet with " + std::to_string(f.points.size()) + " points is not a simplex");
    }
    for (auto i : f.points) used[i] = 1;
    Matrix m;
    for (std::size_t i = 1; i < f.points.size(); ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k + 1 < d; ++k) row.emplace_back(projected[f.points[i]][k] - projected[f.points[0]][k]);
      m.push_back(std::move(row));
    }
    t.determinants.push_back(to_long(determinant(m)));
  }
  t.unimodular = !facets.empty() && std::all_of(t.determinants.begin(), t.determinants.end(),
                                                [](long v) { return v == 1 || v == -1; });

  std::vector<VertexLabel> vertices;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) vertices.push_back(point_label(i));
  }
  t.covered_points = vertices.size();
  std::vector<std::vector<VertexLabel>> simplices;
  for (const auto& f : facets) {
    std::vector<VertexLabel> s;
    for (auto i : f.points) s.push_back(point_label(i));
    simplices.push_back(std::move(s));
  }
  t.complex = SimplicialComplex(vertices, simplices);

  // Lifting function of a facet: the height on its hyperplane.
  auto lift = [&](const Facet& f, const Point& p) {
    mpq_class s = f.offset;
    for (std::size_t k = 0; k < d; ++k) {
      if (k != height) s -= mpq_class(f.normal[k]) * p[k];
    }
    return mpq_class(s / f.normal[height]);
  };
  t.proper_intersections = true;
  for (std::size_t a = 0; a < facets.size() && t.proper_intersections; ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      const auto& fa = facets[a];
      const auto& fb = facets[b];
      auto in = [](const Facet& f, std::size_t i) { return std::binary_search(f.points.begin(), f.points.end(), i); };
      for (std::size_t i : fa.points) {
        const int s = sgn(mpq_class(lift(fa, points[i]) - lift(fb, points[i])));
        if (in(fb, i) ? s != 0 : s <= 0) t.proper_intersections = false;
      }
      for (std::size_t i : fb.points) {
        const int s = sgn(mpq_class(lift(fa, points[i]) - lift(fb, points[i])));
        if (in(fa, i) ? s != 0 : s >= 0) t.proper_intersections = false;
      }
      if (!t.proper_intersections) break;
    }
  }
  return t;
}

std::optional<std::map<VertexLabel, VertexLabel>> complexes_isomorphic(const SimplicialComplex& k,
                                                                       const SimplicialComplex& l) {
  const std::size_t n = k.vertex_count();
  if (n != l.vertex_count() || k.facets().size() != l.facets().size()) return std::nullopt;
  auto profile = [n](const SimplicialComplex& c) {
    std::vector<std::size_t> degree(n, 0);
    std::vector<Face> adjacent(n, 0);
    for (Face f : c.facets()) {
      for (std::size_t v = 0; v < n; ++v) {
        if (f >> v & 1) {
          ++degree[v];
          adjacent[v] |= f & ~(Face{1} << v);
        }
      }
    }
    return std::pair{degree, adjacent};
  };
  const auto [kdeg, kadj] = profile(k);
  const auto [ldeg, ladj] = profile(l);
  {
    auto a = kdeg, b = ldeg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::unordered_set<Face> lfacets(l.facets().begin(), l.facets().end());

  // Assign vertices in decreasing degree, each next vertex adjacent to the
  // assigned ones where possible.
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_links = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (std::size_t u : order) links += static_cast<int>(kadj[v] >> u & 1);
      if (links > best_links || (links == best_links && kdeg[v] > kdeg[best])) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  // Facets of k checked once their last vertex in `order` is assigned.
  std::vector<std::vector<Face>> complete_at(n);
  for (Face f : k.facets()) {
    std::size_t last = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (f >> v & 1) last = std::max(last, position[v]);
    }
    complete_at[last].push_back(f);
  }

  std::vector<std::size_t> image(n, n);
  std::vector<char> taken(n, 0);
  auto map_face = [&](Face f) {
    Face g = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (f >> v & 1) g |= Face{1} << image[v];
    }
    return g;
  };
  auto search = [&](auto& self, std::size_t step) -> bool {
    if (step == n) return true;
    const std::size_t v = order[step];
    for (std::size_t w = 0; w < n; ++w) {
      if (taken[w] || ldeg[w] != kdeg[v]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < step && ok; ++s) {
        const std::size_t u = order[s];
        ok = (kadj[v] >> u & 1) == (ladj[w] >> image[u] & 1);
      }
      if (!ok) continue;
      image[v] = w;
      taken[w] = 1;
      for (Face f : complete_at[step]) {
        if (!lfacets.count(map_face(f))) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, step + 1)) return true;
      taken[w] = 0;
      image[v] = n;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::map<VertexLabel, VertexLabel> out;
  for (std::size_t v = 0; v < n; ++v) out.emplace(k.vertices()[v], l.vertices()[image[v]]);
  return out;
}

Reflexivity reflexivity_check(const LatticePolytope& p) {
  const auto facets = hull_facets(p.points);
  Reflexivity r;
  r.facet_count = facets.size();
  r.reflexive = true;
  for (const auto& f : facets) {
    if (f.offset >= 0) throw Error("the origin is not in the interior");
    r.distances.push_back(-f.offset);
    if (f.offset != -1) r.reflexive = false;
  }
  return r;
}

std::vector<Point> k6_lift_points() {
  const std::vector<std::vector<long>> rows = {
      {1, 1, 0, -1, 0, 1, 0, 0, -1, 0, 0, 1, 0},   {0, -1, 1, 1, 1, 1, 2, -1, -1, 0, 0, -1, 0},
      {0, 0, 0, 0, -1, -1, -1, 1, 1, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 0},
      {2, 4, 4, 4, 4, 3, 4, 3, 4, 4, 4, 4, 0},
  };
  std::vector<Point> points(rows.front().size(), Point(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) points[c][r] = rows[r][c];
  }
  return points;
}

std::vector<Point> parse_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::vector<long> row;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(token, &used);
      } catch (const std::exception&) {
        throw Error("not an integer: " + token);
      }
      if (used != token.size()) throw Error("not an integer: " + token);
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("empty matrix");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw Error("matrix rows have different lengths");
  }
  std::vector<Point> points(rows.front().size(), Point(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) points[c][r] = rows[r][c];
  }
  return points;
}

std::vector<Point> parse_points_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.contains("points")) return j.at("points").get<std::vector<Point>>();
    if (j.contains("matrix")) {
      std::ostringstream rows;
      for (const auto& row : j.at("matrix")) {
        for (const auto& v : row) rows << v.get<long>() << ' ';
        rows << '\n';
      }
      return parse_matrix(rows.str());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed point data: ") + e.what());
  }
  throw Error("JSON needs a \"points\" or \"matrix\" field");
}

bool LiftReport::passed() const {
  return lower_facet_count == 33 && triangulation.unimodular && triangulation.proper_intersections &&
         triangulation.covered_points == point_count && witness.has_value() && origin_to_cone &&
         reflexivity.reflexive;
}

LiftReport analyze_example(const std::vector<Point>& points, std::size_t height) {
  LiftReport r;
  r.point_count = points.size();
  const auto lower = lower_facets(points, height);
  r.lower_facet_count = lower.size();
  r.triangulation = triangulation_complex(points, lower, height);
  const VertexLabel cone = VertexLabel::free(1);
  const auto target = complexes::join(complexes::kn_complex(6), complexes::simplex({cone}));
  r.witness = complexes_isomorphic(r.triangulation.complex, target);
  const auto projected = project(points, height);
  if (r.witness) {
    for (std::size_t i = 0; i < projected.size(); ++i) {
      const bool origin = std::all_of(projected[i].begin(), projected[i].end(), [](long v) { return v == 0; });
      if (origin) {
        const auto it = r.witness->find(point_label(i));
        r.origin_to_cone = it != r.witness->end() && it->second == cone;
      }
    }
  }
  r.reflexivity = reflexivity_check(LatticePolytope::from_points(projected));
  return r;
}

LiftReport analyze_k6_lift() { return analyze_example(k6_lift_points(), 4); }

}  // namespace qstar::hull
