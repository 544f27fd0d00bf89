#include "qstar/complexes/complex.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "qstar/error.hpp"

namespace qstar::complexes {

using algebra::Monomial;
using algebra::Variable;

namespace {

Face bit(std::size_t i) { return Face{1} << i; }

bool is_subset(Face a, Face b) { return (a & ~b) == 0; }

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("bad integer in vertex label: '" + std::string(s) + "'");
  }
  return value;
}

// "d[1,3]" -> {1, 3}; "free[4]" -> {4}.
std::vector<int> bracket_ints(std::string_view text, std::string_view prefix) {
  if (!text.starts_with(prefix) || !text.ends_with("]")) {
    throw Error("bad vertex label '" + std::string(text) + "'");
  }
  std::string_view inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
  std::vector<int> out;
  while (true) {
    const auto comma = inner.find(',');
    out.push_back(parse_int(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return out;
}

}  // namespace

int face_size(Face f) { return std::popcount(f); }

VertexLabel VertexLabel::diagonal(int i, int j, int n) {
  if (i < 1 || j > n || j - i < 2 || j - i > n - 2) {
    throw Error("d[" + std::to_string(i) + "," + std::to_string(j) + "] is not a diagonal of the " +
                std::to_string(n) + "-gon");
  }
  return {LabelKind::Diagonal, i, j};
}

VertexLabel VertexLabel::edge(int i, int j) {
  if (i < 1 || j <= i) throw Error("edge labels need 1 <= i < j");
  return {LabelKind::Edge, i, j};
}

VertexLabel VertexLabel::w(int which) {
  if (which != 1 && which != 2) throw Error("suspension vertices are w1 and w2");
  return {LabelKind::W, which, 0};
}

VertexLabel VertexLabel::v() { return {LabelKind::V, 0, 0}; }

VertexLabel VertexLabel::free(int k) {
  if (k < 0) throw Error("free vertex index must be non-negative");
  return {LabelKind::Free, k, 0};
}

VertexLabel VertexLabel::parse(std::string_view text) {
  if (text == "v") return v();
  if (text == "w1") return w(1);
  if (text == "w2") return w(2);
  if (text.starts_with("d[")) {
    const auto ij = bracket_ints(text, "d[");
    if (ij.size() != 2 || ij[0] < 1 || ij[1] - ij[0] < 2) {
      throw Error("bad diagonal label '" + std::string(text) + "'");
    }
    return {LabelKind::Diagonal, ij[0], ij[1]};
  }
  if (text.starts_with("e[")) {
    const auto ij = bracket_ints(text, "e[");
    if (ij.size() != 2) throw Error("bad edge label '" + std::string(text) + "'");
    return edge(ij[0], ij[1]);
  }
  if (text.starts_with("free[")) {
    const auto k = bracket_ints(text, "free[");
    if (k.size() != 1) throw Error("bad free label '" + std::string(text) + "'");
    return free(k[0]);
  }
  throw Error("unknown vertex label '" + std::string(text) + "'");
}

std::string VertexLabel::to_string() const {
  switch (kind) {
    case LabelKind::Diagonal:
      return "d[" + std::to_string(a) + "," + std::to_string(b) + "]";
    case LabelKind::Edge:
      return "e[" + std::to_string(a) + "," + std::to_string(b) + "]";
    case LabelKind::W:
      return "w" + std::to_string(a);
    case LabelKind::V:
      return "v";
    case LabelKind::Free:
      return "free[" + std::to_string(a) + "]";
  }
  return "?";
}

SimplicialComplex::SimplicialComplex(std::vector<VertexLabel> vertices,
                                     const std::vector<std::vector<VertexLabel>>& facets)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error("duplicate vertex label");
  }
  if (vertices_.size() > kMaxVertices) throw Error("complexes are limited to 64 vertices");
  for (const auto& f : facets) facets_.push_back(face_of(f));
  normalize();
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<VertexLabel> vertices,
                                                std::vector<Face> facets) {
  if (!std::is_sorted(vertices.begin(), vertices.end())) {
    throw Error("from_masks needs sorted vertices");
  }
  if (vertices.size() > kMaxVertices) throw Error("complexes are limited to 64 vertices");
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  k.facets_ = std::move(facets);
  const Face all = k.vertices_.size() == 64 ? ~Face{0} : bit(k.vertices_.size()) - 1;
  for (Face f : k.facets_) {
    if (!is_subset(f, all)) throw Error("facet mask uses a missing vertex");
  }
  k.normalize();
  return k;
}

void SimplicialComplex::normalize() {
  // Largest first, so each candidate only needs checking against kept ones.
  std::sort(facets_.begin(), facets_.end(), [](Face a, Face b) {
    const int sa = face_size(a), sb = face_size(b);
    return sa != sb ? sa > sb : a < b;
  });
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  std::vector<Face> kept;
  Face covered = 0;
  for (Face f : facets_) {
    bool maximal = true;
    for (Face g : kept) {
      if (is_subset(f, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      kept.push_back(f);
      covered |= f;
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if ((covered & bit(i)) == 0) kept.push_back(bit(i));
  }
  if (kept.empty()) kept.push_back(0);
  if (kept.size() > 1 && std::find(kept.begin(), kept.end(), Face{0}) != kept.end()) {
    std::erase(kept, Face{0});
  }
  std::sort(kept.begin(), kept.end());
  facets_ = std::move(kept);
}

int SimplicialComplex::index_of(const VertexLabel& label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return -1;
  return static_cast<int>(it - vertices_.begin());
}

Face SimplicialComplex::face_of(const std::vector<VertexLabel>& labels) const {
  Face f = 0;
  for (const auto& l : labels) {
    const int i = index_of(l);
    if (i < 0) throw Error("'" + l.to_string() + "' is not a vertex of the complex");
    f |= bit(static_cast<std::size_t>(i));
  }
  return f;
}

std::vector<VertexLabel> SimplicialComplex::labels_of(Face f) const {
  std::vector<VertexLabel> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if ((f & bit(i)) != 0) out.push_back(vertices_[i]);
  }
  return out;
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return is_subset(f, g); });
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face f : facets_) d = std::max(d, face_size(f) - 1);
  return d;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face> seen;
  for (Face f : facets_) {
    // Enumerate submasks of f, including f and 0.
    Face s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    const int sa = face_size(a), sb = face_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

SimplicialComplex simplex(std::vector<VertexLabel> vertices) {
  auto facet = vertices;
  return SimplicialComplex(std::move(vertices), {facet});
}

SimplicialComplex simplex_boundary(std::vector<VertexLabel> vertices) {
  std::vector<std::vector<VertexLabel>> facets;
  for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
    std::vector<VertexLabel> f;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i != skip) f.push_back(vertices[i]);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(vertices), facets);
}

SimplicialComplex zero_sphere() {
  return SimplicialComplex({VertexLabel::w(1), VertexLabel::w(2)},
                           {{VertexLabel::w(1)}, {VertexLabel::w(2)}});
}

SimplicialComplex associahedron(int n) {
  if (n < 3) throw Error("the associahedron needs n >= 3");
  std::vector<VertexLabel> vertices;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (j - i <= n - 2) vertices.push_back(VertexLabel::diagonal(i, j, n));
    }
  }
  // Triangulations of the sub-polygon i..j, as lists of interior diagonals.
  std::map<std::pair<int, int>, std::vector<std::vector<VertexLabel>>> memo;
  std::function<const std::vector<std::vector<VertexLabel>>&(int, int)> triangulate =
      [&](int i, int j) -> const std::vector<std::vector<VertexLabel>>& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::vector<VertexLabel>> out;
    if (j - i < 2) {
      out.push_back({});
    } else {
      // The triangle on the side (i, j) has apex k.
      for (int k = i + 1; k < j; ++k) {
        const auto left = triangulate(i, k);
        const auto right = triangulate(k, j);
        for (const auto& l : left) {
          for (const auto& r : right) {
            std::vector<VertexLabel> t = l;
            t.insert(t.end(), r.begin(), r.end());
            if (k - i >= 2) t.push_back(VertexLabel::diagonal(i, k, n));
            if (j - k >= 2) t.push_back(VertexLabel::diagonal(k, j, n));
            out.push_back(std::move(t));
          }
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return SimplicialComplex(std::move(vertices), triangulate(1, n));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<VertexLabel> vertices = k.vertices();
  vertices.insert(vertices.end(), l.vertices().begin(), l.vertices().end());
  std::vector<std::vector<VertexLabel>> facets;
  for (Face f : k.facets()) {
    for (Face g : l.facets()) {
      auto labels = k.labels_of(f);
      auto more = l.labels_of(g);
      labels.insert(labels.end(), more.begin(), more.end());
      facets.push_back(std::move(labels));
    }
  }
  return SimplicialComplex(std::move(vertices), facets);
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      const std::vector<VertexLabel>& face,
                                      const VertexLabel& new_vertex) {
  if (face.size() < 2) throw Error("stellar subdivision needs a face of dimension at least 1");
  if (k.index_of(new_vertex) >= 0) {
    throw Error("'" + new_vertex.to_string() + "' is already a vertex");
  }
  const Face f = k.face_of(face);
  if (!k.contains(f)) throw Error("stellar subdivision needs a face of the complex");
  std::vector<VertexLabel> vertices = k.vertices();
  vertices.push_back(new_vertex);
  std::vector<std::vector<VertexLabel>> facets;
  for (Face g : k.facets()) {
    if (!is_subset(f, g)) {
      facets.push_back(k.labels_of(g));
      continue;
    }
    for (std::size_t u = 0; u < k.vertex_count(); ++u) {
      if ((f & bit(u)) == 0) continue;
      auto labels = k.labels_of(g & ~bit(u));
      labels.push_back(new_vertex);
      facets.push_back(std::move(labels));
    }
  }
  return SimplicialComplex(std::move(vertices), facets);
}

SimplicialComplex kn_complex(int n) {
  if (n < 5) throw Error("K_n needs n >= 5");
  const auto suspended = join(associahedron(n), zero_sphere());
  return stellar_subdivision(suspended, {VertexLabel::diagonal(1, n - 1, n), VertexLabel::w(1)},
                             VertexLabel::v());
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& k) {
  // A vertex lying in every facet (a cone point) is in no minimal non-face,
  // so faces are enumerated with cone points removed.
  Face cone = ~Face{0};
  for (Face f : k.facets()) cone &= f;
  std::unordered_set<Face> face_set;
  for (Face f : k.facets()) {
    const Face g = f & ~cone;
    Face s = g;
    while (true) {
      face_set.insert(s);
      if (s == 0) break;
      s = (s - 1) & g;
    }
  }
  std::vector<Face> all(face_set.begin(), face_set.end());
  std::sort(all.begin(), all.end());
  const std::size_t nv = k.vertex_count();
  std::vector<Face> out;
  // A minimal non-face is a non-face all of whose facets (drop one vertex)
  // are faces; grow candidates from faces by one vertex.
  std::unordered_set<Face> tried;
  for (Face f : all) {
    for (std::size_t u = 0; u < nv; ++u) {
      if ((f & bit(u)) != 0 || (cone & bit(u)) != 0) continue;
      const Face g = f | bit(u);
      if (face_set.contains(g) || !tried.insert(g).second) continue;
      bool minimal = true;
      for (std::size_t w = 0; w < nv && minimal; ++w) {
        if ((g & bit(w)) != 0 && !face_set.contains(g & ~bit(w))) minimal = false;
      }
      if (minimal) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    const int sa = face_size(a), sb = face_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

SimplicialComplex complex_from_nonfaces(std::vector<VertexLabel> vertices,
                                        const std::vector<std::vector<VertexLabel>>& nonfaces) {
  const SimplicialComplex frame(vertices, {});
  const std::size_t nv = frame.vertex_count();
  std::vector<std::vector<Face>> touching(nv);
  for (const auto& nf : nonfaces) {
    const Face m = frame.face_of(nf);
    if (m == 0) throw Error("the empty set cannot be a non-face");
    for (std::size_t u = 0; u < nv; ++u) {
      if ((m & bit(u)) != 0) touching[u].push_back(m);
    }
  }
  auto can_add = [&](Face f, std::size_t u) {
    const Face g = f | bit(u);
    return std::none_of(touching[u].begin(), touching[u].end(),
                        [g](Face m) { return is_subset(m, g); });
  };
  std::vector<Face> facets;
  // Depth-first over faces, adding vertices in increasing order so each face
  // is visited once.
  std::function<void(Face, std::size_t)> visit = [&](Face f, std::size_t next) {
    bool maximal = true;
    for (std::size_t u = 0; u < nv; ++u) {
      if ((f & bit(u)) == 0 && can_add(f, u)) {
        maximal = false;
        if (u >= next) visit(f | bit(u), u + 1);
      }
    }
    if (maximal) facets.push_back(f);
  };
  visit(0, 0);
  return SimplicialComplex::from_masks(frame.vertices(), std::move(facets));
}

Variable standard_variable(const VertexLabel& label, int n) {
  switch (label.kind) {
    case LabelKind::Diagonal:
    case LabelKind::Edge:
      return Variable::x(label.a, label.b, n);
    case LabelKind::W:
      return label.a == 1 ? Variable::y(1, n) : Variable::x(1, n, n);
    case LabelKind::V:
      return Variable::y(n, n);
    case LabelKind::Free:
      return Variable::y(label.a, n);
  }
  throw Error("unknown vertex kind");
}

Labeling standard_labeling(const SimplicialComplex& k, int n) {
  Labeling out;
  for (const auto& v : k.vertices()) out.emplace(v, standard_variable(v, n));
  return out;
}

std::vector<Monomial> stanley_reisner_ideal(const SimplicialComplex& k, const Labeling& labeling) {
  if (k.vertex_count() == 0) return {};
  std::vector<Variable> vars;
  for (const auto& v : k.vertices()) {
    auto it = labeling.find(v);
    if (it == labeling.end()) throw Error("no variable for vertex '" + v.to_string() + "'");
    vars.push_back(it->second);
  }
  const int n = vars.front().n();
  std::set<std::size_t> used;
  for (const auto& var : vars) {
    if (var.n() != n) throw Error("labeling mixes rings");
    if (!used.insert(var.index()).second) throw Error("labeling is not injective");
  }
  std::vector<Monomial> out;
  for (Face f : minimal_nonfaces(k)) {
    Monomial m(n);
    for (std::size_t u = 0; u < vars.size(); ++u) {
      if ((f & bit(u)) != 0) m = m * Monomial::of(vars[u]);
    }
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.ambient_compare(b) > 0; });
  return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::size_t> f(static_cast<std::size_t>(k.dimension() + 2), 0);
  for (Face face : k.faces()) ++f[static_cast<std::size_t>(face_size(face))];
  return f;
}

long euler_characteristic(const SimplicialComplex& k) {
  const auto f = f_vector(k);
  long chi = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    chi += (i % 2 == 1 ? 1 : -1) * static_cast<long>(f[i]);
  }
  return chi;
}

bool is_pure(const SimplicialComplex& k) {
  const int size = face_size(k.facets().front());
  return std::all_of(k.facets().begin(), k.facets().end(),
                     [size](Face f) { return face_size(f) == size; });
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (!is_pure(k)) return false;
  std::unordered_map<Face, int> ridges;
  for (Face f : k.facets()) {
    for (std::size_t u = 0; u < k.vertex_count(); ++u) {
      if ((f & bit(u)) != 0) ++ridges[f & ~bit(u)];
    }
  }
  return std::all_of(ridges.begin(), ridges.end(), [](const auto& r) { return r.second == 2; });
}

bool is_flag(const SimplicialComplex& k) {
  const auto nonfaces = minimal_nonfaces(k);
  return std::all_of(nonfaces.begin(), nonfaces.end(), [](Face f) { return face_size(f) == 2; });
}

std::string to_text(const SimplicialComplex& k) {
  std::string out;
  for (Face f : k.facets()) {
    if (f == 0) {
      out += "{}\n";
      continue;
    }
    bool first = true;
    for (const auto& l : k.labels_of(f)) {
      if (!first) out += ' ';
      out += l.to_string();
      first = false;
    }
    out += '\n';
  }
  return out;
}

SimplicialComplex from_text(std::string_view text) {
  std::vector<std::vector<VertexLabel>> facets;
  std::set<VertexLabel> vertices;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<VertexLabel> facet;
    std::string word;
    bool any = false;
    while (words >> word) {
      any = true;
      if (word == "{}") continue;
      facet.push_back(VertexLabel::parse(word));
      vertices.insert(facet.back());
    }
    if (any) facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw Error("complex text has no facets");
  return SimplicialComplex(std::vector<VertexLabel>(vertices.begin(), vertices.end()), facets);
}

}  // namespace qstar::complexes
