#include "qstar/syzygies/syzygies.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <unordered_map>

#include "qstar/algebra/linear.hpp"
#include "qstar/algebra/module.hpp"
#include "qstar/error.hpp"
#include "qstar/grassmann/ideals.hpp"
#include "qstar/parallel.hpp"

namespace qstar::syzygies {

using algebra::IntegerEchelon;
using algebra::Monomial;
using algebra::MonomialHash;
using algebra::MonomialOrder;
using algebra::SparseVector;
using algebra::Rational;
using grassmann::TorusDegree;
using grassmann::operator+;
using grassmann::operator-;

namespace {

using Bidegree = std::pair<int, int>;

Polynomial X(int a, int b, int n) { return Polynomial::x(a, b, n); }
Polynomial Y(int i, int n) { return Polynomial::y(i, n); }

std::string index_list(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

/// Pfaffian of an arbitrary 4-subset, sorted with its permutation sign.
std::pair<std::size_t, int> sorted_pfaffian(std::array<int, 4> q, int n) {
  int sign = 1;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b + 1 < 4 - a; ++b) {
      if (q[b] > q[b + 1]) {
        std::swap(q[b], q[b + 1]);
        sign = -sign;
      }
    }
  }
  return {grassmann::pfaffian_position(q[0], q[1], q[2], q[3], n), sign};
}

std::size_t list_size(int n, bool bundle_list) {
  return grassmann::pfaffian_count(n) + (bundle_list ? static_cast<std::size_t>(n) : 0);
}

struct Graded {
  Bidegree bidegree;
  TorusDegree torus;
};

Graded vector_degree(const std::vector<Polynomial>& v, const std::vector<Polynomial>& generators) {
  std::optional<Graded> out;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a].is_zero()) continue;
    const auto cb = v[a].bidegree();
    const auto gb = generators[a].bidegree();
    const Graded g{{cb.first + gb.first, cb.second + gb.second},
                   grassmann::torus_degree(v[a]) + grassmann::torus_degree(generators[a])};
    if (!out) {
      out = g;
    } else if (out->bidegree != g.bidegree || out->torus != g.torus) {
      throw Error("syzygy vector is not homogeneous");
    }
  }
  if (!out) throw Error("zero syzygy vector has no degree");
  return *out;
}

/// Bigraded and torus-graded pieces of S^k (k = generator count) and of S,
/// with the linear algebra needed to measure submodules there.
class GradedPieces {
 public:
  explicit GradedPieces(const std::vector<Polynomial>& generators) : generators_(generators) {
    n_ = generators.front().n();
    for (const auto& g : generators) degrees_.push_back({g.bidegree(), grassmann::torus_degree(g)});
  }

  /// Torus degrees of S^k in target bidegree b that carry any column.
  std::vector<TorusDegree> torus_degrees(Bidegree b) {
    std::vector<TorusDegree> out;
    for (const auto& g : degrees_) {
      for (const auto& [t, ms] : groups_for(minus(b, g.bidegree))) out.push_back(t + g.torus);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Prepares every monomial group the bidegree b can touch, so that the
  /// const lookups below are safe from several threads.
  void prepare(Bidegree b) {
    groups_for(b);
    for (const auto& g : degrees_) groups_for(minus(b, g.bidegree));
  }
  void prepare_vector(Bidegree b, const Graded& v) { groups_for(minus(b, v.bidegree)); }

  struct Piece {
    Bidegree bidegree;
    TorusDegree torus;
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> columns;
    std::size_t width = 0;
  };

  Piece piece(Bidegree b, const TorusDegree& t) const {
    Piece p{b, t, {}, 0};
    p.columns.resize(degrees_.size());
    for (std::size_t a = 0; a < degrees_.size(); ++a) {
      for (const auto& m : lookup(minus(b, degrees_[a].bidegree), t - degrees_[a].torus)) {
        p.columns[a].emplace(m, p.width++);
      }
    }
    return p;
  }

  /// Dimension of the kernel of (c_a) -> sum c_a g_a on the piece.
  std::size_t kernel_dimension(const Piece& p) const {
    const auto& targets = lookup(p.bidegree, p.torus);
    std::unordered_map<Monomial, std::size_t, MonomialHash> target_index;
    for (std::size_t i = 0; i < targets.size(); ++i) target_index.emplace(targets[i], i);
    IntegerEchelon echelon(targets.size());
    for (std::size_t a = 0; a < degrees_.size(); ++a) {
      for (const auto& entry : p.columns[a]) {
        const Monomial& m = entry.first;
        SparseVector row;
        for (const auto& term : generators_[a].terms()) {
          row.emplace_back(target_index.at(m * term.monomial), term.coeff);
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        echelon.insert(row);
      }
    }
    return p.width - echelon.rank();
  }

  /// Dimension of the span of all monomial multiples of the given vectors
  /// that land in the piece.
  std::size_t span_dimension(const Piece& p, const std::vector<const std::vector<Polynomial>*>& vectors,
                             const std::vector<Graded>& degrees) const {
    IntegerEchelon echelon(p.width);
    for (std::size_t v = 0; v < vectors.size(); ++v) {
      const Bidegree d = minus(p.bidegree, degrees[v].bidegree);
      if (d.first < 0 || d.second < 0) continue;
      for (const auto& m : lookup(d, p.torus - degrees[v].torus)) {
        SparseVector row;
        const auto& coeffs = *vectors[v];
        for (std::size_t a = 0; a < coeffs.size(); ++a) {
          for (const auto& term : coeffs[a].terms()) {
            row.emplace_back(p.columns[a].at(m * term.monomial), term.coeff);
          }
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        echelon.insert(row);
        if (echelon.rank() == p.width) return p.width;
      }
    }
    return echelon.rank();
  }

 private:
  static Bidegree minus(Bidegree a, Bidegree b) { return {a.first - b.first, a.second - b.second}; }

  const std::map<TorusDegree, std::vector<Monomial>>& groups_for(Bidegree d) {
    auto it = cache_.find(d);
    if (it == cache_.end()) {
      it = cache_.emplace(d, grassmann::monomials_by_torus_degree(n_, d.first, d.second)).first;
    }
    return it->second;
  }

  const std::vector<Monomial>& lookup(Bidegree d, const TorusDegree& t) const {
    static const std::vector<Monomial> none;
    if (d.first < 0 || d.second < 0) return none;
    const auto& groups = cache_.at(d);
    const auto it = groups.find(t);
    return it == groups.end() ? none : it->second;
  }

  const std::vector<Polynomial>& generators_;
  int n_ = 0;
  std::vector<Graded> degrees_;
  std::map<Bidegree, std::map<TorusDegree, std::vector<Monomial>>> cache_;
};

FamilyMembership check_family(const std::string& name, const std::vector<SyzygyVector>& family,
                              const std::vector<Polynomial>& generators,
                              const algebra::SchreyerReducer& reducer) {
  FamilyMembership out;
  out.family = name;
  out.count = family.size();
  std::vector<char> vanish(family.size()), degree3(family.size()), member(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    vanish[i] = algebra::evaluate_syzygy(family[i], generators).is_zero();
    const auto d = vector_degree(family[i].coefficients, generators).bidegree;
    degree3[i] = d.first + d.second == 3;
    member[i] = reducer.contains(family[i].coefficients);
  });
  out.all_vanish = std::all_of(vanish.begin(), vanish.end(), [](char c) { return c != 0; });
  out.all_bidegree_three = std::all_of(degree3.begin(), degree3.end(), [](char c) { return c != 0; });
  out.all_members = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!member[i]) {
      out.all_members = false;
      out.first_nonmember = family[i].name;
      break;
    }
  }
  return out;
}

}  // namespace

SyzygyVector syzygy_rijk(int i, int j, int k, int n) {
  if (n < 4) throw Error("R_ijk is built over the bundle generators, which need n >= 4");
  if (!(1 <= i && i < j && j < k && k <= n)) throw Error("R_ijk needs 1 <= i < j < k <= n");
  SyzygyVector s;
  s.name = "R[" + index_list({i, j, k}) + "]";
  s.coefficients.assign(list_size(n, true), Polynomial(n));
  s.coefficients[grassmann::quadric_position(k, n)] += X(i, j, n);
  s.coefficients[grassmann::quadric_position(j, n)] -= X(i, k, n);
  s.coefficients[grassmann::quadric_position(i, n)] += X(j, k, n);
  for (int r = 1; r < i; ++r) s.coefficients[grassmann::pfaffian_position(r, i, j, k, n)] += Y(r, n);
  for (int r = i + 1; r < j; ++r) s.coefficients[grassmann::pfaffian_position(i, r, j, k, n)] -= Y(r, n);
  for (int r = j + 1; r < k; ++r) s.coefficients[grassmann::pfaffian_position(i, j, r, k, n)] += Y(r, n);
  for (int r = k + 1; r <= n; ++r) s.coefficients[grassmann::pfaffian_position(i, j, k, r, n)] -= Y(r, n);
  return s;
}

SyzygyVector euler_syzygy(int n) {
  if (n < 4) throw Error("the bundle generator list needs n >= 4");
  SyzygyVector s;
  s.name = "euler";
  s.coefficients.assign(list_size(n, true), Polynomial(n));
  for (int i = 1; i <= n; ++i) s.coefficients[grassmann::quadric_position(i, n)] = Y(i, n);
  return s;
}

SyzygyVector syzygy_r5(int r, const std::array<int, 5>& q, int n, bool bundle_list) {
  algebra::check_ring_size(n);
  for (int a = 0; a < 5; ++a) {
    if (q[a] < 1 || q[a] > n || (a > 0 && q[a - 1] >= q[a])) {
      throw Error("R^r needs 1 <= i < j < k < l < m <= n");
    }
  }
  if (std::find(q.begin(), q.end(), r) == q.end()) throw Error("R^r needs r in {i, j, k, l, m}");
  SyzygyVector s;
  s.name = "R[" + std::to_string(r) + ";" + index_list({q[0], q[1], q[2], q[3], q[4]}) + "]";
  s.coefficients.assign(list_size(n, bundle_list), Polynomial(n));
  // v_c = (-1)^c times the Pfaffian on q without q[c].
  for (int c = 0; c < 5; ++c) {
    std::array<int, 4> rest{};
    for (int a = 0, b = 0; a < 5; ++a) {
      if (a != c) rest[static_cast<std::size_t>(b++)] = q[static_cast<std::size_t>(a)];
    }
    const auto [pos, sign] = sorted_pfaffian(rest, n);
    const int v_sign = (c % 2 == 0 ? 1 : -1) * sign;
    s.coefficients[pos] += X(r, q[static_cast<std::size_t>(c)], n) * Rational(v_sign);
  }
  return s;
}

std::vector<SyzygyVector> rijk_family(int n) {
  std::vector<SyzygyVector> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(syzygy_rijk(i, j, k, n));
  return out;
}

std::vector<SyzygyVector> r5_family(int n, bool bundle_list) {
  std::vector<SyzygyVector> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m) {
            const std::array<int, 5> q{i, j, k, l, m};
            for (int r : q) out.push_back(syzygy_r5(r, q, n, bundle_list));
          }
  return out;
}

std::pair<int, int> syzygy_bidegree(const SyzygyVector& s, const std::vector<Polynomial>& generators) {
  if (s.coefficients.size() != generators.size()) throw Error("syzygy length does not match the generators");
  return vector_degree(s.coefficients, generators).bidegree;
}

bool GenerationReport::traces_complete() const {
  return std::all_of(dimensions.begin(), dimensions.end(), [](const DimensionRow& r) { return r.trace == r.full; });
}

bool GenerationReport::families_generate() const {
  return std::all_of(dimensions.begin(), dimensions.end(),
                     [](const DimensionRow& r) { return r.families == r.full; });
}

bool GenerationReport::passed() const {
  const bool members = std::all_of(families.begin(), families.end(), [](const FamilyMembership& f) {
    return f.all_vanish && f.all_bidegree_three && f.all_members;
  });
  return members && koszul_vanishes && koszul_member && traces_complete() && families_generate();
}

GenerationReport verify_generation(int n, int degree_bound) {
  if (n < 4 || n > 7) throw Error("syzygy verification supports 4 <= n <= 7");
  if (degree_bound < 3) throw Error("the degree bound must be at least 3");
  const auto jn = grassmann::bundle_ideal(n);
  const auto& gens = jn.generators;
  // The generators are already a Groebner basis under grevlex when n = 4.
  const MonomialOrder order = n >= 5 ? grassmann::bundle_order(n) : MonomialOrder::grevlex(n);
  if (!algebra::buchberger_criterion(gens, order).holds) {
    throw Error("the bundle generators are not a Groebner basis under " + order.name());
  }
  GenerationReport report;
  report.n = n;
  report.order = order.name();
  report.generator_count = gens.size();
  report.degree_bound = degree_bound;

  const auto traces = algebra::syzygies_from_traces(gens, order);
  report.trace_syzygies = traces.size();
  const algebra::SchreyerReducer reducer(gens, order, traces);

  const auto rijk = rijk_family(n);
  const std::vector<SyzygyVector> euler{euler_syzygy(n)};
  const auto r5 = r5_family(n, true);
  report.families.push_back(check_family("R_ijk", rijk, gens, reducer));
  report.families.push_back(check_family("euler", euler, gens, reducer));
  report.families.push_back(check_family("R^r", r5, gens, reducer));

  SyzygyVector koszul;
  koszul.name = "koszul";
  koszul.coefficients.assign(gens.size(), Polynomial(n));
  const auto f1 = grassmann::quadric_position(1, n), f2 = grassmann::quadric_position(2, n);
  koszul.coefficients[f1] = gens[f2];
  koszul.coefficients[f2] = -gens[f1];
  report.koszul_vanishes = algebra::evaluate_syzygy(koszul, gens).is_zero();
  report.koszul_member = reducer.contains(koszul.coefficients);

  // Plücker trace syzygies, padded to the bundle list.
  const auto plucker = grassmann::grassmannian_ideal(n).generators;
  std::vector<SyzygyVector> plucker_syz;
  if (plucker.size() > 1) {
    for (auto s : algebra::syzygies_from_traces(plucker, grassmann::circular_order(n))) {
      s.coefficients.resize(gens.size(), Polynomial(n));
      plucker_syz.push_back(std::move(s));
    }
  }

  std::vector<const std::vector<Polynomial>*> trace_vectors, family_vectors;
  std::vector<Graded> trace_degrees, family_degrees;
  for (const auto& s : traces) {
    trace_vectors.push_back(&s.coefficients);
    trace_degrees.push_back(vector_degree(s.coefficients, gens));
  }
  for (const auto* family : std::array<const std::vector<SyzygyVector>*, 3>{&rijk, &euler, &plucker_syz}) {
    for (const auto& s : *family) {
      family_vectors.push_back(&s.coefficients);
      family_degrees.push_back(vector_degree(s.coefficients, gens));
    }
  }

  GradedPieces pieces(gens);
  struct Job {
    std::size_t row;
    GradedPieces::Piece piece;
  };
  std::vector<Job> jobs;
  for (int d = 3; d <= degree_bound; ++d) {
    // Target bidegrees from x-heavy to y-heavy.
    for (int dy = 0; dy <= d; ++dy) {
      const Bidegree b{d - dy, dy};
      pieces.prepare(b);
      for (const auto& g : trace_degrees) pieces.prepare_vector(b, g);
      for (const auto& g : family_degrees) pieces.prepare_vector(b, g);
      const auto tds = pieces.torus_degrees(b);
      if (tds.empty()) continue;
      report.dimensions.push_back({b.first, b.second, 0, 0, 0});
      for (const auto& t : tds) jobs.push_back({report.dimensions.size() - 1, pieces.piece(b, t)});
    }
  }
  std::vector<std::array<std::size_t, 3>> dims(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& p = jobs[i].piece;
    dims[i] = {pieces.kernel_dimension(p), pieces.span_dimension(p, trace_vectors, trace_degrees),
               pieces.span_dimension(p, family_vectors, family_degrees)};
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& row = report.dimensions[jobs[i].row];
    row.full += dims[i][0];
    row.trace += dims[i][1];
    row.families += dims[i][2];
  }
  return report;
}

PluckerComparison compare_plucker_syzygies(int n) {
  if (n < 5) throw Error("the R^r family needs n >= 5");
  const auto gens = grassmann::grassmannian_ideal(n).generators;
  const auto family = r5_family(n, false);
  std::vector<const std::vector<Polynomial>*> vectors;
  std::vector<Graded> degrees;
  for (const auto& s : family) {
    vectors.push_back(&s.coefficients);
    degrees.push_back(vector_degree(s.coefficients, gens));
  }
  GradedPieces pieces(gens);
  const Bidegree b{3, 0};
  pieces.prepare(b);
  for (const auto& g : degrees) pieces.prepare_vector(b, g);
  const auto tds = pieces.torus_degrees(b);
  std::vector<std::array<std::size_t, 2>> dims(tds.size());
  parallel_for(tds.size(), [&](std::size_t i) {
    const auto p = pieces.piece(b, tds[i]);
    dims[i] = {pieces.kernel_dimension(p), pieces.span_dimension(p, vectors, degrees)};
  });
  PluckerComparison out;
  out.n = n;
  for (const auto& d : dims) {
    out.full += d[0];
    out.r5_span += d[1];
  }
  return out;
}

std::string export_json(const std::vector<SyzygyVector>& syzygies, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : syzygies) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coefficients) coeffs.push_back(c.to_string());
    arr.push_back({{"name", s.name}, {"coefficients", coeffs}});
  }
  return arr.dump(indent);
}

}  // namespace qstar::syzygies
