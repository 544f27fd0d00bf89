#include "qstar/cotangent/cotangent.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>

#include "qstar/algebra/division.hpp"
#include "qstar/algebra/groebner.hpp"
#include "qstar/algebra/linear.hpp"
#include "qstar/error.hpp"
#include "qstar/grassmann/ideals.hpp"
#include "qstar/parallel.hpp"

namespace qstar::cotangent {

using algebra::IntegerEchelon;
using algebra::MonomialHash;
using algebra::MonomialOrder;
using algebra::NormalFormCache;
using algebra::Rational;
using algebra::SparseVector;
using algebra::SyzygyVector;
using algebra::Variable;
using grassmann::TorusDegree;
using grassmann::operator+;
using grassmann::operator-;

namespace {

using Groups = std::map<TorusDegree, std::vector<Monomial>>;

Bidegree plus(Bidegree a, Bidegree b) { return {a.first + b.first, a.second + b.second}; }

/// Groebner data of J_n shared by every slice of the same n.
struct Context {
  int n = 0;
  std::vector<Polynomial> generators;
  std::vector<Bidegree> gen_bidegree;
  std::vector<TorusDegree> gen_torus;
  MonomialOrder order;
  std::vector<Monomial> initial;
  std::unique_ptr<NormalFormCache> nf;
  std::vector<SyzygyVector> traces;
  /// Traces of pairs whose leading monomials share a variable.
  std::vector<const SyzygyVector*> overlapping;

  explicit Context(int n_) : n(n_), order(grassmann::bundle_order(n_)) {
    generators = grassmann::bundle_ideal(n).generators;
    if (!algebra::buchberger_criterion(generators, order).holds) {
      throw Error("the bundle generators are not a Groebner basis for n = " + std::to_string(n));
    }
    for (const auto& g : generators) {
      gen_bidegree.push_back(g.bidegree());
      gen_torus.push_back(grassmann::torus_degree(g));
    }
    initial = algebra::initial_ideal(generators, order);
    nf = std::make_unique<NormalFormCache>(generators, order);
    traces = algebra::syzygies_from_traces(generators, order);
    std::size_t k = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (std::size_t j = i + 1; j < generators.size(); ++j, ++k) {
        const Monomial li = order.leading_monomial(generators[i]);
        const Monomial lj = order.leading_monomial(generators[j]);
        if (traces[k].name != "S(" + std::to_string(i) + "," + std::to_string(j) + ")") {
          throw Error("unexpected trace syzygy order");
        }
        if (li.lcm(lj) != li * lj) overlapping.push_back(&traces[k]);
      }
    }
  }
};

std::shared_ptr<const Context> context_for(int n) {
  if (n < 5 || n > algebra::kMaxN) throw Error("T^1 slices need 5 <= n <= 10");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Context>> contexts;
  std::lock_guard lock(mutex);
  auto& slot = contexts[n];
  if (!slot) slot = std::make_shared<const Context>(n);
  return slot;
}

Polynomial partial(const Polynomial& p, int var) {
  std::vector<algebra::Term> terms;
  const Monomial z = Monomial::of(Variable::from_index(var, p.n()));
  for (const auto& t : p.terms()) {
    const int e = t.monomial.exponent(var);
    if (e > 0) terms.push_back({t.coeff * e, t.monomial / z});
  }
  return Polynomial::from_terms(p.n(), std::move(terms));
}

/// Monomial tables every piece of one slice reads from.
struct SliceTables {
  Bidegree delta;
  /// Standard monomials of deg(g) + delta, by generator.
  std::vector<const Groups*> standard;
  std::map<Bidegree, Groups> standard_by_bidegree;
  /// All monomials of bidegree deg(z) + delta, for z an x- or a y-variable.
  Groups x_shift;
  Groups y_shift;
  std::vector<TorusDegree> torus;
};

SliceTables make_tables(const Context& ctx, Bidegree delta) {
  SliceTables t;
  t.delta = delta;
  for (std::size_t a = 0; a < ctx.generators.size(); ++a) {
    const Bidegree d = plus(ctx.gen_bidegree[a], delta);
    if (!t.standard_by_bidegree.count(d)) {
      Groups g;
      if (d.first >= 0 && d.second >= 0) {
        for (const auto& m : algebra::standard_monomials(ctx.initial, d.first, d.second, ctx.n)) {
          g[grassmann::torus_degree(m)].push_back(m);
        }
      }
      t.standard_by_bidegree.emplace(d, std::move(g));
    }
  }
  for (std::size_t a = 0; a < ctx.generators.size(); ++a) {
    t.standard.push_back(&t.standard_by_bidegree.at(plus(ctx.gen_bidegree[a], delta)));
    for (const auto& [tau, ms] : *t.standard.back()) t.torus.push_back(tau - ctx.gen_torus[a]);
  }
  std::sort(t.torus.begin(), t.torus.end());
  t.torus.erase(std::unique(t.torus.begin(), t.torus.end()), t.torus.end());
  t.x_shift = grassmann::monomials_by_torus_degree(ctx.n, 1 + delta.first, delta.second);
  t.y_shift = grassmann::monomials_by_torus_degree(ctx.n, delta.first, 1 + delta.second);
  return t;
}

const std::vector<Monomial>& group(const Groups& g, const TorusDegree& t) {
  static const std::vector<Monomial> none;
  const auto it = g.find(t);
  return it == g.end() ? none : it->second;
}

/// One torus-graded piece of a slice: the constraint rows, the kernel, and
/// the derivation image.
struct Piece {
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index;
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  IntegerEchelon constraints{0};
  IntegerEchelon derivations{0};
  std::vector<SparseVector> hom;
  std::size_t der_dim = 0;
  bool derivations_in_hom = true;
};

SparseVector to_sparse(const std::map<std::size_t, Rational>& m) {
  SparseVector v;
  for (const auto& [i, c] : m) {
    if (c != 0) v.emplace_back(i, c);
  }
  return v;
}

/// With a coprime pair the Koszul vector g_j e_i - g_i e_j has the same
/// Schreyer leading term as the trace, so the overlapping traces plus the
/// Koszul vectors still generate all syzygies; Koszul constraints hold in
/// Hom(J, S/J) automatically.
Piece build_piece(const Context& ctx, const SliceTables& tables, const TorusDegree& tau, bool all_pairs) {
  Piece p;
  const std::size_t k = ctx.generators.size();
  p.index.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (const auto& m : group(*tables.standard[a], tau + ctx.gen_torus[a])) {
      p.index[a].emplace(m, p.unknowns.size());
      p.unknowns.emplace_back(a, m);
    }
  }
  const std::size_t width = p.unknowns.size();
  p.constraints = IntegerEchelon(width);
  p.derivations = IntegerEchelon(width);

  std::vector<const SyzygyVector*> constraints = ctx.overlapping;
  if (all_pairs) {
    constraints.clear();
    for (const auto& s : ctx.traces) constraints.push_back(&s);
  }
  for (const SyzygyVector* sp : constraints) {
    const SyzygyVector& s = *sp;
    std::unordered_map<Monomial, std::map<std::size_t, Rational>, MonomialHash> rows;
    for (std::size_t a = 0; a < k; ++a) {
      if (s.coefficients[a].is_zero()) continue;
      for (const auto& [m, u] : p.index[a]) {
        for (const auto& term : s.coefficients[a].terms()) {
          for (const auto& r : ctx.nf->of(term.monomial * m).terms()) rows[r.monomial][u] += term.coeff * r.coeff;
        }
      }
    }
    std::vector<std::pair<Monomial, SparseVector>> ordered;
    for (auto& [m, row] : rows) ordered.emplace_back(m, to_sparse(row));
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.first.ambient_compare(y.first) > 0; });
    for (const auto& [m, row] : ordered) {
      if (!row.empty()) p.constraints.insert(row);
    }
  }
  p.hom = p.constraints.kernel();

  const int nv = algebra::variable_count(ctx.n);
  const int nx = algebra::x_variable_count(ctx.n);
  for (int z = 0; z < nv; ++z) {
    const Monomial zm = Monomial::of(Variable::from_index(z, ctx.n));
    const auto& multipliers = group(z < nx ? tables.x_shift : tables.y_shift, tau + grassmann::torus_degree(zm));
    if (multipliers.empty()) continue;
    std::vector<Polynomial> partials;
    for (const auto& g : ctx.generators) partials.push_back(partial(g, z));
    for (const auto& m : multipliers) {
      std::map<std::size_t, Rational> entries;
      for (std::size_t a = 0; a < k; ++a) {
        for (const auto& term : partials[a].terms()) {
          for (const auto& r : ctx.nf->of(term.monomial * m).terms()) {
            const auto it = p.index[a].find(r.monomial);
            if (it == p.index[a].end()) throw Error("derivation image left the slice");
            entries[it->second] += term.coeff * r.coeff;
          }
        }
      }
      const SparseVector v = to_sparse(entries);
      if (v.empty()) continue;
      if (!p.constraints.annihilates(v)) p.derivations_in_hom = false;
      p.derivations.insert(v);
    }
  }
  p.der_dim = p.derivations.rank();
  return p;
}

Assignment to_assignment(const Context& ctx, const Piece& p, const SparseVector& v) {
  std::vector<std::vector<algebra::Term>> terms(ctx.generators.size());
  for (const auto& [u, c] : v) terms[p.unknowns[u].first].push_back({c, p.unknowns[u].second});
  Assignment out;
  for (auto& t : terms) out.push_back(Polynomial::from_terms(ctx.n, std::move(t)));
  return out;
}

bool satisfies_syzygies(const Context& ctx, const Assignment& images) {
  for (const auto& s : ctx.traces) {
    Polynomial sum(ctx.n);
    for (std::size_t a = 0; a < images.size(); ++a) sum += s.coefficients[a] * images[a];
    if (!algebra::reduce(sum, ctx.generators, ctx.order).remainder.is_zero()) return false;
  }
  return true;
}

struct PieceSummary {
  std::size_t hom = 0;
  std::size_t der = 0;
  bool derivations_in_hom = true;
  std::vector<Assignment> basis;
};

PieceSummary summarize(const Context& ctx, const SliceTables& tables, const TorusDegree& tau, bool with_basis,
                       bool all_pairs) {
  Piece p = build_piece(ctx, tables, tau, all_pairs);
  PieceSummary s;
  s.hom = p.hom.size();
  s.der = p.der_dim;
  s.derivations_in_hom = p.derivations_in_hom;
  if (with_basis) {
    for (const auto& h : p.hom) {
      if (p.derivations.insert(h)) s.basis.push_back(to_assignment(ctx, p, h));
    }
  }
  return s;
}

T1Slice assemble(const Context& ctx, Bidegree delta, const std::vector<PieceSummary>& parts, bool with_basis) {
  T1Slice slice;
  slice.n = ctx.n;
  slice.delta = delta;
  slice.pieces = parts.size();
  slice.derivations_in_hom = true;
  for (const auto& s : parts) {
    slice.hom_dim += s.hom;
    slice.der_dim += s.der;
    slice.derivations_in_hom = slice.derivations_in_hom && s.derivations_in_hom;
    for (const auto& b : s.basis) slice.basis.push_back(b);
  }
  slice.t1_dim = slice.hom_dim - std::min(slice.hom_dim, slice.der_dim);
  slice.basis_verified = true;
  if (with_basis) {
    if (slice.basis.size() != slice.t1_dim) slice.basis_verified = false;
    for (const auto& b : slice.basis) {
      if (!satisfies_syzygies(ctx, b)) slice.basis_verified = false;
    }
  }
  return slice;
}

}  // namespace

bool T1Slice::consistent() const {
  return derivations_in_hom && basis_verified && der_dim <= hom_dim && t1_dim == hom_dim - der_dim;
}

T1Slice t1_slice(int n, Bidegree delta, bool with_basis, bool all_pairs) {
  const auto ctx = context_for(n);
  const SliceTables tables = make_tables(*ctx, delta);
  std::vector<PieceSummary> parts(tables.torus.size());
  parallel_for(parts.size(), [&](std::size_t i) { parts[i] = summarize(*ctx, tables, tables.torus[i], with_basis, all_pairs);
  });
  return assemble(*ctx, delta, parts, with_basis);
}

std::vector<Bidegree> window_shifts(Bidegree max_target) {
  // Targets are (2 + dx, dy) for Pfaffians and (1 + dx, 1 + dy) for the f_i.
  std::vector<Bidegree> out;
  for (int dx = -2; dx <= max_target.first - 2; ++dx) {
    for (int dy = -1; dy <= max_target.second - 1; ++dy) {
      if (dx == -2 && dy == -1) continue;
      out.emplace_back(dx, dy);
    }
  }
  return out;
}

std::vector<T1Slice> t1_window(int n, Bidegree max_target, bool with_basis, bool all_pairs) {
  const auto ctx = context_for(n);
  const auto shifts = window_shifts(max_target);
  std::vector<SliceTables> tables;
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t s = 0; s < shifts.size(); ++s) {
    tables.push_back(make_tables(*ctx, shifts[s]));
    for (std::size_t t = 0; t < tables.back().torus.size(); ++t) jobs.emplace_back(s, t);
  }
  std::vector<PieceSummary> parts(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& tab = tables[jobs[i].first];
    parts[i] = summarize(*ctx, tab, tab.torus[jobs[i].second], with_basis, all_pairs);
  });
  std::vector<T1Slice> out;
  std::size_t next = 0;
  for (std::size_t s = 0; s < shifts.size(); ++s) {
    std::vector<PieceSummary> mine;
    while (next < jobs.size() && jobs[next].first == s) mine.push_back(std::move(parts[next++]));
    out.push_back(assemble(*ctx, shifts[s], mine, with_basis));
  }
  return out;
}

ClassCheck classify_assignment(int n, Bidegree delta, const Assignment& images) {
  const auto ctx = context_for(n);
  if (images.size() != ctx->generators.size()) throw Error("assignment length does not match the generators");
  std::map<TorusDegree, std::vector<std::vector<algebra::Term>>> split;
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (images[a].n() != n) throw Error("assignment lives in a different ring");
    const Polynomial reduced = ctx->nf->of(images[a]);
    for (const auto& t : reduced.terms()) {
      if (t.monomial.bidegree() != plus(ctx->gen_bidegree[a], delta)) {
        throw Error("assignment image has the wrong bidegree");
      }
      auto& parts = split[grassmann::torus_degree(t.monomial) - ctx->gen_torus[a]];
      parts.resize(images.size());
      parts[a].push_back(t);
    }
  }
  const SliceTables tables = make_tables(*ctx, delta);
  ClassCheck out{true, true};
  for (const auto& [tau, parts] : split) {
    const Piece p = build_piece(*ctx, tables, tau, false);
    std::map<std::size_t, Rational> entries;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (const auto& t : parts[a]) entries[p.index[a].at(t.monomial)] += t.coeff;
    }
    const SparseVector v = to_sparse(entries);
    if (!p.constraints.annihilates(v)) out.in_hom = false;
    if (!p.derivations.contains(v)) out.in_derivation_image = false;
  }
  return out;
}

Assignment five_pfaffian_class() {
  const int n = 5;
  Assignment images(grassmann::bundle_ideal(n).generators.size(), Polynomial(n));
  const int sign[5] = {1, -1, 1, -1, 1};
  for (int missing = 1; missing <= 5; ++missing) {
    int q[4];
    for (int v = 1, c = 0; v <= 5; ++v) {
      if (v != missing) q[c++] = v;
    }
    images[grassmann::pfaffian_position(q[0], q[1], q[2], q[3], n)] =
        Polynomial::y(missing, n) * Rational(sign[missing - 1]);
  }
  return images;
}

namespace {

bool in_range(const Variable& v, int lo, int hi) {
  return lo <= v.first() && v.second() <= hi;
}

bool in_outer(const Variable& v, int alpha, int beta) {
  auto outer = [&](int i) { return i <= alpha || i >= beta; };
  return outer(v.first()) && outer(v.second());
}

bool crossing(const Variable& a, const Variable& b) {
  const auto [i, k] = std::pair{a.first(), a.second()};
  const auto [j, l] = std::pair{b.first(), b.second()};
  return (i < j && j < k && k < l) || (j < i && i < l && l < k);
}

}  // namespace

LemmaSample check_lemma_instance(int n, int alpha, int beta, const Monomial& z_c, const Monomial& z_d) {
  const auto ctx = context_for(n);
  if (!(1 <= alpha && alpha <= beta && beta <= n)) throw Error("the lemma needs 1 <= alpha <= beta <= n");
  if (z_c.n() != n || z_d.n() != n) throw Error("monomials live in a different ring");
  std::vector<Variable> d_vars;
  for (int v : z_c.support()) {
    const auto var = Variable::from_index(v, n);
    if (var.kind() != algebra::VarKind::X || !in_range(var, alpha, beta)) {
      throw Error("z_C uses a variable outside the C range");
    }
  }
  for (int v : z_d.support()) {
    const auto var = Variable::from_index(v, n);
    if (var.kind() != algebra::VarKind::X || !in_outer(var, alpha, beta)) {
      throw Error("z_D uses a variable outside the D range");
    }
    for (const auto& other : d_vars) {
      if (crossing(var, other)) throw Error("z_D is not in normal form for the Plücker ideal");
    }
    d_vars.push_back(var);
  }
  LemmaSample s;
  s.alpha = alpha;
  s.beta = beta;
  s.z_c = z_c;
  s.z_d = z_d;
  s.normal_form = ctx->nf->of(z_c * z_d);
  s.holds = true;
  for (const auto& t : s.normal_form.terms()) {
    if (!z_d.divides(t.monomial)) {
      s.holds = false;
      break;
    }
    const Monomial rest = t.monomial / z_d;
    for (int v : rest.support()) {
      const auto var = Variable::from_index(v, n);
      if (var.kind() != algebra::VarKind::X || !in_range(var, alpha, beta)) s.holds = false;
    }
  }
  return s;
}

namespace {

template <typename Uniform>
LemmaSample random_lemma_sample(int n, Uniform& uniform, bool crossing_in_c) {
  int alpha = 0;
  int beta = 0;
  if (crossing_in_c) {
    alpha = uniform(1, n - 3);
    beta = uniform(alpha + 3, n);
  } else {
    alpha = uniform(1, n);
    beta = uniform(1, n);
    if (alpha > beta) std::swap(alpha, beta);
  }
  std::vector<Variable> c_vars, d_vars;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto v = Variable::x(i, j, n);
      if (in_range(v, alpha, beta)) c_vars.push_back(v);
      if (in_outer(v, alpha, beta)) d_vars.push_back(v);
    }
  }
  Monomial z_c = Monomial(n);
  if (crossing_in_c) {
    // A crossing pair x[a,c] x[b,d] with alpha <= a < b < c < d <= beta.
    std::array<int, 4> q{};
    do {
      for (auto& v : q) v = uniform(alpha, beta);
      std::sort(q.begin(), q.end());
    } while (std::adjacent_find(q.begin(), q.end()) != q.end());
    z_c = Monomial::of(Variable::x(q[0], q[2], n)) * Monomial::of(Variable::x(q[1], q[3], n));
  }
  if (!c_vars.empty()) {
    const int deg = uniform(0, crossing_in_c ? 2 : 4);
    for (int e = 0; e < deg; ++e) z_c = z_c * Monomial::of(c_vars[static_cast<std::size_t>(uniform(0, static_cast<int>(c_vars.size()) - 1))]);
  }
  // z_D grows one variable at a time, skipping any that would cross.
  Monomial z_d = Monomial(n);
  std::vector<Variable> chosen;
  const int deg = uniform(0, 4);
  for (int e = 0; e < deg && !d_vars.empty(); ++e) {
    std::vector<Variable> allowed;
    for (const auto& v : d_vars) {
      if (std::none_of(chosen.begin(), chosen.end(), [&](const Variable& w) { return crossing(v, w); })) {
        allowed.push_back(v);
      }
    }
    if (allowed.empty()) break;
    const auto v = allowed[static_cast<std::size_t>(uniform(0, static_cast<int>(allowed.size()) - 1))];
    chosen.push_back(v);
    z_d = z_d * Monomial::of(v);
  }
  return check_lemma_instance(n, alpha, beta, z_c, z_d);
}

}  // namespace

LemmaReport check_normal_form_lemma(int n, int trials, std::uint64_t seed) {
  if (n < 5) throw Error("the lemma check needs n >= 5");
  if (trials < 0) throw Error("trial count must be non-negative");
  context_for(n);
  LemmaReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 master(seed);
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
  for (auto& s : seeds) s = master();
  std::vector<LemmaSample> samples(seeds.size());
  std::vector<LemmaSample> targeted(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t t) {
    std::mt19937_64 rng(seeds[t]);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    samples[t] = random_lemma_sample(n, uniform, false);
    targeted[t] = random_lemma_sample(n, uniform, true);
  });
  auto nontrivial = [](const LemmaSample& s) {
    return !(s.normal_form.size() == 1 && s.normal_form.terms().front().monomial == s.z_c * s.z_d &&
             s.normal_form.terms().front().coeff == 1);
  };
  for (const auto& s : samples) {
    if (nontrivial(s)) ++report.nontrivial;
    if (!s.holds) {
      ++report.failures;
      if (!report.first_failure) report.first_failure = s;
    }
  }
  for (const auto& s : targeted) {
    if (nontrivial(s)) ++report.targeted_nontrivial;
    if (!s.holds) {
      ++report.targeted_failures;
      if (!report.first_failure) report.first_failure = s;
    }
  }
  return report;
}

}  // namespace qstar::cotangent
