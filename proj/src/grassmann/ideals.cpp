#include "qstar/grassmann/ideals.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <type_traits>
#include <variant>

#include "qstar/error.hpp"

namespace qstar::grassmann {

using algebra::Direction;
using algebra::Rational;
using algebra::Variable;
using complexes::SimplicialComplex;
using complexes::VertexLabel;

namespace {

void check_n(int n, int minimum, const char* what) {
  algebra::check_ring_size(n);
  if (n < minimum) {
    throw Error(std::string(what) + " needs n >= " + std::to_string(minimum) + ", got " +
                std::to_string(n));
  }
}

Polynomial X(int a, int b, int n) { return Polynomial::x(a, b, n); }
Polynomial Y(int i, int n) { return Polynomial::y(i, n); }

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return c;
}

mpz_class binomial_z(unsigned n, unsigned k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(order.leading_monomial(g));
  return out;
}

InitialIdealReport verify(const IdealSpec& ideal, const MonomialOrder& order, const SimplicialComplex& complex,
                          const std::string& order_name, bool crosscheck) {
  const auto start = std::chrono::steady_clock::now();
  InitialIdealReport report;
  report.n = ideal.n;
  report.order = order_name;
  report.order_layers = describe_layers(order);
  report.generator_count = ideal.generators.size();

  const auto leads = leading_monomials(ideal.generators, order);
  auto sorted_leads = leads;
  std::sort(sorted_leads.begin(), sorted_leads.end(),
            [](const Monomial& a, const Monomial& b) { return a.ambient_compare(b) > 0; });
  report.leading_terms_squarefree =
      std::all_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_squarefree(); }) &&
      std::adjacent_find(sorted_leads.begin(), sorted_leads.end()) == sorted_leads.end();

  const auto criterion = algebra::buchberger_criterion(ideal.generators, order);
  report.gb_holds = criterion.holds;
  report.failure = criterion.failure;
  report.pairs_checked = criterion.pairs_checked;
  report.pairs_skipped = criterion.pairs_skipped;
  report.reduction_steps = criterion.reduction_steps;

  report.initial_generators = algebra::minimal_monomials(leads);
  report.sr_generators =
      complexes::stanley_reisner_ideal(complex, complexes::standard_labeling(complex, ideal.n));
  report.match = report.gb_holds && report.initial_generators == report.sr_generators;

  if (crosscheck) {
    const auto basis = algebra::buchberger_complete(ideal.generators, order);
    report.completion_adds_nothing =
        algebra::minimal_monomials(leading_monomials(basis, order)) == report.initial_generators;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string variable_list(const std::vector<Variable>& vars, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += sep;
    out += vars[i].to_string();
  }
  return out;
}

int sign_relation(const Polynomial& candidate, const Polynomial& target) {
  if (candidate == target) return 1;
  if (candidate == -target) return -1;
  return 0;
}

}  // namespace

Polynomial pfaffian(int i, int j, int k, int l, int n) {
  algebra::check_ring_size(n);
  if (!(1 <= i && i < j && j < k && k < l && l <= n)) {
    throw Error("Pfaffian indices must satisfy 1 <= i < j < k < l <= n");
  }
  return X(i, j, n) * X(k, l, n) - X(i, k, n) * X(j, l, n) + X(i, l, n) * X(j, k, n);
}

Polynomial quadric_f(int i, int n) {
  algebra::check_ring_size(n);
  if (i < 1 || i > n) throw Error("f_i needs 1 <= i <= n");
  Polynomial f(n);
  for (int j = 1; j <= n; ++j) f += X(i, j, n) * Y(j, n);
  return f;
}

Polynomial quadric_f_without(int i, int j, int n) {
  if (i == j || j < 1 || j > n) throw Error("f_i(j) needs j != i in 1..n");
  return quadric_f(i, n) - X(i, j, n) * Y(j, n);
}

std::size_t pfaffian_count(int n) { return binomial(n, 4); }

std::vector<std::array<int, 4>> quadruples(int n) {
  std::vector<std::array<int, 4>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) out.push_back({i, j, k, l});
  return out;
}

std::size_t pfaffian_position(int i, int j, int k, int l, int n) {
  const auto all = quadruples(n);
  const std::array<int, 4> key{i, j, k, l};
  auto it = std::lower_bound(all.begin(), all.end(), key);
  if (it == all.end() || *it != key) throw Error("not an increasing quadruple in 1..n");
  return static_cast<std::size_t>(it - all.begin());
}

std::size_t quadric_position(int i, int n) {
  if (i < 1 || i > n) throw Error("f_i needs 1 <= i <= n");
  return pfaffian_count(n) + static_cast<std::size_t>(i - 1);
}

IdealSpec grassmannian_ideal(int n) {
  check_n(n, 4, "the Plücker ideal");
  IdealSpec spec;
  spec.n = n;
  spec.kind = IdealKind::I2n;
  for (const auto& q : quadruples(n)) {
    spec.generators.push_back(pfaffian(q[0], q[1], q[2], q[3], n));
    std::ostringstream name;
    name << "Phi[" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << "]";
    spec.names.push_back(name.str());
  }
  return spec;
}

IdealSpec bundle_ideal(int n) {
  IdealSpec spec = grassmannian_ideal(n);
  spec.kind = IdealKind::Jn;
  for (int i = 1; i <= n; ++i) {
    spec.generators.push_back(quadric_f(i, n));
    spec.names.push_back("f[" + std::to_string(i) + "]");
  }
  return spec;
}

TorusDegree torus_degree(const Monomial& m) {
  TorusDegree d{};
  const int n = m.n();
  for (int v : m.support()) {
    const auto var = Variable::from_index(v, n);
    const int e = m.exponent(v);
    if (var.kind() == algebra::VarKind::X) {
      d[static_cast<std::size_t>(var.first() - 1)] += e;
      d[static_cast<std::size_t>(var.second() - 1)] += e;
    } else {
      d[static_cast<std::size_t>(var.first() - 1)] -= e;
    }
  }
  return d;
}

TorusDegree torus_degree(const Polynomial& p) {
  if (p.is_zero()) throw Error("the zero polynomial has no torus degree");
  const TorusDegree d = torus_degree(p.terms().front().monomial);
  for (const auto& t : p.terms()) {
    if (torus_degree(t.monomial) != d) throw Error("polynomial is not torus-homogeneous");
  }
  return d;
}

TorusDegree operator+(const TorusDegree& a, const TorusDegree& b) {
  TorusDegree c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

TorusDegree operator-(const TorusDegree& a, const TorusDegree& b) {
  TorusDegree c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

std::map<TorusDegree, std::vector<Monomial>> monomials_by_torus_degree(int n, int dx, int dy) {
  std::map<TorusDegree, std::vector<Monomial>> out;
  if (dx < 0 || dy < 0) return out;
  for (const auto& m : algebra::monomials_of_bidegree(n, dx, dy)) out[torus_degree(m)].push_back(m);
  return out;
}

std::int64_t circular_weight(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  return static_cast<std::int64_t>(b - a) * (n - b + a);
}

namespace {

algebra::WeightVector circular_layer(int n) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(algebra::variable_count(n)), 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      w[static_cast<std::size_t>(Variable::x(a, b, n).index())] = circular_weight(a, b, n);
    }
  }
  return algebra::WeightVector{w, Direction::LargerIsGreater};
}

}  // namespace

MonomialOrder circular_order(int n) {
  check_n(n, 4, "the circular order");
  return MonomialOrder(n, {algebra::TotalDegree{}, circular_layer(n)}, "circular");
}

MonomialOrder bundle_order(int n) {
  check_n(n, 5, "the bundle order");
  std::vector<Variable> middle_y;
  for (int i = 2; i <= n - 1; ++i) middle_y.push_back(Variable::y(i, n));
  std::vector<Variable> lex{Variable::y(n, n)};
  for (int i = 1; i <= n - 1; ++i) lex.push_back(Variable::y(i, n));
  return MonomialOrder(n,
                       {algebra::TotalDegree{},
                        algebra::RestrictedDegree{middle_y, Direction::LargerIsSmaller},
                        algebra::RestrictedDegree{{Variable::x(n - 1, n, n)}, Direction::LargerIsSmaller},
                        algebra::RestrictedLex{lex}, circular_layer(n)},
                       "paper");
}

std::vector<std::string> describe_layers(const MonomialOrder& order) {
  std::vector<std::string> out;
  const int n = order.n();
  for (const auto& layer : order.layers()) {
    std::visit(
        [&](const auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, algebra::TotalDegree>) {
            out.push_back("total degree");
          } else if constexpr (std::is_same_v<T, algebra::WeightVector>) {
            std::string s = "weight";
            for (int i = 0; i < algebra::variable_count(n); ++i) {
              const auto w = l.weights[static_cast<std::size_t>(i)];
              if (w != 0) s += " " + Variable::from_index(i, n).to_string() + ":" + std::to_string(w);
            }
            if (l.direction == Direction::LargerIsSmaller) s += " (larger is smaller)";
            out.push_back(s);
          } else if constexpr (std::is_same_v<T, algebra::RestrictedDegree>) {
            out.push_back("degree in {" + variable_list(l.variables, ", ") + "}" +
                          (l.direction == Direction::LargerIsSmaller ? ", larger is smaller"
                                                                     : ", larger is greater"));
          } else {
            out.push_back("lex " + variable_list(l.priority, " > "));
          }
        },
        layer);
  }
  out.push_back("ties: reverse lexicographic on the canonical variable order");
  return out;
}

CircularCheck check_circular_leading_terms(int n) {
  const auto order = circular_order(n);
  CircularCheck check;
  check.n = n;
  for (const auto& q : quadruples(n)) {
    ++check.quadruples;
    const auto lead = order.leading_monomial(pfaffian(q[0], q[1], q[2], q[3], n));
    const auto expected = Monomial::of(Variable::x(q[0], q[2], n)) * Monomial::of(Variable::x(q[1], q[3], n));
    if (lead != expected) {
      ++check.failures;
      if (!check.first_failure) check.first_failure = q;
    }
  }
  return check;
}

SimplicialComplex bundle_complex(int n) {
  check_n(n, 5, "the bundle complex");
  std::vector<VertexLabel> simplex_vertices;
  for (int i = 1; i <= n - 1; ++i) simplex_vertices.push_back(VertexLabel::edge(i, i + 1));
  for (int k = 2; k <= n - 1; ++k) simplex_vertices.push_back(VertexLabel::free(k));
  return complexes::join(complexes::kn_complex(n), complexes::simplex(simplex_vertices));
}

SimplicialComplex grassmannian_complex(int n) {
  check_n(n, 4, "the Grassmannian complex");
  std::vector<VertexLabel> edges;
  for (int i = 1; i <= n - 1; ++i) edges.push_back(VertexLabel::edge(i, i + 1));
  edges.push_back(VertexLabel::edge(1, n));
  return complexes::join(complexes::associahedron(n), complexes::simplex(edges));
}

bool InitialIdealReport::passed() const {
  return gb_holds && match && leading_terms_squarefree && completion_adds_nothing.value_or(true);
}

InitialIdealReport verify_bundle_initial_ideal(int n, bool completion_crosscheck) {
  check_n(n, 5, "the bundle verification");
  return verify(bundle_ideal(n), bundle_order(n), bundle_complex(n), "paper", completion_crosscheck);
}

InitialIdealReport verify_grassmannian_initial_ideal(int n, bool completion_crosscheck) {
  check_n(n, 4, "the Plücker verification");
  return verify(grassmannian_ideal(n), circular_order(n), grassmannian_complex(n), "circular",
                completion_crosscheck);
}

bool DegreeReport::consistent() const {
  return formula == Rational(static_cast<unsigned long>(facet_count)) && hilbert_degree == formula;
}

DegreeReport degree_check(int n) {
  check_n(n, 5, "the degree check");
  DegreeReport report;
  report.n = n;
  const auto un = static_cast<unsigned>(n);
  report.formula = Rational(2, n - 1) * Rational(binomial_z(2 * (un - 2), un - 2)) +
                   Rational(1, n - 2) * Rational(binomial_z(2 * (un - 3), un - 3));
  report.formula.canonicalize();

  const auto kn = complexes::kn_complex(n);
  report.facet_count = kn.facets().size();

  // Face numbers of K_n * Delta_{2n-4} by convolution with the simplex.
  const auto fk = complexes::f_vector(kn);
  const unsigned simplex_vertices = 2 * un - 3;
  std::vector<mpz_class> faces(fk.size() + simplex_vertices, 0);
  for (std::size_t a = 0; a < fk.size(); ++a) {
    for (unsigned b = 0; b <= simplex_vertices; ++b) {
      faces[a + b] += mpz_class(static_cast<unsigned long>(fk[a])) * binomial_z(simplex_vertices, b);
    }
  }
  while (!faces.empty() && faces.back() == 0) faces.pop_back();
  const std::size_t dim = faces.size() - 1;
  report.krull_dimension = dim;

  // Hilbert polynomial sum_{i >= 1} F_i C(t - 1, i - 1), coefficients in t.
  std::vector<Rational> hilbert(dim, 0);
  for (std::size_t i = 1; i <= dim; ++i) {
    // C(t - 1, i - 1) = prod_{s=1}^{i-1} (t - s) / (i - 1)!.
    std::vector<Rational> poly{1};
    for (std::size_t s = 1; s < i; ++s) {
      std::vector<Rational> next(poly.size() + 1, 0);
      for (std::size_t c = 0; c < poly.size(); ++c) {
        next[c + 1] += poly[c];
        next[c] -= poly[c] * static_cast<long>(s);
      }
      poly = std::move(next);
    }
    mpz_class fact = 1;
    for (std::size_t s = 2; s < i; ++s) fact *= static_cast<unsigned long>(s);
    for (std::size_t c = 0; c < poly.size(); ++c) {
      hilbert[c] += poly[c] * Rational(faces[i]) / Rational(fact);
    }
  }
  mpz_class fact = 1;
  for (std::size_t s = 2; s < dim; ++s) fact *= static_cast<unsigned long>(s);
  report.hilbert_degree = hilbert[dim - 1] * Rational(fact);
  report.hilbert_degree.canonicalize();
  return report;
}

std::vector<Rational> bundle_point(int n, std::uint64_t seed) {
  algebra::check_ring_size(n);
  if (n < 2) throw Error("bundle points need n >= 2");
  std::mt19937_64 rng(seed);
  auto draw = [&rng] { return static_cast<long>(rng() % 19) - 9; };
  while (true) {
    std::vector<long> m1(static_cast<std::size_t>(n + 1)), m2(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n; ++i) {
      m1[static_cast<std::size_t>(i)] = draw();
      m2[static_cast<std::size_t>(i)] = draw();
    }
    auto minor = [&](int a, int b) {
      return m1[static_cast<std::size_t>(a)] * m2[static_cast<std::size_t>(b)] -
             m1[static_cast<std::size_t>(b)] * m2[static_cast<std::size_t>(a)];
    };
    int p = 0, q = 0;
    for (int a = 1; a <= n && p == 0; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (minor(a, b) != 0) {
          p = a;
          q = b;
          break;
        }
      }
    }
    if (p == 0) continue;  // rank below 2

    std::vector<Rational> values(static_cast<std::size_t>(algebra::variable_count(n)), 0);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        values[static_cast<std::size_t>(Variable::x(a, b, n).index())] = minor(a, b);
      }
    }
    // Free coordinates at random, then solve M y = 0 for y_p, y_q.
    std::vector<Rational> y(static_cast<std::size_t>(n + 1), 0);
    Rational b1 = 0, b2 = 0;
    for (int r = 1; r <= n; ++r) {
      if (r == p || r == q) continue;
      y[static_cast<std::size_t>(r)] = draw();
      b1 -= m1[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(r)];
      b2 -= m2[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(r)];
    }
    const Rational det = minor(p, q);
    y[static_cast<std::size_t>(p)] =
        (b1 * m2[static_cast<std::size_t>(q)] - b2 * m1[static_cast<std::size_t>(q)]) / det;
    y[static_cast<std::size_t>(q)] =
        (m1[static_cast<std::size_t>(p)] * b2 - m2[static_cast<std::size_t>(p)] * b1) / det;
    for (int i = 1; i <= n; ++i) {
      values[static_cast<std::size_t>(Variable::y(i, n).index())] = y[static_cast<std::size_t>(i)];
    }
    return values;
  }
}

VanishingReport check_vanishing(int n, int trials, std::uint64_t seed) {
  check_n(n, 4, "the vanishing check");
  VanishingReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  const auto ideal = bundle_ideal(n);
  std::mt19937_64 seeds(seed);
  for (int t = 0; t < trials; ++t) {
    const auto point = bundle_point(n, seeds());
    for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
      ++report.evaluations;
      if (ideal.generators[g].evaluate(point) != 0) {
        ++report.failures;
        if (!report.first_failure) {
          report.first_failure = ideal.names[g] + " at trial " + std::to_string(t);
        }
      }
    }
  }
  return report;
}

std::vector<CaseReplay> replay_s_pair_cases(int n) {
  check_n(n, 5, "the S-pair replay");
  const auto order = bundle_order(n);
  const auto gens = bundle_ideal(n).generators;
  auto F = [n](int i) { return quadric_f(i, n); };
  auto Fw = [n](int i, int j) { return quadric_f_without(i, j, n); };
  auto Phi = [n](int i, int j, int k, int l) { return pfaffian(i, j, k, l, n); };
  auto name = [](const std::string& a, const std::string& b) { return "S(" + a + ", " + b + ")"; };
  auto fname = [](int i) { return "f[" + std::to_string(i) + "]"; };
  auto pname = [](int i, int j, int k, int l) {
    return "Phi[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
           std::to_string(l) + "]";
  };

  std::vector<CaseReplay> out;
  auto record = [&](int family, std::string pair, const Polynomial& s, const Polynomial& certificate,
                    const Polynomial& short_form) {
    CaseReplay c;
    c.family = family;
    c.pair = std::move(pair);
    c.reduces_to_zero = algebra::reduce(s, gens, order).remainder.is_zero();
    c.certificate_sign = sign_relation(certificate, s);
    c.short_form_sign = sign_relation(short_form, s);
    out.push_back(std::move(c));
  };

  for (int i = 1; i <= n - 2; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      Polynomial e = -(X(i, j, n) * F(n));
      for (int r = 1; r < i; ++r) e -= Y(r, n) * Phi(r, i, j, n);
      for (int r = i + 1; r < j; ++r) e += Y(r, n) * Phi(i, r, j, n);
      for (int r = j + 1; r <= n - 1; ++r) e -= Y(r, n) * Phi(i, j, r, n);
      const Polynomial d = X(j, n, n) * Fw(i, n) - X(i, n, n) * Fw(j, n);
      record(1, name(fname(i), fname(j)), algebra::s_polynomial(F(i), F(j), order), e, d);
    }
  }
  {
    Polynomial e(n);
    for (int r = 2; r <= n - 1; ++r) e -= Y(r, n) * F(r);
    const Polynomial d = Y(1, n) * Fw(1, n) + Y(n, n) * Fw(n, 1);
    record(2, name(fname(1), fname(n)), algebra::s_polynomial(F(1), F(n), order), e, d);
  }
  for (int j = 2; j <= n - 2; ++j) {
    for (int i = 1; i < j; ++i) {
      for (int k = j + 1; k <= n - 1; ++k) {
        Polynomial e = -(X(i, j, n) * F(k)) - X(j, k, n) * F(i);
        for (int r = 1; r < i; ++r) e -= Y(r, n) * Phi(r, i, j, k);
        for (int r = i + 1; r < j; ++r) e += Y(r, n) * Phi(i, r, j, k);
        for (int r = j + 1; r < k; ++r) e -= Y(r, n) * Phi(i, j, r, k);
        for (int r = k + 1; r <= n - 1; ++r) e += Y(r, n) * Phi(i, j, k, r);
        const Polynomial d =
            X(i, k, n) * Fw(j, n) - Y(n, n) * (X(i, j, n) * X(k, n, n) + X(i, n, n) * X(j, k, n));
        record(3, name(fname(j), pname(i, j, k, n)), algebra::s_polynomial(F(j), Phi(i, j, k, n), order), e,
               d);
      }
    }
  }
  for (int j = 2; j <= n - 2; ++j) {
    Polynomial e = -(X(n - 1, n, n) * F(j)) - X(j, n - 1, n) * F(n);
    for (int r = 2; r < j; ++r) e -= Y(r, n) * Phi(r, j, n - 1, n);
    for (int r = j + 1; r <= n - 2; ++r) e += Y(r, n) * Phi(j, r, n - 1, n);
    const Polynomial d = Y(1, n) * (X(1, j, n) * X(n - 1, n, n) + X(1, n, n) * X(j, n - 1, n)) -
                         X(j, n, n) * Fw(n - 1, 1);
    record(4, name(fname(n - 1), pname(1, j, n - 1, n)),
           algebra::s_polynomial(F(n - 1), Phi(1, j, n - 1, n), order), e, d);
  }
  return out;
}

}  // namespace qstar::grassmann
