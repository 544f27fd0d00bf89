#include <doctest.h>

#include <random>

#include "qstar/algebra/text.hpp"
#include "qstar/error.hpp"
#include "qstar/grassmann/ideals.hpp"

using namespace qstar::algebra;
using namespace qstar::grassmann;
using qstar::Error;

namespace {

Polynomial P(const char* text, int n) { return parse_polynomial(text, n); }
Monomial M(const char* text, int n) { return P(text, n).terms().front().monomial; }

std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// A point of the bundle built without solving linear systems: x = 2x2 minors
// of a random 2 x n matrix, y = random combination of the generalized cross
// products (minor(b,c), -minor(a,c), minor(a,b)) on triples a < b < c, each
// of which is killed by both rows.
std::vector<Rational> cross_product_point(int n, std::mt19937_64& rng) {
  std::vector<long> m1(n + 1), m2(n + 1);
  for (int i = 1; i <= n; ++i) {
    m1[i] = static_cast<long>(rng() % 15) - 7;
    m2[i] = static_cast<long>(rng() % 15) - 7;
  }
  auto minor = [&](int a, int b) { return m1[a] * m2[b] - m1[b] * m2[a]; };
  std::vector<Rational> v(static_cast<std::size_t>(variable_count(n)), 0);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) v[Variable::x(a, b, n).index()] = minor(a, b);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const long t = static_cast<long>(rng() % 7) - 3;
        v[Variable::y(a, n).index()] += t * minor(b, c);
        v[Variable::y(b, n).index()] -= t * minor(a, c);
        v[Variable::y(c, n).index()] += t * minor(a, b);
      }
  return v;
}

}  // namespace

TEST_CASE("Pfaffian and f_i builders") {
  const Polynomial phi = pfaffian(1, 2, 3, 4, 4);
  CHECK(phi == P("x[1,2]*x[3,4] - x[1,3]*x[2,4] + x[1,4]*x[2,3]", 4));
  CHECK(phi.size() == 3);
  CHECK_THROWS_AS(pfaffian(1, 3, 2, 4, 4), Error);
  CHECK_THROWS_AS(pfaffian(1, 2, 3, 5, 4), Error);
  CHECK(quadric_f(1, 4) == P("x[1,2]*y[2] + x[1,3]*y[3] + x[1,4]*y[4]", 4));
  CHECK(quadric_f(3, 4) == P("-x[1,3]*y[1] - x[2,3]*y[2] + x[3,4]*y[4]", 4));
  for (int n = 4; n <= 8; ++n) {
    CHECK(quadric_f(n, n).coefficient(M("x[1,2]", n) * M("y[1]", n)) == 0);
    for (const auto& t : quadric_f(n, n).terms()) CHECK(t.monomial.exponent(Variable::y(n, n)) == 0);
    Polynomial euler(n);
    for (int i = 1; i <= n; ++i) euler += Polynomial::y(i, n) * quadric_f(i, n);
    CHECK(euler.is_zero());
  }
  CHECK(quadric_f_without(2, 1, 4) == quadric_f(2, 4) + P("x[1,2]*y[1]", 4));
}

TEST_CASE("generator lists") {
  for (int n = 4; n <= 8; ++n) {
    const auto i2n = grassmannian_ideal(n);
    const auto jn = bundle_ideal(n);
    CHECK(i2n.generators.size() == pfaffian_count(n));
    CHECK(jn.generators.size() == pfaffian_count(n) + static_cast<std::size_t>(n));
    for (const auto& g : jn.generators) {
      const auto b = g.bidegree();
      CHECK((b == std::pair{2, 0} || b == std::pair{1, 1}));
    }
    CHECK(jn.names.front() == "Phi[1,2,3,4]");
    CHECK(jn.names.back() == "f[" + std::to_string(n) + "]");
    CHECK(jn.generators[pfaffian_position(1, 2, n - 1, n, n)] == pfaffian(1, 2, n - 1, n, n));
    CHECK(jn.generators[quadric_position(2, n)] == quadric_f(2, n));
  }
}

TEST_CASE("every generator vanishes on the bundle (independent points)") {
  std::mt19937_64 rng(424242);
  for (int n = 4; n <= 7; ++n) {
    const auto jn = bundle_ideal(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto point = cross_product_point(n, rng);
      for (const auto& g : jn.generators) CHECK(g.evaluate(point) == 0);
    }
    const auto report = check_vanishing(n, 100, 17);
    CHECK(report.failures == 0);
    CHECK(report.evaluations == 100 * jn.generators.size());
  }
  // A point off the bundle is detected.
  std::vector<Rational> off(static_cast<std::size_t>(variable_count(5)), 1);
  CHECK(quadric_f(1, 5).evaluate(off) != 0);
}

TEST_CASE("circular weights and leading terms") {
  const std::vector<std::int64_t> n4 = {3, 4, 3, 3, 4, 3};
  std::vector<std::int64_t> got;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) got.push_back(circular_weight(a, b, 4));
  CHECK(got == n4);
  CHECK(circular_order(4).leading_monomial(pfaffian(1, 2, 3, 4, 4)) == M("x[1,3]*x[2,4]", 4));
  CHECK(circular_order(6).leading_monomial(pfaffian(1, 3, 5, 6, 6)) == M("x[1,5]*x[3,6]", 6));
  for (int n = 4; n <= 10; ++n) {
    // The crossing pair strictly outweighs both other matchings.
    for (const auto& q : quadruples(n)) {
      const auto cross = circular_weight(q[0], q[2], n) + circular_weight(q[1], q[3], n);
      CHECK(cross > circular_weight(q[0], q[1], n) + circular_weight(q[2], q[3], n));
      CHECK(cross > circular_weight(q[0], q[3], n) + circular_weight(q[1], q[2], n));
    }
    const auto check = check_circular_leading_terms(n);
    CHECK(check.failures == 0);
    CHECK(check.quadruples == pfaffian_count(n));
  }
}

TEST_CASE("bundle order leading terms") {
  const auto order5 = bundle_order(5);
  CHECK(order5.less(M("y[1]", 5), M("y[5]", 5)));
  CHECK(order5.less(M("y[4]", 5), M("y[1]", 5)));
  for (int n = 5; n <= 9; ++n) {
    const auto order = bundle_order(n);
    CHECK(order.leading_monomial(quadric_f(1, n)) ==
          Monomial::of(Variable::x(1, n, n)) * Monomial::of(Variable::y(n, n)));
    for (int i = 2; i <= n - 2; ++i) {
      CHECK(order.leading_monomial(quadric_f(i, n)) ==
            Monomial::of(Variable::x(i, n, n)) * Monomial::of(Variable::y(n, n)));
    }
    CHECK(order.leading_monomial(quadric_f(n - 1, n)) ==
          Monomial::of(Variable::x(1, n - 1, n)) * Monomial::of(Variable::y(1, n)));
    CHECK(order.leading_monomial(quadric_f(n, n)) ==
          Monomial::of(Variable::x(1, n, n)) * Monomial::of(Variable::y(1, n)));
    // The x-part is circular.
    for (const auto& q : quadruples(n)) {
      CHECK(order.leading_monomial(pfaffian(q[0], q[1], q[2], q[3], n)) ==
            Monomial::of(Variable::x(q[0], q[2], n)) * Monomial::of(Variable::x(q[1], q[3], n)));
    }
  }
  CHECK_THROWS_AS(bundle_order(4), Error);
  CHECK(describe_layers(bundle_order(5)).size() == 6);
}

TEST_CASE("S-polynomials of Pfaffians under the circular order") {
  const int n = 5;
  const auto order = circular_order(n);
  const Polynomial p1234 = pfaffian(1, 2, 3, 4, n), p1235 = pfaffian(1, 2, 3, 5, n);
  const Polynomial s = s_polynomial(p1234, p1235, order);
  // Leading terms are -x13 x24 and -x13 x25, so with coefficients included
  // S = -(x25 Phi1234 - x24 Phi1235).
  const Polynomial shown = P("x[2,5]", n) * p1234 - P("x[2,4]", n) * p1235;
  CHECK(s == -shown);
  CHECK(shown == P("x[1,2]", n) * pfaffian(2, 3, 4, 5, n) - P("x[2,3]", n) * pfaffian(1, 2, 4, 5, n));
  CHECK(s_polynomial(p1234, p1234, order).is_zero());
}

TEST_CASE("S(f_1, f_n) under the bundle order") {
  for (int n = 5; n <= 8; ++n) {
    const auto order = bundle_order(n);
    const Polynomial s = s_polynomial(quadric_f(1, n), quadric_f(n, n), order);
    CHECK(s == Polynomial::y(1, n) * quadric_f_without(1, n, n) +
                   Polynomial::y(n, n) * quadric_f_without(n, 1, n));
    Polynomial sum(n);
    for (int r = 2; r <= n - 1; ++r) sum -= Polynomial::y(r, n) * quadric_f(r, n);
    CHECK(s == sum);
  }
}

TEST_CASE("division examples") {
  const int n = 5;
  const auto circ = circular_order(n);
  const std::vector<Polynomial> phi{pfaffian(1, 2, 3, 4, n)};
  const auto t = reduce(P("x[1,3]*x[2,4]", n), phi, circ);
  CHECK(t.remainder == P("x[1,2]*x[3,4] + x[1,4]*x[2,3]", n));
  CHECK(t.quotients[0] == Polynomial::constant(n, -1));
  const auto self = reduce(phi[0], phi, circ);
  CHECK(self.remainder.is_zero());
  CHECK(self.quotients[0] == Polynomial::constant(n, 1));

  const auto order = bundle_order(n);
  const auto jn = bundle_ideal(n).generators;
  const auto s = s_polynomial(quadric_f(2, n), pfaffian(1, 2, 3, 5, n), order);
  CHECK(reduce(s, jn, order).remainder.is_zero());
}

TEST_CASE("Buchberger criterion and completion on Plücker-type inputs") {
  const int n = 5;
  const auto circ = circular_order(n);
  CHECK(buchberger_criterion(grassmannian_ideal(n).generators, circ).holds);
  CHECK(buchberger_criterion(std::vector<Polynomial>{pfaffian(1, 2, 3, 4, n)}, circ).holds);
  const std::vector<Polynomial> pair{P("x[1,3]*x[2,4] - x[1,2]*x[3,4]", n),
                                     P("x[1,3]*x[2,5] - x[1,2]*x[3,5]", n)};
  const auto crit = buchberger_criterion(pair, circ);
  CHECK(!crit.holds);
  REQUIRE(crit.failure.has_value());
  CHECK(!crit.failure->remainder.is_zero());
  const auto basis = buchberger_complete(pair, circ);
  CHECK(basis.size() == 3);
  CHECK(buchberger_criterion(basis, circ).holds);
  CHECK(minimal_monomials({circ.leading_monomial(basis[0]), circ.leading_monomial(basis[1]),
                           circ.leading_monomial(basis[2])})
            .size() == 3);
  const std::vector<Polynomial> mono{P("x[1,2]*y[3]", n)};
  CHECK(buchberger_complete(mono, circ) == mono);
}

TEST_CASE("initial ideals for n = 5") {
  const int n = 5;
  const auto circ = circular_order(n);
  CHECK(strings(initial_ideal(grassmannian_ideal(n).generators, circ)) ==
        std::vector<std::string>{"x[1,3]*x[2,4]", "x[1,3]*x[2,5]", "x[1,4]*x[2,5]", "x[1,4]*x[3,5]",
                                 "x[2,4]*x[3,5]"});
  const auto order = bundle_order(n);
  const auto init = initial_ideal(bundle_ideal(n).generators, order);
  CHECK(strings(init) == std::vector<std::string>{"x[1,3]*x[2,4]", "x[1,3]*x[2,5]", "x[1,4]*x[2,5]",
                                                  "x[1,4]*x[3,5]", "x[1,4]*y[1]", "x[1,5]*y[1]",
                                                  "x[1,5]*y[5]", "x[2,4]*x[3,5]", "x[2,5]*y[5]",
                                                  "x[3,5]*y[5]"});
  CHECK(standard_monomials(init, 1, 0, n).size() == 10);
  CHECK(standard_monomials(init, 0, 2, n).size() == 15);
  CHECK(standard_monomials(init, 1, 1, n).size() == 45);
  const std::vector<Monomial> single{M("x[1,2]", n)};
  CHECK(initial_ideal(std::vector<Polynomial>{P("x[1,2]", n)}, circ) == single);
}

TEST_CASE("completion adds no leading monomial when the criterion holds") {
  for (int n = 5; n <= 7; ++n) {
    for (bool bundle : {false, true}) {
      const auto gens = bundle ? bundle_ideal(n).generators : grassmannian_ideal(n).generators;
      const auto order = bundle ? bundle_order(n) : circular_order(n);
      REQUIRE(buchberger_criterion(gens, order).holds);
      const auto basis = buchberger_complete(gens, order);
      CHECK(initial_ideal(basis, order) == initial_ideal(gens, order));
    }
  }
}

TEST_CASE("trace syzygies of the bundle ideal") {
  // n = 4 has no bundle order; complete under grevlex first.
  const auto order4 = MonomialOrder::grevlex(4);
  const auto basis4 = buchberger_complete(bundle_ideal(4).generators, order4);
  for (const auto& s : syzygies_from_traces(basis4, order4)) CHECK(evaluate_syzygy(s, basis4).is_zero());
  const int n = 5;
  const auto order = bundle_order(n);
  const auto jn = bundle_ideal(n).generators;
  const auto syz = syzygies_from_traces(jn, order);
  CHECK(syz.size() == jn.size() * (jn.size() - 1) / 2);
  for (const auto& s : syz) CHECK(evaluate_syzygy(s, jn).is_zero());
  const std::vector<Polynomial> koszul{P("x[1,2]", n), P("x[1,3]", n)};
  const auto k = syzygies_from_traces(koszul, order);
  REQUIRE(k.size() == 1);
  CHECK(k[0].coefficients[0] == P("x[1,3]", n));
  CHECK(k[0].coefficients[1] == -P("x[1,2]", n));
}

TEST_CASE("initial ideal equals the Stanley-Reisner ideal of the bundle complex") {
  for (int n = 5; n <= 8; ++n) {
    const auto report = verify_bundle_initial_ideal(n, n <= 6);
    CHECK(report.gb_holds);
    CHECK(report.match);
    CHECK(report.leading_terms_squarefree);
    CHECK(report.initial_generators.size() == pfaffian_count(n) + static_cast<std::size_t>(n));
    CHECK(report.passed());
    if (n <= 6) CHECK(report.completion_adds_nothing == true);
    const auto plucker = verify_grassmannian_initial_ideal(n);
    CHECK(plucker.passed());
    CHECK(plucker.initial_generators.size() == pfaffian_count(n));
  }
}

TEST_CASE("degree of the bundle ideal") {
  const std::vector<long> expected = {12, 33, 98, 306, 990};
  for (int n = 5; n <= 9; ++n) {
    const auto d = degree_check(n);
    CHECK(d.formula == expected[static_cast<std::size_t>(n - 5)]);
    CHECK(d.facet_count == static_cast<std::size_t>(expected[static_cast<std::size_t>(n - 5)]));
    CHECK(d.hilbert_degree == d.formula);
    CHECK(d.consistent());
    // (n - 3) + (2n - 4) + 1 is the dimension of the bundle complex.
    CHECK(d.krull_dimension == static_cast<std::size_t>(3 * n - 5));
  }
}

TEST_CASE("replay of the four non-coprime S-pair families") {
  for (int n = 5; n <= 8; ++n) {
    const auto cases = replay_s_pair_cases(n);
    std::size_t per_family[5] = {0, 0, 0, 0, 0};
    for (const auto& c : cases) {
      ++per_family[c.family];
      CHECK(c.reduces_to_zero);
      if (c.family == 3) {
        // Under the leading-coefficient convention the expansion is -S and
        // the short form matches neither sign.
        CHECK(c.certificate_sign == -1);
        CHECK(c.short_form_sign == 0);
      } else {
        CHECK(c.certificate_sign == 1);
        CHECK(c.short_form_sign == 1);
      }
    }
    CHECK(per_family[1] == static_cast<std::size_t>((n - 2) * (n - 3) / 2));
    CHECK(per_family[2] == 1);
    CHECK(per_family[4] == static_cast<std::size_t>(n - 3));
  }
  // The family-3 short form holds with the y_n bracket added instead.
  const int n = 6;
  const auto order = bundle_order(n);
  const Polynomial s = s_polynomial(quadric_f(3, n), pfaffian(1, 3, 4, 6, n), order);
  CHECK(s == P("x[1,4]", n) * quadric_f_without(3, 6, n) +
                 P("y[6]", n) * (P("x[1,3]*x[4,6] + x[1,6]*x[3,4]", n)));
}
