#include <doctest.h>

#include <random>

#include "qstar/algebra/division.hpp"
#include "qstar/algebra/groebner.hpp"
#include "qstar/algebra/linear.hpp"
#include "qstar/algebra/text.hpp"
#include "qstar/error.hpp"
#include "support.hpp"

using namespace qstar::algebra;
using qstar::Error;

namespace {

Polynomial P(const char* text, int n) { return parse_polynomial(text, n); }
Monomial M(const char* text, int n) { return P(text, n).terms().front().monomial; }

}  // namespace

TEST_CASE("variables are numbered x[1,2] first, then the y block") {
  CHECK(Variable::x(1, 2, 5).index() == 0);
  CHECK(Variable::x(1, 5, 5).index() == 3);
  CHECK(Variable::x(2, 3, 5).index() == 4);
  CHECK(Variable::x(4, 5, 5).index() == 9);
  CHECK(Variable::y(1, 5).index() == 10);
  CHECK(Variable::y(5, 5).index() == 14);
  for (int n = 3; n <= kMaxN; ++n) {
    for (int i = 0; i < variable_count(n); ++i) {
      CHECK(Variable::from_index(i, n).index() == i);
    }
  }
  CHECK_THROWS_AS(Variable::x(2, 2, 5), Error);
  CHECK_THROWS_AS(Variable::y(6, 5), Error);
  CHECK_THROWS_AS(check_ring_size(kMaxN + 1), Error);
}

TEST_CASE("antisymmetric x indices") {
  const auto s = signed_x(3, 1, 4);
  CHECK(s.sign == -1);
  CHECK(s.variable == Variable::x(1, 3, 4));
  CHECK(Polynomial::x(3, 1, 4) == -Polynomial::x(1, 3, 4));
  CHECK(Polynomial::x(2, 2, 4).is_zero());
  CHECK_THROWS_AS(signed_x(2, 2, 4), Error);
}

TEST_CASE("text grammar round trip") {
  const int n = 5;
  const Polynomial p = P("x[1,3]*x[2,4] - x[1,2]*x[3,4] - x[1,4]*x[2,3]", n);
  CHECK(p.size() == 3);
  CHECK(parse_polynomial(p.to_string(), n) == p);
  CHECK(P("x[4,2]", n) == -P("x[2,4]", n));
  CHECK(P("3/6*y[1]^2", n) == P("1/2*y[1]*y[1]", n));
  CHECK(P("-2 + y[5]", n).coefficient(Monomial(n)) == -2);
  CHECK_THROWS_AS(P("x[2,2]", n), Error);
  CHECK_THROWS_AS(P("x[1,6]", n), Error);
  CHECK_THROWS_AS(P("y[1] y[2]", n), Error);
  CHECK_THROWS_AS(P("1/0", n), Error);
  const auto ideal = parse_ideal("# header\nx[1,2]*y[2]\n\n  y[3] # trailing\n", n);
  REQUIRE(ideal.size() == 2);
  CHECK(parse_ideal(format_ideal(ideal, "round trip"), n) == ideal);
}

TEST_CASE("monomial arithmetic") {
  const int n = 4;
  const Monomial a = M("x[1,2]^2*y[3]", n);
  const Monomial b = M("x[1,2]*x[3,4]", n);
  CHECK(a.lcm(b) == M("x[1,2]^2*x[3,4]*y[3]", n));
  CHECK(a.gcd(b) == M("x[1,2]", n));
  CHECK((a * b) / b == a);
  CHECK(!a.divides(b));
  CHECK(M("x[1,2]", n).divides(a));
  CHECK(a.bidegree() == std::pair{2, 1});
  CHECK(!a.is_squarefree());
  CHECK(b.is_squarefree());
  CHECK(M("y[1]", n).coprime(b));
  CHECK(monomials_of_bidegree(n, 1, 1).size() == 6 * 4);
  CHECK(monomials_of_bidegree(n, 2, 0).size() == 21);
}

TEST_CASE("circular weight order on three-term Pluecker relations") {
  // w(x[a,b]) = (b - a)(n - b + a); for n = 5 the crossing pair x13*x24 has
  // weight 6 + 6 and beats x12*x34 (4 + 4) and x14*x23 (6 + 4).
  const int n = 5;
  std::vector<std::int64_t> w(static_cast<std::size_t>(variable_count(n)), 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      w[static_cast<std::size_t>(Variable::x(a, b, n).index())] = (b - a) * (n - b + a);
    }
  }
  const MonomialOrder order(n, {TotalDegree{}, WeightVector{w}}, "circular");
  CHECK(order.greater(M("x[1,3]*x[2,4]", n), M("x[1,2]*x[3,4]", n)));
  CHECK(order.greater(M("x[1,3]*x[2,4]", n), M("x[1,4]*x[2,3]", n)));
  const Polynomial phi = P("x[1,2]*x[3,4] - x[1,3]*x[2,4] + x[1,4]*x[2,3]", n);
  CHECK(order.leading_monomial(phi) == M("x[1,3]*x[2,4]", n));
  CHECK(order.leading_term(phi).coeff == -1);
}

TEST_CASE("layered orders compare as their layers say") {
  const int n = 4;
  const MonomialOrder restricted(
      n, {TotalDegree{}, RestrictedDegree{{Variable::y(2, n)}, Direction::LargerIsSmaller}});
  CHECK(restricted.greater(M("x[1,2]", n), M("y[2]", n)));
  CHECK(restricted.greater(M("x[1,2]*y[1]", n), M("x[1,2]*y[2]", n)));
  CHECK(restricted.greater(M("y[1]", n), M("y[2]", n)));

  const MonomialOrder lex(n, {TotalDegree{}, RestrictedLex{{Variable::y(4, n), Variable::y(1, n)}}});
  CHECK(lex.greater(M("x[3,4]*y[4]", n), M("x[1,2]*y[1]", n)));
  CHECK(lex.greater(M("x[3,4]*y[1]", n), M("x[1,2]*y[2]", n)));

  // Degree outranks every later layer.
  CHECK(lex.greater(M("y[2]^2", n), M("y[4]", n)));
  CHECK_THROWS_AS(lex.compare(Monomial(4), Monomial(5)), Error);
}

TEST_CASE("random layered orders are total, multiplicative, and well founded") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const MonomialOrder order = qstar_test::random_order(n, rng);
    for (int k = 0; k < 60; ++k) {
      const Monomial a = qstar_test::random_monomial(n, rng, 3);
      const Monomial b = qstar_test::random_monomial(n, rng, 3);
      const Monomial c = qstar_test::random_monomial(n, rng, 2);
      const auto ab = order.compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK((order.compare(b, a) < 0) == (ab > 0));
      CHECK(order.compare(a * c, b * c) == ab);
      if (!c.is_one()) CHECK(order.greater(a * c, a));
      const Monomial d = qstar_test::random_monomial(n, rng, 3);
      if (order.less(a, b) && order.less(b, d)) CHECK(order.less(a, d));
    }
  }
}

TEST_CASE("s-polynomial cancels the leading terms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4;
    const MonomialOrder order = qstar_test::random_order(n, rng);
    const Polynomial f = qstar_test::random_polynomial(n, rng, 4, 3);
    const Polynomial g = qstar_test::random_polynomial(n, rng, 4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    const Monomial l = order.leading_monomial(f).lcm(order.leading_monomial(g));
    const Polynomial s = s_polynomial(f, g, order);
    CHECK(s.coefficient(l) == 0);
    for (const auto& t : s.terms()) CHECK(order.less(t.monomial, l));
  }
  CHECK_THROWS_AS(s_polynomial(Polynomial(4), P("y[1]", 4), MonomialOrder::grevlex(4)), Error);
}

TEST_CASE("division reconstructs its input and leaves an irreducible remainder") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4;
    const MonomialOrder order = qstar_test::random_order(n, rng);
    std::vector<Polynomial> divisors;
    for (int k = 0; k < 3; ++k) {
      auto d = qstar_test::random_polynomial(n, rng, 3, 2);
      if (!d.is_zero() && d.terms().front().monomial.degree() > 0) divisors.push_back(d);
    }
    const Polynomial f = qstar_test::random_polynomial(n, rng, 6, 4);
    const ReductionTrace trace = reduce(f, divisors, order);
    CHECK(dot(trace.quotients, divisors) + trace.remainder == f);
    for (const auto& t : trace.remainder.terms()) {
      for (const auto& d : divisors) CHECK(!order.leading_monomial(d).divides(t.monomial));
    }
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      // No quotient term pushes past the leading term of f.
      for (const auto& t : trace.quotients[k].terms()) {
        CHECK(!order.greater(t.monomial * order.leading_monomial(divisors[k]),
                             order.leading_monomial(f)));
      }
    }
  }
}

TEST_CASE("completion yields a basis satisfying the criterion") {
  const int n = 3;
  const MonomialOrder order = MonomialOrder::grevlex(n);
  const std::vector<Polynomial> gens = {P("x[1,2]*x[1,3] - y[1]^2", n),
                                        P("x[2,3]^2 - x[1,2]*y[2]", n)};
  const auto basis = buchberger_complete(gens, order);
  CHECK(buchberger_criterion(basis, order).holds);
  CHECK(buchberger_criterion(basis, order, false).holds);
  // Each generator reduces to zero.
  for (const auto& g : gens) CHECK(reduce(g, basis, order).remainder.is_zero());
  const auto init = initial_ideal(basis, order);
  CHECK(!init.empty());
  CHECK(standard_monomials(init, 2, 0, n).size() < monomials_of_bidegree(n, 2, 0).size());
}

TEST_CASE("criterion reports the first failing pair") {
  const int n = 3;
  const MonomialOrder order = MonomialOrder::grevlex(n);
  const std::vector<Polynomial> gens = {P("x[1,2]*x[1,3] - y[1]^2", n),
                                        P("x[1,2]^2 - x[2,3]*y[2]", n)};
  const auto result = buchberger_criterion(gens, order);
  CHECK(!result.holds);
  REQUIRE(result.failure.has_value());
  CHECK(result.failure->first == 0);
  CHECK(result.failure->second == 1);
  CHECK(!result.failure->remainder.is_zero());
  CHECK_THROWS_AS(initial_ideal(gens, order), Error);
}

TEST_CASE("normal forms are idempotent and linear") {
  const int n = 3;
  const MonomialOrder order = MonomialOrder::grevlex(n);
  const auto basis = buchberger_complete(
      std::vector<Polynomial>{P("x[1,2]*x[1,3] - y[1]^2", n), P("x[2,3]^2 - x[1,2]*y[2]", n)},
      order);
  const NormalFormCache nf(basis, order);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = qstar_test::random_polynomial(n, rng, 5, 3);
    const Polynomial g = qstar_test::random_polynomial(n, rng, 5, 3);
    const Polynomial r = nf.of(f);
    CHECK(nf.of(r) == r);
    CHECK(nf.of(f + g) == r + nf.of(g));
    CHECK(r == reduce(f, basis, order).remainder);
    for (const auto& t : r.terms()) CHECK(nf.is_standard(t.monomial));
  }
  CHECK(nf.cached() > 0);
}

TEST_CASE("trace syzygies are relations") {
  const int n = 3;
  const MonomialOrder order = MonomialOrder::grevlex(n);
  const auto basis = buchberger_complete(
      std::vector<Polynomial>{P("x[1,2]*x[1,3] - y[1]^2", n), P("x[2,3]^2 - x[1,2]*y[2]", n)},
      order);
  const auto syz = syzygies_from_traces(basis, order);
  CHECK(syz.size() == basis.size() * (basis.size() - 1) / 2);
  for (const auto& s : syz) CHECK(evaluate_syzygy(s, basis).is_zero());
}

TEST_CASE("fraction-free echelon rank and kernel") {
  IntegerEchelon e(4);
  CHECK(e.insert({{0, 1}, {1, Rational(1, 2)}}));
  CHECK(e.insert({{1, 3}, {3, -1}}));
  CHECK(!e.insert({{0, 2}, {1, 4}, {3, -1}}));
  CHECK(e.rank() == 2);
  CHECK(e.contains({{0, 1}, {1, 2}, {3, Rational(-1, 2)}}));
  CHECK(!e.contains({{2, 1}}));
  const auto ker = e.kernel();
  CHECK(ker.size() == 2);
  for (const auto& k : ker) CHECK(e.annihilates(k));
}

TEST_CASE("random echelon: rank plus nullity equals columns") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t cols = 2 + rng() % 7;
    IntegerEchelon e(cols);
    const int rows = static_cast<int>(rng() % 9);
    for (int r = 0; r < rows; ++r) {
      SparseVector v;
      for (std::size_t c = 0; c < cols; ++c) {
        const long x = static_cast<long>(rng() % 5) - 2;
        Rational q(x, 1 + static_cast<long>(rng() % 3));
        q.canonicalize();
        if (x != 0) v.emplace_back(c, q);
      }
      e.insert(v);
    }
    const auto ker = e.kernel();
    CHECK(e.rank() + ker.size() == cols);
    for (const auto& k : ker) CHECK(e.annihilates(k));
  }
}
