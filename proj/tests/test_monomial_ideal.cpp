#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "wog/harness.hpp"
#include "wog/monomial_ideal.hpp"
#include "wog/oriented_graph.hpp"

using namespace wog;

namespace {

// Variables x, y, z, v.
constexpr Variable x = 0, y = 1, z = 2, v = 3;

Monomial m(std::initializer_list<Monomial::Term> t) { return Monomial(t); }

std::set<VertexSet> as_set(const std::vector<VertexSet>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("monomial arithmetic", "[ideal]") {
  Monomial a = m({{x, 1}, {y, 2}});
  Monomial b = m({{y, 1}, {z, 3}});
  CHECK(a * b == m({{x, 1}, {y, 3}, {z, 3}}));
  CHECK(lcm(a, b) == m({{x, 1}, {y, 2}, {z, 3}}));
  CHECK(gcd(a, b) == m({{y, 1}}));
  CHECK(colon(a, b) == m({{x, 1}, {y, 1}}));
  CHECK(a.degree(y) == 2);
  CHECK(a.degree(z) == 0);
  CHECK(a.total_degree() == 3);
  CHECK(m({{y, 1}}).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.radical() == m({{x, 1}, {y, 1}}));
  CHECK(Monomial{}.is_one());
  CHECK(m({{x, 0}}).is_one());
}

TEST_CASE("exponent overflow is detected", "[ideal]") {
  Monomial big = Monomial::variable(x, UINT64_MAX - 1);
  CHECK_THROWS_AS(big * big, ExponentOverflow);
}

TEST_CASE("minimalize", "[ideal]") {
  MonomialIdeal I = minimalize(3, {m({{x, 1}, {y, 1}}), m({{x, 2}, {y, 1}}), m({{x, 1}, {y, 1}}), m({{z, 1}})});
  CHECK(I.generators() == std::vector<Monomial>{m({{x, 1}, {y, 1}}), m({{z, 1}})});

  MonomialIdeal unit = minimalize(2, {Monomial{}, m({{x, 1}})});
  CHECK(unit.is_unit());
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK_THROWS_AS(MonomialIdeal(1, {m({{y, 1}})}), PreconditionError);
}

TEST_CASE("ideal membership", "[ideal]") {
  MonomialIdeal I(3, {m({{x, 1}, {y, 2}}), m({{y, 1}, {z, 2}})});
  CHECK(contains(I, m({{x, 2}, {y, 2}})));
  CHECK_FALSE(contains(I, m({{x, 1}, {y, 1}, {z, 1}})));
  CHECK(contains(I, m({{y, 1}, {z, 2}})));
  CHECK_FALSE(contains(MonomialIdeal::zero(3), Monomial{}));
}

TEST_CASE("colon ideals", "[ideal]") {
  MonomialIdeal I(3, {m({{x, 1}, {y, 2}}), m({{y, 1}, {z, 2}})});
  CHECK(colon(I, m({{y, 1}})) == MonomialIdeal(3, {m({{x, 1}, {y, 1}}), m({{z, 2}})}));
  CHECK(colon(I, m({{x, 1}, {y, 2}})).is_unit());
  CHECK(colon(I, Monomial{}) == I);
}

TEST_CASE("sums", "[ideal]") {
  MonomialIdeal I(3, {m({{x, 1}, {y, 2}})});
  MonomialIdeal J(3, {m({{x, 1}}), m({{z, 1}})});
  CHECK(sum(I, J) == MonomialIdeal(3, {m({{x, 1}}), m({{z, 1}})}));
  CHECK(sum(I, MonomialIdeal::zero(3)) == I);
  CHECK_THROWS_AS(sum(I, MonomialIdeal::zero(4)), AmbientMismatch);
  CHECK(sum(I, m({{y, 2}})) == MonomialIdeal(3, {m({{y, 2}})}));
}

TEST_CASE("radical", "[ideal]") {
  MonomialIdeal I(3, {m({{x, 1}, {y, 2}}), m({{y, 3}, {z, 1}})});
  CHECK(radical(I) == MonomialIdeal(3, {m({{x, 1}, {y, 1}}), m({{y, 1}, {z, 1}})}));
  MonomialIdeal pure(2, {m({{x, 3}})});
  CHECK(radical(pure) == MonomialIdeal(2, {m({{x, 1}})}));
  MonomialIdeal sqf(3, {m({{x, 1}, {z, 1}})});
  CHECK(radical(sqf) == sqf);
}

TEST_CASE("irreducible decomposition of (x y^2, y z^2)", "[ideal]") {
  MonomialIdeal I(3, {m({{x, 1}, {y, 2}}), m({{y, 1}, {z, 2}})});
  auto comps = irreducible_decomposition(I);
  std::set<Monomial> got;
  for (const auto& c : comps) got.insert(c.entries);
  CHECK(got == std::set<Monomial>{m({{y, 1}}), m({{x, 1}, {z, 2}}), m({{y, 2}, {z, 2}})});
  CHECK(as_set(associated_primes(I)) == std::set<VertexSet>{VertexSet{y}, VertexSet{x, z}, VertexSet{y, z}});
  CHECK(height(I) == 1);
  CHECK_FALSE(is_unmixed_ideal(I));
}

TEST_CASE("decomposition of the path edge ideal", "[ideal]") {
  MonomialIdeal I(4, {m({{x, 1}, {y, 1}}), m({{y, 1}, {z, 1}}), m({{z, 1}, {v, 1}})});
  CHECK(as_set(associated_primes(I)) ==
        std::set<VertexSet>{VertexSet{x, z}, VertexSet{y, z}, VertexSet{y, v}});
  CHECK(height(I) == 2);
  CHECK(dimension(I) == 2);
  CHECK(is_unmixed_ideal(I));
}

TEST_CASE("decomposition rejects zero and unit ideals", "[ideal]") {
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(2)), ZeroIdeal);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(2, {Monomial{}})), UnitIdeal);
  CHECK(dimension(MonomialIdeal::zero(4)) == 4);
}

TEST_CASE("irreducible components intersect back to the ideal", "[ideal]") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + rng() % 3;
    MonomialIdeal I = oracle::random_ideal(rng, n, 1 + rng() % 4, 3);
    if (I.is_unit()) continue;
    auto comps = irreducible_decomposition(I);
    std::vector<MonomialIdeal> parts;
    for (const auto& c : comps) {
      parts.push_back(c.as_ideal(n));
      for (const auto& [var, e] : c.entries.terms()) CHECK(e >= 1);
    }
    CHECK(oracle::same_ideal_in_box(I, parts, 4));
    // Irredundant: no component contains another.
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = 0; b < comps.size(); ++b)
        if (a != b) CHECK_FALSE(comps[a].is_contained_in(comps[b]));
  }
}

TEST_CASE("colon and intersection agree with brute-force membership", "[ideal]") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 3;
    MonomialIdeal I = oracle::random_ideal(rng, n, 1 + rng() % 3, 3);
    MonomialIdeal J = oracle::random_ideal(rng, n, 1 + rng() % 3, 3);
    Monomial f = oracle::random_ideal(rng, n, 1, 2).generators().front();
    MonomialIdeal C = colon(I, f);
    MonomialIdeal K = intersection(I, J);
    std::vector<Exponent> e(n, 0);
    for (e[0] = 0; e[0] <= 4; ++e[0])
      for (e[1] = 0; e[1] <= 4; ++e[1])
        for (e[2] = 0; e[2] <= 4; ++e[2]) {
          std::vector<Monomial::Term> t;
          for (Variable k = 0; k < n; ++k)
            if (e[k]) t.push_back({k, e[k]});
          Monomial g(t);
          CHECK(contains(C, g) == contains(I, g * f));
          CHECK(contains(K, g) == (contains(I, g) && contains(J, g)));
        }
  }
}

TEST_CASE("associated primes of squarefree edge ideals are the minimal covers", "[ideal]") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::random_graph(rng, 2 + rng() % 6, 50);
    if (g.edge_count() == 0) continue;
    CHECK(as_set(associated_primes(edge_ideal(g))) == oracle::minimal_covers(g));
  }
}

TEST_CASE("rendering", "[ideal]") {
  MonomialIdeal I(3, {m({{x, 1}, {y, 2}}), m({{y, 1}, {z, 2}})});
  CHECK(to_string(I, {"x", "y", "z"}) == "(x*y^2, y*z^2)");
  CHECK(to_string(Monomial{}) == "1");
}
