#include <doctest.h>

#include "sosw/calibration.hpp"
#include "sosw/pseudo_expectation.hpp"

using namespace sosw;

namespace {

Graph k3() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("pe_from_distribution on K3 uniform") {
  // uniform on {empty, {1}, {2}, {3}}: value({i}) = 1/4, pairs 0
  auto pe = uniform_independent_set_pe<Rational>(k3(), 2);
  CHECK(pe.value(Monomial()) == 1);
  CHECK(pe.value(Monomial({1})) == Rational(1, 4));
  CHECK(pe.value(Monomial({2})) == Rational(1, 4));
  CHECK(pe.value(Monomial({1, 2})) == 0);
  CHECK(pe.normalized());
}

TEST_CASE("pe_from_distribution point mass and empty graph") {
  std::map<Monomial, Rational> point{{Monomial(), Rational(1)}};
  auto pe = pe_from_distribution<Rational>(k3(), 2, point);
  CHECK(pe.value(Monomial()) == 1);
  CHECK(pe.value(Monomial({1})) == 0);
  CHECK(pe.value(Monomial({2, 3})) == 0);

  auto pe2 = uniform_independent_set_pe<Rational>(Graph(2), 2);
  CHECK(pe2.value(Monomial({1})) == Rational(1, 2));
  CHECK(pe2.value(Monomial({1, 2})) == Rational(1, 4));
}

TEST_CASE("pe_from_distribution rejects bad input") {
  std::map<Monomial, Rational> bad{{Monomial({1, 2}), Rational(1)}};
  CHECK_THROWS_AS(pe_from_distribution<Rational>(k3(), 2, bad), std::invalid_argument);
  std::map<Monomial, Rational> off{{Monomial(), Rational(1, 2)}};
  CHECK_THROWS_AS(pe_from_distribution<Rational>(k3(), 2, off), std::invalid_argument);
  std::map<Monomial, double> off_f{{Monomial(), 0.5}};
  CHECK_THROWS_AS(pe_from_distribution<double>(k3(), 2, off_f), std::invalid_argument);
}

TEST_CASE("distribution PE monotone under set inclusion") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_gnp(6, 0.5, seed);
    auto pe = uniform_independent_set_pe<Rational>(g, 6);
    auto sets = enumerate_independent_sets(g, 6);
    for (const auto& sv : sets) {
      Monomial s(sv);
      for (int v = 1; v <= 6; ++v) {
        Monomial bigger = s.united(Monomial({v}));
        if (bigger.degree() == s.degree()) continue;
        CHECK(pe.value(bigger) <= pe.value(s));
      }
    }
  }
}

TEST_CASE("pe_values_vector and k0") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 2);
  auto vals = pe_values_vector(pe);
  REQUIRE(vals.xi.size() == 3);
  CHECK(vals.xi[0] == Rational(1, 4));
  CHECK(vals.covering_ok);
  CHECK(vals.k0 == 4);

  std::map<Monomial, Rational> point{{Monomial(), Rational(1)}};
  auto pmass = pe_from_distribution<Rational>(k3(), 2, point);
  auto pvals = pe_values_vector(pmass);
  CHECK_FALSE(pvals.covering_ok);

  auto pe2 = uniform_independent_set_pe<Rational>(Graph(2), 2);
  auto v2 = pe_values_vector(pe2);
  CHECK(v2.k0 == 2);
  CHECK(v2.xi[0] == Rational(1, 2));
}

TEST_CASE("k0 rounding is robust in float mode") {
  // 1/(1/3) = 3.0000000000000004 must still give k0 = 3
  CHECK(ceil_inverse(1.0 / 3.0) == 3);
  CHECK(ceil_inverse(0.25) == 4);
  CHECK(ceil_inverse(2.0 / 7.0) == 4);
  CHECK(ceil_inverse(Rational(2, 7)) == 4);
  CHECK(ceil_inverse(Rational(1, 4)) == 4);
  CHECK(ceil_inverse(1.0) == 1);
}

TEST_CASE("chi characters") {
  CHECK(chi(k3(), {}) == 1);
  CHECK(chi(k3(), {{1, 2}}) == 1);
  CHECK(chi(Graph(3), {{1, 2}, {1, 3}}) == 1);  // (-1)(-1)
  CHECK(chi(Graph(3), {{1, 2}}) == -1);
  CHECK(chi(Graph(3, {{1, 2}}), {{1, 2}, {1, 3}}) == -1);
}
