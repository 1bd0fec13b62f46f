#include <doctest.h>

#include <cmath>
#include <random>

#include "sosw/coloring.hpp"

using namespace sosw;

namespace {

Graph k3() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }

// single-vertex distribution PE with pE[x_1] = p
template <typename T>
PseudoExpectation<T> bernoulli_pe(const T& p, int d) {
  std::map<Monomial, T> w{{Monomial(), scalar_from_long<T>(1) - p}, {Monomial({1}), p}};
  return pe_from_distribution<T>(Graph(1), d, w);
}

}  // namespace

TEST_CASE("tensor_eval factorizes over colors") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 4);
  ColoringPE<Rational> cpe(pe, 2);
  CHECK(cpe.tensor_eval(ColorMonomial()) == 1);
  CHECK(cpe.tensor_eval(single_var(1, 1).united(single_var(2, 2))) == Rational(1, 16));
  CHECK(cpe.tensor_eval(single_var(1, 1).united(single_var(2, 1))) == 0);  // edge in color 1

  // coloring-degree violation against a degree-2 base table
  auto pe2 = uniform_independent_set_pe<Rational>(k3(), 2);
  ColoringPE<Rational> cpe2(pe2, 2);
  ColorMonomial deep;
  deep.set_part(1, Monomial({1, 2, 3}));
  CHECK_THROWS_AS((void)cpe2.tensor_eval(deep), std::invalid_argument);
}

TEST_CASE("tensor_eval exhaustive factorization on small instances") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = gen_gnp(4, 0.5, seed);
    auto pe = uniform_independent_set_pe<Rational>(g, 4);
    ColoringPE<Rational> cpe(pe, 3);
    auto index = color_monomial_index(g, 3, 4, 4, 100000, /*independent_only=*/false);
    for (const auto& m : index) {
      Rational expect(1);
      for (const auto& [c, part] : m.parts) expect *= pe.value(part);
      CHECK(cpe.tensor_eval(m) == expect);
    }
  }
}

TEST_CASE("choose_k worked examples") {
  // degenerate log: clamps to k0
  auto a = choose_k(4, 2, 1.0, 1);
  CHECK(a.k == 4);
  // ceil(8 ln 144) = 40
  auto b = choose_k(4, 2, 1.0 / 16.0, 3);
  CHECK(b.k == 40);
  // lambda > 1 is clamped and recorded
  auto c = choose_k(2, 2, 4.0, 5);
  CHECK(c.lambda_clamped);
  CHECK(c.lambda_used == 1.0);
  CHECK_THROWS_AS(choose_k(4, 2, 0.0, 3), std::invalid_argument);
}

TEST_CASE("choose_k monotonicity") {
  auto base = choose_k(4, 2, 0.1, 8).k;
  CHECK(choose_k(5, 2, 0.1, 8).k >= base);
  CHECK(choose_k(4, 3, 0.1, 8).k >= base);
  CHECK(choose_k(4, 2, 0.1, 9).k >= base);
  CHECK(choose_k(4, 2, 0.05, 8).k >= base);
}

TEST_CASE("check_booleanity exhaustively at cdeg <= 1") {
  Graph g(3, {{1, 2}});
  auto pe = uniform_independent_set_pe<Rational>(g, 4);
  ColoringPE<Rational> cpe(pe, 2);
  auto ms = color_monomial_index(g, 2, 2, 1, 100000, /*independent_only=*/false);
  for (const auto& m : ms) {
    for (int i = 1; i <= 3; ++i)
      for (int c = 1; c <= 2; ++c) {
        ColorMonomial once = m.united(single_var(i, c));
        if (once.cdeg() > cpe.d) continue;
        CHECK(cpe.tensor_eval(once.united(single_var(i, c))) == cpe.tensor_eval(once));
      }
  }
  auto rep = check_booleanity(cpe, 100, 5);
  CHECK(rep.passed);
  CHECK(rep.max_residual == 0.0);
}

TEST_CASE("check_edges is exactly zero, exhaustive on the path") {
  Graph p4(4, {{1, 2}, {2, 3}, {3, 4}});
  auto pe = uniform_independent_set_pe<Rational>(p4, 4);
  ColoringPE<Rational> cpe(pe, 2);
  auto rep = check_edges(cpe, p4, 20000, 3);
  CHECK(rep.passed);
  CHECK(rep.exhaustive);
  CHECK(rep.max_residual == 0.0);
  CHECK(rep.cases > 100);
}

TEST_CASE("check_positivity dense on tiny instances") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 4);
  ColoringPE<Rational> cpe(pe, 2);
  // half_cdeg 0: the 1x1 matrix [1]
  auto trivially = check_positivity(cpe, k3(), 0, 0);
  CHECK(trivially.is_psd);
  CHECK(trivially.index_size == 1);
  CHECK(trivially.min_eig == doctest::Approx(1.0));

  auto rep = check_positivity(cpe, k3(), 1, 1);
  CHECK(rep.is_psd);
  CHECK(rep.route == "dense");
  CHECK(rep.zero_rows_ok);
  // distribution-backed tensor is a true product measure: PSD at cdeg 1 too
  auto rep2 = check_positivity(cpe, k3(), 1, 2);
  CHECK(rep2.is_psd);
}

TEST_CASE("positivity: dense route equals the symmetric reduction") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = gen_gnp(4, 0.5, seed + 2);
    auto pe = uniform_independent_set_pe<double>(g, 4);
    for (int k : {1, 2, 3, 5}) {
      ColoringPE<double> cpe(pe, k);
      auto dense = check_positivity(cpe, g, 1, 1, 100000);
      auto sym = check_positivity(cpe, g, 1, 1, /*dense_budget=*/1);
      REQUIRE(dense.route == "dense");
      REQUIRE(sym.route == "symmetric");
      CHECK(sym.min_eig == doctest::Approx(dense.min_eig).epsilon(1e-9));
      CHECK(sym.is_psd == dense.is_psd);
      CHECK(sym.index_size == dense.index_size);
    }
  }
}

TEST_CASE("sum constraints: single color fails, enough colors pass") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 4);
  ColoringPE<Rational> one(pe, 1);
  auto fail = check_sum_constraints(one, k3(), 0);
  CHECK_FALSE(fail.passed);  // pE[x_{i,1}] - 1 = -3/4 < 0

  ColoringPE<Rational> five(pe, 5);
  auto entry = check_sum_constraints(five, k3(), 0);
  CHECK(entry.passed);  // k/4 - 1 > 0 for k >= 5
  CHECK(entry.min_eig == doctest::Approx(5.0 / 4.0 - 1.0));
}

TEST_CASE("sum constraints: dense route equals the symmetric reduction") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = gen_gnp(4, 0.5, seed + 11);
    auto pe = uniform_independent_set_pe<double>(g, 4);
    for (int k : {2, 3, 6}) {
      ColoringPE<double> cpe(pe, k);
      auto dense = check_sum_constraints(cpe, g, 1, 1000000);
      auto sym = check_sum_constraints(cpe, g, 1, /*dense_budget=*/1);
      REQUIRE(dense.route == "dense");
      REQUIRE(sym.route == "symmetric");
      REQUIRE(dense.per_vertex.size() == sym.per_vertex.size());
      for (std::size_t i = 0; i < dense.per_vertex.size(); ++i) {
        CHECK(sym.per_vertex[i].min_eig ==
              doctest::Approx(dense.per_vertex[i].min_eig).epsilon(1e-8));
        CHECK(sym.per_vertex[i].is_psd == dense.per_vertex[i].is_psd);
      }
    }
  }
}

TEST_CASE("indicator lemma: base case exact zero, small k nonnegative") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = gen_gnp(4, 0.5, seed);
    auto pe = uniform_independent_set_pe<Rational>(g, 4);
    for (int k : {2, 3, 4}) {
      ColoringPE<Rational> cpe(pe, k);
      std::vector<ColorPolynomial<Rational>> fs;
      fs.push_back(ColorPolynomial<Rational>::constant(4, k, Rational(1)));
      for (int j = 1; j <= 4; ++j) fs.push_back(ColorPolynomial<Rational>::var(4, k, j, 1));
      // a mixed cdeg-1 test polynomial
      fs.push_back(ColorPolynomial<Rational>::var(4, k, 1, 1) +
                   ColorPolynomial<Rational>::var(4, k, 2, std::min(2, k)).scaled(Rational(-2)));
      for (int i = 1; i <= 4; ++i) {
        auto rep = check_indicator_lemma(cpe, i, fs);
        CHECK(rep.passed);
        CHECK(rep.base_identity_zero);
        if (k == 2) CHECK(rep.min_value == doctest::Approx(0.0));  // exact base case
      }
    }
  }
}

TEST_CASE("h_expectation closed form, brute force, and bound") {
  // k=1: h == 1
  {
    auto pe = bernoulli_pe<Rational>(Rational(1, 4), 2);
    ColoringPE<Rational> cpe(pe, 1);
    auto r = h_expectation(cpe, 1);
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(r.brute_checked);
    CHECK(r.brute_matches);
  }
  // k=2, p=1/4: (3/4)^2 + 2 (1/4)(3/4) = 15/16
  {
    auto pe = bernoulli_pe<Rational>(Rational(1, 4), 2);
    ColoringPE<Rational> cpe(pe, 2);
    auto r = h_expectation(cpe, 1);
    CHECK(r.value == doctest::Approx(15.0 / 16.0));
    CHECK(r.brute_matches);
  }
  // closed form == expansion for k <= 12 over the probability grid, exact
  for (long num : {0L, 1L, 2L, 4L, 8L}) {
    Rational p = scalar_ratio<Rational>(num, 8);
    auto pe = bernoulli_pe<Rational>(p, 2);
    for (int k = 1; k <= 12; ++k) {
      ColoringPE<Rational> cpe(pe, k);
      auto r = h_expectation(cpe, 1);
      CHECK(r.brute_checked);
      CHECK(r.brute_matches);
      if (num == 0) CHECK(r.value == doctest::Approx(1.0));  // never colored
    }
  }
  // the k e^{-k/k0} tail bound fails at exactly (k=2, p=1/2); holds elsewhere
  {
    auto pe = bernoulli_pe<Rational>(Rational(1, 2), 2);
    ColoringPE<Rational> two(pe, 2);
    auto r2 = h_expectation(two, 1);
    CHECK(r2.bound_applicable);
    CHECK_FALSE(r2.bound_holds);  // 3/4 > 2/e
    ColoringPE<Rational> three(pe, 3);
    CHECK(h_expectation(three, 1).bound_holds);
  }
}

TEST_CASE("cauchy_schwarz_check") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 4);
  ColoringPE<Rational> cpe(pe, 2);
  auto f = ColorPolynomial<Rational>::var(3, 2, 1, 1) +
           ColorPolynomial<Rational>::var(3, 2, 2, 2).scaled(Rational(3));
  auto g = ColorPolynomial<Rational>::var(3, 2, 3, 1) -
           ColorPolynomial<Rational>::constant(3, 2, Rational(1, 2));
  CHECK(cauchy_schwarz_check(cpe, f, f).passed);  // equality case
  auto one = ColorPolynomial<Rational>::constant(3, 2, Rational(1));
  CHECK(cauchy_schwarz_check(cpe, f, one).passed);  // variance nonnegativity
  CHECK(cauchy_schwarz_check(cpe, f, g).passed);

  std::mt19937_64 rng(4);
  auto pool = color_monomial_index(k3(), 2, 2, 2, 10000);
  for (int rep = 0; rep < 25; ++rep) {
    ColorPolynomial<Rational> a(3, 2), b(3, 2);
    for (int t = 0; t < 3; ++t) {
      a.add(pool[rng() % pool.size()], Rational(static_cast<long>(rng() % 7) - 3));
      b.add(pool[rng() % pool.size()], Rational(static_cast<long>(rng() % 7) - 3));
    }
    CHECK(cauchy_schwarz_check(cpe, a, b).passed);
  }
}

TEST_CASE("hypercontractivity chain on distribution tensors") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = gen_gnp(5, 0.5, seed + 1);
    auto pe = uniform_independent_set_pe<Rational>(g, 4);
    ColoringPE<Rational> cpe(pe, 2);
    auto rep = check_hypercontractivity(cpe, g, 30, seed);
    CHECK(rep.passed);
    CHECK(rep.lambda1 > 0.0);
    CHECK(rep.violations == 0);
  }
}

TEST_CASE("hypercontractivity trivial rows") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 4);
  ColoringPE<Rational> cpe(pe, 2);
  // f = 1: all ratios 1
  auto one = ColorPolynomial<Rational>::constant(3, 2, Rational(1));
  CHECK(to_double(cpe.tensor_eval(one * one)) == doctest::Approx(1.0));
  // f = x_{1,1}: booleanity collapses powers, pE[f^4] = pE[f^2] = pE[x_1]
  auto x = ColorPolynomial<Rational>::var(3, 2, 1, 1);
  auto f2 = x * x;
  auto f4 = f2 * f2;
  CHECK(cpe.tensor_eval(f2) == Rational(1, 4));
  CHECK(cpe.tensor_eval(f4) == Rational(1, 4));
  CHECK(x.l2_norm_sq() == 1);
}

TEST_CASE("run_reduction passes on ground truth and rejects point mass") {
  {
    auto pe = uniform_independent_set_pe<Rational>(k3(), 2);
    auto rep = run_reduction(k3(), pe);
    CHECK(rep.covering.passed);
    CHECK(rep.ran_checks);
    CHECK(rep.kinfo.k == choose_k(4, 2, rep.covering.lambda, 3).k);
    CHECK(rep.passed);
  }
  {
    auto pe = uniform_independent_set_pe<Rational>(Graph(2), 2);
    auto rep = run_reduction(Graph(2), pe);
    CHECK(rep.passed);
    CHECK(rep.kinfo.k >= 2);
  }
  {
    std::map<Monomial, Rational> point{{Monomial(), Rational(1)}};
    auto pe = pe_from_distribution<Rational>(k3(), 2, point);
    auto rep = run_reduction(k3(), pe);
    CHECK_FALSE(rep.covering.passed);
    CHECK_FALSE(rep.ran_checks);
    CHECK_FALSE(rep.passed);
  }
}

TEST_CASE("run_reduction at degree 4 with exact verdicts") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 4);
  auto rep = run_reduction(k3(), pe);
  CHECK(rep.passed);
  CHECK(rep.d_prime == 3);
  CHECK(rep.sums.half_degree == 1);
  CHECK(rep.booleanity.max_residual == 0.0);
  CHECK(rep.edges.max_residual == 0.0);
  CHECK(rep.positivity.exact);
  CHECK(rep.sums.exact);
}

TEST_CASE("ColoringPE validates its inputs") {
  auto pe = uniform_independent_set_pe<Rational>(k3(), 3);  // odd degree
  CHECK_THROWS_AS(ColoringPE<Rational>(pe, 2), std::invalid_argument);
  auto ok = uniform_independent_set_pe<Rational>(k3(), 2);
  CHECK_THROWS_AS(ColoringPE<Rational>(ok, 0), std::invalid_argument);
}
