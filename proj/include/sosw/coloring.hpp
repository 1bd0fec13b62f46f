#ifndef SOSW_COLORING_HPP
#define SOSW_COLORING_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sosw/moment.hpp"
#include "sosw/polynomial.hpp"
#include "sosw/pseudo_expectation.hpp"

namespace sosw {

// pE^{otimes k} on a color monomial: product of base values per color class,
// empty colors contributing factor 1. Defined exactly when cdeg(m) <= pe.d.
template <typename T>
T tensor_value(const PseudoExpectation<T>& pe, const ColorMonomial& m) {
  if (m.cdeg() > pe.d) throw std::invalid_argument("tensor_value: coloring degree exceeded");
  T acc = scalar_from_long<T>(1);
  for (const auto& [c, part] : m.parts) acc *= pe.value(part);
  return acc;
}

template <typename T>
T tensor_value(const PseudoExpectation<T>& pe, const ColorPolynomial<T>& f) {
  T acc = scalar_from_long<T>(0);
  for (const auto& [m, c] : f.terms) acc += c * tensor_value(pe, m);
  return acc;
}

// The k-fold tensor power of a degree d independent-set pseudo-expectation,
// used as a coloring pseudo-expectation of total degree d' = 1 + d/2.
template <typename T>
struct ColoringPE {
  PseudoExpectation<T> base;
  int k = 0;
  int d = 0;
  int d_prime = 0;

  ColoringPE(PseudoExpectation<T> base_, int k_) : base(std::move(base_)), k(k_) {
    if (k < 1) throw std::invalid_argument("ColoringPE: k must be >= 1");
    d = base.d;
    if (d < 2 || d % 2 != 0)
      throw std::invalid_argument("ColoringPE: base degree must be even and >= 2");
    if (!base.normalized())
      throw std::invalid_argument("ColoringPE: base must be normalized");
    d_prime = 1 + d / 2;
  }

  T tensor_eval(const ColorMonomial& m) const { return tensor_value(base, m); }
  T tensor_eval(const ColorPolynomial<T>& f) const { return tensor_value(base, f); }
};

struct ChosenK {
  long k = 1;
  double log_term = 0.0;
  double lambda_used = 0.0;
  bool lambda_clamped = false;  // lambda > 1 was clamped to 1
};

// k := ceil(c_k * k0 * d * ln(n^d / lambda)), clamped to max(., k0, 1).
inline ChosenK choose_k(long k0, int d, double lambda, long n, double c_k = 1.0) {
  if (!(lambda > 0.0)) throw std::invalid_argument("choose_k: lambda must be positive");
  if (k0 < 1 || d < 1 || n < 1) throw std::invalid_argument("choose_k: bad parameters");
  ChosenK out;
  out.lambda_clamped = lambda > 1.0;
  out.lambda_used = std::min(lambda, 1.0);
  out.log_term = d * std::log(static_cast<double>(n)) - std::log(out.lambda_used);
  double raw = c_k * static_cast<double>(k0) * d * out.log_term;
  out.k = std::max<long>({static_cast<long>(std::ceil(raw)), k0, 1});
  return out;
}

// All ColorMonomials with total degree <= max_total and per-class size
// <= max_class, each color class independent in g (unless filter disabled).
// Colors ascend, so each monomial is produced once; graded-lex sorted.
std::vector<ColorMonomial> color_monomial_index(const Graph& g, int k, int max_total,
                                                int max_class, long budget,
                                                bool independent_only = true);

template <typename T>
struct ColoringGram {
  std::vector<ColorMonomial> index;
  Matrix<T> entries;
};

template <typename T>
ColoringGram<T> assemble_coloring_gram(const PseudoExpectation<T>& pe, const Graph& g, int k,
                                       int max_total, int max_class, long budget) {
  if (2 * max_class > pe.d)
    throw std::invalid_argument("coloring gram: products exceed base degree");
  ColoringGram<T> out;
  out.index = color_monomial_index(g, k, max_total, max_class, budget);
  const std::size_t sz = out.index.size();
  out.entries = Matrix<T>(sz);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) {
      T v = tensor_value(pe, out.index[i].united(out.index[j]));
      out.entries.at(i, j) = v;
      out.entries.at(j, i) = v;
    }
  return out;
}

// Minimum eigenvalue of f -> pE^{otimes k}[f^2] restricted to the span of
// independent-set ColorMonomials of total degree <= total_degree.
template <typename T>
double tensor_restricted_min_eig(const PseudoExpectation<T>& pe, const Graph& g, int k,
                                 int total_degree, long budget = 20000) {
  auto gram = assemble_coloring_gram(pe, g, k, total_degree, total_degree, budget);
  return sym_eig_range(gram.entries).first;
}

// ---------------------------------------------------------------------------
// Constraint check reports

struct BooleanityReport {
  bool passed = true;
  long cases = 0;
  double max_residual = 0.0;  // exact zero expected
};

struct EdgeReport {
  bool passed = true;
  long cases = 0;
  bool exhaustive = false;
  double max_residual = 0.0;
};

struct PositivityReport {
  bool is_psd = false;
  bool exact = false;
  double min_eig = 0.0;
  long index_size = 0;
  std::string route;  // "dense" or "symmetric"
  bool zero_rows_ok = true;
};

struct VertexPsd {
  int vertex = 0;
  bool is_psd = false;
  double min_eig = 0.0;
};

struct SumConstraintReport {
  bool passed = false;
  bool exact = false;
  std::string route;
  int half_degree = 0;
  std::vector<VertexPsd> per_vertex;
  double min_eig = 0.0;  // worst vertex
};

// pE^{otimes k}[m x_{i,c}^2] == pE^{otimes k}[m x_{i,c}]; structurally exact
// since the representation is multilinear, so this asserts the reduction path.
template <typename T>
BooleanityReport check_booleanity(const ColoringPE<T>& cpe, long samples, std::uint64_t seed) {
  BooleanityReport rep;
  std::mt19937_64 rng(seed);
  const int n = cpe.base.n;
  auto rand_int = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (long s = 0; s < samples; ++s) {
    ColorMonomial m;
    int extra = rand_int(0, 2);
    for (int t = 0; t < extra; ++t)
      m = m.united(single_var(rand_int(1, n), rand_int(1, cpe.k)));
    int i = rand_int(1, n);
    int c = rand_int(1, cpe.k);
    ColorMonomial once = m.united(single_var(i, c));
    ColorMonomial twice = once.united(single_var(i, c));
    if (once.cdeg() > cpe.d) continue;
    T a = cpe.tensor_eval(twice);
    T b = cpe.tensor_eval(once);
    ++rep.cases;
    double r = std::abs(to_double(a) - to_double(b));
    if (!(a == b)) {
      rep.passed = false;
      rep.max_residual = std::max(rep.max_residual, r);
    }
  }
  return rep;
}

// pE^{otimes k}[x_{i,c} x_{j,c} m] == 0 for every edge {i,j}; exact zeros are
// required, not tolerances.
template <typename T>
EdgeReport check_edges(const ColoringPE<T>& cpe, const Graph& g, long max_cases = 2000,
                       std::uint64_t seed = 1) {
  EdgeReport rep;
  const int n = cpe.base.n;
  const long edge_color = static_cast<long>(g.edge_count()) * cpe.k;
  std::vector<ColorMonomial> ms;
  long exhaustive_count = -1;
  if (edge_color > 0 && max_cases / edge_color >= 2) {
    try {
      ms = color_monomial_index(g, cpe.k, std::min(cpe.d - 2, 2), std::min(cpe.d - 2, 2),
                                max_cases / edge_color, /*independent_only=*/false);
      exhaustive_count = static_cast<long>(ms.size());
    } catch (const BudgetError&) {
    }
  }
  std::mt19937_64 rng(seed);
  auto rand_int = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  rep.exhaustive = exhaustive_count >= 0 && edge_color * exhaustive_count <= max_cases;
  for (const auto& e : g.edges()) {
    std::vector<int> colors;
    if (rep.exhaustive || cpe.k <= 8) {
      for (int c = 1; c <= cpe.k; ++c) colors.push_back(c);
    } else {
      for (int t = 0; t < 8; ++t) colors.push_back(rand_int(1, cpe.k));
    }
    for (int c : colors) {
      ColorMonomial ij = single_var(e.first, c).united(single_var(e.second, c));
      std::vector<ColorMonomial> cases;
      if (rep.exhaustive) {
        cases = ms;
      } else {
        cases.push_back(ColorMonomial());
        for (int t = 0; t < 4; ++t) {
          ColorMonomial m;
          int extra = rand_int(0, 2);
          for (int u = 0; u < extra; ++u)
            m = m.united(single_var(rand_int(1, n), rand_int(1, cpe.k)));
          cases.push_back(m);
        }
      }
      for (const auto& m : cases) {
        ColorMonomial full = ij.united(m);
        if (full.cdeg() > cpe.d) continue;
        T v = cpe.tensor_eval(full);
        ++rep.cases;
        if (!scalar_is_zero(v)) {
          rep.passed = false;
          rep.max_residual = std::max(rep.max_residual, std::abs(to_double(v)));
        }
      }
    }
  }
  return rep;
}

namespace detail {

// Color-symmetric block reduction for degree-1 Gram/localized matrices. For a
// color-permutation-invariant matrix over {empty} u {(j,c)} with entries
// diag-block A', off-color block P', empty-row w' and corner n00, the spectrum
// is eig(A'-P') with multiplicity k-1 plus the (n+1)-dimensional symmetrized
// block. PSD can be decided exactly on rational inputs.
template <typename T>
PositivityReport deg1_symmetric_psd(const Matrix<T>& aprime, const Matrix<T>& pprime,
                                    const std::vector<T>& wprime, const T& n00, long k,
                                    double tol) {
  const std::size_t n = aprime.size();
  PositivityReport rep;
  rep.route = "symmetric";
  rep.index_size = static_cast<long>(1 + n * k);

  Matrix<T> anti(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) anti.at(i, j) = aprime.at(i, j) - pprime.at(i, j);

  // symmetrized block, Gram form (congruent to the orthonormal reduction)
  Matrix<T> sym(n + 1);
  sym.at(0, 0) = n00;
  for (std::size_t j = 0; j < n; ++j) {
    T v = scalar_from_long<T>(k) * wprime[j];
    sym.at(0, j + 1) = v;
    sym.at(j + 1, 0) = v;
    for (std::size_t l = 0; l < n; ++l)
      sym.at(j + 1, l + 1) =
          scalar_from_long<T>(k) * (aprime.at(j, l) + scalar_from_long<T>(k - 1) * pprime.at(j, l));
  }

  // float eigenvalues from the orthonormal form: [[n00, sqrt(k) w'],[., A'+(k-1)P']]
  Matrix<double> sym_f(n + 1);
  const double sk = std::sqrt(static_cast<double>(k));
  sym_f.at(0, 0) = to_double(n00);
  for (std::size_t j = 0; j < n; ++j) {
    sym_f.at(0, j + 1) = sym_f.at(j + 1, 0) = sk * to_double(wprime[j]);
    for (std::size_t l = 0; l < n; ++l)
      sym_f.at(j + 1, l + 1) =
          to_double(aprime.at(j, l)) + (k - 1) * to_double(pprime.at(j, l));
  }
  double min_eig = sym_eig_range(sym_f).first;
  if (k >= 2) min_eig = std::min(min_eig, sym_eig_range(anti).first);
  rep.min_eig = min_eig;

  if constexpr (std::is_same_v<T, Rational>) {
    rep.exact = true;
    bool ok = exact_psd_check(sym).is_psd;
    if (ok && k >= 2) ok = exact_psd_check(anti).is_psd;
    rep.is_psd = ok;
  } else {
    rep.is_psd = min_eig >= -tol;
  }
  return rep;
}

}  // namespace detail

// Positivity of the coloring moment form over independent-set ColorMonomials
// with cdeg <= half_cdeg and total degree <= total_cap. Dense assembly within
// budget; at total_cap == 1 the color-symmetric reduction handles any k.
template <typename T>
PositivityReport check_positivity(const ColoringPE<T>& cpe, const Graph& g, int half_cdeg,
                                  int total_cap = -1, long dense_budget = 20000,
                                  double tol = 1e-9, std::uint64_t seed = 7) {
  if (total_cap < 0) total_cap = 2 * half_cdeg;
  const int n = cpe.base.n;
  const double index_estimate =
      1.0 + static_cast<double>(n) * cpe.k * (total_cap >= 2 ? 1.0 + n * cpe.k : 1.0);
  // the symmetric reduction is exact and O(n^3); prefer it once k is nontrivial
  const bool use_symmetric = total_cap == 1 && (cpe.k > 6 || index_estimate > dense_budget);
  PositivityReport rep;
  if (!use_symmetric && index_estimate <= static_cast<double>(dense_budget)) {
    auto gram = assemble_coloring_gram(cpe.base, g, cpe.k, total_cap,
                                       std::min(half_cdeg, total_cap), dense_budget);
    auto v = psd_verdict(gram.entries, tol);
    rep.is_psd = v.is_psd;
    rep.min_eig = v.min_eig;
    rep.exact = v.exact;
    rep.index_size = static_cast<long>(gram.index.size());
    rep.route = "dense";
  } else if (total_cap == 1) {
    // A'[j][l] = pE[x_j x_l], P'[j][l] = p_j p_l, w'[j] = p_j, corner 1
    Matrix<T> a(n), p(n);
    std::vector<T> w(n);
    for (int j = 1; j <= n; ++j) {
      w[j - 1] = cpe.base.value(Monomial({j}));
      for (int l = 1; l <= n; ++l) {
        a.at(j - 1, l - 1) = cpe.base.value(Monomial({j}).united(Monomial({l})));
        p.at(j - 1, l - 1) = w[j - 1] * cpe.base.value(Monomial({l}));
      }
    }
    rep = detail::deg1_symmetric_psd(a, p, w, scalar_from_long<T>(1), cpe.k, tol);
  } else {
    throw BudgetError("check_positivity: index exceeds dense budget");
  }

  // zero rows for non-independent monomials, spot-checked separately
  std::mt19937_64 rng(seed);
  if (!g.edges().empty()) {
    for (int t = 0; t < 20; ++t) {
      const auto& e = g.edges()[rng() % g.edges().size()];
      int c = 1 + static_cast<int>(rng() % cpe.k);
      ColorMonomial bad = single_var(e.first, c).united(single_var(e.second, c));
      if (bad.cdeg() > cpe.d) continue;
      if (!scalar_is_zero(cpe.tensor_eval(bad))) rep.zero_rows_ok = false;
    }
  }
  return rep;
}

// Localized matrices N_i(m,m') = pE^{otimes k}[m m' (sum_c x_{i,c} - 1)] over
// monomials of total degree <= half_degree, one PSD verdict per vertex.
template <typename T>
SumConstraintReport check_sum_constraints(const ColoringPE<T>& cpe, const Graph& g,
                                          int half_degree, long dense_budget = 20000,
                                          double tol = 1e-9) {
  if (4 * half_degree > cpe.d)
    throw std::invalid_argument("check_sum_constraints: half_degree exceeds d/4 guarantee");
  const int n = cpe.base.n;
  SumConstraintReport rep;
  rep.half_degree = half_degree;
  rep.exact = std::is_same_v<T, Rational>;
  rep.passed = true;
  rep.min_eig = std::numeric_limits<double>::infinity();

  auto singleton = [&](int j) { return cpe.base.value(Monomial({j})); };
  auto pair2 = [&](int j, int l) {
    return cpe.base.value(Monomial({j}).united(Monomial({l})));
  };
  auto triple = [&](int i, int j, int l) {
    return cpe.base.value(Monomial({i}).united(Monomial({j}).united(Monomial({l}))));
  };

  const double index_estimate =
      1.0 + static_cast<double>(n) * cpe.k * (half_degree >= 2 ? 1.0 + n * cpe.k : 1.0);
  const bool use_symmetric =
      half_degree == 1 && (cpe.k > 6 || index_estimate > dense_budget);
  const bool dense_ok =
      !use_symmetric && index_estimate <= static_cast<double>(dense_budget);

  for (int i = 1; i <= n; ++i) {
    VertexPsd v;
    v.vertex = i;
    if (half_degree == 0) {
      T val = scalar_from_long<T>(cpe.k) * singleton(i) - scalar_from_long<T>(1);
      v.min_eig = to_double(val);
      v.is_psd = rep.exact ? scalar_sign(val) >= 0 : v.min_eig >= -tol;
      rep.route = "scalar";
    } else if (dense_ok) {
      auto index = color_monomial_index(g, cpe.k, half_degree, half_degree, dense_budget);
      Matrix<T> ni(index.size());
      for (std::size_t a = 0; a < index.size(); ++a)
        for (std::size_t b = a; b < index.size(); ++b) {
          ColorMonomial mm = index[a].united(index[b]);
          T acc = -tensor_value(cpe.base, mm);
          for (int c = 1; c <= cpe.k; ++c)
            acc += tensor_value(cpe.base, mm.united(single_var(i, c)));
          ni.at(a, b) = acc;
          ni.at(b, a) = acc;
        }
      auto verdict = psd_verdict(ni, tol);
      v.is_psd = verdict.is_psd;
      v.min_eig = verdict.min_eig;
      rep.route = "dense";
    } else if (half_degree == 1) {
      const T one = scalar_from_long<T>(1);
      const T pi = singleton(i);
      Matrix<T> aprime(n), pprime(n);
      std::vector<T> wprime(n);
      for (int j = 1; j <= n; ++j) {
        const T pj = singleton(j);
        const T sj = pair2(i, j);
        wprime[j - 1] = sj + scalar_from_long<T>(cpe.k - 1) * pj * pi - pj;
        for (int l = 1; l <= n; ++l) {
          const T pl = singleton(l);
          const T q = pair2(j, l);
          aprime.at(j - 1, l - 1) =
              triple(i, j, l) + scalar_from_long<T>(cpe.k - 1) * q * pi - q;
          pprime.at(j - 1, l - 1) =
              sj * pl + pj * pair2(i, l) + scalar_from_long<T>(cpe.k - 2) * pj * pl * pi - pj * pl;
        }
      }
      T n00 = scalar_from_long<T>(cpe.k) * pi - one;
      auto pos = detail::deg1_symmetric_psd(aprime, pprime, wprime, n00, cpe.k, tol);
      v.is_psd = pos.is_psd;
      v.min_eig = pos.min_eig;
      rep.route = "symmetric";
    } else {
      throw BudgetError("check_sum_constraints: index exceeds dense budget");
    }
    rep.passed = rep.passed && v.is_psd;
    rep.min_eig = std::min(rep.min_eig, v.min_eig);
    rep.per_vertex.push_back(v);
  }
  return rep;
}

struct IndicatorReport {
  bool passed = true;
  bool base_identity_zero = false;  // (1 - h^{(2)})(x_{i,1}+x_{i,2}-2) reduces to 0
  long cases = 0;
  double min_value = 0.0;
};

// Numerical form of the "at most one color" lemma: for each test f,
// pE^{otimes k}[f^2 (1 - h_i)(sum_c x_{i,c} - 2)] >= 0.
template <typename T>
IndicatorReport check_indicator_lemma(const ColoringPE<T>& cpe, int i,
                                      const std::vector<ColorPolynomial<T>>& test_fs,
                                      double tol = 1e-9, int k_limit = 20) {
  const int n = cpe.base.n;
  const int k = cpe.k;
  IndicatorReport rep;
  rep.min_value = std::numeric_limits<double>::infinity();

  ColorPolynomial<T> sum_minus_two = ColorPolynomial<T>::constant(n, k, scalar_from_long<T>(-2));
  for (int c = 1; c <= k; ++c) sum_minus_two = sum_minus_two + ColorPolynomial<T>::var(n, k, i, c);
  ColorPolynomial<T> one_minus_h =
      ColorPolynomial<T>::constant(n, k, scalar_from_long<T>(1)) - indicator_h<T>(n, k, i, k_limit);

  // inductive base at two colors: x_{i,1} x_{i,2} (x_{i,1}+x_{i,2}-2) == 0
  if (k >= 2) {
    ColorPolynomial<T> x12 = ColorPolynomial<T>::var(n, k, i, 1) * ColorPolynomial<T>::var(n, k, i, 2);
    ColorPolynomial<T> two_color = ColorPolynomial<T>::constant(n, k, scalar_from_long<T>(-2)) +
                                   ColorPolynomial<T>::var(n, k, i, 1) +
                                   ColorPolynomial<T>::var(n, k, i, 2);
    rep.base_identity_zero = (x12 * two_color).is_zero();
  }

  for (const auto& f : test_fs) {
    if (2 * f.cdeg() > cpe.d - 2)
      throw std::invalid_argument("check_indicator_lemma: cdeg(f) exceeds (d-2)/2");
    ColorPolynomial<T> expr = (f * f) * one_minus_h * sum_minus_two;
    T val = cpe.tensor_eval(expr);
    ++rep.cases;
    double dv = to_double(val);
    rep.min_value = std::min(rep.min_value, dv);
    bool ok;
    if constexpr (std::is_same_v<T, Rational>) ok = scalar_sign(val) >= 0;
    else ok = dv >= -tol;
    rep.passed = rep.passed && ok;
  }
  return rep;
}

struct HyperTrialRow {
  double e2_over_n2;   // pE[f^2] / ||f||^2
  double e4_over_n4;   // pE[f^4] / ||f^2||^2
  double n4_over_n2sq; // ||f^2||^2 / ||f||^4
  double composite;    // pE[f^4] / pE[f^2]^2
};

struct HypercontractivityReport {
  long trials = 0;
  double lambda1 = 0.0;  // tensor_restricted_min_eig over the sampling span
  double lambda2 = 0.0;  // max per-trial pE[f^4]/||f^2||^2
  double c_max = 0.0;    // max per-trial ||f^2||^2/||f||^4
  long violations = 0;   // composite > lambda2 * c_max / lambda1^2 + tol
  bool passed = false;
  std::vector<HyperTrialRow> rows;
};

// Realized three-step chain of the 2->4 hypercontractive bound on random
// f = Pi_G^{otimes k} f with cdeg(f) <= d/4.
template <typename T>
HypercontractivityReport check_hypercontractivity(const ColoringPE<T>& cpe, const Graph& g,
                                                  long trials, std::uint64_t seed,
                                                  double tol = 1e-8, long budget = 20000) {
  const int max_cdeg = cpe.d / 4;
  if (max_cdeg < 1)
    throw std::invalid_argument("check_hypercontractivity: needs d >= 4");
  const int max_total = std::min(2 * max_cdeg, cpe.d / 4 + 1);
  auto pool = color_monomial_index(g, cpe.k, max_total, max_cdeg, budget);
  auto gram = assemble_coloring_gram(cpe.base, g, cpe.k, max_total, max_cdeg, budget);

  HypercontractivityReport rep;
  rep.lambda1 = sym_eig_range(gram.entries).first;

  std::mt19937_64 rng(seed);
  std::vector<HyperTrialRow> rows;
  for (long t = 0; t < trials; ++t) {
    ColorPolynomial<T> f(cpe.base.n, cpe.k);
    int support = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < support; ++s) {
      const auto& m = pool[rng() % pool.size()];
      long coeff = static_cast<long>(rng() % 7) - 3;
      f.add(m, scalar_from_long<T>(coeff));
    }
    if (f.is_zero()) continue;
    ColorPolynomial<T> f2 = f * f;
    ColorPolynomial<T> f4 = f2 * f2;
    double e2 = to_double(cpe.tensor_eval(f2));
    double e4 = to_double(cpe.tensor_eval(f4));
    double n2 = to_double(f.l2_norm_sq());
    double n4 = to_double(f2.l2_norm_sq());
    if (!(n2 > 0.0) || !(e2 > 0.0) || !(n4 > 0.0)) continue;
    rows.push_back({e2 / n2, e4 / n4, n4 / (n2 * n2), e4 / (e2 * e2)});
  }
  rep.trials = static_cast<long>(rows.size());
  for (const auto& r : rows) {
    rep.lambda2 = std::max(rep.lambda2, r.e4_over_n4);
    rep.c_max = std::max(rep.c_max, r.n4_over_n2sq);
  }
  const double bound = rep.lambda2 * rep.c_max / (rep.lambda1 * rep.lambda1);
  for (const auto& r : rows)
    if (r.composite > bound + tol) ++rep.violations;
  rep.rows = std::move(rows);
  rep.passed = rep.violations == 0 && rep.lambda1 > 0.0;
  return rep;
}

struct CauchySchwarzReport {
  bool passed = false;
  double lhs = 0.0;  // pE[fg]^2
  double rhs = 0.0;  // pE[f^2] pE[g^2]
};

template <typename T>
CauchySchwarzReport cauchy_schwarz_check(const ColoringPE<T>& cpe, const ColorPolynomial<T>& f,
                                         const ColorPolynomial<T>& g, double tol = 1e-9) {
  if (2 * f.cdeg() > cpe.d || 2 * g.cdeg() > cpe.d)
    throw std::invalid_argument("cauchy_schwarz_check: cdeg exceeds d/2");
  T efg = cpe.tensor_eval(f * g);
  T ef2 = cpe.tensor_eval(f * f);
  T eg2 = cpe.tensor_eval(g * g);
  CauchySchwarzReport rep;
  rep.lhs = to_double(efg) * to_double(efg);
  rep.rhs = to_double(ef2) * to_double(eg2);
  if constexpr (std::is_same_v<T, Rational>) {
    rep.passed = efg * efg <= ef2 * eg2;
  } else {
    rep.passed = rep.lhs <= rep.rhs + tol;
  }
  return rep;
}

struct HExpectationResult {
  double value = 0.0;         // pE^{otimes k}[h_i]
  bool brute_checked = false; // closed form validated against expansion
  bool brute_matches = false;
  long k0 = 0;                // ceil(1/p) when p > 0
  double bound = 0.0;         // k exp(-k/k0)
  bool bound_applicable = false;
  bool bound_holds = false;
};

// pE^{otimes k}[h_i] = (1-p)^k + k p (1-p)^{k-1} with p = pE[x_i]. The direct
// expansion of h_i validates the closed form; the k e^{-k/k0} tail bound is
// recorded as a verdict, not asserted.
template <typename T>
HExpectationResult h_expectation(const ColoringPE<T>& cpe, int i, int k_limit = 20) {
  const T p = cpe.base.value(Monomial({i}));
  const T q = scalar_from_long<T>(1) - p;
  const long k = cpe.k;
  T closed = scalar_pow(q, k) + scalar_from_long<T>(k) * p * scalar_pow(q, k - 1);

  HExpectationResult out;
  out.value = to_double(closed);
  if (k <= k_limit) {
    T brute = cpe.tensor_eval(indicator_h<T>(cpe.base.n, cpe.k, i, k_limit));
    out.brute_checked = true;
    out.brute_matches = brute == closed;
  }
  if (scalar_sign(p) > 0) {
    out.k0 = ceil_inverse(p);
    out.bound = k * std::exp(-static_cast<double>(k) / out.k0);
    out.bound_applicable = true;
    out.bound_holds = out.value <= out.bound + 1e-12;
  }
  return out;
}

struct ReductionOptions {
  double c_k = 1.0;
  double tol = 1e-9;
  long bool_samples = 200;
  long edge_budget = 2000;
  long dense_budget = 20000;
  std::uint64_t seed = 1;
  int sum_half_degree = -1;  // default d/4 per the proof's guarantee
};

template <typename T>
struct ReductionReport {
  CoveringCertificate covering;
  ChosenK kinfo;
  int d_prime = 0;
  bool ran_checks = false;
  BooleanityReport booleanity;
  EdgeReport edges;
  PositivityReport positivity;
  SumConstraintReport sums;
  bool passed = false;
};

// Coloring reduction pipeline: covering certificate -> choice of k -> tensor ->
// booleanity/edge/positivity/sum-constraint verification at degree d' = 1+d/2.
template <typename T>
ReductionReport<T> run_reduction(const Graph& g, const PseudoExpectation<T>& pe,
                                 const ReductionOptions& opts = {}) {
  ReductionReport<T> rep;
  rep.covering = covering_certificate(pe, g);
  if (!rep.covering.passed) return rep;  // rejected at precondition

  rep.kinfo = choose_k(rep.covering.k0, pe.d, rep.covering.lambda, g.n(), opts.c_k);
  ColoringPE<T> cpe(pe, static_cast<int>(rep.kinfo.k));
  rep.d_prime = cpe.d_prime;
  rep.ran_checks = true;

  rep.booleanity = check_booleanity(cpe, opts.bool_samples, opts.seed);
  rep.edges = check_edges(cpe, g, opts.edge_budget, opts.seed + 1);
  rep.positivity = check_positivity(cpe, g, cpe.d_prime / 2, cpe.d_prime / 2,
                                    opts.dense_budget, opts.tol);
  int sum_half = opts.sum_half_degree >= 0 ? opts.sum_half_degree : pe.d / 4;
  rep.sums = check_sum_constraints(cpe, g, sum_half, opts.dense_budget, opts.tol);

  rep.passed = rep.booleanity.passed && rep.edges.passed && rep.positivity.is_psd &&
               rep.positivity.zero_rows_ok && rep.sums.passed;
  return rep;
}

}  // namespace sosw

#endif  // SOSW_COLORING_HPP
