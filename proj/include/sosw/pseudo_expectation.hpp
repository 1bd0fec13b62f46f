#ifndef SOSW_PSEUDO_EXPECTATION_HPP
#define SOSW_PSEUDO_EXPECTATION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sosw/graph.hpp"
#include "sosw/numeric.hpp"
#include "sosw/polynomial.hpp"

namespace sosw {

// Table view of a linear functional on multilinear polynomials of degree <= d.
// Absent entries are zero; for a normalized table value(empty) = 1.
template <typename T>
struct PseudoExpectation {
  int n = 0;
  int d = 0;
  std::map<Monomial, T> values;

  PseudoExpectation() = default;
  PseudoExpectation(int n_, int d_) : n(n_), d(d_) {}

  const T& value(const Monomial& m) const {
    if (m.degree() > d) throw std::invalid_argument("pseudo-expectation degree exceeded");
    static const T zero = scalar_from_long<T>(0);
    auto it = values.find(m);
    return it == values.end() ? zero : it->second;
  }

  void set(const Monomial& m, const T& v) {
    if (scalar_is_zero(v)) values.erase(m);
    else values[m] = v;
  }

  bool normalized() const {
    auto it = values.find(Monomial());
    return it != values.end() && it->second == scalar_from_long<T>(1);
  }

  T apply(const Polynomial<T>& f) const {
    T acc = scalar_from_long<T>(0);
    for (const auto& [m, c] : f.terms) acc += c * value(m);
    return acc;
  }
};

// Builds the genuine expectation operator of a distribution mu on independent
// sets: value(S) = Pr_{T ~ mu}[S subseteq T] for all |S| <= d.
template <typename T>
inline PseudoExpectation<T> pe_from_distribution(
    const Graph& g, int d, const std::map<Monomial, T>& weights,
    double float_tol = 1e-12) {
  T total = scalar_from_long<T>(0);
  for (const auto& [support, w] : weights) {
    if (!monomial_independent(g, support))
      throw std::invalid_argument("distribution support set is not independent");
    if (scalar_sign(w) < 0) throw std::invalid_argument("negative weight");
    total += w;
  }
  bool sums_to_one;
  if constexpr (std::is_same_v<T, Rational>) sums_to_one = total == 1;
  else sums_to_one = std::abs(total - 1.0) <= float_tol;
  if (!sums_to_one) throw std::invalid_argument("distribution weights do not sum to 1");

  PseudoExpectation<T> pe(g.n(), d);
  pe.values[Monomial()] = scalar_from_long<T>(0);
  for (const auto& [support, w] : weights) {
    if (scalar_is_zero(w)) continue;
    // scatter to all subsets S of the support with |S| <= d
    const auto& verts = support.vars;
    const int m = static_cast<int>(verts.size());
    for (long mask = 0; mask < (1L << m); ++mask) {
      if (__builtin_popcountl(mask) > d) continue;
      Monomial s;
      for (int b = 0; b < m; ++b)
        if (mask & (1L << b)) s.vars.push_back(verts[b]);
      auto it = pe.values.find(s);
      if (it == pe.values.end()) pe.values.emplace(std::move(s), w);
      else it->second += w;
    }
  }
  // the weights were checked to sum to 1; pin value(empty) exactly so the
  // normalization invariant is bitwise in float mode too
  pe.values[Monomial()] = scalar_from_long<T>(1);
  return pe;
}

// Uniform distribution over all independent sets of g (the ground-truth
// pseudo-expectation used throughout the test suites).
template <typename T>
inline PseudoExpectation<T> uniform_independent_set_pe(const Graph& g, int d) {
  auto sets = enumerate_independent_sets(g, g.n());
  const long count = static_cast<long>(sets.size());
  std::map<Monomial, T> weights;
  for (auto& s : sets) weights.emplace(Monomial(std::move(s)), scalar_ratio<T>(1, count));
  return pe_from_distribution<T>(g, d, weights);
}

template <typename T>
struct ValuesVector {
  std::vector<T> xi;         // pE[x_1..x_n]
  bool covering_ok = false;  // all entries positive
  long k0 = 0;               // ceil(1 / min_i pE[x_i]) when covering_ok
  T min_xi = scalar_from_long<T>(0);
};

template <typename T>
inline ValuesVector<T> pe_values_vector(const PseudoExpectation<T>& pe) {
  if (pe.d < 1) throw std::invalid_argument("pe_values_vector needs degree >= 1");
  ValuesVector<T> out;
  out.xi.reserve(pe.n);
  for (int i = 1; i <= pe.n; ++i) out.xi.push_back(pe.value(Monomial({i})));
  out.min_xi = out.xi.empty() ? scalar_from_long<T>(0) : out.xi.front();
  for (const T& v : out.xi)
    if (v < out.min_xi) out.min_xi = v;
  out.covering_ok = !out.xi.empty() && scalar_sign(out.min_xi) > 0;
  if (out.covering_ok) out.k0 = ceil_inverse(out.min_xi);
  return out;
}

}  // namespace sosw

#endif  // SOSW_PSEUDO_EXPECTATION_HPP
