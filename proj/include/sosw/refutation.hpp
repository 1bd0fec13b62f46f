#ifndef SOSW_REFUTATION_HPP
#define SOSW_REFUTATION_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "sosw/coloring.hpp"
#include "sosw/graph.hpp"
#include "sosw/pseudo_expectation.hpp"

namespace sosw {

// Averages a coloring table over colors and projects onto one color:
// out(S) = (1/k) sum_c input[prod_{i in S} x_{i,c}]. For color-symmetric
// inputs this equals symmetrizing over all color permutations first.
template <typename T>
PseudoExpectation<T> symmetrize_and_project(
    const std::function<T(const ColorMonomial&)>& table, int n, int k, int degree) {
  if (k < 1) throw std::invalid_argument("symmetrize_and_project: k must be >= 1");
  PseudoExpectation<T> out(n, degree);
  for (auto& sverts : subsets_of_size_at_most(n, degree)) {
    Monomial s(std::move(sverts));
    T acc = scalar_from_long<T>(0);
    for (int c = 1; c <= k; ++c) {
      ColorMonomial m;
      m.set_part(c, s);
      acc += table(m);
    }
    out.set(s, acc / scalar_from_long<T>(k));
  }
  return out;
}

template <typename T>
PseudoExpectation<T> symmetrize_and_project(const std::map<ColorMonomial, T>& table, int n,
                                            int k, int degree) {
  return symmetrize_and_project<T>(
      [&table](const ColorMonomial& m) -> T {
        auto it = table.find(m);
        if (it == table.end())
          throw std::invalid_argument("symmetrize_and_project: table degree shortfall");
        return it->second;
      },
      n, k, degree);
}

template <typename T>
PseudoExpectation<T> symmetrize_and_project(const ColoringPE<T>& cpe, int degree) {
  if (degree > cpe.d)
    throw std::invalid_argument("symmetrize_and_project: degree shortfall");
  return symmetrize_and_project<T>(
      [&cpe](const ColorMonomial& m) { return cpe.tensor_eval(m); }, cpe.base.n, cpe.k,
      degree);
}

struct CoefficientAudit {
  int s = 0;
  int ell = 0;
  double omega = 0.0;
  // exact coefficients of x_S in f^{2^{ell-1}} and f^{2^ell} for f = sum x_i
  std::string c_s;        // decimal strings; values can exceed 64 bits
  std::string c_prime_s;
  bool lower_bound_ok = false;  // c_S >= s^{2^{ell-1}-s} s!
  bool upper_bound_ok = false;  // c'_S <= s^{2^ell}
  bool ratio_applicable = false;  // omega >= e s
  bool ratio_ok = false;          // c'_S / c_S <= omega^{2^{ell-1}}
};

// Brute-force multinomial oracle: expands (x_1+...+x_s)^{2^{ell-1}} and
// ^{2^ell} with booleanity reduction and reads the coefficient of x_{[s]}.
CoefficientAudit coefficient_audit(int s, int ell, double omega, long budget = 1u << 22);

template <typename T>
struct PowerChainReport {
  int t = 0;                  // max independent set size
  int ell = 0;                // smallest with 2^ell >= 2t
  double omega = 0.0;         // pE[sum x_i]
  std::vector<double> values; // pE[f^{2^j}], j = 0..ell
  std::vector<bool> cs_steps_ok;  // pE[f^{2^{j+1}}] >= pE[f^{2^j}]^2
  bool chain_ok = false;
  bool hypothesis_fires = false;  // omega >= e t
  bool coefficient_inequality = false;  // pE[f^{2^ell}] < pE[f^{2^{ell-1}}] omega^{2^{ell-1}}
  bool contradiction = false;
  std::vector<CoefficientAudit> audit;
};

// Power chain for f = sum_i x_i: repeated squaring with
// multilinear reduction, Cauchy-Schwarz steps, and the coefficient inequality
// that rules out pE[f] >= e t for genuinely PSD tables.
template <typename T>
PowerChainReport<T> power_chain_refute(const PseudoExpectation<T>& pe, const Graph& g,
                                       double tol = 1e-9, int mis_limit = 40) {
  auto mis = max_independent_set(g, mis_limit);
  const int t = mis.size;
  int ell = 0;
  while ((1 << ell) < 2 * t) ++ell;
  if (pe.d < std::min(4 * t, pe.n))
    throw std::invalid_argument("power_chain_refute: table degree below 4t");

  PowerChainReport<T> rep;
  rep.t = t;
  rep.ell = ell;

  Polynomial<T> f(pe.n);
  for (int i = 1; i <= pe.n; ++i) f.add(Monomial({i}), scalar_from_long<T>(1));

  std::vector<T> vals;
  Polynomial<T> power = f;
  vals.push_back(pe.apply(power));
  for (int j = 1; j <= ell; ++j) {
    power = power * power;
    vals.push_back(pe.apply(power));
  }
  rep.omega = to_double(vals[0]);
  for (const T& v : vals) rep.values.push_back(to_double(v));

  rep.chain_ok = true;
  for (int j = 0; j < ell; ++j) {
    bool ok;
    if constexpr (std::is_same_v<T, Rational>) ok = vals[j + 1] >= vals[j] * vals[j];
    else ok = rep.values[j + 1] >= rep.values[j] * rep.values[j] - tol;
    rep.cs_steps_ok.push_back(ok);
    rep.chain_ok = rep.chain_ok && ok;
  }

  rep.hypothesis_fires = rep.omega >= std::exp(1.0) * t;
  if (ell >= 1) {
    const T rhs = vals[ell - 1] * scalar_pow(vals[0], 1u << (ell - 1));
    if constexpr (std::is_same_v<T, Rational>) rep.coefficient_inequality = vals[ell] < rhs;
    else rep.coefficient_inequality = rep.values[ell] < to_double(rhs);
  }
  rep.contradiction = rep.hypothesis_fires && rep.chain_ok && rep.coefficient_inequality;

  for (int s = 1; s <= std::min(t, 1 << std::max(0, ell - 1)) && s <= 6; ++s)
    rep.audit.push_back(coefficient_audit(s, std::max(ell, 1), rep.omega));
  return rep;
}

struct RefutationVerdict {
  bool refuted = false;
  int t = 0;
  std::vector<int> witness;
  double threshold = 0.0;  // n / (e t)
  int k = 0;
  int degree = 0;
  std::vector<CoefficientAudit> audit;
};

// Certificate-style verdict: REFUTED iff k <= n/(e t) with t the exact maximum
// independent set size; requires degree >= 4t.
RefutationVerdict refute_coloring_existence(const Graph& g, int k, int degree,
                                            int mis_limit = 40);

}  // namespace sosw

#endif  // SOSW_REFUTATION_HPP
