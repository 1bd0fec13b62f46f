#ifndef SOSW_CALIBRATION_HPP
#define SOSW_CALIBRATION_HPP

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "sosw/graph.hpp"
#include "sosw/numeric.hpp"
#include "sosw/pseudo_expectation.hpp"

namespace sosw {

// +/-1 edge character: prod_{e in T} chi_e(g), chi_e = +1 iff e is an edge.
inline int chi(const Graph& g, const std::vector<std::pair<int, int>>& t) {
  int sign = 1;
  for (const auto& e : t) {
    if (e.first == e.second) throw std::invalid_argument("chi: self-loop in edge set");
    if (!g.has_edge(e.first, e.second)) sign = -sign;
  }
  return sign;
}

struct CalibrationParams {
  double omega = 0.0;  // planted size
  int tau = 0;         // shape-size truncation
  int d = 1;           // table degree
  double epsilon = 0.0;
  double C = 16.0;  // smallest constants compatible with the concentration proof
  double K = 32.0;

  void validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega))
      throw std::invalid_argument("calibration: omega must be positive and finite");
    if (tau < 0) throw std::invalid_argument("calibration: tau must be >= 0");
    if (d < 1) throw std::invalid_argument("calibration: d must be >= 1");
  }
};

// omega = n^{1/2 - eps}; tau and d follow the usual schedule in eps and C
// unless overridden.
inline CalibrationParams derive_calibration_params(int n, double epsilon, int tau = -1,
                                                   int d = -1) {
  CalibrationParams p;
  p.epsilon = epsilon;
  p.omega = std::pow(static_cast<double>(n), 0.5 - epsilon);
  double logn = std::log2(static_cast<double>(n));
  p.tau = tau >= 0 ? tau : std::max(2, static_cast<int>((epsilon / p.C) * logn));
  p.d = d >= 1 ? d : std::max(2, static_cast<int>((epsilon / p.C) * (epsilon / p.C) * logn));
  return p;
}

// Two conventions for truncating pE_G[x_S] at |S| >= 2; only the singleton
// case is canonically fixed (|V(T)| <= tau). Both are exposed.
enum class TruncationRule {
  kUnion,   // |V(T) cup S| <= tau + |S| (exact cancellation on non-cliques)
  kStrict,  // |V(T)| <= tau
};

inline const char* truncation_rule_name(TruncationRule r) {
  return r == TruncationRule::kUnion ? "union" : "strict";
}

inline TruncationRule parse_truncation_rule(const std::string& s) {
  if (s == "union") return TruncationRule::kUnion;
  if (s == "strict") return TruncationRule::kStrict;
  throw std::invalid_argument("unknown truncation rule: " + s);
}

struct CalibrationBudget {
  int n_limit = 16;
  int tau_limit = 5;
  int d_limit = 6;
  long enum_limit = 200'000'000;  // total (support, edge-subset) pairs
};

// Enumerates vertex supports W with 2 <= |W| <= cap (plus W = empty) and the
// aggregated character sum E_W = sum over edge subsets of C(W,2) covering W of
// chi_T(g). Every shape T is visited exactly once since V(T) = W is forced.
// E_W is an integer. Calls fn(W, E_W); fn(empty, 1) is emitted first.
void for_each_support_char_sum(const Graph& g, int cap, long enum_limit,
                               const std::function<void(const std::vector<int>&, long)>& fn);

template <typename T>
struct CalibratedPe {
  std::map<Monomial, T> raw;  // pE_G[x_S] before normalization
  T raw_one = scalar_from_long<T>(0);
  bool degenerate = false;  // pE_G[1] <= 0; reported, never patched
  bool forcing_noop = true; // non-independent entries were already exactly 0
  PseudoExpectation<T> normalized;
};

// Pseudo-calibrated independent-set pseudo-expectation for g. The Fourier sum
// runs over the clique structure of the complement graph, so entries vanish on
// non-independent sets of g (exactly, under the union rule).
template <typename T>
CalibratedPe<T> pe_calibrated(const Graph& g, const CalibrationParams& params,
                              TruncationRule rule = TruncationRule::kUnion,
                              const CalibrationBudget& budget = {}) {
  params.validate();
  const int n = g.n();
  if (n > budget.n_limit || params.tau > budget.tau_limit || params.d > budget.d_limit)
    throw BudgetError("pe_calibrated: n/tau/d outside configured budget");

  const int d = params.d;
  const int tau = params.tau;
  const int cap = rule == TruncationRule::kStrict ? tau : tau + d;

  const Graph h = complement(g);

  // gather (support, character-sum) pairs once
  std::vector<std::pair<std::vector<int>, long>> shapes;
  for_each_support_char_sum(
      h, cap, budget.enum_limit,
      [&shapes](const std::vector<int>& w, long e) { shapes.emplace_back(w, e); });

  const T ratio = [&] {
    if constexpr (std::is_same_v<T, Rational>) {
      return Rational(rational_from_double(params.omega) / n);
    } else {
      return params.omega / static_cast<double>(n);
    }
  }();
  std::vector<T> pow_ratio(cap + d + 1, scalar_from_long<T>(1));
  for (std::size_t j = 1; j < pow_ratio.size(); ++j) pow_ratio[j] = pow_ratio[j - 1] * ratio;

  CalibratedPe<T> out;
  auto targets = subsets_of_size_at_most(n, d);
  for (const auto& sverts : targets) {
    Monomial s(sverts);
    const int ssize = s.degree();
    T acc = scalar_from_long<T>(0);
    for (const auto& [w, ew] : shapes) {
      if (ew == 0) continue;
      const int wsize = static_cast<int>(w.size());
      if (rule == TruncationRule::kStrict && wsize > tau) continue;
      // |W cup S| by merge
      int uni = ssize;
      for (int v : w)
        if (!s.contains(v)) ++uni;
      if (rule == TruncationRule::kUnion && uni > tau + ssize) continue;
      acc += pow_ratio[uni] * scalar_from_long<T>(ew);
    }
    if (!scalar_is_zero(acc)) out.raw.emplace(std::move(s), acc);
  }

  auto it = out.raw.find(Monomial());
  out.raw_one = it == out.raw.end() ? scalar_from_long<T>(0) : it->second;
  if (scalar_sign(out.raw_one) <= 0) {
    out.degenerate = true;
    return out;
  }
  out.normalized = PseudoExpectation<T>(n, d);
  for (const auto& [m, v] : out.raw) {
    if (!monomial_independent(g, m)) {
      if (!scalar_is_zero(v)) out.forcing_noop = false;
      continue;  // forced to zero
    }
    out.normalized.set(m, v / out.raw_one);
  }
  return out;
}

struct CalibratedSingletons {
  double raw_one = 0.0;
  std::vector<double> raw_xi;  // pE_G[x_i], unnormalized, i = 1..n
  bool degenerate = false;
};

// Fast float-mode path computing only pE_G[1] and the singleton values; used
// by the concentration experiments at n beyond the full-table budget.
CalibratedSingletons calibrated_singletons(const Graph& g, const CalibrationParams& params,
                                           TruncationRule rule = TruncationRule::kUnion,
                                           long enum_limit = 200'000'000);

}  // namespace sosw

#endif  // SOSW_CALIBRATION_HPP
