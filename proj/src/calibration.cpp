#include "sosw/calibration.hpp"

#include <algorithm>

namespace sosw {

namespace {

// Character sum over edge subsets of C(W,2) that cover W, for one support W.
long char_sum_for_support(const Graph& g, const std::vector<int>& w) {
  const int t = static_cast<int>(w.size());
  if (t == 0) return 1;  // T = empty
  if (t == 1) return 0;  // a single vertex cannot be covered
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b) pairs.emplace_back(a, b);
  const int np = static_cast<int>(pairs.size());
  std::uint32_t neg_mask = 0;   // pairs that are non-edges of g
  std::vector<std::uint32_t> inc(t, 0);
  for (int p = 0; p < np; ++p) {
    if (!g.has_edge(w[pairs[p].first], w[pairs[p].second])) neg_mask |= 1u << p;
    inc[pairs[p].first] |= 1u << p;
    inc[pairs[p].second] |= 1u << p;
  }
  long sum = 0;
  const std::uint32_t total = 1u << np;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    bool covers = true;
    for (int v = 0; v < t && covers; ++v) covers = (mask & inc[v]) != 0;
    if (!covers) continue;
    sum += (__builtin_popcount(mask & neg_mask) & 1) ? -1 : 1;
  }
  return sum;
}

void supports_rec(const Graph& g, int cap, int from, std::vector<int>& cur, long& budget,
                  const std::function<void(const std::vector<int>&, long)>& fn) {
  if (static_cast<int>(cur.size()) >= 2) {
    const int t = static_cast<int>(cur.size());
    budget -= 1L << std::min(30, t * (t - 1) / 2);
    if (budget < 0) throw BudgetError("support enumeration exceeds budget");
    long e = char_sum_for_support(g, cur);
    if (e != 0) fn(cur, e);
  }
  if (static_cast<int>(cur.size()) == cap) return;
  for (int v = from; v <= g.n(); ++v) {
    cur.push_back(v);
    supports_rec(g, cap, v + 1, cur, budget, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_support_char_sum(const Graph& g, int cap, long enum_limit,
                               const std::function<void(const std::vector<int>&, long)>& fn) {
  fn({}, 1);
  if (cap < 2) return;
  std::vector<int> cur;
  long budget = enum_limit;
  supports_rec(g, cap, 1, cur, budget, fn);
}

CalibratedSingletons calibrated_singletons(const Graph& g, const CalibrationParams& params,
                                           TruncationRule rule, long enum_limit) {
  params.validate();
  const int n = g.n();
  const int tau = params.tau;
  // supports containing i may reach |W| = tau + 1 under the union rule
  const int cap = rule == TruncationRule::kStrict ? tau : tau + 1;
  const Graph h = complement(g);

  // acc_all[t]  = sum of E_W over |W| = t
  // acc_in[i][t] = sum of E_W over |W| = t with i in W
  std::vector<double> acc_all(cap + 1, 0.0);
  std::vector<std::vector<double>> acc_in(n + 1, std::vector<double>(cap + 1, 0.0));
  for_each_support_char_sum(h, cap, enum_limit,
                            [&](const std::vector<int>& w, long e) {
                              const int t = static_cast<int>(w.size());
                              acc_all[t] += e;
                              for (int v : w) acc_in[v][t] += e;
                            });

  const double ratio = params.omega / n;
  std::vector<double> pw(cap + 2, 1.0);
  for (std::size_t j = 1; j < pw.size(); ++j) pw[j] = pw[j - 1] * ratio;

  CalibratedSingletons out;
  for (int t = 0; t <= std::min(cap, tau); ++t) out.raw_one += pw[t] * acc_all[t];
  out.degenerate = !(out.raw_one > 0.0);
  out.raw_xi.assign(n, 0.0);
  for (int i = 1; i <= n; ++i) {
    double v = 0.0;
    // W containing i: exponent |W|; admitted while |W| <= tau + 1 (union) or tau (strict)
    const int cap_in = rule == TruncationRule::kStrict ? tau : tau + 1;
    for (int t = 2; t <= std::min(cap, cap_in); ++t) v += pw[t] * acc_in[i][t];
    // W avoiding i: exponent |W| + 1; admitted while |W| <= tau under both rules
    v += pw[1];  // T = empty contributes (omega/n)^1
    for (int t = 2; t <= std::min(cap, tau); ++t) v += pw[t + 1] * (acc_all[t] - acc_in[i][t]);
    out.raw_xi[i - 1] = v;
  }
  return out;
}

}  // namespace sosw
