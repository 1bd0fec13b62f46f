#include "sosw/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sosw {

void ShapeFamily::validate() const {
  if (t < 1) throw std::invalid_argument("shape family: t must be >= 1");
  if (static_cast<int>(anchor.size()) > t)
    throw std::invalid_argument("shape family: more anchors than template vertices");
  std::vector<bool> covered(t + 1, false);
  for (const auto& e : template_edges) {
    if (e.first < 1 || e.second < 1 || e.first > t || e.second > t || e.first == e.second)
      throw std::invalid_argument("shape family: bad template edge");
    covered[e.first] = covered[e.second] = true;
  }
  for (int v = 1; v <= t; ++v)
    if (!covered[v]) throw std::invalid_argument("shape family: template leaves a vertex isolated");
}

namespace {

void injections_rec(int t, int n, std::vector<int>& image, long budget,
                    const std::function<void(const std::vector<int>&)>& fn,
                    std::vector<bool>& used, long& count) {
  const int pos = static_cast<int>(image.size());
  if (pos == t) {
    if (++count > budget) throw BudgetError("shape family enumeration exceeds budget");
    fn(image);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    used[v] = true;
    image.push_back(v);
    injections_rec(t, n, image, budget, fn, used, count);
    image.pop_back();
    used[v] = false;
  }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> family_members(const ShapeFamily& fam, int n,
                                                             long budget) {
  fam.validate();
  for (int a : fam.anchor)
    if (a < 1 || a > n) throw std::invalid_argument("shape family: anchor outside [1,n]");
  std::set<std::vector<std::pair<int, int>>> dedup;
  std::vector<bool> used(n + 1, false);
  std::vector<int> image;
  for (int a : fam.anchor) {
    if (used[a]) throw std::invalid_argument("shape family: repeated anchor");
    used[a] = true;
    image.push_back(a);
  }
  long count = 0;
  injections_rec(fam.t, n, image, budget,
                 [&](const std::vector<int>& img) {
                   std::vector<std::pair<int, int>> edges;
                   edges.reserve(fam.template_edges.size());
                   for (const auto& e : fam.template_edges) {
                     int a = img[e.first - 1], b = img[e.second - 1];
                     edges.emplace_back(std::min(a, b), std::max(a, b));
                   }
                   std::sort(edges.begin(), edges.end());
                   dedup.insert(std::move(edges));
                 },
                 used, count);
  return {dedup.begin(), dedup.end()};
}

namespace {

int pair_index(int i, int j, int n) {  // lex position of {i,j}, i < j, 0-based
  return (i - 1) * n - (i * (i - 1)) / 2 + (j - i - 1);
}

std::vector<std::uint64_t> member_masks(
    const std::vector<std::vector<std::pair<int, int>>>& members, int n) {
  if (n * (n - 1) / 2 > 62) throw BudgetError("edge mask exceeds 62 bits");
  std::vector<std::uint64_t> masks;
  masks.reserve(members.size());
  for (const auto& m : members) {
    std::uint64_t mask = 0;
    for (const auto& e : m) mask |= 1ULL << pair_index(e.first, e.second, n);
    masks.push_back(mask);
  }
  return masks;
}

double moment_bound(const ShapeFamily& fam, int n, int ell) {
  const double tl = static_cast<double>(fam.t) * ell;
  return std::pow(static_cast<double>(n),
                  (fam.t - static_cast<double>(fam.anchor.size())) * ell / 2.0) *
         std::pow(tl, tl);
}

}  // namespace

MomentResult chi_sum_moment_exact(const ShapeFamily& fam, int n, int ell) {
  if (n > 8 || fam.t > 3 || !(ell == 0 || ell == 2 || ell == 4))
    throw std::invalid_argument("exact moment mode limited to n <= 8, t <= 3, ell in {2,4}");
  auto members = family_members(fam, n);
  MomentResult out;
  out.family_size = static_cast<long>(members.size());
  out.method = "pairing";
  out.bound = moment_bound(fam, n, ell);
  if (ell == 0) {
    out.moment = 1.0;
  } else if (ell == 2) {
    // only T1 = T2 pairs survive
    out.moment = static_cast<double>(members.size());
  } else {
    auto masks = member_masks(members, n);
    std::unordered_map<std::uint64_t, long> xor_count;
    xor_count.reserve(masks.size() * masks.size());
    for (auto a : masks)
      for (auto b : masks) ++xor_count[a ^ b];
    double total = 0.0;
    for (const auto& [x, c] : xor_count) total += static_cast<double>(c) * c;
    out.moment = total;
  }
  out.within_bound = out.moment <= out.bound;
  return out;
}

MomentResult chi_sum_moment_enumerate(const ShapeFamily& fam, int n, int ell) {
  if (n > 5) throw std::invalid_argument("graph enumeration limited to n <= 5");
  if (ell % 2 != 0 || ell > 4) throw std::invalid_argument("enumeration supports even ell <= 4");
  auto members = family_members(fam, n);
  auto masks = member_masks(members, n);
  const int m = n * (n - 1) / 2;
  long long total = 0;
  for (std::uint64_t graph = 0; graph < (1ULL << m); ++graph) {
    long long s = 0;
    for (auto mem : masks)
      s += (__builtin_popcountll(mem & ~graph) & 1) ? -1 : 1;
    long long term = 1;
    for (int j = 0; j < ell; ++j) term *= s;
    total += term;
  }
  MomentResult out;
  out.family_size = static_cast<long>(members.size());
  out.method = "enumeration";
  out.bound = moment_bound(fam, n, ell);
  out.moment = static_cast<double>(total) / std::pow(2.0, m);
  out.within_bound = out.moment <= out.bound;
  return out;
}

MomentResult chi_sum_moment_montecarlo(const ShapeFamily& fam, int n, int ell, long trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("montecarlo needs trials >= 1");
  auto members = family_members(fam, n);
  MomentResult out;
  out.family_size = static_cast<long>(members.size());
  out.method = "montecarlo";
  out.trials = trials;
  out.bound = moment_bound(fam, n, ell);
  double sum = 0.0, sumsq = 0.0;
  for (long t = 0; t < trials; ++t) {
    Graph g = gen_gnp(n, 0.5, mix_seed(seed, static_cast<std::uint64_t>(t)));
    double s = 0.0;
    for (const auto& mem : members) s += chi(g, mem);
    double v = std::pow(std::abs(s), ell);
    sum += v;
    sumsq += v * v;
  }
  out.moment = sum / trials;
  double var = std::max(0.0, sumsq / trials - out.moment * out.moment);
  out.std_error = std::sqrt(var / trials);
  out.within_bound = out.moment <= out.bound;
  return out;
}

MomentResult chi_sum_moment(const ShapeFamily& fam, int n, int ell, MomentMode mode,
                            long trials, std::uint64_t seed) {
  if (mode == MomentMode::kExact) return chi_sum_moment_exact(fam, n, ell);
  return chi_sum_moment_montecarlo(fam, n, ell, trials, seed);
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  double idx = q * (sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(idx);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = idx - lo;
  return sorted[lo] * (1 - frac) + sorted[hi] * frac;
}

}  // namespace

std::vector<XiRow> xi_concentration(const std::vector<int>& ns, double epsilon, long trials,
                                    std::uint64_t seed, int tau, TruncationRule rule) {
  std::vector<XiRow> rows;
  for (int n : ns) {
    CalibrationParams params;
    params.epsilon = epsilon;
    params.omega = std::pow(static_cast<double>(n), 0.5 - epsilon);
    params.tau = tau;
    params.d = 1;
    XiRow row;
    row.n = n;
    row.trials = trials;
    row.omega = params.omega;
    row.tau = tau;
    row.epsilon = epsilon;
    row.rule = truncation_rule_name(rule);
    std::vector<double> devs;
    devs.reserve(static_cast<std::size_t>(trials) * n);
    const double scale = n / params.omega;
    for (long t = 0; t < trials; ++t) {
      Graph g = gen_gnp(n, 0.5, mix_seed(seed, static_cast<std::uint64_t>(t)));
      auto singles = calibrated_singletons(g, params, rule);
      if (singles.degenerate) {
        ++row.degenerate;
        continue;
      }
      for (double v : singles.raw_xi) devs.push_back(std::abs(v * scale - 1.0));
    }
    std::sort(devs.begin(), devs.end());
    row.samples = static_cast<long>(devs.size());
    row.median = quantile_sorted(devs, 0.5);
    row.q25 = quantile_sorted(devs, 0.25);
    row.q75 = quantile_sorted(devs, 0.75);
    row.mean = devs.empty() ? 0.0
                            : std::accumulate(devs.begin(), devs.end(), 0.0) / devs.size();
    row.max_dev = devs.empty() ? 0.0 : devs.back();
    // order-statistic CI for the median at ~95% (normal approximation of the
    // binomial rank; conservative enough for a soft trend report)
    if (!devs.empty()) {
      double m = static_cast<double>(devs.size());
      double half = 1.959964 * std::sqrt(m) / 2.0;
      std::size_t lo = static_cast<std::size_t>(std::max(0.0, m / 2.0 - half));
      std::size_t hi = static_cast<std::size_t>(std::min(m - 1.0, m / 2.0 + half));
      row.median_ci_lo = devs[lo];
      row.median_ci_hi = devs[hi];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string xi_csv(const std::vector<XiRow>& rows) {
  std::ostringstream os;
  os << "n,trials,samples,omega,tau,epsilon,rule,median,q25,q75,mean,median_ci_lo,"
        "median_ci_hi,max_dev,degenerate\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.trials << ',' << r.samples << ',' << format_double(r.omega) << ','
       << r.tau << ',' << format_double(r.epsilon) << ',' << r.rule << ','
       << format_double(r.median) << ',' << format_double(r.q25) << ',' << format_double(r.q75)
       << ',' << format_double(r.mean) << ',' << format_double(r.median_ci_lo) << ','
       << format_double(r.median_ci_hi) << ',' << format_double(r.max_dev) << ','
       << r.degenerate << '\n';
  }
  return os.str();
}

SurveyResult pipeline_survey(int n, double epsilon, long trials, std::uint64_t seed, double c_k,
                             int d, int tau, TruncationRule rule, bool control_arm) {
  SurveyResult result;
  result.trials = trials;
  long cal_built = 0, cal_cov = 0, cal_red = 0, ctl_cov = 0, ctl_red = 0;
  for (long t = 0; t < trials; ++t) {
    const std::uint64_t gseed = mix_seed(seed, static_cast<std::uint64_t>(t));
    Graph g = gen_gnp(n, 0.5, gseed);

    CalibrationParams params;
    params.epsilon = epsilon;
    params.omega = std::pow(static_cast<double>(n), 0.5 - epsilon);
    params.tau = tau;
    params.d = d;

    SurveyRow row;
    row.trial = t;
    row.graph_seed = gseed;
    row.arm = "calibrated";
    auto cal = pe_calibrated<double>(g, params, rule);
    row.built = !cal.degenerate;
    if (row.built) {
      ++cal_built;
      ReductionOptions opts;
      opts.c_k = c_k;
      auto rep = run_reduction(g, cal.normalized, opts);
      row.covering_pass = rep.covering.passed;
      row.lambda = rep.covering.lambda;
      row.k0 = rep.covering.k0;
      row.min_xi = rep.covering.min_xi;
      if (rep.covering.passed) {
        ++cal_cov;
        row.k = rep.kinfo.k;
        row.reduction_pass = rep.passed;
        if (rep.passed) ++cal_red;
      }
    }
    result.rows.push_back(row);

    if (control_arm) {
      SurveyRow ctl;
      ctl.trial = t;
      ctl.graph_seed = gseed;
      ctl.arm = "distribution";
      ctl.built = true;
      auto pe = uniform_independent_set_pe<double>(g, d);
      ReductionOptions opts;
      opts.c_k = c_k;
      auto rep = run_reduction(g, pe, opts);
      ctl.covering_pass = rep.covering.passed;
      ctl.lambda = rep.covering.lambda;
      ctl.k0 = rep.covering.k0;
      ctl.min_xi = rep.covering.min_xi;
      if (rep.covering.passed) {
        ++ctl_cov;
        ctl.k = rep.kinfo.k;
        ctl.reduction_pass = rep.passed;
        if (rep.passed) ++ctl_red;
      }
      result.rows.push_back(ctl);
    }
  }
  if (trials > 0) {
    result.calibrated_built_rate = static_cast<double>(cal_built) / trials;
    result.calibrated_covering_rate = static_cast<double>(cal_cov) / trials;
    result.calibrated_reduction_rate = static_cast<double>(cal_red) / trials;
    result.control_covering_rate = static_cast<double>(ctl_cov) / trials;
    result.control_reduction_rate = static_cast<double>(ctl_red) / trials;
  }
  return result;
}

std::string survey_csv(const SurveyResult& result) {
  std::ostringstream os;
  os << "trial,graph_seed,arm,built,covering_pass,lambda,k0,min_xi,k,reduction_pass\n";
  for (const auto& r : result.rows) {
    os << r.trial << ',' << r.graph_seed << ',' << r.arm << ',' << r.built << ','
       << r.covering_pass << ',' << format_double(r.lambda) << ',' << r.k0 << ','
       << format_double(r.min_xi) << ',' << r.k << ',' << r.reduction_pass << '\n';
  }
  return os.str();
}

}  // namespace sosw
