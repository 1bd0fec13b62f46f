#ifndef SOSW_EXPERIMENTS_HPP
#define SOSW_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sosw/calibration.hpp"
#include "sosw/coloring.hpp"
#include "sosw/graph.hpp"

namespace sosw {

// A family of edge-set shapes: all injective relabelings of a template on
// [1,t] into [n] that fix the anchored vertices pointwise. Every member has
// |V(T)| = t, so the template must cover [1,t].
struct ShapeFamily {
  int t = 0;
  std::vector<int> anchor;  // template positions 1..|anchor| map to these vertices
  std::vector<std::pair<int, int>> template_edges;  // on vertices 1..t

  void validate() const;
};

inline ShapeFamily single_edge_family() { return {2, {}, {{1, 2}}}; }
inline ShapeFamily single_edge_family_at(int vertex) { return {2, {vertex}, {{1, 2}}}; }

// Distinct members as edge sets; deduplicated (template automorphisms can
// map different injections to the same set).
std::vector<std::vector<std::pair<int, int>>> family_members(const ShapeFamily& fam, int n,
                                                             long budget = 5'000'000);

enum class MomentMode { kExact, kMonteCarlo };

struct MomentResult {
  double moment = 0.0;  // E |sum_T chi_T|^ell over G(n,1/2)
  double bound = 0.0;   // n^{(t-|S|) ell/2} (t ell)^{t ell}
  bool within_bound = false;
  long family_size = 0;
  std::string method;  // "pairing", "enumeration", "montecarlo"
  double std_error = 0.0;  // Monte Carlo only
  long trials = 0;
};

// Exact moments by the XOR-pairing identity: E prod chi_{T_i} = 1 iff the
// edge multiset cancels. ell = 2 counts equal pairs; ell = 4 is meet-in-the-
// middle over pair XORs. Exact mode is limited to n <= 8, t <= 3, ell in {2,4}.
MomentResult chi_sum_moment_exact(const ShapeFamily& fam, int n, int ell);

// Independent exact route: full enumeration of all 2^{C(n,2)} graphs (n <= 5).
MomentResult chi_sum_moment_enumerate(const ShapeFamily& fam, int n, int ell);

MomentResult chi_sum_moment_montecarlo(const ShapeFamily& fam, int n, int ell, long trials,
                                       std::uint64_t seed);

MomentResult chi_sum_moment(const ShapeFamily& fam, int n, int ell, MomentMode mode,
                            long trials = 0, std::uint64_t seed = 0);

struct XiRow {
  int n = 0;
  long trials = 0;
  long samples = 0;  // (graph, vertex) pairs
  double omega = 0.0;
  int tau = 0;
  double epsilon = 0.0;
  std::string rule;
  double median = 0.0;  // of |pE_G[x_i] n/omega - 1|
  double q25 = 0.0;
  double q75 = 0.0;
  double mean = 0.0;
  double median_ci_lo = 0.0;  // bootstrap-free binomial CI on the median
  double median_ci_hi = 0.0;
  double max_dev = 0.0;
  long degenerate = 0;
};

std::vector<XiRow> xi_concentration(const std::vector<int>& ns, double epsilon, long trials,
                                    std::uint64_t seed, int tau,
                                    TruncationRule rule = TruncationRule::kUnion);

std::string xi_csv(const std::vector<XiRow>& rows);

struct SurveyRow {
  long trial = 0;
  std::uint64_t graph_seed = 0;
  std::string arm;  // "calibrated" or "distribution"
  bool built = false;       // pe constructed (calibrated: not degenerate)
  bool covering_pass = false;
  double lambda = 0.0;
  long k0 = 0;
  double min_xi = 0.0;
  long k = 0;
  bool reduction_pass = false;
};

struct SurveyResult {
  std::vector<SurveyRow> rows;
  long trials = 0;
  double calibrated_built_rate = 0.0;
  double calibrated_covering_rate = 0.0;
  double calibrated_reduction_rate = 0.0;
  double control_covering_rate = 0.0;
  double control_reduction_rate = 0.0;
};

// End-to-end survey over G(n,1/2) samples: pseudo-calibrated arm plus a
// distribution-PE control arm; per-sample failures are data, not errors.
SurveyResult pipeline_survey(int n, double epsilon, long trials, std::uint64_t seed,
                             double c_k = 1.0, int d = 2, int tau = 2,
                             TruncationRule rule = TruncationRule::kUnion,
                             bool control_arm = true);

std::string survey_csv(const SurveyResult& result);

}  // namespace sosw

#endif  // SOSW_EXPERIMENTS_HPP
