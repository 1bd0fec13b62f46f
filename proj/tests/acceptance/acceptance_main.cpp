// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "sosw/experiments.hpp"
#include "sosw/refutation.hpp"
#include "sosw/report_json.hpp"

using namespace sosw;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

// deduplicated sweep family: empty, complete, path, cycle, two G(n,1/2) draws
std::vector<Graph> graph_family(int n) {
  std::vector<Graph> out;
  auto add = [&out](Graph g) {
    for (const auto& h : out)
      if (h == g) return;
    out.push_back(std::move(g));
  };
  add(Graph(n));
  std::vector<std::pair<int, int>> full;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) full.emplace_back(i, j);
  add(Graph(n, full));
  if (n >= 2) {
    std::vector<std::pair<int, int>> path;
    for (int i = 1; i < n; ++i) path.emplace_back(i, i + 1);
    add(Graph(n, path));
  }
  if (n >= 3) {
    std::vector<std::pair<int, int>> cyc;
    for (int i = 1; i < n; ++i) cyc.emplace_back(i, i + 1);
    cyc.emplace_back(1, n);
    add(Graph(n, cyc));
  }
  add(gen_gnp(n, 0.5, 101 + static_cast<std::uint64_t>(n)));
  add(gen_gnp(n, 0.5, 202 + static_cast<std::uint64_t>(n)));
  return out;
}

// ---------------------------------------------------------------------------
// 1. coloring reduction pipeline on ground truth (uniform distribution PEs, d = 4)

Outcome criterion1() {
  long graphs = 0, kmax = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : graph_family(n)) {
      auto pe = uniform_independent_set_pe<Rational>(g, 4);
      auto rep = run_reduction(g, pe);
      ++graphs;
      kmax = std::max(kmax, rep.kinfo.k);
      if (!rep.covering.passed)
        return {false, "covering certificate failed at n=" + std::to_string(n)};
      if (!rep.booleanity.passed || rep.booleanity.max_residual != 0.0)
        return {false, "booleanity residual nonzero at n=" + std::to_string(n)};
      if (!rep.edges.passed || rep.edges.max_residual != 0.0)
        return {false, "edge residual nonzero at n=" + std::to_string(n)};
      if (!rep.positivity.is_psd || !rep.positivity.exact)
        return {false, "positivity failed exactly at n=" + std::to_string(n)};
      if (rep.positivity.min_eig < -1e-9)
        return {false, "positivity min_eig below -1e-9 at n=" + std::to_string(n)};
      if (rep.sums.half_degree != 1 && n > 1)
        return {false, "sum constraints not at half_degree 1"};
      if (!rep.sums.passed || rep.sums.min_eig < -1e-9)
        return {false, "sum constraint failed at n=" + std::to_string(n)};
      if (!rep.passed) return {false, "reduction bundle failed at n=" + std::to_string(n)};
    }
  }
  return {true, std::to_string(graphs) + " graphs, exact-rational verdicts, max k = " +
                    std::to_string(kmax)};
}

// ---------------------------------------------------------------------------
// 2. tensor oracle equivalence: tensor_eval vs explicit product-measure sums

Rational oracle_tensor(const std::map<Monomial, Rational>& weights, const ColorMonomial& m) {
  Rational acc(1);
  for (const auto& [c, part] : m.parts) {
    Rational marg(0);
    for (const auto& [supp, w] : weights)
      if (part.subset_of(supp)) marg += w;
    acc *= marg;
  }
  return acc;
}

Outcome criterion2() {
  long checked = 0;
  auto run_graph = [&checked](const Graph& g) -> bool {
    auto sets = enumerate_independent_sets(g, g.n());
    std::map<Monomial, Rational> weights;
    for (auto& s : sets)
      weights.emplace(Monomial(std::move(s)), Rational(1, static_cast<long>(sets.size())));
    auto pe = pe_from_distribution<Rational>(g, 4, weights);
    // every ColorMonomial with per-class size <= 4 (cdeg <= 4), k <= 3
    std::vector<Monomial> classes;
    for (auto& s : subsets_of_size_at_most(g.n(), 4)) classes.emplace_back(std::move(s));
    for (int k = 1; k <= 3; ++k) {
      std::vector<ColorMonomial> frontier{ColorMonomial()};
      for (int c = 1; c <= k; ++c) {
        std::vector<ColorMonomial> next;
        next.reserve(frontier.size() * classes.size());
        for (const auto& base : frontier)
          for (const auto& cls : classes) {
            ColorMonomial m = base;
            m.set_part(c, cls);
            next.push_back(std::move(m));
          }
        frontier = std::move(next);
      }
      for (const auto& m : frontier) {
        ++checked;
        if (tensor_value(pe, m) != oracle_tensor(weights, m)) return false;
      }
    }
    return true;
  };
  for (int n = 1; n <= 4; ++n) {
    // exhaustive over all graphs on n labeled vertices
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask & (1ULL << b)) edges.push_back(pairs[b]);
      if (!run_graph(Graph(n, std::move(edges))))
        return {false, "mismatch on an n=" + std::to_string(n) + " graph"};
    }
  }
  for (const auto& g : graph_family(5))
    if (!run_graph(g)) return {false, "mismatch on an n=5 graph"};
  return {true, std::to_string(checked) + " color monomials, exact match (all graphs n<=4 + family n=5)"};
}

// ---------------------------------------------------------------------------
// 3. h_i identity and the k e^{-k/k0} tail bound

Outcome criterion3() {
  long identity_ok = 0, identity_total = 0;
  long bound_ok = 0, bound_total = 0;
  std::ostringstream failures;
  for (long num : {0L, 1L, 2L, 4L, 8L}) {
    Rational p = scalar_ratio<Rational>(num, 8);
    std::map<Monomial, Rational> w{{Monomial(), Rational(1) - p}, {Monomial({1}), p}};
    auto pe = pe_from_distribution<Rational>(Graph(1), 2, w);
    for (int k = 1; k <= 12; ++k) {
      ColoringPE<Rational> cpe(pe, k);
      auto r = h_expectation(cpe, 1);
      ++identity_total;
      if (r.brute_checked && r.brute_matches) ++identity_ok;
      if (r.bound_applicable) {
        ++bound_total;
        if (r.bound_holds) ++bound_ok;
        else failures << " k=" << k << ",p=" << num << "/8 (" << r.value << " > " << r.bound
                      << ")";
      }
    }
  }
  std::ostringstream detail;
  detail << "identity exact " << identity_ok << "/" << identity_total << "; tail bound "
         << bound_ok << "/" << bound_total;
  if (bound_ok != bound_total || identity_ok != identity_total) {
    detail << "; bound violations:" << failures.str()
           << " [claimed tail bound is unattainable at small k; kept as an honest check, see README]";
    return {false, detail.str()};
  }
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 4. indicator lemma numerically

Outcome criterion4() {
  long cases = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : graph_family(n)) {
      auto pe = uniform_independent_set_pe<Rational>(g, 4);
      for (int k : {2, 3, 4}) {
        ColoringPE<Rational> cpe(pe, k);
        std::vector<ColorPolynomial<Rational>> fs;
        fs.push_back(ColorPolynomial<Rational>::constant(n, k, Rational(1)));
        for (int j = 1; j <= n; ++j) fs.push_back(ColorPolynomial<Rational>::var(n, k, j, 1));
        if (n >= 2)
          fs.push_back(ColorPolynomial<Rational>::var(n, k, 1, 1) -
                       ColorPolynomial<Rational>::var(n, k, 2, 2).scaled(Rational(2)));
        for (int i = 1; i <= n; ++i) {
          auto rep = check_indicator_lemma(cpe, i, fs);
          cases += rep.cases;
          if (!rep.passed)
            return {false, "negative value at n=" + std::to_string(n) + ", k=" + std::to_string(k)};
          if (!rep.base_identity_zero) return {false, "k=2 base identity not exactly zero"};
          if (k == 2 && std::abs(rep.min_value) > 0.0)
            return {false, "k=2 expressions not exactly zero"};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " (f,i,k,graph) cases, exact nonnegativity"};
}

// ---------------------------------------------------------------------------
// 5. hypercontractivity chain, 200 random projected f

Outcome criterion5() {
  long trials_done = 0, violations = 0;
  double worst_l1 = 1.0;
  std::uint64_t seed = 900;
  for (int n = 4; n <= 6; ++n) {
    for (const auto& g : graph_family(n)) {
      auto pe = uniform_independent_set_pe<double>(g, 4);
      ColoringPE<double> cpe(pe, 2);
      auto rep = check_hypercontractivity(cpe, g, 14, seed++, 1e-8);
      trials_done += rep.trials;
      violations += rep.violations;
      worst_l1 = std::min(worst_l1, rep.lambda1);
      if (rep.lambda1 <= 0.0) return {false, "lambda1 not positive at n=" + std::to_string(n)};
    }
    if (trials_done >= 200 && n == 6) break;
  }
  if (trials_done < 200) return {false, "only " + std::to_string(trials_done) + " trials"};
  if (violations > 0)
    return {false, std::to_string(violations) + " chain violations in " +
                       std::to_string(trials_done) + " trials"};
  return {true, std::to_string(trials_done) + " trials, 0 violations, min lambda1 = " +
                    format_double(worst_l1)};
}

// ---------------------------------------------------------------------------
// 6. primed-basis spectral facts

Outcome criterion6() {
  long pes = 0;
  for (int n = 2; n <= 8; ++n) {
    std::vector<std::pair<PseudoExpectation<Rational>, Graph>> tests;
    for (const auto& g : graph_family(n))
      tests.emplace_back(uniform_independent_set_pe<Rational>(g, 4), g);
    // two calibrated PEs per n as additional test tables
    for (std::uint64_t seed : {7u, 9u}) {
      Graph g = gen_gnp(n, 0.5, seed);
      CalibrationParams params;
      params.omega = std::pow(n, 0.35);
      params.tau = 2;
      params.d = 2;
      auto cal = pe_calibrated<Rational>(g, params);
      if (!cal.degenerate) tests.emplace_back(cal.normalized, g);
    }
    for (auto& [pe, g] : tests) {
      ++pes;
      auto m = build_moment_matrix(pe, pe.d / 2);
      auto mp = to_primed_basis(m, pe);
      // e_empty is an eigenvalue-1 eigenvector of M' (exact zeros off the corner)
      if (!(mp.entries.at(0, 0) == Rational(1))) return {false, "primed corner != 1"};
      for (std::size_t j = 1; j < mp.index.size(); ++j)
        if (std::abs(to_double(mp.entries.at(0, j))) > 1e-12 ||
            std::abs(to_double(mp.entries.at(j, 0))) > 1e-12)
          return {false, "primed empty row not zero"};
      // non-independent rows of M vanish exactly
      for (std::size_t i = 0; i < m.index.size(); ++i) {
        if (monomial_independent(g, m.index[i])) continue;
        for (std::size_t j = 0; j < m.index.size(); ++j)
          if (!scalar_is_zero(m.entries.at(i, j)))
            return {false, "non-independent row has a nonzero entry"};
      }
      // covering lambda vs dense eigensolve of the projected full matrix
      auto cert = covering_certificate(pe, g);
      auto sub = independent_submatrix(m, g);
      auto sub_ev = sym_eigenvalues(to_eigen(sub));
      if (std::abs(cert.lambda - sub_ev.front()) > 1e-9)
        return {false, "lambda != submatrix min eigenvalue"};
      Matrix<double> proj(m.index.size());
      for (std::size_t i = 0; i < m.index.size(); ++i)
        for (std::size_t j = 0; j < m.index.size(); ++j) {
          bool keep = monomial_independent(g, m.index[i]) && monomial_independent(g, m.index[j]);
          proj.at(i, j) = keep ? to_double(m.entries.at(i, j)) : 0.0;
        }
      auto proj_ev = sym_eigenvalues(to_eigen(proj));
      std::vector<double> expect(sub_ev);
      for (std::size_t z = 0; z + sub_ev.size() < m.index.size() + 0; ++z) expect.push_back(0.0);
      std::sort(expect.begin(), expect.end());
      if (proj_ev.size() != expect.size()) return {false, "projected spectrum size mismatch"};
      for (std::size_t i = 0; i < expect.size(); ++i)
        if (std::abs(proj_ev[i] - expect[i]) > 1e-8)
          return {false, "projected spectrum differs from submatrix spectrum + zeros"};
    }
  }
  return {true, std::to_string(pes) + " test PEs (uniform d=4 + calibrated d=2)"};
}

// ---------------------------------------------------------------------------
// 7. pseudo-calibration oracle (full T enumeration, both rules)

struct TGroups {
  std::map<std::uint32_t, long> sum;
};

void oracle_rec(const Graph& h, const std::vector<std::pair<int, int>>& pairs, std::size_t idx,
                std::uint32_t vmask, int sign, int vcap, TGroups& out) {
  if (idx == pairs.size()) {
    out.sum[vmask] += sign;
    return;
  }
  oracle_rec(h, pairs, idx + 1, vmask, sign, vcap, out);
  const auto& e = pairs[idx];
  std::uint32_t with = vmask | (1u << (e.first - 1)) | (1u << (e.second - 1));
  if (__builtin_popcount(with) > vcap) return;
  oracle_rec(h, pairs, idx + 1, with, h.has_edge(e.first, e.second) ? sign : -sign, vcap, out);
}

Outcome criterion7() {
  long entries = 0;
  for (int n = 2; n <= 8; ++n) {
    for (std::uint64_t seed : {3u, 11u}) {
      Graph g = gen_gnp(n, 0.5, seed);
      Graph h = complement(g);
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
      for (int tau : {0, 2, 3}) {
        const int d = 3;
        CalibrationParams params;
        params.omega = std::sqrt(static_cast<double>(n));
        params.tau = tau;
        params.d = d;
        Rational ratio = rational_from_double(params.omega) / n;
        std::vector<Rational> pw(tau + d + 2, Rational(1));
        for (std::size_t j = 1; j < pw.size(); ++j) pw[j] = pw[j - 1] * ratio;
        TGroups groups;
        oracle_rec(h, pairs, 0, 0, 1, tau + d, groups);
        for (auto rule : {TruncationRule::kUnion, TruncationRule::kStrict}) {
          auto cal = pe_calibrated<Rational>(g, params, rule);
          for (const auto& sv : subsets_of_size_at_most(n, d)) {
            Monomial s(sv);
            std::uint32_t smask = 0;
            for (int v : s.vars) smask |= 1u << (v - 1);
            Rational expect(0);
            for (const auto& [vmask, cnt] : groups.sum) {
              if (cnt == 0) continue;
              int t = __builtin_popcount(vmask);
              int u = __builtin_popcount(vmask | smask);
              if (rule == TruncationRule::kStrict && t > tau) continue;
              if (rule == TruncationRule::kUnion && u > tau + s.degree()) continue;
              expect += pw[u] * cnt;
            }
            Rational got(0);
            if (auto it = cal.raw.find(s); it != cal.raw.end()) got = it->second;
            ++entries;
            if (got != expect)
              return {false, "raw table mismatch at n=" + std::to_string(n) +
                                 " tau=" + std::to_string(tau)};
          }
          // T = empty contributes omega/n to pE_G[x_i]; at strict tau=0 that
          // is the entire value
          if (tau == 0 && rule == TruncationRule::kStrict) {
            for (int i = 1; i <= n; ++i) {
              if (cal.raw.at(Monomial({i})) != ratio)
                return {false, "T=empty contribution differs from omega/n"};
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(entries) + " table entries, exact match under both rules"};
}

// ---------------------------------------------------------------------------
// 8. exact chi-sum moments and the concentration bound

Outcome criterion8() {
  long configs = 0;
  for (int n = 4; n <= 8; ++n) {
    for (bool anchored : {false, true}) {
      ShapeFamily fam = anchored ? single_edge_family_at(1) : single_edge_family();
      for (int ell : {2, 4}) {
        auto ex = chi_sum_moment_exact(fam, n, ell);
        ++configs;
        if (!ex.within_bound)
          return {false, "moment exceeds the bound at n=" + std::to_string(n)};
        if (n <= 5) {
          auto en = chi_sum_moment_enumerate(fam, n, ell);
          if (std::abs(ex.moment - en.moment) > 1e-9)
            return {false, "pairing vs enumeration mismatch at n=" + std::to_string(n)};
        }
      }
    }
  }
  return {true, std::to_string(configs) + " (family, ell, n) configs; dual routes agree at n<=5"};
}

// ---------------------------------------------------------------------------
// 9. coefficient audit, power chain, refutation verdicts

Outcome criterion9() {
  long audits = 0;
  for (int ell = 1; ell <= 3; ++ell)
    for (int s = 1; s <= std::min(6, 1 << (ell - 1)); ++s) {
      auto a = coefficient_audit(s, ell, std::exp(1.0) * s);
      ++audits;
      if (!a.lower_bound_ok || !a.upper_bound_ok)
        return {false, "coefficient bound fails at s=" + std::to_string(s) +
                           ", ell=" + std::to_string(ell)};
    }
  long chains = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const auto& g : graph_family(n)) {
      auto pe = uniform_independent_set_pe<Rational>(g, n);
      auto rep = power_chain_refute(pe, g);
      ++chains;
      if (!rep.chain_ok) return {false, "CS chain step failed on a distribution PE"};
      if (rep.hypothesis_fires)
        return {false, "omega >= e t fired for a distribution PE"};
    }
  }
  // K8 with k=2 is refuted; colorable pairs never are (exact search, n <= 10)
  std::vector<std::pair<int, int>> full;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) full.emplace_back(i, j);
  if (!refute_coloring_existence(Graph(8, full), 2, 4).refuted)
    return {false, "K8 with k=2 not refuted"};
  long pairs_checked = 0;
  for (int n : {4, 6, 8, 10}) {
    for (const auto& g : graph_family(n)) {
      int t = max_independent_set(g).size;
      for (int k = 1; k <= 5; ++k) {
        auto verdict = refute_coloring_existence(g, k, 4 * t);
        ++pairs_checked;
        if (verdict.refuted && is_k_colorable(g, k))
          return {false, "refuted a genuinely colorable pair"};
      }
    }
  }
  return {true, std::to_string(audits) + " audits, " + std::to_string(chains) +
                    " chains, " + std::to_string(pairs_checked) + " (g,k) verdicts"};
}

// ---------------------------------------------------------------------------
// 10. xi concentration trend (measured, soft) + artifacts

Outcome criterion10(const std::filesystem::path& artifacts, bool exact_cross_checks_ok) {
  auto rows = xi_concentration({32, 64, 128}, 0.3, 200, 1, 2);
  std::filesystem::create_directories(artifacts);
  atomic_write_text((artifacts / "xi_trend.csv").string(), xi_csv(rows));
  Json jrows = Json::array();
  for (const auto& r : rows) jrows.push_back(to_json(r));
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].median > rows[i - 1].median) monotone = false;
  Json results{{"rows", jrows}, {"median_monotone_decreasing", monotone}};
  write_report((artifacts / "xi_trend.json").string(),
               make_report("experiment-xi", Json{{"n_list", {32, 64, 128}},
                                                 {"tau", 2},
                                                 {"epsilon", 0.3},
                                                 {"trials", 200},
                                                 {"seed", 1}},
                           results));
  std::ostringstream detail;
  detail << "medians " << format_double(rows[0].median) << " -> "
         << format_double(rows[1].median) << " -> " << format_double(rows[2].median)
         << (monotone ? " (monotone)" : " (NOT monotone; soft)") << "; CIs in xi_trend.csv";
  if (!exact_cross_checks_ok) return {false, "criterion 7 cross-checks failed"};
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 11. CLI determinism: byte-identical reports modulo timestamp

std::string strip_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("\"timestamp\"") == std::string::npos) out << line << '\n';
  return out.str();
}

Outcome criterion11(const std::filesystem::path& dir) {
#ifndef SOSW_CLI_PATH
  return {false, "CLI path not configured"};
#else
  const std::string cli = SOSW_CLI_PATH;
  std::filesystem::create_directories(dir);
  auto run = [&](const std::string& args) -> bool {
    std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
  };
  auto path = [&dir](const std::string& name) { return (dir / name).string(); };

  struct Cmd {
    std::string name;
    std::string args;  // with {} placeholder for the output basename suffix
    std::vector<std::string> outputs;
  };
  const std::string g = path("g.el");
  if (!run("gen-graph --n 7 --p 0.5 --seed 11 --out " + g)) return {false, "gen-graph failed"};
  const std::string pe = path("pe.json");
  if (!run("build-pe --graph " + g + " --source distribution --d 4 --mode rational --out " + pe))
    return {false, "build-pe failed"};

  std::vector<Cmd> cmds = {
      {"gen-graph", "gen-graph --n 7 --p 0.5 --seed 11 --out {O}g.el --report {O}r.json",
       {"g.el", "r.json"}},
      {"build-pe-dist",
       "build-pe --graph " + g + " --source distribution --d 4 --mode rational --out {O}pe.json "
       "--report {O}r.json",
       {"pe.json", "r.json"}},
      {"build-pe-cal",
       "build-pe --graph " + g + " --source calibrated --d 2 --tau 2 --epsilon 0.3 --out "
       "{O}pe.json --report {O}r.json",
       {"pe.json", "r.json"}},
      {"certify-pe", "certify-pe --graph " + g + " --pe " + pe + " --out {O}r.json",
       {"r.json"}},
      {"reduce", "reduce --graph " + g + " --pe " + pe + " --out {O}r.json", {"r.json"}},
      {"check-coloring",
       "check-coloring --graph " + g + " --pe " + pe + " --k 40 --out {O}r.json", {"r.json"}},
      {"refute", "refute --graph " + g + " --k 2 --out {O}r.json", {"r.json"}},
      {"experiment-chiconc",
       "experiment-chiconc --n 6 --ell 2 --mode mc --trials 40 --seed 5 --out {O}r.json "
       "--csv {O}c.csv",
       {"r.json", "c.csv"}},
      {"experiment-xi",
       "experiment-xi --n-list 8,12 --trials 4 --seed 2 --out {O}r.json --csv {O}c.csv",
       {"r.json", "c.csv"}},
      {"survey",
       "survey --n 6 --trials 3 --seed 9 --out {O}r.json --csv {O}c.csv",
       {"r.json", "c.csv"}},
  };
  long compared = 0;
  for (const auto& cmd : cmds) {
    // identical flags both rounds; round 1 outputs are stashed before rerun
    std::string prefix = path(cmd.name + "_");
    std::string args = cmd.args;
    std::size_t pos;
    while ((pos = args.find("{O}")) != std::string::npos) args.replace(pos, 3, prefix);
    std::vector<std::string> stash;
    for (int round = 1; round <= 2; ++round) {
      bool ok = run(args);
      // check-coloring may exit 1 at an insufficient k; its report still counts
      if (!ok && cmd.name != "check-coloring") return {false, cmd.name + " run failed"};
      if (round == 1) {
        for (const auto& out : cmd.outputs) {
          stash.push_back(read_text_file(prefix + out));
        }
      }
    }
    for (std::size_t i = 0; i < cmd.outputs.size(); ++i) {
      std::string again = read_text_file(prefix + cmd.outputs[i]);
      ++compared;
      if (strip_timestamp(stash[i]) != strip_timestamp(again))
        return {false, cmd.name + " output " + cmd.outputs[i] + " differs between reruns"};
    }
  }
  return {true, std::to_string(compared) + " artifacts byte-identical modulo timestamp"};
#endif
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path workdir =
      argc > 1 ? std::filesystem::path(argv[1])
               : std::filesystem::temp_directory_path() / "sosw_acceptance";
  std::filesystem::create_directories(workdir);

  struct Entry {
    int id;
    std::string name;
    std::function<Outcome()> fn;
  };
  Outcome c7_result;  // criterion 10 keys off criterion 7's cross-checks
  bool c7_ran = false;

  std::vector<Entry> entries = {
      {1, "coloring reduction pipeline on ground truth", criterion1},
      {2, "tensor oracle equivalence", criterion2},
      {3, "h_i identity and tail bound", criterion3},
      {4, "indicator lemma nonnegativity", criterion4},
      {5, "hypercontractivity chain", criterion5},
      {6, "primed-basis spectral facts", criterion6},
      {7, "pseudo-calibration oracle", [&] {
         c7_result = criterion7();
         c7_ran = true;
         return c7_result;
       }},
      {8, "chi-sum exact moments", criterion8},
      {9, "coefficient audit / power chain / refutation", criterion9},
      {10, "xi concentration trend (soft)",
       [&] { return criterion10(workdir / "artifacts", c7_ran && c7_result.passed); }},
      {11, "CLI determinism", [&] { return criterion11(workdir / "cli"); }},
  };

  int failures = 0;
  for (auto& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.fn();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s - %s (%s) [%.1fs]\n", e.id, out.passed ? "PASS" : "FAIL",
                e.name.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.passed) ++failures;
  }
  if (failures > 0)
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  else
    std::printf("acceptance: all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
