#include "sosw/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sosw/numeric.hpp"

namespace sosw {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(n + 1, std::vector<bool>(n + 1, false));
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > n) throw std::invalid_argument("edge endpoint out of range");
    if (e.first == e.second) throw std::invalid_argument("self-loop");
    if (adj_[e.first][e.second]) throw std::invalid_argument("duplicate edge");
    adj_[e.first][e.second] = adj_[e.second][e.first] = true;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("vertex out of range");
  return adj_[i][j];
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // top 53 bits -> uniform in [0,1); strictly-below-p keeps p=0 and p=1 exact
      double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return Graph(g.n(), std::move(edges));
}

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b])) return false;
  return true;
}

namespace {

// Max-clique branch and bound on bitmask adjacency (Tomita-style greedy
// coloring bound). Used on the complement graph to solve independent set.
class CliqueSolver {
 public:
  CliqueSolver(int n, const std::vector<std::uint64_t>& adj) : n_(n), adj_(adj) {}

  void run() {
    std::uint64_t all = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    expand(all, 0, 0ULL);
  }

  int best_size() const { return best_size_; }
  std::uint64_t best_mask() const { return best_mask_; }

 private:
  void expand(std::uint64_t cand, int depth, std::uint64_t current) {
    if (depth > best_size_) {
      best_size_ = depth;
      best_mask_ = current;
    }
    if (cand == 0) return;
    // greedy coloring of candidates; a clique takes <= 1 vertex per class, so
    // color[idx] bounds any clique inside verts[0..idx]
    std::vector<int> verts;
    std::vector<int> color;
    std::uint64_t rest = cand;
    int classes = 0;
    while (rest) {
      ++classes;
      std::uint64_t avail = rest;
      while (avail) {
        int v = __builtin_ctzll(avail);
        verts.push_back(v);
        color.push_back(classes);
        rest &= ~(1ULL << v);
        avail &= ~(1ULL << v);
        avail &= ~adj_[v];
      }
    }
    std::vector<std::uint64_t> prefix(verts.size() + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
      prefix[i + 1] = prefix[i] | (1ULL << verts[i]);
    for (int idx = static_cast<int>(verts.size()) - 1; idx >= 0; --idx) {
      if (depth + color[idx] <= best_size_) return;
      int v = verts[idx];
      expand(prefix[idx] & adj_[v], depth + 1, current | (1ULL << v));
    }
  }

  int n_;
  const std::vector<std::uint64_t>& adj_;
  int best_size_ = 0;
  std::uint64_t best_mask_ = 0;
};

}  // namespace

MaxIndependentSet max_independent_set(const Graph& g, int n_limit) {
  if (g.n() > n_limit || g.n() > 64)
    throw BudgetError("max_independent_set: vertex count exceeds exact-solver limit");
  // clique in the complement == independent set in g
  std::vector<std::uint64_t> cadj(g.n(), 0);
  for (int i = 1; i <= g.n(); ++i)
    for (int j = 1; j <= g.n(); ++j)
      if (i != j && !g.has_edge(i, j)) cadj[i - 1] |= 1ULL << (j - 1);
  CliqueSolver solver(g.n(), cadj);
  solver.run();
  MaxIndependentSet out;
  out.size = solver.best_size();
  for (int v = 0; v < g.n(); ++v)
    if (solver.best_mask() & (1ULL << v)) out.witness.push_back(v + 1);
  return out;
}

namespace {

void enumerate_rec(const Graph& g, int max_size, int from, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_size) return;
  for (int v = from; v <= g.n(); ++v) {
    bool ok = true;
    for (int u : cur)
      if (g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    enumerate_rec(g, max_size, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_independent_sets(const Graph& g, int max_size) {
  if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_rec(g, std::min(max_size, g.n()), 1, cur, out);
  return out;
}

namespace {

bool color_rec(const Graph& g, int k, int v, std::vector<int>& color) {
  if (v > g.n()) return true;
  int used = 0;
  for (int u = 1; u < v; ++u) used = std::max(used, color[u]);
  int limit = std::min(k, used + 1);  // symmetry break: at most one fresh color
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int u = 1; u < v && ok; ++u)
      if (color[u] == c && g.has_edge(u, v)) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (color_rec(g, k, v + 1, color)) return true;
    color[v] = 0;
  }
  return false;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  if (k < 1) return g.n() == 0;
  std::vector<int> color(g.n() + 1, 0);
  return color_rec(g, k, 1, color);
}

std::string graph_hash(const Graph& g) {
  // FNV-1a over "n" and the sorted edge list
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n()));
  for (const auto& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.first));
    mix(static_cast<std::uint64_t>(e.second));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.first << ' ' << e.second << '\n';
  return os.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n >> m) continue;
      ls.clear();
      continue;  // blank/comment before header
    }
    int i, j;
    if (ls >> i >> j) edges.emplace_back(i, j);
  }
  if (n < 1) throw std::invalid_argument("edge list: missing 'n m' header");
  if (m >= 0 && m != static_cast<int>(edges.size()))
    throw std::invalid_argument("edge list: edge count mismatch");
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

namespace {

void subsets_rec(int n, int max_size, int from, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_size) return;
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, max_size, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> subsets_of_size_at_most(int n, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, std::min(max_size, n), 1, cur, out);
  return out;
}

}  // namespace sosw
