#ifndef SOSW_GRAPH_HPP
#define SOSW_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sosw {

// Undirected simple graph on vertices 1..n (1-based throughout, including
// serialization). Immutable after construction; safe to share across threads.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;  // sorted, i < j
  std::vector<std::vector<bool>> adj_;      // (n+1) x (n+1), 1-based
};

// G(n,p) with a fixed, portable generator (std::mt19937_64 seeded with `seed`;
// pairs visited in lexicographic order, one uniform draw each).
Graph gen_gnp(int n, double p, std::uint64_t seed);

Graph complement(const Graph& g);

// True iff no edge of g has both endpoints in s. Vertices must lie in [1,n].
bool is_independent_set(const Graph& g, const std::vector<int>& s);

struct MaxIndependentSet {
  int size = 0;
  std::vector<int> witness;
};

// Exact maximum independent set via branch-and-bound (clique search on the
// complement with greedy-coloring bounds). Throws BudgetError above n_limit.
MaxIndependentSet max_independent_set(const Graph& g, int n_limit = 40);

// All independent sets of size <= max_size in lexicographic order (by sorted
// elements), starting with the empty set.
std::vector<std::vector<int>> enumerate_independent_sets(const Graph& g, int max_size);

// Exact k-colorability by backtracking; intended for small n only.
bool is_k_colorable(const Graph& g, int k);

// Order-independent digest of (n, edge set); binds PE files to their graph.
std::string graph_hash(const Graph& g);

// Edge-list text format: "n m" then m lines "i j" (1 <= i < j <= n).
// Blank lines and '#' comments are ignored on read.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

std::vector<std::vector<int>> subsets_of_size_at_most(int n, int max_size);

}  // namespace sosw

#endif  // SOSW_GRAPH_HPP
