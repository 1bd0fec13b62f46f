#include "sosw/coloring.hpp"

#include <algorithm>

namespace sosw {

namespace {

void index_rec(int k, int from_color, int remaining,
               const std::vector<std::vector<Monomial>>& classes_by_size, long budget,
               ColorMonomial& cur, std::vector<ColorMonomial>& out) {
  out.push_back(cur);
  if (static_cast<long>(out.size()) > budget)
    throw BudgetError("color monomial index exceeds budget");
  if (remaining == 0) return;
  for (int c = from_color; c <= k; ++c) {
    for (int s = 1; s <= remaining && s < static_cast<int>(classes_by_size.size()); ++s) {
      for (const auto& m : classes_by_size[s]) {
        cur.parts[c] = m;
        index_rec(k, c + 1, remaining - s, classes_by_size, budget, cur, out);
        cur.parts.erase(c);
      }
    }
  }
}

}  // namespace

std::vector<ColorMonomial> color_monomial_index(const Graph& g, int k, int max_total,
                                                int max_class, long budget,
                                                bool independent_only) {
  const int class_cap = std::min(max_total, max_class);
  std::vector<std::vector<Monomial>> classes_by_size(class_cap + 1);
  if (independent_only) {
    for (auto& s : enumerate_independent_sets(g, class_cap)) {
      if (s.empty()) continue;
      classes_by_size[s.size()].emplace_back(std::move(s));
    }
  } else {
    for (auto& s : subsets_of_size_at_most(g.n(), class_cap)) {
      if (s.empty()) continue;
      classes_by_size[s.size()].emplace_back(std::move(s));
    }
  }
  std::vector<ColorMonomial> out;
  ColorMonomial cur;
  index_rec(k, 1, std::max(0, max_total), classes_by_size, budget, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sosw
