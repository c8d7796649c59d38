#pragma once

// Hopcroft–Karp maximum bipartite matching.

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace hallpaige {

class BipartiteMatching {
 public:
  static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

  BipartiteMatching(std::size_t left, std::size_t right)
      : adj_(left), match_left_(left, none), match_right_(right, none), dist_(left) {}

  void add_edge(std::uint32_t u, std::uint32_t v) { adj_[u].push_back(v); }

  /// Returns the matching size; neighbours are visited in insertion order.
  std::size_t solve() {
    std::size_t size = 0;
    while (bfs())
      for (std::uint32_t u = 0; u < adj_.size(); ++u)
        if (match_left_[u] == none && dfs(u)) ++size;
    return size;
  }

  std::uint32_t mate_of_left(std::uint32_t u) const { return match_left_[u]; }
  std::uint32_t mate_of_right(std::uint32_t v) const { return match_right_[v]; }

 private:
  bool bfs() {
    std::queue<std::uint32_t> q;
    bool reachable_free = false;
    for (std::uint32_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == none) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = inf;
      }
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj_[u]) {
        auto w = match_right_[v];
        if (w == none) {
          reachable_free = true;
        } else if (dist_[w] == inf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(std::uint32_t u) {
    for (auto v : adj_[u]) {
      auto w = match_right_[v];
      if (w == none || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = inf;
    return false;
  }

  static constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> match_left_, match_right_, dist_;
};

}  // namespace hallpaige
