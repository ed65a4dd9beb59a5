#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mti/graph.hpp"

// Two independent exact maximum-weight-clique engines. The subset enumerator
// is the oracle for the branch-and-bound solver; both report the same weight
// on any graph where both run.

namespace mti {

struct CliqueSolution {
  int weight = 0;
  std::vector<Tag> vertices;  // ascending vertex order
  bool optimal = true;
  std::uint64_t nodes_explored = 0;
};

constexpr int enum_vertex_cap = 20;

// Checks every vertex subset. The witness is the lexicographically smallest
// maximum-weight clique by ascending vertex index.
inline CliqueSolution max_clique_enum(const IntersectionGraph& g) {
  const int n = g.size();
  if (n > enum_vertex_cap)
    throw std::invalid_argument("max_clique_enum: " + std::to_string(n) + " vertices exceeds cap " +
                                std::to_string(enum_vertex_cap));
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    closed[static_cast<std::size_t>(v)] = 1u << v;
    for (int u = 0; u < n; ++u)
      if (u != v && g.adjacent(u, v)) closed[static_cast<std::size_t>(v)] |= 1u << u;
  }

  const auto members = [n](std::uint32_t s) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) out.push_back(v);
    return out;
  };

  int best_w = 0;
  std::uint32_t best_set = 0;
  const std::uint32_t end = n == 0 ? 1u : (1u << n);
  for (std::uint32_t s = 1; s < end; ++s) {
    bool clique = true;
    int w = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((s & ~closed[static_cast<std::size_t>(v)]) != 0) {
        clique = false;
        break;
      }
      w += g.vertices[static_cast<std::size_t>(v)].weight;
    }
    if (!clique) continue;
    if (w > best_w) {
      best_w = w;
      best_set = s;
    } else if (w == best_w && best_w > 0) {
      const std::vector<int> a = members(s);
      const std::vector<int> b = members(best_set);
      if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) best_set = s;
    }
  }

  CliqueSolution sol;
  sol.weight = best_w;
  sol.nodes_explored = end;
  for (int v : members(best_set)) sol.vertices.push_back(g.vertices[static_cast<std::size_t>(v)].tag);
  return sol;
}

namespace detail {

struct BbState {
  std::vector<std::vector<bool>> adj;  // in branching order
  std::vector<int> weight;             // in branching order
  std::vector<int> order;              // rank -> vertex id
  int best_w = -1;
  std::vector<int> best_set;
  std::vector<int> current;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool truncated = false;

  // Proper greedy coloring of the candidate set; a clique takes at most one
  // vertex per color class, so the sum of per-class maxima bounds its weight.
  int color_bound(const std::vector<int>& cand) const {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_max;
    for (int v : cand) {
      bool placed = false;
      for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
        bool independent = true;
        for (int u : classes[c])
          if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
            independent = false;
            break;
          }
        if (independent) {
          classes[c].push_back(v);
          class_max[c] = std::max(class_max[c], weight[static_cast<std::size_t>(v)]);
          placed = true;
        }
      }
      if (!placed) {
        classes.push_back({v});
        class_max.push_back(weight[static_cast<std::size_t>(v)]);
      }
    }
    return std::accumulate(class_max.begin(), class_max.end(), 0);
  }

  void expand(std::vector<int> cand, int cur_w) {
    ++nodes;
    if (budget != 0 && nodes > budget) {
      truncated = true;
      return;
    }
    if (cur_w > best_w) {
      best_w = cur_w;
      best_set = current;
    }
    while (!cand.empty()) {
      if (cur_w + color_bound(cand) <= best_w) return;
      const int v = cand.front();
      current.push_back(v);
      std::vector<int> next;
      for (std::size_t i = 1; i < cand.size(); ++i)
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(cand[i])]) next.push_back(cand[i]);
      expand(std::move(next), cur_w + weight[static_cast<std::size_t>(v)]);
      current.pop_back();
      if (truncated) return;
      cand.erase(cand.begin());
    }
  }
};

}  // namespace detail

// Branch and bound over a fixed branching order (descending degree, ties by
// vertex index) with the weighted coloring bound. With node_budget == 0 the
// search is exhaustive; otherwise it stops after that many search nodes and
// reports the best clique found with optimal = false.
inline CliqueSolution max_clique_bb(const IntersectionGraph& g, std::uint64_t node_budget = 0) {
  const int n = g.size();
  detail::BbState st;
  st.budget = node_budget;

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) ++degree[static_cast<std::size_t>(u)];
  st.order.resize(static_cast<std::size_t>(n));
  std::iota(st.order.begin(), st.order.end(), 0);
  std::stable_sort(st.order.begin(), st.order.end(), [&degree](int a, int b) {
    if (degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)])
      return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    return a < b;
  });

  st.adj.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  st.weight.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    st.weight[static_cast<std::size_t>(r)] =
        g.vertices[static_cast<std::size_t>(st.order[static_cast<std::size_t>(r)])].weight;
    for (int q = 0; q < n; ++q)
      st.adj[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)] =
          r != q && g.adjacent(st.order[static_cast<std::size_t>(r)], st.order[static_cast<std::size_t>(q)]);
  }

  std::vector<int> initial(static_cast<std::size_t>(n));
  std::iota(initial.begin(), initial.end(), 0);
  st.expand(std::move(initial), 0);

  CliqueSolution sol;
  sol.weight = std::max(st.best_w, 0);
  sol.optimal = !st.truncated;
  sol.nodes_explored = st.nodes;
  std::vector<int> ids;
  ids.reserve(st.best_set.size());
  for (int r : st.best_set) ids.push_back(st.order[static_cast<std::size_t>(r)]);
  std::sort(ids.begin(), ids.end());
  for (int v : ids) sol.vertices.push_back(g.vertices[static_cast<std::size_t>(v)].tag);
  return sol;
}

}  // namespace mti
