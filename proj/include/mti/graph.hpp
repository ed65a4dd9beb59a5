#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mti/family.hpp"

namespace mti {

struct GraphVertex {
  Tag tag;
  int weight = 1;

  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

// Weighted undirected graph; adjacency is symmetric with no self loops.
struct IntersectionGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::vector<bool>> adj;

  int size() const { return static_cast<int>(vertices.size()); }

  bool adjacent(int u, int v) const {
    return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self loop");
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }

  int edge_count() const {
    int e = 0;
    for (int u = 0; u < size(); ++u)
      for (int v = u + 1; v < size(); ++v)
        if (adjacent(u, v)) ++e;
    return e;
  }

  int find_vertex(const Tag& t) const {
    for (int i = 0; i < size(); ++i)
      if (vertices[static_cast<std::size_t>(i)].tag == t) return i;
    return -1;
  }

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;
};

inline IntersectionGraph make_graph(std::vector<GraphVertex> vertices) {
  IntersectionGraph g;
  g.vertices = std::move(vertices);
  g.adj.assign(g.vertices.size(), std::vector<bool>(g.vertices.size(), false));
  return g;
}

// One vertex of weight 1 per family member, in family order; edge iff the
// members' intervals intersect.
inline IntersectionGraph build_graph(const TrackFamily& f) {
  std::vector<GraphVertex> vs;
  vs.reserve(f.members.size());
  for (const FamilyMember& m : f.members) vs.push_back(GraphVertex{m.tag, 1});
  IntersectionGraph g = make_graph(std::move(vs));
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (mti_intersects(f.members[static_cast<std::size_t>(u)].interval,
                         f.members[static_cast<std::size_t>(v)].interval))
        g.add_edge(u, v);
  return g;
}

// Collapses each literal's identical copies (true twins) into one vertex
// weighted by the copy count; clause members keep weight 1. The maximum
// clique weight of the result equals the maximum clique size of the full
// graph, provided copies within a class really are identical, as families
// from construct_tracks guarantee.
inline IntersectionGraph collapse_twins(const TrackFamily& f) {
  std::vector<GraphVertex> vs;
  std::vector<const MultiTrackInterval*> reps;
  for (const FamilyMember& m : f.members) {
    const Tag cls = is_literal(m.tag) ? Tag{m.tag.kind, m.tag.index, 0} : m.tag;
    bool found = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].tag == cls) {
        if (!(*reps[i] == m.interval))
          throw std::invalid_argument("collapse_twins: copies of " + cls.to_string() +
                                      " are not identical");
        ++vs[i].weight;
        found = true;
        break;
      }
    }
    if (!found) {
      vs.push_back(GraphVertex{cls, 1});
      reps.push_back(&m.interval);
    }
  }
  IntersectionGraph g = make_graph(std::move(vs));
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (mti_intersects(*reps[static_cast<std::size_t>(u)], *reps[static_cast<std::size_t>(v)]))
        g.add_edge(u, v);
  return g;
}

inline bool is_clique(const IntersectionGraph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.adjacent(verts[i], verts[j])) return false;
  return true;
}

inline int weight_of(const IntersectionGraph& g, const std::vector<int>& verts) {
  int w = 0;
  for (int v : verts) w += g.vertices[static_cast<std::size_t>(v)].weight;
  return w;
}

}  // namespace mti
