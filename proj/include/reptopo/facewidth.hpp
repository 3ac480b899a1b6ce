#pragma once

// Face-width (representativity) of a graph cellularly embedded in a closed
// orientable surface: the least number of points in which an essential closed
// curve meets the graph.
//
// Curves are taken as cycles of the radial graph, whose vertices are the
// vertices and faces of the map and whose edges are the corners. A radial
// cycle of length 2k meets the graph in k vertices.

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/pending/disjoint_sets.hpp>
#include <json.hpp>

#include "reptopo/error.hpp"

namespace reptopo {

/// Combinatorial map. Darts are dense indices 0..D-1; `labels` keeps the
/// caller's dart names for reporting.
class RotationSystem {
 public:
  RotationSystem(std::vector<std::vector<int>> rotations, std::vector<std::pair<int, int>> edges) {
    std::map<int, int> index;
    for (const auto& cycle : rotations) {
      if (cycle.empty()) throw InputError("rotation system: vertex with no darts");
      for (int d : cycle) {
        if (!index.emplace(d, static_cast<int>(labels_.size())).second) {
          throw InputError("rotation system: dart " + std::to_string(d) + " appears twice in rotations");
        }
        labels_.push_back(d);
      }
    }
    const int darts = static_cast<int>(labels_.size());
    sigma_.assign(darts, -1);
    alpha_.assign(darts, -1);
    vertex_.assign(darts, -1);
    for (std::size_t v = 0; v < rotations.size(); ++v) {
      const auto& cycle = rotations[v];
      for (std::size_t r = 0; r < cycle.size(); ++r) {
        const int d = index.at(cycle[r]);
        sigma_[d] = index.at(cycle[(r + 1) % cycle.size()]);
        vertex_[d] = static_cast<int>(v);
      }
    }
    for (auto [x, y] : edges) {
      auto ix = index.find(x), iy = index.find(y);
      if (ix == index.end() || iy == index.end()) {
        throw InputError("rotation system: edge names a dart missing from rotations");
      }
      if (x == y) throw InputError("rotation system: edge pairs dart " + std::to_string(x) + " with itself");
      if (alpha_[ix->second] >= 0 || alpha_[iy->second] >= 0) {
        throw InputError("rotation system: dart used by two edges");
      }
      alpha_[ix->second] = iy->second;
      alpha_[iy->second] = ix->second;
    }
    for (int d = 0; d < darts; ++d) {
      if (alpha_[d] < 0) throw InputError("rotation system: dart " + std::to_string(labels_[d]) + " has no edge");
    }
    vertex_count_ = static_cast<int>(rotations.size());
    trace_faces();
    check_connected();
  }

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return face_count_; }

  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int alpha(int d) const { return alpha_[d]; }
  int vertex_of(int d) const { return vertex_[d]; }
  /// Face containing the corner between sigma_inv(d) and d.
  int face_of(int d) const { return face_[d]; }
  /// Edge id of the dart: its position among edges in increasing min-dart order.
  int edge_of(int d) const { return edge_[d]; }
  int label(int d) const { return labels_[d]; }

  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

 private:
  void trace_faces() {
    const int darts = dart_count();
    sigma_inv_.assign(darts, -1);
    for (int d = 0; d < darts; ++d) sigma_inv_[sigma_[d]] = d;
    face_.assign(darts, -1);
    face_count_ = 0;
    for (int d = 0; d < darts; ++d) {
      if (face_[d] >= 0) continue;
      for (int x = d; face_[x] < 0; x = sigma_[alpha_[x]]) face_[x] = face_count_;
      ++face_count_;
    }
    edge_.assign(darts, -1);
    int edges = 0;
    for (int d = 0; d < darts; ++d) {
      if (edge_[d] < 0) edge_[d] = edge_[alpha_[d]] = edges++;
    }
  }

  void check_connected() const {
    std::vector<std::size_t> rank(vertex_count_), parent(vertex_count_);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (int v = 0; v < vertex_count_; ++v) sets.make_set(v);
    for (int d = 0; d < dart_count(); ++d) sets.union_set(vertex_[d], vertex_[alpha_[d]]);
    for (int v = 1; v < vertex_count_; ++v) {
      if (sets.find_set(v) != sets.find_set(0)) throw InputError("rotation system: map is disconnected");
    }
  }

  std::vector<int> sigma_, sigma_inv_, alpha_, vertex_, face_, edge_, labels_;
  int vertex_count_ = 0;
  int face_count_ = 0;
};

inline int genus(const RotationSystem& rs) {
  const int chi = rs.euler_characteristic();
  if (chi > 2 || (2 - chi) % 2 != 0) throw InputError("rotation system: Euler characteristic " + std::to_string(chi));
  return (2 - chi) / 2;
}

/// The radial graph. Radial vertex v < V is map vertex v; V + f is face f.
/// Radial edge d is the corner of dart d; it joins vertex_of(d) and face_of(d).
/// Its faces are quadrilaterals, one per map edge.
class RadialGraph {
 public:
  explicit RadialGraph(const RotationSystem& rs) : rs_(&rs) {
    const int n = rs.vertex_count() + rs.face_count();
    incident_.assign(n, {});
    for (int d = 0; d < rs.dart_count(); ++d) {
      incident_[ends(d).first].push_back(d);
      incident_[ends(d).second].push_back(d);
    }
  }

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return rs_->dart_count(); }
  std::pair<int, int> ends(int corner) const {
    return {rs_->vertex_of(corner), rs_->vertex_count() + rs_->face_of(corner)};
  }
  int other_end(int corner, int x) const {
    auto [a, b] = ends(corner);
    return x == a ? b : a;
  }
  const std::vector<int>& incident(int x) const { return incident_[x]; }

  /// The two quadrilaterals (map edges) on either side of a corner.
  std::pair<int, int> quads(int corner) const {
    return {rs_->edge_of(corner), rs_->edge_of(rs_->sigma_inv(corner))};
  }
  int quad_count() const { return rs_->edge_count(); }

  const RotationSystem& map() const { return *rs_; }

 private:
  const RotationSystem* rs_;
  std::vector<std::vector<int>> incident_;
};

/// Cut-and-check: cut the surface along a simple radial cycle (given as its
/// corners) and report whether one side is a disk.
inline bool is_contractible(const RadialGraph& radial, const std::vector<int>& cycle) {
  const int quads = radial.quad_count();
  std::vector<char> on_cycle(radial.edge_count(), 0);
  std::vector<char> vertex_on_cycle(radial.vertex_count(), 0);
  for (int c : cycle) {
    on_cycle[c] = 1;
    auto [a, b] = radial.ends(c);
    vertex_on_cycle[a] = vertex_on_cycle[b] = 1;
  }

  std::vector<std::size_t> rank(quads), parent(quads);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (int q = 0; q < quads; ++q) sets.make_set(q);
  for (int c = 0; c < radial.edge_count(); ++c) {
    if (!on_cycle[c]) sets.union_set(radial.quads(c).first, radial.quads(c).second);
  }

  std::map<std::size_t, int> chi;  // side representative -> Euler characteristic
  for (int q = 0; q < quads; ++q) chi[sets.find_set(q)] += 1;
  if (chi.size() == 1) return false;  // non-separating: never bounds a disk

  // Each side gets its own copy of the cycle, whose vertices and edges cancel.
  for (int c = 0; c < radial.edge_count(); ++c) {
    if (!on_cycle[c]) chi[sets.find_set(radial.quads(c).first)] -= 1;
  }
  for (int x = 0; x < radial.vertex_count(); ++x) {
    if (!vertex_on_cycle[x] && !radial.incident(x).empty()) {
      chi[sets.find_set(radial.quads(radial.incident(x).front()).first)] += 1;
    }
  }
  for (const auto& [side, value] : chi) {
    if (value == 1) return true;
  }
  return false;
}

/// Z/2 homology test: true when the cycle is the mod-2 boundary of a set of
/// quadrilaterals. Non-separating cycles are exactly the non-null ones.
inline bool is_z2_null(const RadialGraph& radial, const std::vector<int>& cycle) {
  const int corners = radial.edge_count();
  std::vector<boost::dynamic_bitset<>> basis;  // reduced rows, leading bit distinct
  std::vector<int> lead;
  auto reduce = [&](boost::dynamic_bitset<>& row) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (row.test(lead[r])) row ^= basis[r];
    }
  };
  std::vector<boost::dynamic_bitset<>> rows(radial.quad_count(), boost::dynamic_bitset<>(corners));
  for (int c = 0; c < corners; ++c) {
    auto [p, q] = radial.quads(c);
    rows[p].flip(c);
    rows[q].flip(c);
  }
  for (auto& row : rows) {
    reduce(row);
    if (row.none()) continue;
    const int pivot = static_cast<int>(row.find_first());
    for (auto& other : basis) {
      if (other.test(pivot)) other ^= row;
    }
    basis.push_back(row);
    lead.push_back(pivot);
  }
  boost::dynamic_bitset<> target(corners);
  for (int c : cycle) target.flip(c);
  reduce(target);
  return target.none();
}

struct FaceWidth {
  std::optional<int> width;   // nullopt: sphere, every loop is inessential
  std::vector<int> cycle;     // corners of a shortest essential radial cycle
};

namespace detail {

/// Simple cycle through the tree path root..u, edge `corner`, tree path w..root,
/// trimmed at the lowest common ancestor.
inline std::vector<int> fundamental_cycle(const RadialGraph& radial, const std::vector<int>& parent_edge,
                                          const std::vector<int>& depth, int u, int w, int corner) {
  std::vector<int> up, down;
  while (depth[u] > depth[w]) { up.push_back(parent_edge[u]); u = radial.other_end(parent_edge[u], u); }
  while (depth[w] > depth[u]) { down.push_back(parent_edge[w]); w = radial.other_end(parent_edge[w], w); }
  while (u != w) {
    up.push_back(parent_edge[u]);
    u = radial.other_end(parent_edge[u], u);
    down.push_back(parent_edge[w]);
    w = radial.other_end(parent_edge[w], w);
  }
  std::vector<int> cycle(up.rbegin(), up.rend());
  cycle.push_back(corner);
  cycle.insert(cycle.end(), down.begin(), down.end());
  return cycle;
}

}  // namespace detail

/// Shortest essential radial cycle, from a breadth-first tree at every radial
/// vertex: the shortest essential cycle through a root is homotopic to a
/// product of fundamental cycles of that root's tree, each no longer than it.
inline FaceWidth face_width(const RotationSystem& rs) {
  if (genus(rs) == 0) return {};
  const RadialGraph radial(rs);
  const int n = radial.vertex_count();
  FaceWidth best;
  int best_len = std::numeric_limits<int>::max();

  for (int root = 0; root < n; ++root) {
    std::vector<int> depth(n, -1), parent_edge(n, -1);
    std::deque<int> queue{root};
    depth[root] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int c : radial.incident(x)) {
        const int y = radial.other_end(c, x);
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent_edge[y] = c;
          queue.push_back(y);
        }
      }
    }
    for (int c = 0; c < radial.edge_count(); ++c) {
      auto [u, w] = radial.ends(c);
      if (parent_edge[u] == c || parent_edge[w] == c) continue;
      if (depth[u] + depth[w] + 1 >= best_len) continue;
      auto cycle = detail::fundamental_cycle(radial, parent_edge, depth, u, w, c);
      if (static_cast<int>(cycle.size()) >= best_len) continue;
      if (!is_contractible(radial, cycle)) {
        best_len = static_cast<int>(cycle.size());
        best.cycle = std::move(cycle);
      }
    }
  }
  best.width = best_len / 2;
  return best;
}

// {"rotations":[[0,1,2,3]],"edges":[[0,2],[1,3]]}; "darts" is optional and,
// when present, must list exactly the darts used by the rotations.

inline RotationSystem rotation_system_from_json(const nlohmann::json& j) {
  try {
    auto rotations = j.at("rotations").get<std::vector<std::vector<int>>>();
    auto edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
    RotationSystem rs(std::move(rotations), std::move(edges));
    if (j.contains("darts")) {
      auto darts = j.at("darts").get<std::vector<int>>();
      std::sort(darts.begin(), darts.end());
      std::vector<int> used;
      for (int d = 0; d < rs.dart_count(); ++d) used.push_back(rs.label(d));
      std::sort(used.begin(), used.end());
      if (darts != used) throw InputError("rotation system: \"darts\" does not match the rotations");
    }
    return rs;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("rotation system: ") + e.what());
  }
}

}  // namespace reptopo
