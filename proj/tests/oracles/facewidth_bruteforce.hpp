#pragma once

// Brute-force face-width: every simple cycle of the radial graph up to a
// length bound, each tested by cutting the quadrangulation along it.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

class RadialBruteForce {
 public:
  // Raw map data: per-vertex ccw dart lists and dart pairs.
  RadialBruteForce(const std::vector<std::vector<int>>& rotations, const std::vector<std::pair<int, int>>& edges) {
    for (std::size_t v = 0; v < rotations.size(); ++v) {
      for (std::size_t r = 0; r < rotations[v].size(); ++r) {
        const int d = rotations[v][r];
        at_[d] = static_cast<int>(v);
        succ_[d] = rotations[v][(r + 1) % rotations[v].size()];
      }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      mate_[edges[e].first] = edges[e].second;
      mate_[edges[e].second] = edges[e].first;
      edge_id_[edges[e].first] = edge_id_[edges[e].second] = static_cast<int>(e);
    }
    quads_ = static_cast<int>(edges.size());
    // faces as orbits of d -> succ(mate(d)); corner d is the one just before d
    int faces = 0;
    for (auto [d, v] : at_) {
      if (face_.count(d)) continue;
      for (int x = d; !face_.count(x); x = succ_.at(mate_.at(x))) face_[x] = faces;
      ++faces;
    }
    vertices_ = static_cast<int>(rotations.size());
    nodes_ = vertices_ + faces;
    for (auto [d, v] : at_) {
      corners_.push_back(d);
      const int c = static_cast<int>(corners_.size()) - 1;
      adj_[v].push_back(c);
      adj_[vertices_ + face_.at(d)].push_back(c);
    }
  }

  int euler_characteristic() const { return vertices_ - quads_ + (nodes_ - vertices_); }

  /// Half the length of the shortest essential simple radial cycle with at
  /// most max_length edges, or nullopt if there is none that short.
  std::optional<int> width(int max_length) {
    best_ = max_length + 1;
    for (int start = 0; start < nodes_; ++start) {
      std::vector<int> path_nodes{start}, path_corners;
      extend(start, start, path_nodes, path_corners);
    }
    if (best_ > max_length) return std::nullopt;
    return best_ / 2;
  }

 private:
  std::pair<int, int> ends(int c) const {
    const int d = corners_[c];
    return {at_.at(d), vertices_ + face_.at(d)};
  }

  // Cycles are listed once per start: start is the smallest node on the cycle.
  void extend(int start, int at, std::vector<int>& nodes, std::vector<int>& corners) {
    if (static_cast<int>(corners.size()) >= best_) return;
    auto it = adj_.find(at);
    if (it == adj_.end()) return;
    for (int c : it->second) {
      if (std::find(corners.begin(), corners.end(), c) != corners.end()) continue;
      auto [a, b] = ends(c);
      const int next = a == at ? b : a;
      if (next == start) {
        corners.push_back(c);
        if (static_cast<int>(corners.size()) < best_ && essential(corners)) best_ = static_cast<int>(corners.size());
        corners.pop_back();
        continue;
      }
      if (next < start || std::find(nodes.begin(), nodes.end(), next) != nodes.end()) continue;
      nodes.push_back(next);
      corners.push_back(c);
      extend(start, next, nodes, corners);
      corners.pop_back();
      nodes.pop_back();
    }
  }

  // The quad of map edge e has corners d, succ(d), mate(d), succ(mate(d)).
  bool essential(const std::vector<int>& cycle) const {
    std::map<int, char> cut;  // dart of a cut corner
    std::map<int, char> node_on;
    for (int c : cycle) {
      cut[corners_[c]] = 1;
      auto [a, b] = ends(c);
      node_on[a] = node_on[b] = 1;
    }
    std::vector<int> parent(quads_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    // corner d separates the quads of the edges of d and of its ccw predecessor
    std::map<int, int> pred;
    for (auto [d, s] : succ_) pred[s] = d;
    for (auto [d, v] : at_) {
      if (cut.count(d)) continue;
      parent[find(edge_id_.at(d))] = find(edge_id_.at(pred.at(d)));
    }
    std::map<int, int> chi;
    for (int q = 0; q < quads_; ++q) chi[find(q)] += 1;
    if (chi.size() == 1) return true;
    for (auto [d, v] : at_) {
      if (!cut.count(d)) chi[find(edge_id_.at(d))] -= 1;
    }
    for (const auto& [node, corners] : adj_) {
      if (node_on.count(node)) continue;
      chi[find(edge_id_.at(corners_[corners.front()]))] += 1;
    }
    for (auto [side, value] : chi) {
      if (value == 1) return false;
    }
    return true;
  }

  std::map<int, int> at_, succ_, mate_, edge_id_, face_;
  std::map<int, std::vector<int>> adj_;
  std::vector<int> corners_;
  int quads_ = 0, vertices_ = 0, nodes_ = 0;
  int best_ = 0;
};

}  // namespace oracle
