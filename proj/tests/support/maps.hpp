#pragma once

// Small rotation systems used across the face-width tests.

#include <utility>
#include <vector>

#include <json.hpp>

#include "reptopo/facewidth.hpp"

namespace maps {

struct MapData {
  std::vector<std::vector<int>> rotations;
  std::vector<std::pair<int, int>> edges;

  reptopo::RotationSystem build() const { return reptopo::RotationSystem(rotations, edges); }
  nlohmann::json json() const { return {{"rotations", rotations}, {"edges", edges}}; }
};

// n x n grid on the torus. Vertex v = i*n + j owns darts 4v..4v+3 pointing
// east, north, west, south.
inline MapData toroidal_grid(int n) {
  MapData m;
  for (int v = 0; v < n * n; ++v) m.rotations.push_back({4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = i * n + j;
      const int east = i * n + (j + 1) % n;
      const int north = ((i + 1) % n) * n + j;
      m.edges.push_back({4 * v, 4 * east + 2});
      m.edges.push_back({4 * v + 1, 4 * north + 3});
    }
  }
  return m;
}

inline MapData one_vertex_torus() { return {{{0, 1, 2, 3}}, {{0, 2}, {1, 3}}}; }

// K4 drawn with vertex 0 inside the triangle 1, 2, 3.
inline MapData tetrahedron() {
  return {{{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}}, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}}};
}

// K(3,3): edge (a_i, b_j) has darts 2(3i+j) at a_i and 2(3i+j)+1 at b_j.
inline MapData k33_torus() {
  MapData m;
  m.rotations = {{0, 2, 4}, {6, 8, 10}, {12, 14, 16}, {1, 7, 13}, {3, 9, 15}, {5, 11, 17}};
  for (int e = 0; e < 9; ++e) m.edges.push_back({2 * e, 2 * e + 1});
  return m;
}

}  // namespace maps
