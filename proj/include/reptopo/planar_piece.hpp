#pragma once

// Planar pieces (spheres with k boundary circles) carrying an arc system, and
// the minimal number of arcs met by essential loops and essential
// same-boundary arcs in them.

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reptopo/error.hpp"
#include "reptopo/smoothing.hpp"

namespace reptopo {

/// An edge of a piece layout. Boundary circles are shrunk to vertices and each
/// arc class becomes one edge weighted by its multiplicity. Virtual edges have
/// weight 0; they only make every face a disk.
struct LayoutEdge {
  int u = 0;
  int v = 0;
  int weight = 0;
  int arc_class = -1;  // index into the piece's arcs, -1 for virtual edges
};

/// A plane embedding (rotation system on the sphere) of a piece's arc system.
/// Half-edge 2e sits at edges()[e].u, half-edge 2e+1 at edges()[e].v.
class PieceLayout {
 public:
  /// Circles at the corners of a convex k-gon, ccw. Virtual edges run along
  /// every polygon side; a class joining polygon neighbours runs just inside
  /// that side; other classes are chords, drawn inside or outside the polygon
  /// so that chords on the same side never cross.
  static PieceLayout canonical(int circles, const std::vector<ArcClass>& arcs) {
    PieceLayout layout;
    layout.circles_ = circles;
    const int k = circles;
    if (k < 2) throw InputError("piece layout needs at least 2 circles");

    auto add = [&](int u, int v, int w, int cls) {
      layout.edges_.push_back({u, v, w, cls});
      return static_cast<int>(layout.edges_.size()) - 1;
    };
    layout.rotation_.assign(k, {});

    if (k == 2) {
      if (arcs.size() > 1) throw InputError("piece layout: an annulus carries a single arc class");
      const int band = arcs.empty() ? -1 : add(0, 1, arcs[0].mult, 0);
      const int left = add(0, 1, 0, -1);
      const int right = add(0, 1, 0, -1);
      layout.rotation_[0] = {2 * left};
      layout.rotation_[1] = {2 * right + 1};
      if (band >= 0) {
        layout.rotation_[0].push_back(2 * band);
        layout.rotation_[1].push_back(2 * band + 1);
      }
      layout.rotation_[0].push_back(2 * right);
      layout.rotation_[1].push_back(2 * left + 1);
      layout.finish(false);
      return layout;
    }

    auto offset = [k](int from, int to) { return ((to - from) % k + k) % k; };
    std::vector<int> side_virtual(k), side_band(k, -1);  // polygon side u -> u+1
    for (int u = 0; u < k; ++u) side_virtual[u] = add(u, (u + 1) % k, 0, -1);

    std::vector<int> chords;
    for (std::size_t c = 0; c < arcs.size(); ++c) {
      const auto& arc = arcs[c];
      const int d = offset(arc.a, arc.b);
      if (d == 1 || d == k - 1) {
        const int u = d == 1 ? arc.a : arc.b;
        if (side_band[u] >= 0) throw InputError("piece layout: duplicate arc class on a polygon side");
        side_band[u] = add(u, (u + 1) % k, arc.mult, static_cast<int>(c));
      } else {
        chords.push_back(add(std::min(arc.a, arc.b), std::max(arc.a, arc.b), arc.mult, static_cast<int>(c)));
      }
    }

    // Two chords conflict when their endpoints interleave around the polygon.
    auto cross = [&](int e, int f) {
      const auto& x = layout.edges_[e];
      const auto& y = layout.edges_[f];
      if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) return false;
      const bool in1 = x.u < y.u && y.u < x.v;
      const bool in2 = x.u < y.v && y.v < x.v;
      return in1 != in2;
    };
    std::vector<int> colour(chords.size(), -1);
    for (std::size_t start = 0; start < chords.size(); ++start) {
      if (colour[start] >= 0) continue;
      colour[start] = 0;
      std::vector<std::size_t> stack{start};
      while (!stack.empty()) {
        const auto c = stack.back();
        stack.pop_back();
        for (std::size_t o = 0; o < chords.size(); ++o) {
          if (o == c || !cross(chords[c], chords[o])) continue;
          if (colour[o] < 0) {
            colour[o] = 1 - colour[c];
            stack.push_back(o);
          } else if (colour[o] == colour[c]) {
            throw InputError("arc system is not routable in the canonical layout; supply a \"rotation\"");
          }
        }
      }
    }

    for (int u = 0; u < k; ++u) {
      const int prev = (u + k - 1) % k;
      std::vector<std::pair<int, int>> inner, outer;  // (offset, half-edge)
      for (std::size_t c = 0; c < chords.size(); ++c) {
        const auto& e = layout.edges_[chords[c]];
        if (e.u != u && e.v != u) continue;
        const int half = 2 * chords[c] + (e.u == u ? 0 : 1);
        const int other = e.u == u ? e.v : e.u;
        (colour[c] == 0 ? inner : outer).emplace_back(offset(u, other), half);
      }
      std::sort(inner.begin(), inner.end());
      std::sort(outer.rbegin(), outer.rend());

      auto& rot = layout.rotation_[u];
      rot.push_back(2 * side_virtual[u]);
      if (side_band[u] >= 0) rot.push_back(2 * side_band[u]);
      for (const auto& [off, half] : inner) rot.push_back(half);
      if (side_band[prev] >= 0) rot.push_back(2 * side_band[prev] + 1);
      rot.push_back(2 * side_virtual[prev] + 1);
      for (const auto& [off, half] : outer) rot.push_back(half);
    }
    layout.finish(false);
    return layout;
  }

  /// A user-supplied embedding: rotation[c] lists arc class indices around
  /// circle c in ccw order. No virtual edges are added, so the arc system must
  /// connect all circles.
  static PieceLayout from_rotation(int circles, const std::vector<ArcClass>& arcs,
                                   const std::vector<std::vector<int>>& rotation) {
    PieceLayout layout;
    layout.circles_ = circles;
    if (static_cast<int>(rotation.size()) != circles) {
      throw InputError("rotation must list every circle");
    }
    for (std::size_t c = 0; c < arcs.size(); ++c) {
      layout.edges_.push_back({arcs[c].a, arcs[c].b, arcs[c].mult, static_cast<int>(c)});
    }
    std::vector<int> seen(2 * arcs.size(), 0);
    layout.rotation_.assign(circles, {});
    for (int c = 0; c < circles; ++c) {
      for (int cls : rotation[c]) {
        if (cls < 0 || cls >= static_cast<int>(arcs.size())) throw InputError("rotation: bad arc class index");
        const auto& arc = arcs[cls];
        int half;
        if (arc.a == c && !seen[2 * cls]) {
          half = 2 * cls;
        } else if (arc.b == c && !seen[2 * cls + 1]) {
          half = 2 * cls + 1;
        } else {
          throw InputError("rotation: arc class " + std::to_string(cls) + " listed at a circle it does not end on");
        }
        seen[half] = 1;
        layout.rotation_[c].push_back(half);
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw InputError("rotation: every arc class must appear at both of its circles");
    }
    layout.finish(true);
    return layout;
  }

  int circles() const { return circles_; }
  const std::vector<LayoutEdge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  int face_count() const { return face_count_; }

  /// Face containing the corner that ends at half-edge h (the corner between
  /// h's ccw predecessor and h).
  int face_of(int half_edge) const { return face_[half_edge]; }
  int vertex_of(int half_edge) const {
    const auto& e = edges_[half_edge / 2];
    return half_edge % 2 == 0 ? e.u : e.v;
  }
  int next_ccw(int half_edge) const { return next_[half_edge]; }

 private:
  void finish(bool user_supplied) {
    const auto halves = edges_.size() * 2;
    next_.assign(halves, -1);
    for (const auto& rot : rotation_) {
      for (std::size_t p = 0; p < rot.size(); ++p) next_[rot[p]] = rot[(p + 1) % rot.size()];
    }
    face_.assign(halves, -1);
    face_count_ = 0;
    for (std::size_t h = 0; h < halves; ++h) {
      if (face_[h] >= 0) continue;
      int x = static_cast<int>(h);
      while (face_[x] < 0) {
        face_[x] = face_count_;
        x = next_[x ^ 1];
      }
      ++face_count_;
    }
    // connected plane graph: V - E + F = 2
    std::vector<int> comp(circles_);
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (const auto& e : edges_) comp[root(e.u)] = root(e.v);
    bool connected = true;
    for (int c = 0; c < circles_; ++c) connected = connected && root(c) == root(0);
    const bool planar = circles_ - static_cast<int>(edges_.size()) + face_count_ == 2;
    if (!connected || !planar) {
      if (user_supplied) throw InputError("rotation does not describe a connected plane embedding");
      throw std::logic_error("canonical piece layout is not a connected plane embedding");
    }
  }

  int circles_ = 0;
  std::vector<LayoutEdge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> next_;
  std::vector<int> face_;
  int face_count_ = 0;
};

/// A planar piece: k >= 2 boundary circles with an embedded arc system.
class PlanarPiece {
 public:
  PlanarPiece(std::string id, int circles, std::vector<ArcClass> arcs,
              std::optional<std::vector<std::vector<int>>> rotation = std::nullopt)
      : id_(std::move(id)), circles_(circles), arcs_(std::move(arcs)) {
    if (circles_ < 2) throw InputError("piece " + id_ + ": needs at least 2 boundary circles");
    for (const auto& arc : arcs_) {
      if (arc.a < 0 || arc.b < 0 || arc.a >= circles_ || arc.b >= circles_) {
        throw InputError("piece " + id_ + ": arc endpoint out of range");
      }
      if (arc.a == arc.b) throw InputError("piece " + id_ + ": arc classes must join distinct circles");
      if (arc.mult <= 0) throw InputError("piece " + id_ + ": arc multiplicities must be positive");
    }
    layout_ = rotation ? PieceLayout::from_rotation(circles_, arcs_, *rotation)
                       : PieceLayout::canonical(circles_, arcs_);
  }

  explicit PlanarPiece(const ArcSystem& system) : PlanarPiece(system.piece, system.circles, system.arcs) {}

  const std::string& id() const { return id_; }
  int circles() const { return circles_; }
  const std::vector<ArcClass>& arcs() const { return arcs_; }
  const PieceLayout& layout() const { return layout_; }

  /// Number of arc endpoints on circle c.
  int endpoint_count(int c) const {
    int total = 0;
    for (const auto& arc : arcs_) total += (arc.a == c ? arc.mult : 0) + (arc.b == c ? arc.mult : 0);
    return total;
  }

 private:
  std::string id_;
  int circles_;
  std::vector<ArcClass> arcs_;
  PieceLayout layout_;
};

/// Minimal number of arcs crossed by an essential loop. A loop separating the
/// circle set S from its complement meets at least the arcs with exactly one
/// end in S, and a minimal such cut is always realised. Boundary-parallel loops
/// (|S| = 1) count as essential.
inline int min_essential_loop(const PlanarPiece& piece) {
  const int k = piece.circles();
  if (k < 2) throw InputError("min_essential_loop: piece needs at least 2 circles");
  int best = std::numeric_limits<int>::max();
  // circle k-1 stays outside S, so each partition is visited once
  const unsigned full = 1u << (k - 1);
  for (unsigned s = 1; s < full; ++s) {
    int cut = 0;
    for (const auto& arc : piece.arcs()) {
      const bool in_a = arc.a < k - 1 && (s >> arc.a & 1u);
      const bool in_b = arc.b < k - 1 && (s >> arc.b & 1u);
      if (in_a != in_b) cut += arc.mult;
    }
    best = std::min(best, cut);
  }
  return best;
}

/// Minimal number of arcs crossed by an essential arc with both ends on
/// circle `b`; std::nullopt when no essential such arc exists (k < 3).
///
/// Shrinking circles to points turns such an arc into a simple closed curve
/// through b that leaves b through one corner and returns through another.
/// Splitting b along those corners into b1, b2 joined by a new edge, the
/// curve separates X = {b1} ∪ T from the rest and crosses exactly the cut
/// δ(X) once each exactly when the dual edges of δ(X) form a connected
/// subgraph of the dual. The arc is essential when T and its complement
/// among the other circles are both non-empty.
inline std::optional<int> min_essential_arc(const PlanarPiece& piece, int b) {
  const int k = piece.circles();
  if (b < 0 || b >= k) throw InputError("min_essential_arc: circle index out of range");
  if (k < 3) return std::nullopt;

  const auto& layout = piece.layout();
  const auto& edges = layout.edges();
  const auto& around = layout.rotation()[b];
  const int deg = static_cast<int>(around.size());

  // other circles get bit positions 0..k-2
  std::vector<int> bit(k, -1);
  for (int c = 0, next = 0; c < k; ++c) {
    if (c != b) bit[c] = next++;
  }
  const unsigned full = 1u << (k - 1);

  std::vector<int> parent(layout.face_count());
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<char> on_b1(edges.size() * 2, 0);
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < deg; ++s) {
    for (int e = 0; e < deg; ++e) {
      std::fill(on_b1.begin(), on_b1.end(), 0);
      for (int p = s; p != e;) {
        p = (p + 1) % deg;
        on_b1[around[p]] = 1;
      }
      const int face_s = layout.face_of(around[(s + 1) % deg]);
      const int face_e = layout.face_of(around[(e + 1) % deg]);

      for (unsigned t = 1; t + 1 < full; ++t) {
        auto in_t = [&](int c) { return (t >> bit[c] & 1u) != 0; };
        auto is_cut = [&](std::size_t x) {
          const auto& edge = edges[x];
          if (edge.u == b) return (on_b1[2 * x] != 0) != in_t(edge.v);
          if (edge.v == b) return (on_b1[2 * x + 1] != 0) != in_t(edge.u);
          return in_t(edge.u) != in_t(edge.v);
        };
        std::iota(parent.begin(), parent.end(), 0);
        parent[root(face_s)] = root(face_e);
        int cost = 0;
        for (std::size_t x = 0; x < edges.size() && cost < best; ++x) {
          if (!is_cut(x)) continue;
          cost += edges[x].weight;
          const int left = layout.face_of(static_cast<int>(2 * x));
          const int right = layout.face_of(static_cast<int>(2 * x + 1));
          parent[root(left)] = root(right);
        }
        if (cost >= best) continue;

        // every face touched by the cut must lie in one dual component
        const int target = root(face_s);
        bool connected = true;
        for (std::size_t x = 0; x < edges.size() && connected; ++x) {
          if (is_cut(x)) connected = root(layout.face_of(static_cast<int>(2 * x))) == target;
        }
        if (connected) best = cost;
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? std::nullopt : std::optional<int>(best);
}

/// Minimum of min_essential_arc over every boundary circle.
inline std::optional<int> min_essential_arc(const PlanarPiece& piece) {
  std::optional<int> best;
  for (int b = 0; b < piece.circles(); ++b) {
    const auto v = min_essential_arc(piece, b);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

// JSON: {"piece":"F1+","circles":3,"arcs":[{"a":0,"b":1,"mult":2}, ...], "rotation":[[...], ...]}

inline void to_json(nlohmann::json& j, const PlanarPiece& p) {
  j = {{"piece", p.id()}, {"circles", p.circles()}, {"arcs", p.arcs()}};
}

inline PlanarPiece piece_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InputError("piece: expected a JSON object");
    std::vector<ArcClass> arcs;
    int max_index = -1;
    for (const auto& a : j.at("arcs")) {
      arcs.push_back({a.at("a").get<int>(), a.at("b").get<int>(), a.at("mult").get<int>()});
      max_index = std::max({max_index, arcs.back().a, arcs.back().b});
    }
    const int circles = j.contains("circles") ? j.at("circles").get<int>() : max_index + 1;
    std::optional<std::vector<std::vector<int>>> rotation;
    if (j.contains("rotation")) rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    return PlanarPiece(j.value("piece", std::string("piece")), circles, std::move(arcs), std::move(rotation));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("piece: ") + e.what());
  }
}

}  // namespace reptopo
