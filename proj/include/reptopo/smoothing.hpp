#pragma once

// Oriented smoothing of a multicurve and the arc systems left on the planar
// pieces after cutting along a full family of disk boundaries.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>
#include <json.hpp>

#include "reptopo/error.hpp"
#include "reptopo/surface.hpp"

namespace reptopo {

/// One transverse crossing between a copy of l_j and a copy of m_i.
struct Crossing {
  int longitude = 0;       // class index j
  int longitude_copy = 0;  // 0-based copy, ordered from the left of l_j
  int meridian = 0;        // class index i
  int meridian_copy = 0;   // 0-based copy, ordered from the left of m_i
  int sign = +1;           // +1: l_j crosses m_i from its right to its left
};

/// Every crossing of the parallel copies, plus the cyclic order in which each
/// copy meets them. Copies with no crossings have an empty sequence.
struct CrossingTable {
  std::vector<Crossing> crossings;
  /// meridian_paths[i][k]: crossing ids met along copy k of m_i, in travel order.
  std::vector<std::vector<std::vector<int>>> meridian_paths;
  /// longitude_paths[j][t]: crossing ids met along copy t of l_j, in travel order.
  std::vector<std::vector<std::vector<int>>> longitude_paths;
};

namespace detail {

inline std::vector<int> distinct(std::array<int, 2> v) {
  if (v[0] == v[1]) return {v[0]};
  return {v[0], v[1]};
}

}  // namespace detail

/// Lays the copies out in the crossing squares around each l_j ∩ m_i point.
///
/// In a square drawn with m_i pointing up, meridian copies are columns ordered
/// west to east. l_j points east at positive crossings and west at negative
/// ones, so its copies (left of l_j first) are rows from the top or from the
/// bottom respectively. Copy order is preserved along the bands between squares.
inline CrossingTable build_crossing_table(const MultiCurve& mc) {
  const auto& s = mc.surface();
  const int n = s.class_count();
  const auto& a = mc.meridians();
  const auto& b = mc.longitudes();

  CrossingTable table;
  // id_of[j][i] -> base id of the square, crossings stored column-major (k, t)
  std::vector<std::vector<int>> base(n, std::vector<int>(n, -1));
  for (int j = 0; j < n; ++j) {
    for (int i : detail::distinct(crossed_meridians(s, j))) {
      base[j][i] = static_cast<int>(table.crossings.size());
      const int sign = crossing_sign(s, j, i);
      for (int k = 0; k < a[i]; ++k) {
        for (int t = 0; t < b[j]; ++t) table.crossings.push_back({j, t, i, k, sign});
      }
    }
  }
  auto id = [&](int j, int i, int k, int t) { return base[j][i] + k * b[j] + t; };

  table.meridian_paths.resize(n);
  for (int i = 0; i < n; ++i) {
    table.meridian_paths[i].resize(a[i]);
    for (int k = 0; k < a[i]; ++k) {
      auto& path = table.meridian_paths[i][k];
      for (int j : detail::distinct(crossed_longitudes(s, i))) {
        // travelling up the square: rows bottom to top
        if (crossing_sign(s, j, i) > 0) {
          for (int t = b[j] - 1; t >= 0; --t) path.push_back(id(j, i, k, t));
        } else {
          for (int t = 0; t < b[j]; ++t) path.push_back(id(j, i, k, t));
        }
      }
    }
  }
  table.longitude_paths.resize(n);
  for (int j = 0; j < n; ++j) {
    table.longitude_paths[j].resize(b[j]);
    for (int t = 0; t < b[j]; ++t) {
      auto& path = table.longitude_paths[j][t];
      for (int i : detail::distinct(crossed_meridians(s, j))) {
        if (crossing_sign(s, j, i) > 0) {
          for (int k = 0; k < a[i]; ++k) path.push_back(id(j, i, k, t));
        } else {
          for (int k = a[i] - 1; k >= 0; --k) path.push_back(id(j, i, k, t));
        }
      }
    }
  }
  return table;
}

/// Number of connected components of the smoothed multicurve.
///
/// At every crossing the longitude strand turns left onto the meridian strand.
/// At a positive crossing that joins incoming longitude to outgoing meridian
/// (and incoming meridian to outgoing longitude); at a negative crossing it
/// joins the two incoming ends and the two outgoing ends.
inline int trace_components(const MultiCurve& mc) {
  const CrossingTable table = build_crossing_table(mc);
  enum Slot { LongIn = 0, LongOut = 1, MerIn = 2, MerOut = 3 };
  const auto slots = table.crossings.size() * 4;

  std::vector<std::size_t> rank(slots), parent(slots);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (std::size_t x = 0; x < slots; ++x) sets.make_set(x);
  auto slot = [](int crossing, Slot which) { return static_cast<std::size_t>(crossing) * 4 + which; };

  for (std::size_t c = 0; c < table.crossings.size(); ++c) {
    const int id = static_cast<int>(c);
    if (table.crossings[c].sign > 0) {
      sets.union_set(slot(id, LongIn), slot(id, MerOut));
      sets.union_set(slot(id, MerIn), slot(id, LongOut));
    } else {
      sets.union_set(slot(id, LongIn), slot(id, MerIn));
      sets.union_set(slot(id, LongOut), slot(id, MerOut));
    }
  }

  int free_copies = 0;
  auto link_path = [&](const std::vector<int>& path, Slot out, Slot in) {
    if (path.empty()) {
      ++free_copies;
      return;
    }
    for (std::size_t r = 0; r < path.size(); ++r) {
      sets.union_set(slot(path[r], out), slot(path[(r + 1) % path.size()], in));
    }
  };
  for (const auto& copies : table.meridian_paths) {
    for (const auto& path : copies) link_path(path, MerOut, MerIn);
  }
  for (const auto& copies : table.longitude_paths) {
    for (const auto& path : copies) link_path(path, LongOut, LongIn);
  }

  int components = 0;
  for (std::size_t x = 0; x < slots; ++x) {
    if (sets.find_set(x) == x) ++components;
  }
  return components + free_copies;
}

/// A class of parallel arcs joining boundary circles `a` and `b` (a != b).
struct ArcClass {
  int a = 0;
  int b = 0;
  int mult = 0;

  friend bool operator==(const ArcClass&, const ArcClass&) = default;
};

/// Arcs of the smoothed curve inside one planar piece.
struct ArcSystem {
  std::string piece;
  int circles = 0;
  std::vector<ArcClass> arcs;

  friend bool operator==(const ArcSystem&, const ArcSystem&) = default;
};

enum class CutSide { AlongMeridians, AlongLongitudes };

namespace detail {

inline void add_arc(std::vector<ArcClass>& arcs, int u, int v, int mult) {
  if (mult <= 0) return;
  if (u > v) std::swap(u, v);
  for (auto& arc : arcs) {
    if (arc.a == u && arc.b == v) {
      arc.mult += mult;
      return;
    }
  }
  arcs.push_back({u, v, mult});
}

}  // namespace detail

/// Cuts the chain surface along every meridian (side 1) or every longitude
/// (side 2) and returns the arc systems on the two planar pieces F+ and F-.
/// Both pieces carry the same system. Circle c of the pieces is the push-off of
/// the cut class with index c. Parallel classes joining the same pair of
/// circles (only possible for genus 1) are merged.
inline std::pair<ArcSystem, ArcSystem> cut_pieces(const MultiCurve& mc, CutSide side) {
  const auto& s = mc.surface();
  if (!s.is_chain()) {
    throw InputError("cut_pieces: the standard torus cuts into annuli; use the torus upper bound instead");
  }
  const int n = s.class_count();
  const bool meridians = side == CutSide::AlongMeridians;

  std::vector<ArcClass> arcs;
  for (int c = 0; c < n; ++c) {
    const auto ends = meridians ? crossed_meridians(s, c) : crossed_longitudes(s, c);
    const int mult = meridians ? mc.longitudes()[c] : mc.meridians()[c];
    detail::add_arc(arcs, ends[0], ends[1], mult);
  }
  const std::string prefix = meridians ? "F1" : "F2";
  return {ArcSystem{prefix + "+", n, arcs}, ArcSystem{prefix + "-", n, arcs}};
}

inline void to_json(nlohmann::json& j, const ArcClass& arc) {
  j = {{"a", arc.a}, {"b", arc.b}, {"mult", arc.mult}};
}

inline void to_json(nlohmann::json& j, const ArcSystem& sys) {
  j = {{"piece", sys.piece}, {"circles", sys.circles}, {"arcs", sys.arcs}};
}

}  // namespace reptopo
