#pragma once

// Standard surfaces in S^3 with their meridian/longitude curve classes and
// multicurves (non-negative combinations of parallel copies of those classes).
//
// Chain(g) is a genus-g Heegaard surface with meridians m_0..m_g bounding disks
// on one side and longitudes l_0..l_g bounding disks on the other. The classes
// form a cycle m_0 - l_1 - m_1 - l_2 - ... - m_g - l_0 - m_0 in which every
// curve meets its two neighbours exactly once.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "reptopo/error.hpp"

namespace reptopo {

enum class SurfaceKind { StandardTorus, Chain };

class SurfaceModel {
 public:
  static SurfaceModel standard_torus() { return SurfaceModel(SurfaceKind::StandardTorus, 1); }

  static SurfaceModel chain(int genus) {
    if (genus < 1) throw InputError("chain surface needs genus >= 1, got " + std::to_string(genus));
    return SurfaceModel(SurfaceKind::Chain, genus);
  }

  SurfaceKind kind() const { return kind_; }
  int genus() const { return genus_; }
  bool is_chain() const { return kind_ == SurfaceKind::Chain; }

  /// Number of meridian classes, which equals the number of longitude classes.
  int class_count() const { return kind_ == SurfaceKind::Chain ? genus_ + 1 : 1; }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  SurfaceModel(SurfaceKind kind, int genus) : kind_(kind), genus_(genus) {}

  SurfaceKind kind_;
  int genus_;
};

enum class Family { Meridian, Longitude };

struct CurveClass {
  Family family = Family::Meridian;
  int index = 0;

  static CurveClass meridian(int i) { return {Family::Meridian, i}; }
  static CurveClass longitude(int j) { return {Family::Longitude, j}; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

inline std::string to_string(const CurveClass& c) {
  return (c.family == Family::Meridian ? "m" : "l") + std::to_string(c.index);
}

namespace detail {

inline void check_index(const SurfaceModel& s, int index, const char* what) {
  if (index < 0 || index >= s.class_count()) {
    throw InputError(std::string(what) + " index " + std::to_string(index) + " out of range [0, " +
                     std::to_string(s.class_count() - 1) + "]");
  }
}

}  // namespace detail

/// The two meridian classes crossed by longitude l_j, smaller index first.
/// On the torus both entries are 0.
inline std::array<int, 2> crossed_meridians(const SurfaceModel& s, int j) {
  detail::check_index(s, j, "longitude");
  if (!s.is_chain()) return {0, 0};
  const int g = s.genus();
  return j == 0 ? std::array<int, 2>{0, g} : std::array<int, 2>{j - 1, j};
}

/// The two longitude classes crossed by meridian m_i, smaller index first.
inline std::array<int, 2> crossed_longitudes(const SurfaceModel& s, int i) {
  detail::check_index(s, i, "meridian");
  if (!s.is_chain()) return {0, 0};
  const int g = s.genus();
  return i == g ? std::array<int, 2>{0, g} : std::array<int, 2>{i, i + 1};
}

/// Geometric intersection number of l_j and m_i (0 or 1).
inline int pairing(const SurfaceModel& s, int j, int i) {
  detail::check_index(s, j, "longitude");
  detail::check_index(s, i, "meridian");
  const auto m = crossed_meridians(s, j);
  return (i == m[0] || i == m[1]) ? 1 : 0;
}

/// Sign of the crossing between l_j and m_i under the fixed orientation
/// convention (m_i oriented as the boundary of the positive planar piece,
/// l_j running from m_{j-1} to m_j through that piece). Only meaningful when
/// pairing(s, j, i) == 1.
inline int crossing_sign(const SurfaceModel& s, int j, int i) {
  if (!s.is_chain()) return +1;
  const int n = s.class_count();
  return i == (j + n - 1) % n ? +1 : -1;
}

class MultiCurve {
 public:
  MultiCurve(SurfaceModel surface, std::vector<int> meridians, std::vector<int> longitudes)
      : surface_(surface), meridians_(std::move(meridians)), longitudes_(std::move(longitudes)) {
    const auto n = static_cast<std::size_t>(surface_.class_count());
    if (meridians_.size() != n || longitudes_.size() != n) {
      throw InputError("multicurve needs " + std::to_string(n) + " meridian and longitude coefficients");
    }
    bool any = false;
    for (int c : meridians_) {
      if (c < 0) throw InputError("multicurve coefficients must be non-negative");
      any = any || c > 0;
    }
    for (int c : longitudes_) {
      if (c < 0) throw InputError("multicurve coefficients must be non-negative");
      any = any || c > 0;
    }
    if (!any) throw InputError("multicurve is empty (all coefficients zero)");
  }

  const SurfaceModel& surface() const { return surface_; }
  const std::vector<int>& meridians() const { return meridians_; }
  const std::vector<int>& longitudes() const { return longitudes_; }

  int coefficient(const CurveClass& c) const {
    detail::check_index(surface_, c.index, c.family == Family::Meridian ? "meridian" : "longitude");
    return c.family == Family::Meridian ? meridians_[c.index] : longitudes_[c.index];
  }

  friend bool operator==(const MultiCurve&, const MultiCurve&) = default;

 private:
  SurfaceModel surface_;
  std::vector<int> meridians_;
  std::vector<int> longitudes_;
};

/// Number of points in which a push-off of `c` meets the smoothed multicurve.
inline int boundary_count(const MultiCurve& mc, const CurveClass& c) {
  const auto& s = mc.surface();
  int total = 0;
  if (c.family == Family::Meridian) {
    detail::check_index(s, c.index, "meridian");
    for (int j = 0; j < s.class_count(); ++j) total += mc.longitudes()[j] * pairing(s, j, c.index);
  } else {
    detail::check_index(s, c.index, "longitude");
    for (int i = 0; i < s.class_count(); ++i) total += mc.meridians()[i] * pairing(s, c.index, i);
  }
  return total;
}

// JSON: {"surface":{"kind":"chain","genus":2},"meridians":[7,7,7],"longitudes":[2,2,2]}

inline void to_json(nlohmann::json& j, const SurfaceModel& s) {
  if (s.is_chain()) {
    j = {{"kind", "chain"}, {"genus", s.genus()}};
  } else {
    j = {{"kind", "torus"}, {"genus", 1}};
  }
}

inline SurfaceModel surface_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("surface: expected object with \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "torus") return SurfaceModel::standard_torus();
  if (kind == "chain") {
    if (!j.contains("genus")) throw InputError("surface: chain needs \"genus\"");
    return SurfaceModel::chain(j.at("genus").get<int>());
  }
  throw InputError("surface: unknown kind \"" + kind + "\"");
}

inline void to_json(nlohmann::json& j, const MultiCurve& mc) {
  j = {{"surface", mc.surface()}, {"meridians", mc.meridians()}, {"longitudes", mc.longitudes()}};
}

inline MultiCurve multicurve_from_json(const nlohmann::json& j) {
  try {
    return MultiCurve(surface_from_json(j.at("surface")), j.at("meridians").get<std::vector<int>>(),
                      j.at("longitudes").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("multicurve: ") + e.what());
  }
}

}  // namespace reptopo
