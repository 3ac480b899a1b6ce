#pragma once

// The explicit multicurve families: torus knots on the standard torus, the
// knots K(n, g) with r(F, K) = n, and the links L(p, q) on the genus-2 surface.
// Each family comes with the boundary counts claimed for it.

#include <numeric>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "reptopo/certificate.hpp"
#include "reptopo/error.hpp"
#include "reptopo/smoothing.hpp"
#include "reptopo/surface.hpp"

namespace reptopo {

enum class FamilyKind { TorusKnot, LemmaExactly, LpqLink };

/// For LemmaExactly the parameters are (n, g); otherwise (p, q).
struct FamilySpec {
  FamilyKind kind = FamilyKind::TorusKnot;
  int first = 0;
  int second = 0;

  static FamilySpec torus(int p, int q) { return checked({FamilyKind::TorusKnot, p, q}); }
  static FamilySpec exactly(int n, int g) { return checked({FamilyKind::LemmaExactly, n, g}); }
  static FamilySpec lpq(int p, int q) { return checked({FamilyKind::LpqLink, p, q}); }

  static FamilySpec checked(FamilySpec s) {
    switch (s.kind) {
      case FamilyKind::TorusKnot:
        if (s.first < 1 || s.second < 1) throw InputError("torus: needs p, q >= 1");
        break;
      case FamilyKind::LemmaExactly:
        if (s.first < 2) throw InputError("exactly: needs n >= 2");
        if (s.second < 1) throw InputError("exactly: needs g >= 1");
        break;
      case FamilyKind::LpqLink:
        if (s.first < 1) throw InputError("lpq: needs p >= 1");
        if (s.second <= 3 * s.first) throw InputError("lpq: needs q > 3p");
        break;
    }
    return s;
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string to_string(const FamilySpec& s) {
  const char* name = s.kind == FamilyKind::TorusKnot ? "torus" : s.kind == FamilyKind::LemmaExactly ? "exactly" : "lpq";
  return std::string(name) + ":" + std::to_string(s.first) + "," + std::to_string(s.second);
}

/// "torus:3,5", "exactly:4,2", "lpq:2,7".
inline FamilySpec parse_family(const std::string& text) {
  static const std::regex pattern(R"(^\s*(torus|exactly|lpq)\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw InputError("family spec \"" + text + "\": expected torus:p,q, exactly:n,g or lpq:p,q");
  }
  int x = 0, y = 0;
  try {
    x = std::stoi(m[2]);
    y = std::stoi(m[3]);
  } catch (const std::out_of_range&) {
    throw InputError("family spec \"" + text + "\": parameter out of range");
  }
  if (m[1] == "torus") return FamilySpec::torus(x, y);
  if (m[1] == "exactly") return FamilySpec::exactly(x, y);
  return FamilySpec::lpq(x, y);
}

namespace detail {
inline int ceil_half(int n) { return (n + 1) / 2; }
inline int floor_half(int n) { return n / 2; }
}  // namespace detail

inline MultiCurve generate(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::TorusKnot:
      return MultiCurve(SurfaceModel::standard_torus(), {s.second}, {s.first});
    case FamilyKind::LemmaExactly: {
      const int n = s.first, g = s.second;
      std::vector<int> a(g + 1, detail::ceil_half(n)), b(g + 1, detail::ceil_half(n));
      a[0] = n + 1;
      a[1] = n;
      b[1] = detail::floor_half(n);
      return MultiCurve(SurfaceModel::chain(g), a, b);
    }
    case FamilyKind::LpqLink:
      return MultiCurve(SurfaceModel::chain(2), std::vector<int>(3, s.second), std::vector<int>(3, s.first));
  }
  throw std::logic_error("generate: unknown family");
}

struct ClaimedCount {
  CurveClass cls;
  int expected = 0;
  std::string source;  // where the count is stated
  bool extrapolated = false;
};

/// Boundary counts stated for the family. For K(n, 1) the general pattern
/// degenerates: l_0 meets m_0 and m_1 = m_g, so it counts 2n+1 and there is no l_2.
inline std::vector<ClaimedCount> claimed_counts(const FamilySpec& s) {
  std::vector<ClaimedCount> out;
  switch (s.kind) {
    case FamilyKind::TorusKnot:
      out.push_back({CurveClass::meridian(0), s.first, "torus knot: meridian meets p strands"});
      out.push_back({CurveClass::longitude(0), s.second, "torus knot: longitude meets q strands"});
      break;
    case FamilyKind::LemmaExactly: {
      const int n = s.first, g = s.second;
      const int even = 2 * detail::ceil_half(n);
      out.push_back({CurveClass::meridian(0), n, "K(n,g): m_0 meets ceil(n/2)+floor(n/2) points"});
      out.push_back({CurveClass::meridian(1), n, "K(n,g): m_1 meets n points"});
      for (int i = 2; i <= g; ++i) out.push_back({CurveClass::meridian(i), even, "K(n,g): m_i meets 2 ceil(n/2) points"});
      if (g == 1) {
        out.push_back({CurveClass::longitude(0), 2 * n + 1, "K(n,1): l_0 meets m_0 and m_1, (n+1)+n points", true});
        out.push_back({CurveClass::longitude(1), 2 * n + 1, "K(n,g): l_1 meets 2n+1 points"});
        break;
      }
      out.push_back({CurveClass::longitude(0), n + 1 + detail::ceil_half(n), "K(n,g): l_0 meets n+1+ceil(n/2) points"});
      out.push_back({CurveClass::longitude(1), 2 * n + 1, "K(n,g): l_1 meets 2n+1 points"});
      out.push_back({CurveClass::longitude(2), n + detail::ceil_half(n), "K(n,g): l_2 meets n+ceil(n/2) points"});
      for (int j = 3; j <= g; ++j) out.push_back({CurveClass::longitude(j), even, "K(n,g): l_j meets 2 ceil(n/2) points"});
      break;
    }
    case FamilyKind::LpqLink:
      for (int i = 0; i < 3; ++i) out.push_back({CurveClass::meridian(i), 2 * s.first, "L(p,q): m_i meets 2p points"});
      for (int j = 0; j < 3; ++j) out.push_back({CurveClass::longitude(j), 2 * s.second, "L(p,q): l_j meets 2q points"});
      break;
  }
  return out;
}

/// The value of r(F, ·) the family was built to have: n for K(n, g), 2p for
/// L(p, q), min(p, q) for torus knots.
inline int claimed_representativity(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::TorusKnot: return std::min(s.first, s.second);
    case FamilyKind::LemmaExactly: return s.first;
    case FamilyKind::LpqLink: return 2 * s.first;
  }
  return 0;
}

/// bs recorded for the family: bs(L(p, q)) = 3n with n = 2p. The other
/// families have no recorded value (torus knots get theirs from the bounds).
inline std::optional<int> recorded_bridge_string(const FamilySpec& s) {
  if (s.kind == FamilyKind::LpqLink) return 6 * s.first;
  return std::nullopt;
}

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
};

struct FamilyReport {
  FamilySpec spec;
  std::vector<Check> checks;
  int components = 0;
  std::optional<int> representativity;  // exact r(F, ·) when established
  std::optional<int> bridge_string;
  bool extrapolated = false;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

inline FamilyReport verify_family(const FamilySpec& s) {
  FamilyReport report;
  report.spec = s;
  report.bridge_string = recorded_bridge_string(s);
  const MultiCurve mc = generate(s);

  for (const auto& claim : claimed_counts(s)) {
    const int actual = boundary_count(mc, claim.cls);
    report.extrapolated = report.extrapolated || claim.extrapolated;
    report.checks.push_back({"boundary_count " + to_string(claim.cls), claim.expected, actual, actual == claim.expected});
  }

  report.components = trace_components(mc);
  if (s.kind == FamilyKind::TorusKnot) {
    const int expected = std::gcd(s.first, s.second);
    report.checks.push_back({"components", expected, report.components, report.components == expected});
  } else if (s.kind == FamilyKind::LemmaExactly) {
    report.checks.push_back({"components", 1, report.components, report.components == 1});
  }

  const int claimed = claimed_representativity(s);
  if (s.kind == FamilyKind::TorusKnot) {
    const auto ub = upper_bound(mc);
    report.checks.push_back({"upper_bound", claimed, ub.value, ub.value == claimed});
    if (ub.value == claimed) report.representativity = claimed;
  } else {
    const auto rep = representativity_exact(mc);
    report.checks.push_back({"certificate lower bound", claimed, rep.lower, rep.lower == claimed});
    report.checks.push_back({"upper_bound", claimed, rep.upper, rep.upper == claimed});
    report.representativity = rep.exact;
  }
  return report;
}

inline void to_json(nlohmann::json& j, const Check& c) {
  j = {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

inline void to_json(nlohmann::json& j, const FamilyReport& r) {
  j = {{"spec", to_string(r.spec)}, {"checks", r.checks}, {"components", r.components},
       {"pass", r.passed()}, {"extrapolated", r.extrapolated}};
  j["r"] = r.representativity ? nlohmann::json(*r.representativity) : nlohmann::json(nullptr);
  j["recorded_bs"] = r.bridge_string ? nlohmann::json(*r.bridge_string) : nlohmann::json(nullptr);
}

}  // namespace reptopo
