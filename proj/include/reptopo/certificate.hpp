#pragma once

// Lower-bound certificates for r(F, Γ) from planar pieces, and the matching
// upper bound from disk boundaries that meet Γ few times.
//
// If every essential loop in every piece meets Γ at least n times and every
// essential same-boundary arc meets it at least n/2 times, then every
// compressing disk boundary meets Γ at least n times.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "reptopo/planar_piece.hpp"
#include "reptopo/smoothing.hpp"
#include "reptopo/surface.hpp"

namespace reptopo {

struct PieceMinima {
  std::string id;
  int loop_min = 0;
  std::optional<int> arc_min;  // nullopt: no essential same-boundary arc exists
};

struct Certificate {
  int n = 0;
  std::vector<PieceMinima> pieces;
  bool lower_ok = false;
  std::optional<int> upper;
  std::optional<int> exact;
};

inline PieceMinima piece_minima(const PlanarPiece& piece) {
  return {piece.id(), min_essential_loop(piece), min_essential_arc(piece)};
}

/// Loop minima must reach n and arc minima n/2 (compared as 2*arc >= n).
inline bool satisfies(const PieceMinima& m, int n) {
  return m.loop_min >= n && (!m.arc_min || 2 * *m.arc_min >= n);
}

/// Largest n accepted by every piece.
inline int largest_certified(std::span<const PieceMinima> minima) {
  int best = std::numeric_limits<int>::max();
  for (const auto& m : minima) {
    best = std::min(best, m.loop_min);
    if (m.arc_min) best = std::min(best, 2 * *m.arc_min);
  }
  return best;
}

namespace detail {

inline void settle(Certificate& cert) {
  cert.lower_ok = std::all_of(cert.pieces.begin(), cert.pieces.end(),
                              [&](const PieceMinima& m) { return satisfies(m, cert.n); });
  cert.exact.reset();
  if (cert.lower_ok && cert.upper && *cert.upper == cert.n) cert.exact = cert.n;
}

}  // namespace detail

/// Certificate over caller-supplied pieces (hand-encoded instances). `upper`
/// is the smallest known intersection count of a compressing disk boundary.
inline Certificate certify_pieces(std::span<const PlanarPiece> pieces, int n, std::optional<int> upper = std::nullopt) {
  if (pieces.empty()) throw InputError("certificate needs at least one piece");
  if (n < 0) throw InputError("certificate target n must be non-negative");
  Certificate cert;
  cert.n = n;
  cert.upper = upper;
  for (const auto& p : pieces) cert.pieces.push_back(piece_minima(p));
  detail::settle(cert);
  return cert;
}

/// The four pieces obtained by cutting a chain-surface multicurve along all
/// meridians and along all longitudes.
inline std::vector<PlanarPiece> chain_pieces(const MultiCurve& mc) {
  std::vector<PlanarPiece> pieces;
  for (auto side : {CutSide::AlongMeridians, CutSide::AlongLongitudes}) {
    auto [plus, minus] = cut_pieces(mc, side);
    pieces.emplace_back(plus);
    pieces.emplace_back(minus);
  }
  return pieces;
}

struct UpperBound {
  int value = 0;
  CurveClass witness;
};

/// Every meridian bounds a disk on one side and every longitude on the other,
/// so the least boundary_count over all classes bounds r(F, ·) from above.
inline UpperBound upper_bound(const MultiCurve& mc) {
  UpperBound best{std::numeric_limits<int>::max(), {}};
  for (auto family : {Family::Meridian, Family::Longitude}) {
    for (int i = 0; i < mc.surface().class_count(); ++i) {
      const CurveClass c{family, i};
      const int count = boundary_count(mc, c);
      if (count < best.value) best = {count, c};
    }
  }
  return best;
}

/// Lower-bound certificate for a chain multicurve, with the disk systems fixed
/// to the full meridian and longitude families. The upper bound is left empty.
inline Certificate certify_lower(const MultiCurve& mc, int n) {
  const auto pieces = chain_pieces(mc);
  return certify_pieces(pieces, n);
}

struct Representativity {
  int lower = 0;  // largest certified n
  int upper = 0;
  CurveClass upper_witness;
  std::optional<int> exact;
  Certificate certificate;  // at n = lower, upper filled in
};

/// Largest certified lower bound in [0, upper_bound(mc)] together with the
/// upper bound; exact when they meet. Piece minima do not depend on n, so the
/// search collapses to a minimum over the pieces.
inline Representativity representativity_exact(const MultiCurve& mc) {
  const auto pieces = chain_pieces(mc);
  std::vector<PieceMinima> minima;
  for (const auto& p : pieces) minima.push_back(piece_minima(p));

  const auto ub = upper_bound(mc);
  Representativity r;
  r.upper = ub.value;
  r.upper_witness = ub.witness;
  r.lower = std::min(largest_certified(minima), ub.value);
  r.certificate.n = r.lower;
  r.certificate.pieces = std::move(minima);
  r.certificate.upper = ub.value;
  detail::settle(r.certificate);
  if (r.lower == r.upper) r.exact = r.lower;
  return r;
}

// {"n":4,"pieces":[{"id":"F1+","loop_min":4,"arc_min":2},...],"lower_ok":true,"upper":4,"exact":4}

inline void to_json(nlohmann::json& j, const PieceMinima& m) {
  j = {{"id", m.id}, {"loop_min", m.loop_min}};
  j["arc_min"] = m.arc_min ? nlohmann::json(*m.arc_min) : nlohmann::json(nullptr);
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
  j = {{"n", c.n}, {"pieces", c.pieces}, {"lower_ok", c.lower_ok}};
  j["upper"] = c.upper ? nlohmann::json(*c.upper) : nlohmann::json(nullptr);
  j["exact"] = c.exact ? nlohmann::json(*c.exact) : nlohmann::json(nullptr);
}

}  // namespace reptopo
