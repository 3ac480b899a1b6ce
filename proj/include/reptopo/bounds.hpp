#pragma once

// Interval propagation over the known relations between representativity r,
// bridge number b, bridge string number bs, waist and first Betti number.
//
// Every bound carries the chain of rules that produced it. Propagation runs in
// synchronous rounds: each round evaluates every rule against the previous
// state, so the result and its provenance do not depend on rule order.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "reptopo/error.hpp"

namespace reptopo {

using Rational = boost::rational<long long>;

enum class Attribute { r, b, bs, waist, beta1, components };
inline constexpr std::array<Attribute, 6> kAttributes{Attribute::r, Attribute::b, Attribute::bs,
                                                      Attribute::waist, Attribute::beta1, Attribute::components};

inline std::string to_string(Attribute a) {
  switch (a) {
    case Attribute::r: return "r";
    case Attribute::b: return "b";
    case Attribute::bs: return "bs";
    case Attribute::waist: return "waist";
    case Attribute::beta1: return "beta1";
    case Attribute::components: return "components";
  }
  return "?";
}

inline Attribute parse_attribute(const std::string& s) {
  for (auto a : kAttributes) {
    if (to_string(a) == s) return a;
  }
  throw InputError("unknown attribute \"" + s + "\"");
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// One end of an interval and the rules behind it, innermost premise first.
struct Bound {
  Rational value;
  std::vector<std::string> chain;
};

struct Fact {
  Attribute attribute = Attribute::r;
  Bound lo{0, {"default"}};
  std::optional<Bound> hi;  // nullopt: unbounded

  bool empty() const { return hi && hi->value < lo.value; }
  bool is_point(long long v) const { return lo.value == Rational(v) && hi && hi->value == Rational(v); }
};

struct SubjectTags {
  bool nontrivial_knot = false;
  std::optional<std::pair<int, int>> torus_knot;
  bool two_bridge = false;
  bool algebraic = false;
  std::optional<std::array<int, 3>> pretzel;
  bool composite = false;
  bool has_conway_sphere = false;
  bool theta_curve = false;
  bool primitive = false;
  bool spatial_graph = false;

  bool is_knot() const { return nontrivial_knot; }
};

/// Knot tags imply nontrivial_knot and theta_curve implies spatial_graph;
/// conflicting combinations and trivial subjects are rejected.
inline SubjectTags normalize(SubjectTags t) {
  if (t.torus_knot) {
    auto [p, q] = *t.torus_knot;
    if (std::min(std::abs(p), std::abs(q)) < 2) throw InputError("torus_knot(p,q) with |p| or |q| < 2 is trivial");
    if (std::gcd(p, q) != 1) throw InputError("torus_knot(p,q) needs gcd(p,q) = 1");
  }
  if (t.torus_knot || t.two_bridge || t.algebraic || t.pretzel || t.composite || t.has_conway_sphere) {
    t.nontrivial_knot = true;
  }
  if (t.theta_curve) t.spatial_graph = true;
  if (t.nontrivial_knot && t.theta_curve) throw InputError("tags: a knot is not a theta-curve");
  if (t.composite && (t.torus_knot || t.two_bridge)) throw InputError("tags: torus and 2-bridge knots are prime");
  if (!t.nontrivial_knot && !t.spatial_graph) {
    throw InputError("tags: subject must be a non-trivial knot or spatial graph");
  }
  return t;
}

/// Parses "torus_knot=3,5", "pretzel=-2,3,7", "two_bridge", ...
inline void apply_tag(SubjectTags& t, const std::string& text) {
  static const std::regex pattern(R"(^\s*([a-z_]+)\s*(?:=\s*(-?\d+(?:\s*,\s*-?\d+)*))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("tag \"" + text + "\": malformed");
  const std::string name = m[1];
  std::vector<int> args;
  if (m[2].matched) {
    static const std::regex number(R"(-?\d+)");
    const std::string list = m[2];
    for (std::sregex_iterator it(list.begin(), list.end(), number), end; it != end; ++it) {
      args.push_back(std::stoi(it->str()));
    }
  }
  auto flag = [&](bool& field) {
    if (!args.empty()) throw InputError("tag \"" + name + "\" takes no parameters");
    field = true;
  };
  if (name == "torus_knot") {
    if (args.size() != 2) throw InputError("tag torus_knot needs p,q");
    t.torus_knot = std::pair{args[0], args[1]};
  } else if (name == "pretzel") {
    if (args.size() != 3) throw InputError("tag pretzel needs p,q,r");
    t.pretzel = std::array{args[0], args[1], args[2]};
  } else if (name == "nontrivial_knot") flag(t.nontrivial_knot);
  else if (name == "two_bridge") flag(t.two_bridge);
  else if (name == "algebraic") flag(t.algebraic);
  else if (name == "composite") flag(t.composite);
  else if (name == "has_conway_sphere") flag(t.has_conway_sphere);
  else if (name == "theta_curve") flag(t.theta_curve);
  else if (name == "primitive") flag(t.primitive);
  else if (name == "spatial_graph") flag(t.spatial_graph);
  else throw InputError("unknown tag \"" + name + "\"");
}

struct Seed {
  Attribute attribute;
  Rational lo;
  std::optional<Rational> hi;
};

/// "b=3" or "bs=4..8" (closed range).
inline Seed parse_seed(const std::string& text) {
  static const std::regex pattern(R"(^\s*([a-z0-9_]+)\s*=\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("seed \"" + text + "\": expected attr=value or attr=lo..hi");
  const long long lo = std::stoll(m[2]);
  const long long hi = m[3].matched ? std::stoll(m[3]) : lo;
  return {parse_attribute(m[1]), lo, hi};
}

/// E - V + C for a graph with V vertices, E edges and C components.
inline int betti1(int vertices, int edges, int components) {
  if (vertices < 1 || edges < 0 || components < 1 || components > vertices) {
    throw InputError("betti1: inconsistent graph counts");
  }
  const int value = edges - vertices + components;
  if (value < 0) throw InputError("betti1: a graph with these counts cannot exist");
  return value;
}

struct Contradiction {
  Attribute attribute;
  Bound lo;
  Bound hi;
};

class FactSet {
 public:
  FactSet() {
    for (auto a : kAttributes) facts_[index(a)].attribute = a;
  }

  const Fact& operator[](Attribute a) const { return facts_[index(a)]; }
  Fact& operator[](Attribute a) { return facts_[index(a)]; }
  const std::array<Fact, 6>& facts() const { return facts_; }

  std::optional<Contradiction> contradiction;
  int rounds = 0;

  /// Same intervals and same verdict; provenance is not compared.
  bool same_intervals(const FactSet& other) const {
    if (contradiction.has_value() != other.contradiction.has_value()) return false;
    if (contradiction) return true;
    for (auto a : kAttributes) {
      const auto& x = (*this)[a];
      const auto& y = other[a];
      if (x.lo.value != y.lo.value || x.hi.has_value() != y.hi.has_value()) return false;
      if (x.hi && x.hi->value != y.hi->value) return false;
    }
    return true;
  }

 private:
  static std::size_t index(Attribute a) { return static_cast<std::size_t>(a); }
  std::array<Fact, 6> facts_;
};

/// A proposed bound: attribute side, value, producing rule and premises.
struct Proposal {
  Attribute attribute;
  bool upper;
  Rational value;
  std::string rule;
  std::vector<const Bound*> premises;
};

struct Rule {
  std::string id;
  std::string statement;
  std::function<bool(const SubjectTags&)> applies;
  std::function<void(const SubjectTags&, const FactSet&, std::vector<Proposal>&)> propose;
};

namespace detail {

inline Rational floor_q(const Rational& q) {
  long long f = q.numerator() / q.denominator();
  if (q.numerator() < 0 && q.numerator() % q.denominator() != 0) --f;
  return f;
}

inline Rational ceil_q(const Rational& q) {
  const Rational f = floor_q(q);
  return f == q ? f : f + 1;
}

inline bool pretzel_listed(const std::array<int, 3>& p) {
  const std::array<std::array<int, 3>, 2> listed{{{-2, 3, 3}, {-2, 3, 5}}};
  for (const auto& l : listed) {
    if (p == l) return true;
    if (p == std::array{-l[0], -l[1], -l[2]}) return true;
  }
  return false;
}

struct Emitter {
  const FactSet& s;
  std::vector<Proposal>& out;
  std::string rule;

  void lo(Attribute a, Rational v, std::vector<const Bound*> premises = {}) {
    out.push_back({a, false, v, rule, std::move(premises)});
  }
  void hi(Attribute a, Rational v, std::vector<const Bound*> premises = {}) {
    out.push_back({a, true, v, rule, std::move(premises)});
  }
  void point(Attribute a, Rational v) {
    lo(a, v);
    hi(a, v);
  }
  const Bound& L(Attribute a) const { return s[a].lo; }
  const Bound* H(Attribute a) const { return s[a].hi ? &*s[a].hi : nullptr; }
};

template <class F>
Rule make_rule(std::string id, std::string statement, std::function<bool(const SubjectTags&)> applies, F body) {
  Rule rule{id, std::move(statement), std::move(applies), {}};
  rule.propose = [id, body](const SubjectTags& t, const FactSet& s, std::vector<Proposal>& out) {
    Emitter e{s, out, id};
    body(t, e);
  };
  return rule;
}

}  // namespace detail

/// The rule set. INT closes intervals to integers, since every attribute is
/// a count; the halves and thirds from R1, R3 and R12 are kept exact until then.
inline const std::vector<Rule>& rules() {
  using A = Attribute;
  using detail::Emitter;
  auto always = [](const SubjectTags&) { return true; };
  auto knot = [](const SubjectTags& t) { return t.is_knot(); };
  static const std::vector<Rule> all = {
      detail::make_rule("R1", "r <= bs/2", always,
                        [](const SubjectTags&, Emitter& e) {
                          if (auto* h = e.H(A::bs)) e.hi(A::r, h->value / 2, {h});
                          e.lo(A::bs, e.L(A::r).value * 2, {&e.L(A::r)});
                        }),
      detail::make_rule("R2", "knots: 2 <= r <= b", knot,
                        [](const SubjectTags&, Emitter& e) {
                          e.lo(A::r, 2);
                          if (auto* h = e.H(A::b)) e.hi(A::r, h->value, {h});
                          e.lo(A::b, e.L(A::r).value, {&e.L(A::r)});
                        }),
      detail::make_rule("R3", "knots: bs = 2b", knot,
                        [](const SubjectTags&, Emitter& e) {
                          e.lo(A::bs, e.L(A::b).value * 2, {&e.L(A::b)});
                          e.lo(A::b, e.L(A::bs).value / 2, {&e.L(A::bs)});
                          if (auto* h = e.H(A::b)) e.hi(A::bs, h->value * 2, {h});
                          if (auto* h = e.H(A::bs)) e.hi(A::b, h->value / 2, {h});
                        }),
      detail::make_rule("R4", "torus_knot(p,q): r = b = min(|p|,|q|)",
                        [](const SubjectTags& t) { return t.torus_knot.has_value(); },
                        [](const SubjectTags& t, Emitter& e) {
                          const int m = std::min(std::abs(t.torus_knot->first), std::abs(t.torus_knot->second));
                          e.point(A::r, m);
                          e.point(A::b, m);
                        }),
      detail::make_rule("R5", "two_bridge: r = 2 (and b = 2)",
                        [](const SubjectTags& t) { return t.two_bridge; },
                        [](const SubjectTags&, Emitter& e) {
                          e.point(A::r, 2);
                          e.point(A::b, 2);
                        }),
      detail::make_rule("R6", "algebraic: r <= 3", [](const SubjectTags& t) { return t.algebraic; },
                        [](const SubjectTags&, Emitter& e) { e.hi(A::r, 3); }),
      detail::make_rule("R7", "pretzel(p,q,r): r = 3 for +-(-2,3,3), +-(-2,3,5)",
                        [](const SubjectTags& t) { return t.pretzel && detail::pretzel_listed(*t.pretzel); },
                        [](const SubjectTags&, Emitter& e) { e.point(A::r, 3); }),
      detail::make_rule("R8", "composite: r = 2", [](const SubjectTags& t) { return t.composite; },
                        [](const SubjectTags&, Emitter& e) { e.point(A::r, 2); }),
      detail::make_rule("R9", "Conway sphere: r <= 4", [](const SubjectTags& t) { return t.has_conway_sphere; },
                        [](const SubjectTags&, Emitter& e) { e.hi(A::r, 4); }),
      detail::make_rule("R10", "theta_curve: bs <= 2b + 1", [](const SubjectTags& t) { return t.theta_curve; },
                        [](const SubjectTags&, Emitter& e) {
                          if (auto* h = e.H(A::b)) e.hi(A::bs, h->value * 2 + 1, {h});
                          e.lo(A::b, (e.L(A::bs).value - 1) / 2, {&e.L(A::bs)});
                        }),
      detail::make_rule("R11", "primitive: r <= beta1", [](const SubjectTags& t) { return t.primitive; },
                        [](const SubjectTags&, Emitter& e) {
                          if (auto* h = e.H(A::beta1)) e.hi(A::r, h->value, {h});
                          e.lo(A::beta1, e.L(A::r).value, {&e.L(A::r)});
                        }),
      detail::make_rule("R12", "knots: waist <= bs/3", knot,
                        [](const SubjectTags&, Emitter& e) {
                          if (auto* h = e.H(A::bs)) e.hi(A::waist, h->value / 3, {h});
                          e.lo(A::bs, e.L(A::waist).value * 3, {&e.L(A::waist)});
                        }),
      detail::make_rule("R13", "non-trivial: r >= 1", always, [](const SubjectTags&, Emitter& e) { e.lo(A::r, 1); }),
      detail::make_rule("K", "knots: one component, beta1 = 1", knot,
                        [](const SubjectTags&, Emitter& e) {
                          e.point(A::components, 1);
                          e.point(A::beta1, 1);
                        }),
      detail::make_rule("INT", "every attribute is an integer", always,
                        [](const SubjectTags&, Emitter& e) {
                          for (auto a : kAttributes) {
                            e.lo(a, detail::ceil_q(e.L(a).value), {&e.L(a)});
                            if (auto* h = e.H(a)) e.hi(a, detail::floor_q(h->value), {h});
                          }
                        }),
  };
  return all;
}

namespace detail {

inline std::vector<std::string> join_chain(const Proposal& p) {
  std::vector<std::string> chain;
  std::set<std::string> seen;
  for (const Bound* premise : p.premises) {
    for (const auto& step : premise->chain) {
      if (seen.insert(step).second) chain.push_back(step);
    }
  }
  if (!p.rule.empty() && seen.insert(p.rule).second) chain.push_back(p.rule);
  return chain;
}

inline bool tighter(const Proposal& p, const Fact& f) {
  if (p.upper) return !f.hi || p.value < f.hi->value;
  return p.value > f.lo.value;
}

/// Applies a proposal; returns true when it narrowed the fact.
inline bool apply(FactSet& s, const Proposal& p) {
  Fact& f = s[p.attribute];
  if (!tighter(p, f)) return false;
  Bound bound{p.value, join_chain(p)};
  if (p.upper) f.hi = std::move(bound);
  else f.lo = std::move(bound);
  if (f.empty() && !s.contradiction) s.contradiction = Contradiction{p.attribute, f.lo, *f.hi};
  return true;
}

inline FactSet seeded(const std::vector<Seed>& seeds) {
  FactSet s;
  for (const auto& seed : seeds) {
    const std::string origin = "seed " + to_string(seed.attribute);
    apply(s, {seed.attribute, false, seed.lo, origin, {}});
    if (seed.hi) apply(s, {seed.attribute, true, *seed.hi, origin, {}});
  }
  return s;
}

constexpr int kMaxRounds = 10000;

}  // namespace detail

/// Fixed point of the rule set in synchronous rounds. When several rules
/// propose the same tightest value in a round, the first in rule-table order
/// supplies the provenance.
inline FactSet propagate(const SubjectTags& raw_tags, const std::vector<Seed>& seeds = {}) {
  const SubjectTags tags = normalize(raw_tags);
  FactSet state = detail::seeded(seeds);
  while (!state.contradiction) {
    if (++state.rounds > detail::kMaxRounds) throw std::logic_error("propagate: no fixed point reached");
    std::vector<Proposal> proposals;
    for (const auto& rule : rules()) {
      if (rule.applies(tags)) rule.propose(tags, state, proposals);
    }
    // choose per (attribute, side) the tightest proposal, earliest on ties
    std::map<std::pair<int, bool>, const Proposal*> best;
    for (const auto& p : proposals) {
      const auto key = std::pair{static_cast<int>(p.attribute), p.upper};
      auto it = best.find(key);
      if (it == best.end()) {
        best[key] = &p;
      } else if (p.upper ? p.value < it->second->value : p.value > it->second->value) {
        it->second = &p;
      }
    }
    FactSet next = state;
    bool changed = false;
    for (const auto& [key, p] : best) {
      Proposal copy = *p;  // premises point into `state`, which stays alive
      changed = detail::apply(next, copy) || changed;
    }
    next.rounds = state.rounds;
    state = std::move(next);
    if (!changed) break;
  }
  return state;
}

/// Same fixed point reached by applying rules one at a time in the given
/// order (indices into rules()), repeated until nothing changes.
inline FactSet propagate_in_order(const SubjectTags& raw_tags, const std::vector<Seed>& seeds,
                                  const std::vector<std::size_t>& order) {
  const SubjectTags tags = normalize(raw_tags);
  FactSet state = detail::seeded(seeds);
  bool changed = true;
  while (changed && !state.contradiction) {
    if (++state.rounds > detail::kMaxRounds) throw std::logic_error("propagate: no fixed point reached");
    changed = false;
    for (std::size_t i : order) {
      const auto& rule = rules().at(i);
      if (!rule.applies(tags)) continue;
      std::vector<Proposal> proposals;
      rule.propose(tags, state, proposals);
      // freeze premise chains before applying: the rule's own proposals may overwrite them
      std::vector<Bound> carriers;
      for (const auto& p : proposals) carriers.push_back({0, detail::join_chain(p)});
      for (std::size_t k = 0; k < proposals.size() && !state.contradiction; ++k) {
        Proposal own{proposals[k].attribute, proposals[k].upper, proposals[k].value, "", {&carriers[k]}};
        changed = detail::apply(state, own) || changed;
      }
      if (state.contradiction) break;
    }
  }
  return state;
}

// {"r":{"lo":"2","hi":"2","lo_chain":["R2"],"hi_chain":["R5"]},...,"contradiction":null}

inline void to_json(nlohmann::json& j, const Bound& b) { j = {{"value", to_string(b.value)}, {"chain", b.chain}}; }

inline void to_json(nlohmann::json& j, const Fact& f) {
  j = {{"lo", to_string(f.lo.value)}, {"lo_chain", f.lo.chain}};
  if (f.hi) {
    j["hi"] = to_string(f.hi->value);
    j["hi_chain"] = f.hi->chain;
  } else {
    j["hi"] = "inf";
    j["hi_chain"] = nlohmann::json::array();
  }
}

inline void to_json(nlohmann::json& j, const FactSet& s) {
  j = nlohmann::json::object();
  for (const auto& f : s.facts()) j[to_string(f.attribute)] = f;
  if (s.contradiction) {
    j["contradiction"] = {{"attribute", to_string(s.contradiction->attribute)},
                          {"lo", s.contradiction->lo},
                          {"hi", s.contradiction->hi}};
  } else {
    j["contradiction"] = nullptr;
  }
}

}  // namespace reptopo
