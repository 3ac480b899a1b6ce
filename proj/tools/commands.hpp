#pragma once

// The CLI subcommands as functions returning a report and an exit code, so
// tests can drive them without spawning processes.
//
// Exit codes: 0 success, 1 check failure, 2 input error.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reptopo/reptopo.hpp"

namespace cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

struct Outcome {
  json report;
  int exit_code = kExitOk;
  std::string text;  // human rendering for --pretty
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw reptopo::InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw reptopo::InputError(path + ": " + e.what());
  }
}

inline json run_report(const std::string& command, json inputs, json checks, json result) {
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.at("pass").get<bool>();
  return {{"schema", kSchemaVersion}, {"command", command}, {"inputs", std::move(inputs)},
          {"checks", std::move(checks)}, {"pass", pass}, {"result", std::move(result)}};
}

inline std::string check_table(const json& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.at("pass").get<bool>() ? "  ok    " : "  FAIL  ") << std::left << std::setw(28)
        << c.at("name").get<std::string>() << " expected " << c.at("expected").dump() << ", got "
        << c.at("actual").dump() << "\n";
  }
  return out.str();
}

inline Outcome cmd_generate(const std::string& spec_text) {
  const auto spec = reptopo::parse_family(spec_text);
  Outcome out;
  out.report = reptopo::generate(spec);
  std::ostringstream text;
  text << reptopo::to_string(spec) << "\n  meridians  " << out.report.at("meridians").dump() << "\n  longitudes "
       << out.report.at("longitudes").dump() << "\n";
  out.text = text.str();
  return out;
}

inline Outcome cmd_verify(const std::vector<std::string>& spec_texts) {
  std::vector<reptopo::FamilySpec> specs;
  for (const auto& s : spec_texts) specs.push_back(reptopo::parse_family(s));

  Outcome out;
  json reports = json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& spec : specs) {
    const auto fr = reptopo::verify_family(spec);
    json result = {{"components", fr.components}, {"extrapolated", fr.extrapolated}};
    result["r"] = fr.representativity ? json(*fr.representativity) : json(nullptr);
    result["recorded_bs"] = fr.bridge_string ? json(*fr.bridge_string) : json(nullptr);
    auto report = run_report("verify", {{"spec", reptopo::to_string(spec)}}, fr.checks, result);
    all = all && report.at("pass").get<bool>();
    text << reptopo::to_string(spec) << (fr.passed() ? "  PASS" : "  FAIL") << "\n" << check_table(report["checks"]);
    text << "  r = " << result["r"].dump() << ", components = " << fr.components;
    if (fr.bridge_string) text << ", recorded bs = " << *fr.bridge_string;
    if (fr.extrapolated) text << "  (g = 1 extrapolation)";
    text << "\n";
    reports.push_back(std::move(report));
  }
  out.report = reports.size() == 1 ? reports[0] : json{{"schema", kSchemaVersion}, {"reports", reports}, {"pass", all}};
  out.exit_code = all ? kExitOk : kExitFailed;
  out.text = text.str();
  return out;
}

// Instance file: {"pieces":[{"piece":"F1+","circles":3,"arcs":[...]}, ...], "upper": 4}
// ("upper" is optional; a bare array of pieces is accepted too).
inline Outcome cmd_certify(const std::string& path, int n) {
  const json doc = read_json_file(path);
  const json& list = doc.is_array() ? doc : doc.value("pieces", json::array());
  if (!list.is_array()) throw reptopo::InputError(path + ": \"pieces\" must be an array");
  std::vector<reptopo::PlanarPiece> pieces;
  for (const auto& p : list) pieces.push_back(reptopo::piece_from_json(p));
  std::optional<int> upper;
  if (doc.is_object() && doc.contains("upper")) upper = doc.at("upper").get<int>();

  const auto cert = reptopo::certify_pieces(pieces, n, upper);
  json checks = json::array();
  for (const auto& m : cert.pieces) {
    checks.push_back({{"name", m.id + " loop_min >= n"}, {"expected", n}, {"actual", m.loop_min},
                      {"pass", m.loop_min >= n}});
    if (m.arc_min) {
      checks.push_back({{"name", m.id + " 2*arc_min >= n"}, {"expected", n}, {"actual", 2 * *m.arc_min},
                        {"pass", 2 * *m.arc_min >= n}});
    }
  }
  Outcome out;
  out.report = run_report("certify", {{"file", path}, {"n", n}}, checks, cert);
  out.report["result"]["lower_bound_holds"] = cert.lower_ok;
  out.exit_code = cert.lower_ok ? kExitOk : kExitFailed;
  std::ostringstream text;
  text << "certificate for n = " << n << (cert.lower_ok ? ": holds" : ": fails") << "\n" << check_table(checks);
  if (cert.exact) text << "  exact r = " << *cert.exact << "\n";
  out.text = text.str();
  return out;
}

inline Outcome cmd_facewidth(const std::string& path) {
  const auto rs = reptopo::rotation_system_from_json(read_json_file(path));
  const int g = reptopo::genus(rs);
  const auto fw = reptopo::face_width(rs);
  json result = {{"vertices", rs.vertex_count()}, {"edges", rs.edge_count()}, {"faces", rs.face_count()},
                 {"genus", g}};
  result["face_width"] = fw.width ? json(*fw.width) : json("infinite");
  json cycle = json::array();
  for (int c : fw.cycle) cycle.push_back(rs.label(c));
  result["cycle_corners"] = cycle;
  Outcome out;
  out.report = run_report("facewidth", {{"file", path}}, json::array(), result);
  out.text = "genus " + std::to_string(g) + ", face-width " + result["face_width"].dump() + "\n";
  return out;
}

struct BoundsInput {
  std::vector<std::string> tags;
  std::vector<std::string> seeds;
  std::optional<std::array<int, 3>> graph;  // V, E, C
};

inline Outcome cmd_bounds(const BoundsInput& in) {
  reptopo::SubjectTags tags;
  for (const auto& t : in.tags) reptopo::apply_tag(tags, t);
  std::vector<reptopo::Seed> seeds;
  for (const auto& s : in.seeds) seeds.push_back(reptopo::parse_seed(s));
  if (in.graph) {
    const int beta = reptopo::betti1((*in.graph)[0], (*in.graph)[1], (*in.graph)[2]);
    seeds.push_back({reptopo::Attribute::beta1, beta, reptopo::Rational(beta)});
  }
  const auto facts = reptopo::propagate(tags, seeds);

  json checks = json::array();
  checks.push_back({{"name", "consistent"}, {"expected", true}, {"actual", !facts.contradiction},
                    {"pass", !facts.contradiction}});
  json inputs = {{"tags", in.tags}, {"seeds", in.seeds}};
  if (in.graph) inputs["graph"] = *in.graph;
  Outcome out;
  out.report = run_report("bounds", inputs, checks, facts);
  out.exit_code = facts.contradiction ? kExitFailed : kExitOk;

  std::ostringstream text;
  for (const auto& f : facts.facts()) {
    text << "  " << std::left << std::setw(11) << reptopo::to_string(f.attribute) << "["
         << reptopo::to_string(f.lo.value) << ", " << (f.hi ? reptopo::to_string(f.hi->value) : "inf") << "]\n";
  }
  if (facts.contradiction) {
    const auto& c = *facts.contradiction;
    text << "contradiction on " << reptopo::to_string(c.attribute) << ": lower " << reptopo::to_string(c.lo.value)
         << " via " << json(c.lo.chain).dump() << ", upper " << reptopo::to_string(c.hi.value) << " via "
         << json(c.hi.chain).dump() << "\n";
  }
  out.text = text.str();
  return out;
}

}  // namespace cli
