#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "soclelab/error.hpp"
#include "soclelab/ideals.hpp"
#include "soclelab/incidence.hpp"
#include "soclelab/poset.hpp"
#include "soclelab/theorems.hpp"

namespace soclelab {

using json = nlohmann::json;

// Poset files: {"elements": ["x","y"], "covers": [["x","y"]]}.
inline finite_poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    fail(errc::input_error, "poset JSON needs 'elements' and 'covers'");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) fail(errc::input_error, "poset elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      fail(errc::input_error, "each cover must be a pair of element names");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return build_poset(std::move(elements), std::move(covers));
}

inline finite_poset poset_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::input_error, "poset file is not valid JSON");
  return poset_from_json(j);
}

inline json poset_to_json(const finite_poset& p) {
  json j;
  j["elements"] = p.labels();
  json covers = json::array();
  for (const auto& [a, b] : p.hasse_labels()) covers.push_back(json::array({a, b}));
  j["covers"] = covers;
  return j;
}

// Ideal serialization: {"side":"left","members":[indices],"rendered":[...]}.
inline json ideal_to_json(const sided_ideal& I) {
  json j;
  j["side"] = side_name(I.s);
  json members = json::array();
  json rendered = json::array();
  for (elem e : I.elements()) {
    members.push_back(e);
    rendered.push_back(I.ring->describe(e));
  }
  j["members"] = members;
  j["rendered"] = rendered;
  return j;
}

inline json render_matrix_to_json(const render_matrix& m) {
  json j;
  j["labels"] = m.labels;
  json rows = json::array();
  for (const auto& row : m.entries) rows.push_back(row);
  j["entries"] = rows;
  return j;
}

// Report schema:
// {instances:[{poset, ring, checks:[{id, status, elapsed_ms, witness?}],
//   caps_hit}], summary:{pass, fail, skipped}}.
// include_timing=false zeroes elapsed_ms so identical inputs produce
// byte-identical reports.
inline json report_to_json(const verification_report& r, bool include_timing = true) {
  json j;
  json instances = json::array();
  for (const auto& inst : r.instances) {
    json ji;
    ji["poset"] = inst.poset_name;
    ji["ring"] = inst.ring_name;
    if (!inst.input_error.empty()) ji["input_error"] = inst.input_error;
    json checks = json::array();
    for (const auto& c : inst.checks) {
      json jc;
      jc["id"] = c.id;
      jc["status"] = status_key(c.status);
      jc["elapsed_ms"] = include_timing ? c.elapsed_ms : 0.0;
      if (!c.witness.empty()) {
        json w;
        w["summary"] = c.witness.summary;
        w["details"] = c.witness.details;
        jc["witness"] = w;
      }
      checks.push_back(jc);
    }
    ji["checks"] = checks;
    ji["caps_hit"] = inst.caps_hit;
    instances.push_back(ji);
  }
  j["instances"] = instances;
  j["summary"] = json{{"pass", r.passed}, {"fail", r.failed}, {"skipped", r.skipped}};
  return j;
}

inline check_status status_from_key(const std::string& k) {
  for (check_status s : {check_status::pass, check_status::fail,
                         check_status::skipped_hypothesis, check_status::skipped_cap,
                         check_status::out_of_scope})
    if (k == status_key(s)) return s;
  fail(errc::input_error, "unknown check status '" + k + "'");
}

/// Round-trips a serialized report back into the in-memory form.
inline verification_report report_from_json(const json& j) {
  verification_report r;
  for (const auto& ji : j.at("instances")) {
    instance_report inst;
    inst.poset_name = ji.at("poset").get<std::string>();
    inst.ring_name = ji.at("ring").get<std::string>();
    if (ji.contains("input_error")) inst.input_error = ji.at("input_error").get<std::string>();
    for (const auto& jc : ji.at("checks")) {
      check_result c;
      c.id = jc.at("id").get<std::string>();
      c.status = status_from_key(jc.at("status").get<std::string>());
      c.elapsed_ms = jc.at("elapsed_ms").get<double>();
      if (jc.contains("witness")) {
        c.witness.summary = jc.at("witness").at("summary").get<std::string>();
        for (const auto& d : jc.at("witness").at("details"))
          c.witness.details.push_back(d.get<std::string>());
      }
      inst.checks.push_back(std::move(c));
    }
    for (const auto& ch : ji.at("caps_hit")) inst.caps_hit.push_back(ch.get<std::string>());
    r.instances.push_back(std::move(inst));
  }
  r.tally();
  return r;
}

}  // namespace soclelab
