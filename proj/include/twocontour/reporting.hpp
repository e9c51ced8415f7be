#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twocontour/orbit.hpp"
#include "twocontour/spectrum.hpp"
#include "twocontour/theorem_atlas.hpp"

namespace twocontour {

using ordered_json = nlohmann::ordered_json;

// "(a,b) -> (c,d) -> ..." with 6 states per line.
inline std::string render_trajectory(const std::vector<SystemState>& states) {
  if (states.empty()) throw std::invalid_argument("render_trajectory: empty trajectory");
  constexpr std::size_t per_line = 6;
  std::string out;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k > 0) out += (k % per_line == 0) ? " ->\n" : " -> ";
    out += states[k].str();
  }
  return out + "\n";
}

inline ordered_json to_json(const SystemParams& p) { return {{"n", p.n}, {"l1", p.l1}, {"l2", p.l2}, {"d", p.d}}; }
inline ordered_json to_json(const SystemState& s) { return ordered_json::array({s.alpha1, s.alpha2}); }
inline ordered_json to_json(const VelocityPair& v) { return ordered_json::array({v.v1.str(), v.v2.str()}); }

inline SystemParams params_from_json(const ordered_json& j) {
  return make_params(j.at("n").get<int>(), j.at("l1").get<int>(), j.at("l2").get<int>(), j.at("d").get<int>());
}
inline SystemState state_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("state must be a two-element array");
  return {j[0].get<int>(), j[1].get<int>()};
}
inline VelocityPair velocities_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("velocities must be a two-element array");
  return {Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>())};
}

inline ordered_json orbit_to_json(const SystemParams& p, const OrbitSummary& o) {
  ordered_json j;
  j["params"] = to_json(p);
  j["initial"] = to_json(o.initial);
  j["transient"] = o.transient_length;
  j["period"] = o.period;
  j["moves"] = ordered_json::array({o.moves1, o.moves2});
  j["velocities"] = to_json(o.velocities);
  j["outcome"] = to_string(o.outcome);
  j["cycle"] = ordered_json::array();
  for (const auto& s : o.cycle_states) j["cycle"].push_back(to_json(s));
  return j;
}

inline OrbitSummary orbit_from_json(const ordered_json& j) {
  OrbitSummary o;
  o.initial = state_from_json(j.at("initial"));
  o.transient_length = j.at("transient").get<int>();
  o.period = j.at("period").get<int>();
  o.moves1 = j.at("moves").at(0).get<int>();
  o.moves2 = j.at("moves").at(1).get<int>();
  o.velocities = velocities_from_json(j.at("velocities"));
  o.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  for (const auto& s : j.at("cycle")) o.cycle_states.push_back(state_from_json(s));
  return o;
}

inline ordered_json spectrum_to_json(const VelocitySpectrum& sp) {
  ordered_json j;
  j["params"] = to_json(sp.params);
  j["acceptable_states"] = sp.acceptable_states;
  j["entries"] = ordered_json::array();
  for (const auto& e : sp.entries) {
    j["entries"].push_back({{"velocities", to_json(e.velocities)},
                            {"representative_initial", to_json(e.representative_initial)},
                            {"basin_size", e.basin_size}});
  }
  const Classification c = classify_spectrum(sp);
  j["scenario"] = to_string(c.label);
  j["denominator"] = to_string(c.denominator);
  return j;
}

inline VelocitySpectrum spectrum_from_json(const ordered_json& j) {
  VelocitySpectrum sp;
  sp.params = params_from_json(j.at("params"));
  sp.acceptable_states = j.at("acceptable_states").get<int>();
  for (const auto& e : j.at("entries")) {
    sp.entries.push_back({velocities_from_json(e.at("velocities")), state_from_json(e.at("representative_initial")),
                          e.at("basin_size").get<int>()});
  }
  return sp;
}

inline ordered_json outcome_set_to_json(const OutcomeSet& s) {
  ordered_json a = ordered_json::array();
  for (const auto& v : s) a.push_back(to_json(v));
  return a;
}

inline ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["params"] = to_json(r.params);
  j["scenario"] = to_string(r.scenario.label);
  j["denominator"] = to_string(r.scenario.denominator);
  j["spectrum"] = outcome_set_to_json(r.spectrum.outcomes());
  j["results"] = ordered_json::array();
  for (const auto& e : r.entries) {
    const auto& tp = e.prediction;
    ordered_json je;
    je["id"] = to_string(tp.id);
    je["hypotheses_hold"] = tp.hypotheses_hold;
    je["internally_consistent"] = tp.internally_consistent;
    je["verdict"] = to_string(e.verdict);
    je["formula"] = tp.formula;
    je["predicted"] = tp.predicted ? outcome_set_to_json(*tp.predicted) : ordered_json(nullptr);
    if (!tp.notes.empty()) je["notes"] = tp.notes;
    if (!e.variant_agreement.empty()) {
      ordered_json va = ordered_json::array();
      for (const auto& v : tp.variants) {
        if (!v.holds) continue;
        const auto it = std::find_if(e.variant_agreement.begin(), e.variant_agreement.end(),
                                     [&](const auto& a) { return a.first == v.name; });
        ordered_json jv{{"name", v.name}, {"trusted", v.trusted}};
        if (it != e.variant_agreement.end()) jv["agrees_with_data"] = it->second;
        if (!v.note.empty()) jv["note"] = v.note;
        va.push_back(std::move(jv));
      }
      je["variants"] = std::move(va);
    }
    j["results"].push_back(std::move(je));
  }
  return j;
}

}  // namespace twocontour
