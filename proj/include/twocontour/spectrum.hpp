#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "twocontour/formulas.hpp"
#include "twocontour/orbit.hpp"

namespace twocontour {

using OutcomeSet = std::set<VelocityPair>;

struct SpectrumEntry {
  VelocityPair velocities;
  SystemState representative_initial;  // smallest initial state with this outcome
  int basin_size = 0;

  bool operator==(const SpectrumEntry&) const = default;
};

struct VelocitySpectrum {
  SystemParams params;
  std::vector<SpectrumEntry> entries;  // sorted by velocity pair
  int acceptable_states = 0;

  OutcomeSet outcomes() const {
    OutcomeSet out;
    for (const auto& e : entries) out.insert(e.velocities);
    return out;
  }
  bool operator==(const VelocitySpectrum&) const = default;
};

inline VelocitySpectrum spectrum_from_census(const SystemParams& p, const CycleCensus& c) {
  VelocitySpectrum sp;
  sp.params = p;
  sp.acceptable_states = static_cast<int>(c.states.size());
  for (std::size_t k = 0; k < c.states.size(); ++k) {
    const VelocityPair v = c.cycles[static_cast<std::size_t>(c.cycle_of[k])].velocities();
    auto it = std::find_if(sp.entries.begin(), sp.entries.end(),
                           [&](const SpectrumEntry& e) { return e.velocities == v; });
    if (it == sp.entries.end()) {
      sp.entries.push_back({v, c.states[k], 1});
    } else {
      ++it->basin_size;
      it->representative_initial = std::min(it->representative_initial, c.states[k]);
    }
  }
  std::sort(sp.entries.begin(), sp.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.velocities < b.velocities; });
  return sp;
}

inline VelocitySpectrum velocity_spectrum(const SystemParams& p) { return spectrum_from_census(p, census(p)); }

// The spectrum of the same system with the contour labels exchanged.
inline VelocitySpectrum mirrored(const VelocitySpectrum& sp) {
  VelocitySpectrum m;
  m.params = sp.params.swapped();
  m.acceptable_states = sp.acceptable_states;
  for (const auto& e : sp.entries) m.entries.push_back({e.velocities.mirrored(), e.representative_initial.swapped(), e.basin_size});
  std::sort(m.entries.begin(), m.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.velocities < b.velocities; });
  return m;
}

// "{(p/q,p/q);(p/q,p/q)}" in sorted order.
inline std::string digest(const OutcomeSet& outcomes) {
  std::string s = "{";
  bool first = true;
  for (const auto& v : outcomes) {
    if (!first) s += ";";
    s += v.str();
    first = false;
  }
  return s + "}";
}

enum class ScenarioLabel {
  S1_FreeMotionAlways,
  S2_FreeOrV1,
  S3_V1orV5,
  S4_V1only,
  S5_V5only,
  S6_HalfSpeedCluster1,
  S7_Half1Full2,
  S8_FreeOrCollapse,
  S9_CollapseOrV1,
  S10_CollapseAlways,
  Unknown,
};

inline const char* to_string(ScenarioLabel s) {
  switch (s) {
    case ScenarioLabel::S1_FreeMotionAlways: return "S1_FreeMotionAlways";
    case ScenarioLabel::S2_FreeOrV1: return "S2_FreeOrV1";
    case ScenarioLabel::S3_V1orV5: return "S3_V1orV5";
    case ScenarioLabel::S4_V1only: return "S4_V1only";
    case ScenarioLabel::S5_V5only: return "S5_V5only";
    case ScenarioLabel::S6_HalfSpeedCluster1: return "S6_HalfSpeedCluster1";
    case ScenarioLabel::S7_Half1Full2: return "S7_Half1Full2";
    case ScenarioLabel::S8_FreeOrCollapse: return "S8_FreeOrCollapse";
    case ScenarioLabel::S9_CollapseOrV1: return "S9_CollapseOrV1";
    case ScenarioLabel::S10_CollapseAlways: return "S10_CollapseAlways";
    case ScenarioLabel::Unknown: return "Unknown";
  }
  return "?";
}

inline ScenarioLabel scenario_from_string(std::string_view s) {
  for (int k = 0; k <= static_cast<int>(ScenarioLabel::Unknown); ++k) {
    const auto label = static_cast<ScenarioLabel>(k);
    if (s == to_string(label)) return label;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(s) + "'");
}

// Which denominator matched for the two scenarios whose formula is printed two ways.
enum class LongArcDenominator { NotApplicable, NMinus2d, NMinusD };

inline const char* to_string(LongArcDenominator d) {
  switch (d) {
    case LongArcDenominator::NotApplicable: return "n/a";
    case LongArcDenominator::NMinus2d: return "n-2d";
    case LongArcDenominator::NMinusD: return "n-d";
  }
  return "?";
}

struct Classification {
  ScenarioLabel label = ScenarioLabel::Unknown;
  LongArcDenominator denominator = LongArcDenominator::NotApplicable;

  bool operator==(const Classification&) const = default;
};

namespace detail {

struct ScenarioPattern {
  ScenarioLabel label;
  LongArcDenominator denominator;
  std::vector<VelocityPair> members;  // may contain duplicates when formulas coincide
};

inline std::vector<ScenarioPattern> scenario_patterns(const SystemParams& q) {
  using namespace formulas;
  const VelocityPair v1 = equal(both_nodes_delay(q));
  const VelocityPair v5 = equal(long_arc_delay(q));
  const VelocityPair v5_alt = equal(long_arc_delay_alt(q));
  const auto none = LongArcDenominator::NotApplicable;
  return {
      {ScenarioLabel::S1_FreeMotionAlways, none, {free_motion()}},
      {ScenarioLabel::S2_FreeOrV1, none, {free_motion(), v1}},
      {ScenarioLabel::S3_V1orV5, LongArcDenominator::NMinus2d, {v1, v5}},
      {ScenarioLabel::S3_V1orV5, LongArcDenominator::NMinusD, {v1, v5_alt}},
      {ScenarioLabel::S4_V1only, none, {v1}},
      {ScenarioLabel::S5_V5only, LongArcDenominator::NMinus2d, {v5}},
      {ScenarioLabel::S5_V5only, LongArcDenominator::NMinusD, {v5_alt}},
      {ScenarioLabel::S6_HalfSpeedCluster1, none, {{half_turn_slow(q), half_turn_fast(q)}}},
      {ScenarioLabel::S7_Half1Full2, none, {{Rational(1, 2), Rational(1)}}},
      {ScenarioLabel::S8_FreeOrCollapse, none, {free_motion(), collapse()}},
      {ScenarioLabel::S9_CollapseOrV1, none, {collapse(), v1}},
      {ScenarioLabel::S10_CollapseAlways, none, {collapse()}},
  };
}

}  // namespace detail

// Matches the outcome set of a spectrum against the ten scenario patterns, in
// order. A pattern whose formulas coincide at this point (fewer distinct
// members than nominal) is skipped, so it cannot shadow a smaller pattern.
inline Classification classify_spectrum(const VelocitySpectrum& sp) {
  const bool swap = sp.params.l1 > sp.params.l2;
  const SystemParams q = swap ? sp.params.swapped() : sp.params;
  const OutcomeSet outcomes = swap ? mirrored(sp).outcomes() : sp.outcomes();
  for (const auto& pattern : detail::scenario_patterns(q)) {
    const OutcomeSet members(pattern.members.begin(), pattern.members.end());
    if (members.size() != pattern.members.size()) continue;
    if (members == outcomes) return {pattern.label, pattern.denominator};
  }
  return {};
}

inline Classification classify_scenario(const SystemParams& p) { return classify_spectrum(velocity_spectrum(p)); }

}  // namespace twocontour
