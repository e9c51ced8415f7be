#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twocontour/formulas.hpp"
#include "twocontour/orbit.hpp"
#include "twocontour/spectrum.hpp"

namespace twocontour {

enum class ResultId {
  L1, L2, L3, L4,
  T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12, T13,
  T14, T15, T16, T17, T18, T19, T20, T21, T22, T23, T24, T25,
};

inline constexpr int result_count = 29;

inline bool is_lemma(ResultId id) { return static_cast<int>(id) < 4; }

inline std::string to_string(ResultId id) {
  const int k = static_cast<int>(id);
  return k < 4 ? "L" + std::to_string(k + 1) : "T" + std::to_string(k - 3);
}

inline ResultId result_from_string(std::string_view s) {
  for (int k = 0; k < result_count; ++k) {
    if (s == to_string(static_cast<ResultId>(k))) return static_cast<ResultId>(k);
  }
  throw std::invalid_argument("unknown result id '" + std::string(s) + "'");
}

inline ResultId theorem(int number) {
  if (number < 1 || number > 25) throw std::out_of_range("theorem number " + std::to_string(number));
  return static_cast<ResultId>(number + 3);
}

enum class Verdict { Match, Mismatch, NotApplicable, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::NotApplicable: return "NotApplicable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// One reading of a theorem's hypothesis block. Untrusted readings are the ones
// whose printed form is contradictory, vacuous, or disagrees with another
// printing of the same theorem; they are evaluated and reported but cannot
// make a prediction.
struct VariantEvaluation {
  std::string name;
  bool trusted = false;
  bool holds = false;
  std::optional<OutcomeSet> predicted;
  std::optional<int> predicted_count;  // "exactly k outcomes" readings
  std::string note;
};

struct TheoremPrediction {
  ResultId id = ResultId::L1;
  bool hypotheses_hold = false;
  bool internally_consistent = false;
  std::optional<OutcomeSet> predicted;
  std::string formula;
  std::string notes;
  std::vector<VariantEvaluation> variants;
};

namespace detail {

struct Variant {
  std::string name;
  bool trusted;
  std::function<bool(int n, int l1, int l2, int d)> holds;
  std::function<OutcomeSet(const SystemParams&)> predict;  // empty for count-only readings
  std::optional<int> count;
  std::string note;
};

struct TheoremSpec {
  ResultId id;
  std::string formula;
  std::vector<Variant> variants;
};

inline OutcomeSet only_free(const SystemParams&) { return {formulas::free_motion()}; }
inline OutcomeSet only_collapse(const SystemParams&) { return {formulas::collapse()}; }
inline OutcomeSet free_or_collapse(const SystemParams&) { return {formulas::free_motion(), formulas::collapse()}; }
inline OutcomeSet free_or_v1(const SystemParams& q) {
  return {formulas::free_motion(), formulas::equal(formulas::both_nodes_delay(q))};
}
inline OutcomeSet collapse_or_v1(const SystemParams& q) {
  return {formulas::collapse(), formulas::equal(formulas::both_nodes_delay(q))};
}
inline OutcomeSet only_v1(const SystemParams& q) { return {formulas::equal(formulas::both_nodes_delay(q))}; }
inline OutcomeSet only_v5(const SystemParams& q) { return {formulas::equal(formulas::long_arc_delay(q))}; }

// Hypothesis blocks as printed, for l1 <= l2.
inline const std::vector<TheoremSpec>& theorem_specs() {
  using namespace formulas;
  static const std::vector<TheoremSpec> specs = {
      {theorem(1), "{(1,1)}",
       {{"statement", true, [](int n, int l1, int l2, int d) { return l2 <= d && l1 + l2 <= n - 2 * d; }, only_free, {}, ""}}},
      {theorem(2), "{(1,1), (v,v)} with v = n/(l1+l2+2d)",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return l2 <= d && l2 <= n - 2 * d && l1 + l2 > n - 2 * d; },
         free_or_v1, {}, ""}}},
      {theorem(3), "{(1,1)}",
       {{"statement", true, [](int n, int l1, int l2, int d) { return l2 <= d && l1 <= n - 2 * d && l2 > n - 2 * d; },
         only_free, {}, ""}}},
      {theorem(4), "{(1,1)}",
       {{"statement", true, [](int n, int l1, int l2, int d) { return l2 <= d && l1 > n - 2 * d; }, only_free, {}, ""}}},
      {theorem(5), "{(1,1)}",
       {{"statement", false, [](int, int l1, int l2, int d) { return l1 <= d && l2 > d && l1 + l2 <= 2 * d; },
         only_free, {}, "region lies inside the region of T6, whose conclusion differs"}}},
      {theorem(6), "{(1,1), (v,v)} with v = n/(n-d+l1+l2)",
       {{"statement", false,
         [](int, int l1, int l2, int d) { return l1 <= d && d < l2 && l2 < 2 * d && l1 + l2 <= 2 * d; },
         [](const SystemParams& q) { return OutcomeSet{free_motion(), equal(long_arc_delay_alt(q))}; }, {},
         "region contains the region of T5, whose conclusion differs"}}},
      {theorem(7), "{(1,1)}",
       {{"statement", false, [](int, int l1, int l2, int d) { return l1 <= d && l2 >= 2 * d && l1 + l2 <= 2 * d; },
         only_free, {}, "l2 >= 2d with l1+l2 <= 2d forces l1 <= 0: vacuous"}}},
      {theorem(8), "{(v,v), (w,w)} with v = n/(l1+l2+2d), w = n/(l1+l2+n-2d)",
       {{"statement", true,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && d < l2 && l2 < 2 * d && l2 <= n - 2 * d && l1 + l2 > n - 2 * d;
         },
         [](const SystemParams& q) {
           return OutcomeSet{equal(both_nodes_delay(q)), equal(long_arc_delay(q))};
         },
         {}, ""}}},
      {theorem(9), "{(v,v)} with v = n/(l1+l2+2d)",
       {{"statement", false,
         [](int n, int l1, int l2, int d) { return l1 <= d && 2 * d <= l2 && l2 <= 2 * n - d && l1 + l2 > n - 2 * d; },
         only_v1, {}, "upper bound 2n-d disagrees with the heading"},
        {"heading", false,
         [](int n, int l1, int l2, int d) { return l1 <= d && 2 * d < l2 && l2 <= n - 2 * d && l1 + l2 > n - 2 * d; },
         only_v1, {}, "heading range 2d < l2 <= n-2d"}}},
      {theorem(10), "{(1,1)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && l1 <= n - 2 * d && n - 2 * d < l2 && l2 <= n - d && l1 + l2 <= 2 * d;
         },
         only_free, {}, ""}}},
      {theorem(11), "{(v,v)} with v = n/(l1+l2+n-2d)",
       {{"statement", false,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && l1 <= n - 2 * d && d < l2 && l2 < 2 * d && n - 2 * d < l2 && l2 <= n - d &&
                  l1 + l2 > 2 * d;
         },
         only_v5, {}, "conclusion names a single limit cycle"},
        {"heading", false,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && l1 <= n - 2 * d && d < l2 && l2 < 2 * d && n - 2 * d < l2 && l2 <= n - d &&
                  l1 + l2 > 2 * d;
         },
         {}, 2, "heading names two possible velocity values"}}},
      {theorem(12), "{(1,1)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && l1 <= n - 2 * d && l2 > n - d && d < l2 && l2 < 2 * d && l1 + l2 <= 2 * d;
         },
         only_free, {}, ""}}},
      {theorem(13), "{(1,1)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && l1 <= n - 2 * d && l2 > n - d && d < l2 && l2 < 2 * d && l1 + l2 > 2 * d;
         },
         only_free, {}, ""}}},
      {theorem(14), "{(v1,v2)} with v1 = n/(2(l1+l2)), v2 = n/(l1+l2)",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return l1 <= d && l1 <= n - 2 * d && l2 > n - d && l1 + l2 > n; },
         [](const SystemParams& q) { return OutcomeSet{{half_turn_slow(q), half_turn_fast(q)}}; }, {},
         "prose about two turns of cluster 1 is superseded by the formulas"}}},
      {theorem(15), "{(v,v)} with v = n/(n-2d+l1+l2)",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return l1 <= d && n - 2 * d < l1 && l1 < n - d && l2 > n - d && l1 + l2 > n; },
         only_v5, {}, ""}}},
      {theorem(16), "{(1/2,1)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && l1 <= n - 2 * d && l2 > n - d && l2 >= 2 * d && l1 + l2 <= n;
         },
         [](const SystemParams&) { return OutcomeSet{{Rational(1, 2), Rational(1)}}; }, {}, ""},
        {"heading", false,
         [](int n, int l1, int l2, int d) {
           return l1 <= d && l1 <= n - 2 * d && n - 2 * d < l2 && l2 <= n - d && l2 >= 2 * d && l1 + l2 <= n;
         },
         [](const SystemParams&) { return OutcomeSet{{Rational(1, 2), Rational(1)}}; }, {},
         "heading range n-2d < l2 <= n-d disagrees with the statement"}}},
      {theorem(17), "{(1,1), (0,0)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return d < l1 && l1 < 2 * d && d < l2 && l2 < 2 * d && l1 + l2 <= n - 2 * d; },
         free_or_collapse, {}, ""}}},
      {theorem(18), "{(1,1), (0,0)}",
       {{"statement", false,
         [](int n, int l1, int l2, int d) { return d < l1 && l1 <= d && l2 >= 2 * d && l1 + l2 <= n - 2 * d; },
         free_or_collapse, {}, "printed d < l1 <= d is empty"},
        {"heading", true,
         [](int n, int l1, int l2, int d) { return d < l1 && l1 < 2 * d && l2 >= 2 * d && l1 + l2 <= n - 2 * d; },
         free_or_collapse, {}, ""}}},
      {theorem(19), "{(1,1), (0,0)}",
       {{"statement", false, [](int n, int l1, int l2, int d) { return l2 >= 2 * d && l1 + l2 <= n - 2 * d; },
         free_or_collapse, {}, "printed block omits the heading's l1 >= 2d"},
        {"heading", true,
         [](int n, int l1, int l2, int d) { return l1 >= 2 * d && l2 >= 2 * d && l1 + l2 <= n - 2 * d; },
         free_or_collapse, {}, ""}}},
      {theorem(20), "{(0,0), (v,v)} with v = n/(l1+l2+2d)",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return l1 >= 2 * d && l2 <= n - 2 * d && n - 2 * d < l1 + l2 && l1 + l2 <= n; },
         collapse_or_v1, {}, ""}}},
      {theorem(21), "{(0,0), (v,v)} with v = n/(l1+l2+2d)",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return l1 >= 2 * d && l2 <= n - 2 * d && l1 + l2 > n; },
         collapse_or_v1, {}, ""}}},
      {theorem(22), "{(0,0)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return l1 >= 2 * d && l1 <= n - 2 * d && n - 2 * d < l2 && l2 <= n - d; },
         only_collapse, {}, ""},
        {"heading", false,
         [](int n, int l1, int l2, int d) { return l2 >= 2 * d && l1 <= n - 2 * d && n - 2 * d < l2 && l2 <= n - d; },
         only_collapse, {}, "heading bounds l2 instead of l1 from below"}}},
      {theorem(23), "{(0,0)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return n - 2 * d < l1 && l1 <= l2 && l2 <= n - d; }, only_collapse, {}, ""},
        {"heading", false,
         [](int n, int l1, int, int d) { return n - 2 * d < l1 && l1 <= n - 2 * d; }, only_collapse, {},
         "heading range n-2d < l1 <= n-2d is empty"}}},
      {theorem(24), "{(0,0)}",
       {{"statement", true,
         [](int n, int l1, int l2, int d) { return n - 2 * d < l1 && l1 <= n - d && l2 > n - d; }, only_collapse, {}, ""}}},
      {theorem(25), "{(0,0)}",
       {{"statement", true, [](int n, int l1, int l2, int d) { return l1 > n - d && l2 > n - d; }, only_collapse, {}, ""}}},
  };
  return specs;
}

// A trusted prediction can still be impossible at a particular point: a velocity
// above 1, free motion with more particles than cells, or a collapse claim that
// contradicts the fixed-point criterion. Such points are graded Inconclusive.
inline std::optional<std::string> incoherence(const SystemParams& q, const OutcomeSet& predicted) {
  for (const auto& v : predicted) {
    if (v.v1 > Rational(1) || v.v2 > Rational(1)) return "predicted velocity " + v.str() + " exceeds 1";
  }
  if (predicted.contains(formulas::free_motion()) && q.l1 + q.l2 > q.n) return "free motion predicted with l1+l2 > n";
  const bool collapse_possible = q.l1 > q.d && q.l2 > q.d;
  if (predicted.contains(formulas::collapse()) != collapse_possible) {
    return collapse_possible ? "collapse omitted although (d,d) is a fixed point"
                             : "collapse predicted although no fixed point exists";
  }
  return std::nullopt;
}

}  // namespace detail

inline SystemParams normalized(const SystemParams& p) { return p.l1 > p.l2 ? p.swapped() : p; }

inline TheoremPrediction predict_theorem(const SystemParams& params, ResultId id) {
  if (is_lemma(id)) throw std::invalid_argument(to_string(id) + " is a lemma, not a theorem");
  const SystemParams q = normalized(params);
  const auto& spec = detail::theorem_specs()[static_cast<std::size_t>(static_cast<int>(id) - 4)];

  TheoremPrediction tp;
  tp.id = id;
  tp.formula = spec.formula;
  const VariantEvaluation* chosen = nullptr;
  for (const auto& v : spec.variants) {
    VariantEvaluation ev;
    ev.name = v.name;
    ev.trusted = v.trusted;
    ev.holds = v.holds(q.n, q.l1, q.l2, q.d);
    ev.note = v.note;
    if (ev.holds) {
      if (v.predict) ev.predicted = v.predict(q);
      ev.predicted_count = v.count;
    }
    tp.variants.push_back(std::move(ev));
  }
  for (const auto& ev : tp.variants) {
    tp.hypotheses_hold = tp.hypotheses_hold || ev.holds;
    if (!chosen && ev.holds && ev.trusted && ev.predicted) chosen = &ev;
  }
  if (chosen) {
    if (auto why = detail::incoherence(q, *chosen->predicted)) {
      tp.notes = *why;
    } else {
      tp.internally_consistent = true;
      tp.predicted = chosen->predicted;
    }
  } else if (tp.hypotheses_hold) {
    tp.notes = "only untrusted readings hold";
  }
  return tp;
}

// Lemma entries carry no outcome set; their verdict comes from a direct check.
inline TheoremPrediction predict_lemma(const SystemParams& params, ResultId id) {
  const SystemParams q = normalized(params);
  TheoremPrediction tp;
  tp.id = id;
  tp.internally_consistent = true;
  switch (id) {
    case ResultId::L1:
      tp.hypotheses_hold = q.l1 + q.l2 > q.n;
      tp.formula = "l1+l2 > n => no free-motion cycle";
      break;
    case ResultId::L2:
      tp.hypotheses_hold = true;
      tp.formula = "on every cycle A1 > 0 and A2 > 0, or A1 = A2 = 0";
      break;
    case ResultId::L3:
      tp.hypotheses_hold = true;
      tp.formula = "every intermediate cycle visits ((l1+d)%n,0), (0,(l2+d)%n), (l1,d) or (d,l2)";
      break;
    case ResultId::L4:
      tp.hypotheses_hold = true;
      tp.formula = "a fixed point exists iff l1 > d and l2 > d, and then (d,d) is fixed";
      break;
    default:
      throw std::invalid_argument(to_string(id) + " is not a lemma");
  }
  return tp;
}

inline std::vector<TheoremPrediction> applicable_results(const SystemParams& params) {
  std::vector<TheoremPrediction> out;
  out.reserve(result_count);
  for (int k = 0; k < result_count; ++k) {
    const auto id = static_cast<ResultId>(k);
    out.push_back(is_lemma(id) ? predict_lemma(params, id) : predict_theorem(params, id));
  }
  return out;
}

struct LemmaChecks {
  bool l1 = true;
  bool l2 = true;
  bool l3 = true;
  bool l4 = true;
  std::vector<std::string> failures;

  bool all() const { return l1 && l2 && l3 && l4; }
};

inline LemmaChecks check_lemmas(const SystemParams& p, const CycleCensus& c) {
  LemmaChecks r;
  const int n = p.n;
  const std::vector<SystemState> markers = {
      {wrap(p.l1 + p.d, n), 0}, {0, wrap(p.l2 + p.d, n)}, {wrap(p.l1, n), p.d}, {p.d, wrap(p.l2, n)}};
  bool any_fixed = false;
  for (const auto& cyc : c.cycles) {
    const Outcome kind = classify_outcome(cyc.velocities());
    if (kind == Outcome::FreeMotion && p.l1 + p.l2 > n) {
      r.l1 = false;
      r.failures.push_back("L1: free-motion cycle through " + cyc.states.front().str());
    }
    if ((cyc.moves1 > 0) != (cyc.moves2 > 0)) {
      r.l2 = false;
      r.failures.push_back("L2: one cluster stalls on the cycle through " + cyc.states.front().str());
    }
    if (kind == Outcome::Intermediate) {
      const bool hit = std::any_of(cyc.states.begin(), cyc.states.end(), [&](const SystemState& s) {
        return std::find(markers.begin(), markers.end(), s) != markers.end();
      });
      if (!hit) {
        r.l3 = false;
        r.failures.push_back("L3: intermediate cycle through " + cyc.states.front().str() + " avoids all markers");
      }
    }
    if (cyc.period() == 1) any_fixed = true;
  }
  const bool expected = p.l1 > p.d && p.l2 > p.d;
  if (any_fixed != expected) {
    r.l4 = false;
    r.failures.push_back(std::string("L4: fixed point ") + (any_fixed ? "exists" : "missing"));
  }
  if (expected) {
    const SystemState dd{p.d, p.d};
    if (!is_acceptable(p, dd) || step(p, dd).next != dd) {
      r.l4 = false;
      r.failures.push_back("L4: (d,d) is not a fixed point");
    }
  }
  return r;
}

struct VerificationEntry {
  TheoremPrediction prediction;
  Classification empirical_scenario;
  Verdict verdict = Verdict::NotApplicable;
  // Agreement of each holding variant with the data, untrusted ones included.
  std::vector<std::pair<std::string, bool>> variant_agreement;
};

struct VerificationReport {
  SystemParams params;
  VelocitySpectrum spectrum;
  Classification scenario;
  std::vector<VerificationEntry> entries;  // one per result, L1..T25

  const VerificationEntry& entry(ResultId id) const { return entries.at(static_cast<std::size_t>(id)); }
  int count(Verdict v) const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [v](const VerificationEntry& e) { return e.verdict == v; }));
  }
};

inline VerificationReport verify(const SystemParams& params) {
  const CycleCensus c = census(params);
  VerificationReport report;
  report.params = params;
  report.spectrum = spectrum_from_census(params, c);
  report.scenario = classify_spectrum(report.spectrum);

  const bool swap = params.l1 > params.l2;
  const OutcomeSet outcomes = swap ? mirrored(report.spectrum).outcomes() : report.spectrum.outcomes();
  const LemmaChecks lemmas = check_lemmas(params, c);
  const bool lemma_ok[4] = {lemmas.l1, lemmas.l2, lemmas.l3, lemmas.l4};

  for (auto& tp : applicable_results(params)) {
    VerificationEntry e;
    e.empirical_scenario = report.scenario;
    if (is_lemma(tp.id)) {
      const bool ok = lemma_ok[static_cast<int>(tp.id)];
      e.verdict = !tp.hypotheses_hold ? Verdict::NotApplicable : ok ? Verdict::Match : Verdict::Mismatch;
    } else {
      for (const auto& v : tp.variants) {
        if (!v.holds) continue;
        if (v.predicted) e.variant_agreement.emplace_back(v.name, *v.predicted == outcomes);
        else if (v.predicted_count) e.variant_agreement.emplace_back(v.name, static_cast<int>(outcomes.size()) == *v.predicted_count);
      }
      if (!tp.hypotheses_hold) e.verdict = Verdict::NotApplicable;
      else if (!tp.internally_consistent) e.verdict = Verdict::Inconclusive;
      else e.verdict = *tp.predicted == outcomes ? Verdict::Match : Verdict::Mismatch;
    }
    e.prediction = std::move(tp);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace twocontour
