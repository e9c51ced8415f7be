#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twocontour/dynamics.hpp"
#include "twocontour/rational.hpp"

namespace twocontour {

enum class Outcome { FreeMotion, Collapse, Intermediate };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::FreeMotion: return "FreeMotion";
    case Outcome::Collapse: return "Collapse";
    case Outcome::Intermediate: return "Intermediate";
  }
  return "?";
}

inline Outcome outcome_from_string(std::string_view s) {
  if (s == "FreeMotion") return Outcome::FreeMotion;
  if (s == "Collapse") return Outcome::Collapse;
  if (s == "Intermediate") return Outcome::Intermediate;
  throw std::invalid_argument("unknown outcome '" + std::string(s) + "'");
}

inline Outcome classify_outcome(const VelocityPair& v) {
  if (v.v1 == Rational(1) && v.v2 == Rational(1)) return Outcome::FreeMotion;
  if (v.v1 == Rational(0) && v.v2 == Rational(0)) return Outcome::Collapse;
  return Outcome::Intermediate;
}

struct OrbitSummary {
  SystemState initial;
  int transient_length = 0;
  int period = 1;
  int moves1 = 0;  // A1 over one period
  int moves2 = 0;  // A2 over one period
  VelocityPair velocities;
  Outcome outcome = Outcome::Intermediate;
  std::vector<SystemState> cycle_states;  // period states, starting at the cycle entry

  bool operator==(const OrbitSummary&) const = default;
};

// Walks step() from `initial`, remembering the first visit time of every state;
// the first repeat closes the limit cycle. The state space has at most n^2
// elements, so this terminates within n^2 + 1 steps.
inline OrbitSummary analyze_orbit(const SystemParams& p, const SystemState& initial,
                                  Admissibility mode = Admissibility::Strict) {
  std::map<SystemState, int> first_visit;
  std::vector<SystemState> path;
  std::vector<StepResult> steps;
  SystemState s = initial;
  int t = 0;
  while (true) {
    const auto [it, inserted] = first_visit.emplace(s, t);
    if (!inserted) break;
    path.push_back(s);
    steps.push_back(step(p, s, mode));
    s = steps.back().next;
    ++t;
  }

  OrbitSummary o;
  o.initial = initial;
  o.transient_length = first_visit.at(s);
  o.period = t - o.transient_length;
  for (int k = o.transient_length; k < t; ++k) {
    o.cycle_states.push_back(path[static_cast<std::size_t>(k)]);
    o.moves1 += steps[static_cast<std::size_t>(k)].moved1 ? 1 : 0;
    o.moves2 += steps[static_cast<std::size_t>(k)].moved2 ? 1 : 0;
  }
  o.velocities = {Rational(o.moves1, o.period), Rational(o.moves2, o.period)};
  o.outcome = classify_outcome(o.velocities);
  return o;
}

// All limit cycles of the acceptable-state graph at once. Each acceptable state
// is mapped to the index of the cycle it falls into.
struct CycleCensus {
  struct Cycle {
    std::vector<SystemState> states;  // starting at the smallest state on the cycle
    int moves1 = 0;
    int moves2 = 0;
    int period() const { return static_cast<int>(states.size()); }
    VelocityPair velocities() const { return {Rational(moves1, period()), Rational(moves2, period())}; }
  };

  std::vector<SystemState> states;   // acceptable states, lexicographic
  std::vector<int> cycle_of;         // parallel to states
  std::vector<Cycle> cycles;         // ordered by smallest member
};

inline CycleCensus census(const SystemParams& p) {
  const int n = p.n;
  CycleCensus c;
  c.states = enumerate_acceptable_states(p);

  const auto idx = [n](const SystemState& s) { return static_cast<std::size_t>(s.alpha1 * n + s.alpha2); };
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<int> succ(total, -1);
  std::vector<unsigned char> moved1(total, 0), moved2(total, 0);
  std::vector<bool> acceptable(total, false);
  for (const auto& s : c.states) acceptable[idx(s)] = true;
  for (const auto& s : c.states) {
    const StepResult r = step(p, s);
    if (!acceptable[idx(r.next)]) {
      throw std::logic_error("census: step left the acceptable set at " + s.str());
    }
    succ[idx(s)] = static_cast<int>(idx(r.next));
    moved1[idx(s)] = r.moved1;
    moved2[idx(s)] = r.moved2;
  }

  // 0 = unvisited, 1 = on the current walk, 2 = resolved
  std::vector<unsigned char> mark(total, 0);
  std::vector<int> cycle_id(total, -1);
  std::vector<int> walk;
  for (const auto& s0 : c.states) {
    int v = static_cast<int>(idx(s0));
    if (mark[static_cast<std::size_t>(v)] == 2) continue;
    walk.clear();
    while (mark[static_cast<std::size_t>(v)] == 0) {
      mark[static_cast<std::size_t>(v)] = 1;
      walk.push_back(v);
      v = succ[static_cast<std::size_t>(v)];
    }
    int id;
    if (mark[static_cast<std::size_t>(v)] == 1) {
      CycleCensus::Cycle cyc;
      int u = v;
      do {
        cyc.states.push_back({u / n, u % n});
        cyc.moves1 += moved1[static_cast<std::size_t>(u)];
        cyc.moves2 += moved2[static_cast<std::size_t>(u)];
        u = succ[static_cast<std::size_t>(u)];
      } while (u != v);
      id = static_cast<int>(c.cycles.size());
      c.cycles.push_back(std::move(cyc));
    } else {
      id = cycle_id[static_cast<std::size_t>(v)];
    }
    for (int w : walk) {
      mark[static_cast<std::size_t>(w)] = 2;
      cycle_id[static_cast<std::size_t>(w)] = id;
    }
  }

  // Rotate every cycle to start at its smallest state, then order cycles by it,
  // so the census does not depend on the enumeration order.
  for (auto& cyc : c.cycles) {
    auto first = std::min_element(cyc.states.begin(), cyc.states.end());
    std::rotate(cyc.states.begin(), first, cyc.states.end());
  }
  std::vector<int> order(c.cycles.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return c.cycles[static_cast<std::size_t>(a)].states.front() <
                                       c.cycles[static_cast<std::size_t>(b)].states.front(); });
  std::vector<int> rank(order.size());
  std::vector<CycleCensus::Cycle> sorted;
  sorted.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    sorted.push_back(std::move(c.cycles[static_cast<std::size_t>(order[k])]));
  }
  c.cycles = std::move(sorted);
  c.cycle_of.reserve(c.states.size());
  for (const auto& s : c.states) c.cycle_of.push_back(rank[static_cast<std::size_t>(cycle_id[idx(s)])]);
  return c;
}

}  // namespace twocontour
