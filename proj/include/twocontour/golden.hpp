#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "twocontour/dynamics.hpp"

namespace twocontour {

struct KnownMisprint {
  int edge = 0;  // index k of the transition states[k] -> states[k+1]
  std::string note;
};

struct GoldenSequence {
  std::string source;
  SystemParams params;
  std::vector<SystemState> states;
  std::vector<KnownMisprint> known_misprints;

  bool excluded(int edge) const {
    for (const auto& m : known_misprints) if (m.edge == edge) return true;
    return false;
  }
};

struct ReplayFailure {
  std::string source;
  int edge = 0;
  SystemState from;
  SystemState printed;
  SystemState computed;

  std::string str() const {
    return source + " edge " + std::to_string(edge) + ": " + from.str() + " -> " + printed.str() +
           " printed, rule gives " + computed.str();
  }
};

struct ReplayReport {
  int sequences = 0;
  int edges_checked = 0;
  int edges_excluded = 0;
  int inadmissible_sources = 0;  // checked edges leaving a state the model rejects
  std::vector<ReplayFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Printed sequences pass through states where both clusters straddle one node,
// so the replay applies the movement rule without the admissibility guard.
inline ReplayReport replay_golden(const std::vector<GoldenSequence>& corpus) {
  ReplayReport r;
  for (const auto& g : corpus) {
    ++r.sequences;
    for (std::size_t k = 0; k + 1 < g.states.size(); ++k) {
      const int edge = static_cast<int>(k);
      if (g.excluded(edge)) {
        ++r.edges_excluded;
        continue;
      }
      ++r.edges_checked;
      const SystemState& from = g.states[k];
      if (!in_range(g.params, from)) {
        r.failures.push_back({g.source, edge, from, g.states[k + 1], from});
        continue;
      }
      if (!is_acceptable(g.params, from)) ++r.inadmissible_sources;
      const SystemState next = step(g.params, from, Admissibility::Unchecked).next;
      if (next != g.states[k + 1]) r.failures.push_back({g.source, edge, from, g.states[k + 1], next});
    }
  }
  return r;
}

// "a,b a,b ..." -> states
inline std::vector<SystemState> parse_states(const std::string& text) {
  std::vector<SystemState> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad state token '" + tok + "'");
    out.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
  }
  return out;
}

inline std::vector<GoldenSequence> reference_corpus() {
  auto seq = [](std::string source, SystemParams p, const char* states, std::vector<KnownMisprint> skip = {}) {
    return GoldenSequence{std::move(source), p, parse_states(states), std::move(skip)};
  };
  const auto t1 = make_params(10, 1, 2, 3);
  const auto t2 = make_params(12, 2, 4, 4);
  const auto t4 = make_params(12, 3, 4, 5);
  const auto t5 = make_params(12, 1, 3, 2);
  const auto t6 = make_params(14, 2, 5, 3);
  const auto t8 = make_params(18, 4, 7, 4);
  const auto t9 = make_params(14, 2, 7, 3);
  const auto t10 = make_params(12, 1, 6, 4);
  const auto t12 = make_params(12, 1, 9, 5);
  const auto t13 = make_params(20, 3, 14, 8);
  const auto t14 = make_params(12, 2, 11, 3);
  const auto t16 = make_params(12, 1, 10, 3);
  const auto t21 = make_params(12, 6, 7, 2);
  const auto t25 = make_params(10, 8, 9, 3);
  const std::string fixed_origin = "(0,0) is a fixed point when both lengths exceed n-d";

  return {
      seq("theorem-1-example-a", t1, "4,0 5,1 6,2 7,3 8,4 9,5 0,6 1,7 2,8 3,9 4,0"),
      seq("theorem-1-example-b", t1, "0,5 1,6 2,7 3,8 4,9 5,0 6,1 7,2 8,3 9,4 0,5"),
      seq("theorem-1-example-c", t1, "1,3 2,4 3,5 4,6 5,7 6,8 7,9 8,0 9,1 0,2 1,3"),
      seq("theorem-1-example-d", t1, "3,2 4,3 5,4 6,5 7,6 8,7 9,8 0,9 1,0 2,1 3,2"),
      seq("theorem-2-example-a", t2, "6,0 7,1 8,2 9,3 10,4 11,5 0,6 0,7 0,8 1,9 2,10 3,11 4,0 5,0 6,0"),
      seq("theorem-2-example-b", t2, "2,4 3,5 4,6 5,7 6,8 7,9 8,10 9,11 10,0 11,1 0,2 1,3 2,4"),
      seq("theorem-2-example-c", t2, "4,4 5,5 6,6 7,7 8,8 9,9 10,10 11,11 0,0 1,1 2,2 3,3 4,4"),
      seq("theorem-4-example-a", t4,
          "8,0 9,1 10,2 11,3 0,4 1,5 2,5 3,5 4,6 5,7 6,8 7,9 8,10 9,11 10,0 11,1 0,2 1,3 2,4 3,5 4,6 5,7"),
      seq("theorem-4-example-b", t4,
          "0,9 1,10 2,11 3,0 4,1 5,2 5,3 5,4 6,5 7,6 8,7 9,8 10,9 11,10 0,11 1,0 2,1 3,2 4,3 5,4"),
      seq("theorem-5-example-a", t5, "3,0 4,1 5,2 6,3 7,4 8,5 9,6 10,7 11,8 0,9 1,10 2,11 3,0"),
      seq("theorem-5-example-b", t5, "0,5 1,6 2,7 3,8 4,9"),
      seq("theorem-5-example-c", t5, "5,10 6,11 7,0 8,1 9,2 10,3 11,4 0,5"),
      seq("theorem-5-example-d", t5, "1,2 2,3 3,4 4,5 5,6 6,7 7,8 8,9 9,10 10,11 11,0 0,1 1,2"),
      seq("theorem-5-example-e", t5, "2,3 3,4 4,5 5,6 6,7 7,8 8,9 9,10 10,11 11,0 0,1 1,2 2,3"),
      seq("theorem-6-example-a", t6, "5,0 6,1 7,2 8,3 9,4 10,5 11,6 12,7 13,8 0,9 1,10 2,11 3,12 4,13 5,0"),
      seq("theorem-6-example-b", t6, "0,8 1,9 2,10 3,11 4,12 5,13 6,0 7,1 8,2 9,3 10,4 11,5 12,6 13,7 0,8"),
      seq("theorem-6-example-c", t6, "2,3 3,4 3,5 4,6 5,7 6,8 7,9 8,10 9,11 10,12 11,13 12,0 13,1 0,2 1,3 2,3"),
      seq("theorem-6-example-d", t6, "3,5 4,6 5,7 6,8 7,9 8,10 9,11 10,12 11,13 12,0 13,1 0,2 1,3 2,3"),
      seq("theorem-8-example-a", t8,
          "8,0 9,1 10,2 11,3 12,4 13,5 14,6 15,7 16,8 17,9 0,10 0,11 1,12 2,13 3,14 4,15 5,16 6,17 7,0 8,0"),
      seq("theorem-8-example-b", t8,
          "4,4 4,6 4,7 5,8 6,9 7,10 8,11 9,12 10,13 11,14 12,15 13,16 14,17 15,0 16,1 17,2 0,3 1,4 2,4 3,4 4,4",
          {{0, "printed (4,4) -> (4,6) skips (4,5)"}}),
      seq("theorem-9-example-a", t9, "5,0 6,1 7,2 8,3 9,4 10,5 11,6 12,7 13,8 0,9 0,10 1,11 2,12 3,13 4,0 5,0"),
      seq("theorem-9-example-b", t9,
          "2,3 3,4 3,5 3,6 3,7 4,8 5,9 6,10 7,11 8,12 9,13 10,0 11,1 12,2 13,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10"),
      seq("theorem-10-example-a", t10, "1,4 2,5 3,6 4,7 5,8 6,9 7,10 8,11 9,0 10,1 11,2 0,3 1,4"),
      seq("theorem-10-example-b", t10, "4,6 5,7 6,8 7,9 8,10 9,11 10,0 11,1 0,2 1,3 2,4 3,5 4,6"),
      seq("theorem-10-example-c", t10,
          "5,0 6,1 7,2 8,3 9,4 10,5 11,6 0,7 0,8 0,9 0,10 1,11 2,0 3,1 4,2 4,3 4,4 4,5 4,6"),
      seq("theorem-12-example-a", t12, "1,5 2,6 3,7 4,8 5,9 6,10 7,11 8,0 9,1 10,2 11,3 0,4 1,5"),
      seq("theorem-12-example-b", t12,
          "6,0 7,1 8,2 9,3 10,4 11,5 0,6 0,7 0,8 0,9 0,10 0,11 0,0 0,1 0,2 1,3 2,4 3,5 4,6 5,7 5,8 5,9 6,10 "
          "7,11 8,0 9,1 10,2 11,3 0,4 1,5 2,6 3,7 4,8 5,9"),
      seq("theorem-13-example-a", t13,
          "11,0 12,1 13,2 14,3 15,4 16,5 17,6 18,7 19,8 0,9 0,10 0,11 0,12 0,13 0,14 0,15 0,16 0,17 0,18 0,19 "
          "0,0 0,1 0,2 1,3 2,4 3,5 4,6 5,7 6,8 7,9 8,10 9,11 10,12 11,13 12,14 13,15 14,16 15,17 16,18 17,19 "
          "18,0 19,1 0,2",
          {{30, "cluster 2 covers both cells at node 2, so cluster 1 must wait at cell 8"}}),
      seq("theorem-13-example-b", t13,
          "3,8 4,9 5,10 6,11 7,12 8,13 8,14 9,15 10,16 11,17 12,18 13,19 14,0 15,1 16,2 17,3 18,4 19,5 0,6 "
          "1,7 2,8 3,9 4,10 5,11 6,12 7,13 8,14",
          {{20, "cluster 1 covers both cells at node 2, so cluster 2 must wait at cell 8"}}),
      seq("theorem-14-example", t14,
          "5,0 6,1 7,2 8,3 9,4 10,5 11,6 0,7 0,8 0,9 0,10 0,11 0,0 0,1 0,2 1,3 2,3 3,4 3,5 3,6 3,7 3,8 3,9 "
          "3,10 3,11 4,0 5,0"),
      seq("theorem-16-example-a", t16,
          "4,0 5,1 6,2 7,3 8,4 9,5 10,6 11,7 0,8 0,9 0,10 0,11 0,0 0,1 1,2 2,3 3,4 3,5 3,6 3,7 3,8 3,9 3,10 "
          "4,11 5,0 6,1 7,2 8,3 9,4 10,5 11,6 0,7 0,8 0,9 0,10 0,11 0,0 0,1"),
      seq("theorem-16-example-b", t16, "1,3 2,4 3,5 4,6 5,7 5,8 5,9 5,10",
          {{2, "cluster 2 covers both cells at node 2, so cluster 1 must wait at cell 3"},
           {4, "cluster 1 shown waiting at cell 5, which is not a node cell"},
           {5, "cluster 1 shown waiting at cell 5, which is not a node cell"},
           {6, "cluster 1 shown waiting at cell 5, which is not a node cell"}}),
      seq("theorem-21-example-a", t21, "8,0 9,1 10,2 11,3 0,4 0,5 0,6 0,7 0,8 0,9 1,10 2,11 3,0 4,0 5,0 6,0 7,0 8,0"),
      seq("theorem-21-example-b", t21, "6,2 7,3 8,4 9,5 10,6 11,7 0,8 0,9"),
      seq("theorem-21-example-c", t21, "2,7 3,8 4,9 5,10 6,11 7,0 8,0"),
      seq("theorem-25-example-a", t25, "1,0 2,1 3,2 3,3"),
      seq("theorem-25-example-b", t25, "0,2 1,3 2,3 3,3"),
      seq("theorem-25-example-c", t25, "8,3 9,4 0,5 0,6 0,7 0,8 0,9 0,0 0,1 0,2", {{7, fixed_origin}}),
      seq("theorem-25-example-d", t25, "3,9 4,0 5,0 6,0 7,0 8,0 9,0 0,0 1,0", {{7, fixed_origin}}),
  };
}

}  // namespace twocontour
