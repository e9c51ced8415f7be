#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "twocontour/core_model.hpp"

namespace twocontour {

enum class BlockReason { OccupiedOwnNode, OccupiedFarNode, LostCompetition };

inline const char* to_string(BlockReason r) {
  switch (r) {
    case BlockReason::OccupiedOwnNode: return "OccupiedOwnNode";
    case BlockReason::OccupiedFarNode: return "OccupiedFarNode";
    case BlockReason::LostCompetition: return "LostCompetition";
  }
  return "?";
}

class UnacceptableState : public std::domain_error {
public:
  explicit UnacceptableState(const SystemState& s)
      : std::domain_error("UnacceptableState: both clusters occupy one node in " + s.str()), state_(s) {}
  const SystemState& state() const { return state_; }

private:
  SystemState state_;
};

// Strict rejects states where both clusters occupy one node. Unchecked applies
// the movement rule anyway, which is what replaying inadmissible printed
// sequences needs.
enum class Admissibility { Strict, Unchecked };

struct StepResult {
  SystemState next;
  bool moved1 = false;
  bool moved2 = false;
  std::optional<BlockReason> block_reason1;
  std::optional<BlockReason> block_reason2;

  bool moved(int cluster) const { return cluster == 1 ? moved1 : moved2; }
};

namespace detail {

inline void require_in_range(const SystemParams& p, const SystemState& s) {
  if (!in_range(p, s)) throw std::out_of_range("state " + s.str() + " outside [0, n)");
}

// The rule itself, without the admissibility guard.
inline std::optional<BlockReason> blocking_rule(const SystemParams& p, const SystemState& s, int cluster) {
  const int j = other(cluster);
  const int front = s.front(cluster);
  if (front == 0 && occupies_node(p, s, j, node_of(cluster))) return BlockReason::OccupiedOwnNode;
  if (front == p.d && occupies_node(p, s, j, node_of(j))) return BlockReason::OccupiedFarNode;
  // Both at node `cluster`: the one at cell d enters the arc of length n-d >= d and goes first.
  if (front == 0 && s.front(j) == p.d) return BlockReason::LostCompetition;
  return std::nullopt;
}

}  // namespace detail

inline std::optional<BlockReason> is_blocked(const SystemParams& p, const SystemState& s, int cluster,
                                             Admissibility mode = Admissibility::Strict) {
  detail::require_in_range(p, s);
  if (mode == Admissibility::Strict && !is_acceptable(p, s)) throw UnacceptableState(s);
  return detail::blocking_rule(p, s, cluster);
}

// Synchronous update: both decisions read the input state, then both moves apply.
inline StepResult step(const SystemParams& p, const SystemState& s, Admissibility mode = Admissibility::Strict) {
  detail::require_in_range(p, s);
  if (mode == Admissibility::Strict && !is_acceptable(p, s)) throw UnacceptableState(s);

  StepResult r;
  r.block_reason1 = detail::blocking_rule(p, s, 1);
  r.block_reason2 = detail::blocking_rule(p, s, 2);
  r.moved1 = !r.block_reason1.has_value();
  r.moved2 = !r.block_reason2.has_value();
  r.next = {r.moved1 ? wrap(s.alpha1 + 1, p.n) : s.alpha1, r.moved2 ? wrap(s.alpha2 + 1, p.n) : s.alpha2};

  if (mode == Admissibility::Strict) {
    // A competition winner stands at cell d and is blocked only if the loser,
    // whose front is at cell 0, covers cells 0 and 1: impossible with l < n.
    if (r.block_reason1 == BlockReason::LostCompetition && !r.moved2) {
      throw std::logic_error("competition at node 1 left both clusters waiting in " + s.str());
    }
    if (r.block_reason2 == BlockReason::LostCompetition && !r.moved1) {
      throw std::logic_error("competition at node 2 left both clusters waiting in " + s.str());
    }
  }
  return r;
}

// [s0, ..., s_horizon].
inline std::vector<SystemState> trajectory(const SystemParams& p, SystemState initial, int horizon,
                                           Admissibility mode = Admissibility::Strict) {
  if (horizon < 0) throw std::invalid_argument("trajectory: negative horizon");
  std::vector<SystemState> states;
  states.reserve(static_cast<std::size_t>(horizon) + 1);
  states.push_back(initial);
  if (horizon == 0) {
    detail::require_in_range(p, initial);
    if (mode == Admissibility::Strict && !is_acceptable(p, initial)) throw UnacceptableState(initial);
  }
  for (int t = 0; t < horizon; ++t) states.push_back(step(p, states.back(), mode).next);
  return states;
}

}  // namespace twocontour
