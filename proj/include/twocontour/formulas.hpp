#pragma once

#include "twocontour/core_model.hpp"
#include "twocontour/rational.hpp"

// Closed-form average velocities that appear in the scenario taxonomy and in
// the theorem predictions. All take lengths with l1 <= l2.
namespace twocontour::formulas {

// Each cluster waits once per revolution at each node: n / (l1 + l2 + 2d).
inline Rational both_nodes_delay(const SystemParams& p) { return Rational(p.n, p.l1 + p.l2 + 2 * p.d); }

// n / (l1 + l2 + n - 2d).
inline Rational long_arc_delay(const SystemParams& p) { return Rational(p.n, p.l1 + p.l2 + p.n - 2 * p.d); }

// n / (l1 + l2 + n - d): the alternative denominator printed for the same regime.
inline Rational long_arc_delay_alt(const SystemParams& p) { return Rational(p.n, p.l1 + p.l2 + p.n - p.d); }

// Cluster 1 makes one revolution per two of cluster 2's blocked passes.
inline Rational half_turn_slow(const SystemParams& p) { return Rational(p.n, 2 * (p.l1 + p.l2)); }
inline Rational half_turn_fast(const SystemParams& p) { return Rational(p.n, p.l1 + p.l2); }

inline VelocityPair equal(Rational v) { return {v, v}; }
inline VelocityPair free_motion() { return {Rational(1), Rational(1)}; }
inline VelocityPair collapse() { return {Rational(0), Rational(0)}; }

}  // namespace twocontour::formulas
