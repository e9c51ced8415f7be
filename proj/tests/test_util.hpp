#pragma once

#include <map>

#include "oracle.hpp"
#include "twocontour/twocontour.hpp"

namespace testutil {

inline oracle::Model model(const twocontour::SystemParams& p) { return {p.n, p.l1, p.l2, p.d}; }

inline oracle::Velocity to_oracle(const twocontour::VelocityPair& v) {
  return {oracle::Frac(static_cast<long>(v.v1.numerator()), static_cast<long>(v.v1.denominator())),
          oracle::Frac(static_cast<long>(v.v2.numerator()), static_cast<long>(v.v2.denominator()))};
}

inline std::map<oracle::Velocity, int> to_oracle(const twocontour::VelocitySpectrum& sp) {
  std::map<oracle::Velocity, int> out;
  for (const auto& e : sp.entries) out[to_oracle(e.velocities)] = e.basin_size;
  return out;
}

inline twocontour::VelocityPair pair(long a, long b, long c, long d) {
  return {twocontour::Rational(a, b), twocontour::Rational(c, d)};
}

}  // namespace testutil
