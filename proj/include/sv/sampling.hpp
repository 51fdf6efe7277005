#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "sv/immersion.hpp"

namespace sv {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d4a2ca9f2d475bull;
  return z ^ (z >> 31);
}

inline double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Deterministic low-discrepancy points on the sphere, mapped to charts.
/// An additive (R2/Kronecker) sequence with a seeded offset covers both
/// charts; the seed only shifts the lattice, so coverage is uniform for any
/// seed and runs are reproducible.
inline std::vector<ChartPoint> sphere_samples(int n, std::uint64_t seed) {
  // Plastic-number multipliers of the R2 sequence.
  constexpr double kA1 = 0.7548776662466927;
  constexpr double kA2 = 0.5698402909980532;
  std::uint64_t state = seed;
  const double off1 = detail::unit_double(detail::splitmix64(state));
  const double off2 = detail::unit_double(detail::splitmix64(state));
  std::vector<ChartPoint> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double x1 = std::fmod(off1 + kA1 * (k + 1), 1.0);
    const double x2 = std::fmod(off2 + kA2 * (k + 1), 1.0);
    const double t = 1.0 - 2.0 * x1;  // cos of the polar angle
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    const double phi = 2.0 * std::numbers::pi * x2;
    out.push_back(project({s * std::cos(phi), s * std::sin(phi), t}));
  }
  return out;
}

}  // namespace sv
