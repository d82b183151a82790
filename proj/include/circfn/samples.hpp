#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circfn/types.hpp"

namespace circfn {

/// Threshold and probe point for the "looks unbounded" heuristic: a family
/// counts as unbounded when its norm at growth_probe_point() exceeds
/// growth_threshold(). A desk-scale proxy, not a proof of unboundedness.
constexpr double growth_threshold() { return 1.0e6; }
constexpr double growth_probe_point() { return 20.0; }

/// 20 fixed evaluation points: a 10-point grid in [-2,2] x [-2,2] plus 10
/// seeded pseudorandom points, none of them 0.
std::vector<Cplx> standard_points();

/// Deterministic (x, y) pairs drawn from the [-2,2] x [-2,2] box.
std::vector<std::pair<Cplx, Cplx>> sample_pairs(std::size_t count = 40,
                                                std::uint32_t seed = 42);

/// Points along the positive real ray, ending at the growth probe point.
std::vector<Cplx> growth_ray();

} // namespace circfn
