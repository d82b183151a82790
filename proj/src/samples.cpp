#include "circfn/samples.hpp"

#include <cmath>
#include <random>

namespace circfn {

namespace {
// mt19937 output mapped straight onto [lo, hi); avoids distribution objects
// so that the sequence is identical on every platform.
double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
}
} // namespace

std::vector<Cplx> standard_points() {
    std::vector<Cplx> pts;
    pts.reserve(20);
    for (double re : {-2.0, -1.0, 0.0, 1.0, 2.0})
        for (double im : {-1.0, 1.0}) pts.emplace_back(re, im);
    std::mt19937 rng(7u);
    while (pts.size() < 20) {
        Cplx z{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
        if (std::abs(z) < 0.25) continue;
        pts.push_back(z);
    }
    return pts;
}

std::vector<std::pair<Cplx, Cplx>> sample_pairs(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<Cplx, Cplx>> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Cplx x{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
        Cplx y{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
        pairs.emplace_back(x, y);
    }
    return pairs;
}

std::vector<Cplx> growth_ray() {
    return {Cplx{1.0}, Cplx{2.0}, Cplx{5.0}, Cplx{10.0}, Cplx{15.0},
            Cplx{growth_probe_point()}};
}

} // namespace circfn
