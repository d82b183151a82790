#include "circfn/genhyp.hpp"

#include <cmath>
#include <numbers>

#include "circfn/fourier.hpp"

namespace circfn {

Cplx genhyp_series(const GenHypSpec& spec, Cplx x, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("genhyp_series: tol must be > 0");
    const std::size_t n = spec.n;
    // term_0 = x^k / k!
    Cplx term = 1.0;
    for (std::size_t q = 1; q <= spec.k; ++q) term *= x / static_cast<double>(q);
    Cplx sum = term;
    std::size_t small_streak = (std::abs(term) <= tol) ? 1 : 0;
    std::size_t index = spec.k;
    for (std::size_t l = 0; l < 10000; ++l) {
        term *= spec.a;
        for (std::size_t q = 0; q < n; ++q) {
            ++index;
            term *= x / static_cast<double>(index);
        }
        sum += term;
        const double mag = std::abs(term);
        if (std::isfinite(mag) && mag <= tol * std::max(1.0, std::abs(sum))) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error("genhyp_series: no convergence within 10000 terms");
}

Cplx genhyp_expsum(Order n, std::size_t k, Cplx x) {
    const std::size_t N = n;
    if (k >= N) throw std::invalid_argument("genhyp_expsum: phase k must satisfy k < n");
    Cplx s = 0.0;
    for (std::size_t j = 0; j < N; ++j)
        s += root_of_unity(N, -static_cast<long long>(j * k)) *
             std::exp(root_of_unity(N, static_cast<long long>(j)) * x);
    return s / static_cast<double>(N);
}

Cplx genhyp3(std::size_t k, Cplx x) {
    const double third_turn = std::numbers::pi / 3.0;
    const Cplx damped = 2.0 * std::exp(-x / 2.0);
    const Cplx arg = std::sqrt(3.0) * x / 2.0;
    switch (k) {
        case 0: return (std::exp(x) + damped * std::cos(arg)) / 3.0;
        case 1: return (std::exp(x) - damped * std::cos(arg + third_turn)) / 3.0;
        case 2: return (std::exp(x) - damped * std::cos(arg - third_turn)) / 3.0;
        default: throw std::invalid_argument("genhyp3: k must be in {0,1,2}");
    }
}

Cplx genhyp4(std::size_t k, Cplx x) {
    switch (k) {
        case 0: return (std::cosh(x) + std::cos(x)) / 2.0;
        case 1: return (std::sinh(x) + std::sin(x)) / 2.0;
        case 2: return (std::cosh(x) - std::cos(x)) / 2.0;
        case 3: return (std::sinh(x) - std::sin(x)) / 2.0;
        default: throw std::invalid_argument("genhyp4: k must be in {0,1,2,3}");
    }
}

std::pair<Cplx, Cplx> duplicate_order(Order m, std::size_t r, Cplx x) {
    if (r >= m.value()) throw std::invalid_argument("duplicate_order: r must satisfy r < m");
    const Cplx plus = genhyp_series(GenHypSpec(m, r, Cplx{1.0}), x);
    const Cplx minus = genhyp_series(GenHypSpec(m, r, Cplx{-1.0}), x);
    return {(plus + minus) / 2.0, (plus - minus) / 2.0};
}

} // namespace circfn
