#include "circfn/fourier.hpp"

#include <cmath>
#include <numbers>

namespace circfn {

namespace {
std::size_t mod_reduce(long long j, std::size_t n) {
    const long long nn = static_cast<long long>(n);
    long long r = j % nn;
    if (r < 0) r += nn;
    return static_cast<std::size_t>(r);
}
} // namespace

Cplx root_of_unity(std::size_t n, long long j) {
    if (n == 0) throw std::invalid_argument("root_of_unity: n must be >= 1");
    const std::size_t r = mod_reduce(j, n);
    if ((4 * r) % n == 0) {
        switch (4 * r / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(r) / static_cast<double>(n));
    return std::polar(1.0, angle);
}

CMatrix fourier_matrix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("fourier_matrix: n must be >= 1");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix F(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            F(j, k) = scale * root_of_unity(n, -static_cast<long long>(j * k));
    return F;
}

CMatrix fourier_adjoint(std::size_t n) {
    if (n == 0) throw std::invalid_argument("fourier_adjoint: n must be >= 1");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix F(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            F(j, k) = scale * root_of_unity(n, static_cast<long long>(j * k));
    return F;
}

CMatrix omega_matrix(std::size_t n, long long m) {
    if (n == 0) throw std::invalid_argument("omega_matrix: n must be >= 1");
    CMatrix D(n);
    for (std::size_t i = 0; i < n; ++i)
        D(i, i) = root_of_unity(n, static_cast<long long>(i) * m);
    return D;
}

CMatrix permutation_matrix(std::size_t n, long long m) {
    if (n == 0) throw std::invalid_argument("permutation_matrix: n must be >= 1");
    const std::size_t shift = mod_reduce(m, n);
    CMatrix P(n);
    for (std::size_t i = 0; i < n; ++i) P(i, (i + shift) % n) = 1.0;
    return P;
}

} // namespace circfn
