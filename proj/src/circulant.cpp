#include "circfn/circulant.hpp"

#include <numbers>
#include <utility>

namespace circfn {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 transform, X_j = sum_k x_k e^{sign 2 pi i jk / n}.
// Twiddles come from argument reduction, not running products.
void fft_pow2(std::vector<Cplx>& v, int sign) {
    const std::size_t n = v.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Cplx w = root_of_unity(len, sign * static_cast<long long>(k));
                const Cplx u = v[i + k];
                const Cplx t = w * v[i + k + half];
                v[i + k] = u + t;
                v[i + k + half] = u - t;
            }
        }
    }
}

void dft_direct(std::vector<Cplx>& v, int sign) {
    const std::size_t n = v.size();
    std::vector<Cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Cplx s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            s += v[k] * root_of_unity(n, sign * static_cast<long long>(j * k));
        out[j] = s;
    }
    v = std::move(out);
}

void transform(std::vector<Cplx>& v, int sign) {
    if (is_pow2(v.size()))
        fft_pow2(v, sign);
    else
        dft_direct(v, sign);
}

} // namespace

Circulant::Circulant(std::vector<Cplx> row) : row_(std::move(row)) {
    if (row_.empty()) throw std::invalid_argument("Circulant: empty first row");
}

CMatrix to_dense(const Circulant& C) {
    const std::size_t n = C.order();
    CMatrix A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = C[(j + n - i) % n];
    return A;
}

std::vector<Cplx> eigenvalues(const Circulant& C) {
    std::vector<Cplx> v(C.row().begin(), C.row().end());
    transform(v, +1);
    return v;
}

Circulant circulant_from_eigenvalues(std::span<const Cplx> lambda) {
    std::vector<Cplx> v(lambda.begin(), lambda.end());
    transform(v, -1);
    const double inv = 1.0 / static_cast<double>(v.size());
    for (Cplx& z : v) z *= inv;
    return Circulant(std::move(v));
}

Circulant operator*(const Circulant& A, const Circulant& B) {
    if (A.order() != B.order())
        throw std::invalid_argument("circulant order mismatch");
    std::vector<Cplx> la = eigenvalues(A);
    const std::vector<Cplx> lb = eigenvalues(B);
    for (std::size_t j = 0; j < la.size(); ++j) la[j] *= lb[j];
    return circulant_from_eigenvalues(la);
}

std::vector<Cplx> shift_poly_coefficients(const Circulant& C) {
    return std::vector<Cplx>(C.row().begin(), C.row().end());
}

CMatrix omega_conjugate(const Circulant& C, long long m) {
    const std::size_t n = C.order();
    CMatrix A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = (j + n - i) % n;
            A(i, j) = C[k] * root_of_unity(n, static_cast<long long>(k) * m);
        }
    return A;
}

} // namespace circfn
