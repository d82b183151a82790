#include "circfn/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace circfn {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix I(n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

namespace {
void require_same_order(const CMatrix& A, const CMatrix& B) {
    if (A.order() != B.order())
        throw std::invalid_argument("matrix order mismatch");
}
} // namespace

CMatrix operator*(const CMatrix& A, const CMatrix& B) {
    require_same_order(A, B);
    const std::size_t n = A.order();
    CMatrix C(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Cplx aik = A(i, k);
            if (aik == Cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

CMatrix operator+(const CMatrix& A, const CMatrix& B) {
    require_same_order(A, B);
    const std::size_t n = A.order();
    CMatrix C(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) C(i, j) = A(i, j) + B(i, j);
    return C;
}

CMatrix operator-(const CMatrix& A, const CMatrix& B) {
    require_same_order(A, B);
    const std::size_t n = A.order();
    CMatrix C(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) C(i, j) = A(i, j) - B(i, j);
    return C;
}

CMatrix adjoint(const CMatrix& A) {
    const std::size_t n = A.order();
    CMatrix C(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) C(i, j) = std::conj(A(j, i));
    return C;
}

std::vector<Cplx> mat_vec(const CMatrix& A, std::span<const Cplx> v) {
    if (v.size() != A.order())
        throw std::invalid_argument("matrix/vector order mismatch");
    const std::size_t n = A.order();
    std::vector<Cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Cplx s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += A(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

double one_norm(const CMatrix& A) {
    const std::size_t n = A.order();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(A(i, j));
        best = std::max(best, row);
    }
    return best;
}

double max_abs(const CMatrix& A) {
    const std::size_t n = A.order();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) best = std::max(best, std::abs(A(i, j)));
    return best;
}

} // namespace circfn
