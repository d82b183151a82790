#pragma once

#include <span>
#include <vector>

#include "circfn/types.hpp"

namespace circfn {

/// Dense square complex matrix, row-major. Small orders only; no attempt at
/// blocking or sparsity.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static CMatrix identity(std::size_t n);

    std::size_t order() const { return n_; }

    Cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<Cplx> a_;
};

CMatrix operator*(const CMatrix& A, const CMatrix& B);
CMatrix operator+(const CMatrix& A, const CMatrix& B);
CMatrix operator-(const CMatrix& A, const CMatrix& B);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& A);

std::vector<Cplx> mat_vec(const CMatrix& A, std::span<const Cplx> v);

/// Max row sum of absolute values, max_i sum_j |a_ij|.
double one_norm(const CMatrix& A);

/// Largest entry magnitude; auxiliary norm used by tests.
double max_abs(const CMatrix& A);

} // namespace circfn
