#pragma once

#include <span>
#include <vector>

#include "circfn/fourier.hpp"
#include "circfn/matrix.hpp"

namespace circfn {

/// Circulant matrix circ(a_0, ..., a_{n-1}), stored as its first row.
/// Densified, entry (i,j) equals a_{(j-i) mod n}.
class Circulant {
public:
    explicit Circulant(std::vector<Cplx> row);

    std::size_t order() const { return row_.size(); }
    std::span<const Cplx> row() const { return row_; }
    const Cplx& operator[](std::size_t k) const { return row_[k]; }

private:
    std::vector<Cplx> row_;
};

CMatrix to_dense(const Circulant& C);

/// Eigenvalues lambda_j = sum_k a_k w^{+jk} = sqrt(n) (F* a)_j, j = 0..n-1.
/// Radix-2 transform when n is a power of two, direct summation otherwise.
std::vector<Cplx> eigenvalues(const Circulant& C);

/// Inverse of eigenvalues(): the circulant whose eigenvalue list is lambda.
Circulant circulant_from_eigenvalues(std::span<const Cplx> lambda);

/// Product of circulants (pointwise product of eigenvalue lists); commutes.
Circulant operator*(const Circulant& A, const Circulant& B);

/// Coefficients of the polynomial p with A = p(pi), pi the cyclic shift:
/// p(z) = a_0 + a_1 z + ... + a_{n-1} z^{n-1}.
std::vector<Cplx> shift_poly_coefficients(const Circulant& C);

/// Omega^{-m} A Omega^m as a dense matrix: entry (i,j) = a_{(j-i) mod n} w^{(j-i)m}.
CMatrix omega_conjugate(const Circulant& C, long long m);

} // namespace circfn
