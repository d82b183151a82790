#pragma once

#include "circfn/matrix.hpp"

namespace circfn {

/// e^{2 pi i (j mod n) / n}. The index is reduced modulo n before the angle
/// is formed, so the phase error stays O(eps) for any j and the periodicity
/// w^{j+n} == w^j is exact. Quarter turns (n | 4j) come out exact.
Cplx root_of_unity(std::size_t n, long long j);

/// Unitary symmetric Fourier matrix, entry (j,k) = w^{-jk} / sqrt(n).
CMatrix fourier_matrix(std::size_t n);

/// Entry (j,k) = w^{+jk} / sqrt(n); the conjugate (and inverse) of
/// fourier_matrix(n).
CMatrix fourier_adjoint(std::size_t n);

/// diag[1, w^m, w^{2m}, ..., w^{(n-1)m}]; m may be negative.
CMatrix omega_matrix(std::size_t n, long long m);

/// m-th power of the cyclic shift circ(0,1,0,...,0): entry (i, i+m mod n) = 1.
CMatrix permutation_matrix(std::size_t n, long long m);

} // namespace circfn
