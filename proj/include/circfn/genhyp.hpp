#pragma once

#include <utility>

#include "circfn/types.hpp"

namespace circfn {

/// Generalized hyperbolic function F^(a)_{n,k}: the order-n, phase-k member
/// of the family with series sum_{l>=0} a^l x^{nl+k} / (nl+k)!.
/// (n,a) = (2,1) gives cosh/sinh, (2,-1) gives cos/sin.
struct GenHypSpec {
    GenHypSpec(Order order, std::size_t phase, Cplx param = Cplx{1.0})
        : n(order), k(phase), a(param) {
        if (k >= n.value()) throw std::invalid_argument("GenHypSpec: phase k must satisfy k < n");
    }
    Order n;
    std::size_t k;
    Cplx a;
};

/// Truncated series evaluation. Stops once two consecutive terms fall below
/// tol * max(1, |partial sum|); terms of index not congruent to k mod n are
/// structurally absent, so one small term is not a safe stop near a sign
/// cancellation. Throws after 10000 terms (unreachable for |x| <= 50).
Cplx genhyp_series(const GenHypSpec& spec, Cplx x, double tol = 1e-15);

/// Exponential-sum form (1/n) sum_j w^{-jk} e^{w^j x}; this is component k
/// of exp and equals genhyp_series for a = 1.
Cplx genhyp_expsum(Order n, std::size_t k, Cplx x);

/// Closed forms of order 3 (a = 1), k in {0,1,2}; cos taken at complex
/// argument.
Cplx genhyp3(std::size_t k, Cplx x);

/// Closed forms of order 4 (a = 1): (cosh x + cos x)/2, (sinh x + sin x)/2,
/// (cosh x - cos x)/2, (sinh x - sin x)/2 for k = 0..3.
Cplx genhyp4(std::size_t k, Cplx x);

/// Order-doubling identity: returns (F^1_{2m,r}(x), F^1_{2m,r+m}(x)) computed
/// from the order-m pair as ([F^1 + F^-1]/2, [F^1 - F^-1]/2).
std::pair<Cplx, Cplx> duplicate_order(Order m, std::size_t r, Cplx x);

} // namespace circfn
