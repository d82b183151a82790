#pragma once

#include <span>
#include <utility>
#include <vector>

#include "circfn/components.hpp"

namespace circfn {

/// Index data of the equation F(x + w^m y) = Omega^{-m} F(y) Omega^m F(x)
/// for a fixed shift index m. d = gcd(n, m), with gcd(n, 0) = n.
struct EquationIndex {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t d = 0;
};

EquationIndex equation_index(Order n, std::size_t m);

/// F(x + w^m y) - Omega^{-m} F(y) Omega^m F(x), densely, for F the circulant
/// matrix function with the given components.
CMatrix residual_matrix(const ComponentVector& f, std::size_t m, Cplx x, Cplx y);

/// Same residual with F built from the components of a black-box f.
CMatrix residual_matrix(const ScalarFunction& f, Order n, std::size_t m, Cplx x, Cplx y);

/// Scalar form of the residual, row j of the system:
///   f_j(x + w^m y) - sum_{l=0}^{j} w^{(j-l)m} f_l(x) f_{j-l}(y)
///                  - sum_{l=j+1}^{n-1} w^{(n+j-l)m} f_l(x) f_{n+j-l}(y).
/// Equals entry (0, j) of residual_matrix.
Cplx residual_scalar(const ComponentVector& f, std::size_t m, std::size_t j, Cplx x, Cplx y);

/// A solution family of the equation at a fixed index m: d generators, the
/// diagonal functions g_0..g_{n-1} they induce, and the component functions.
/// generator_exponential[r] records whether generator r looked exponential
/// (or identically zero) on the standard sample pairs; construction proceeds
/// either way so invalid generators can be probed.
struct SolutionFamily {
    EquationIndex index;
    std::vector<ScalarFunction> generators;
    std::vector<bool> generator_exponential;
    std::vector<ScalarFunction> diagonal;
    ComponentVector components;
};

/// General solution at fixed m from d = gcd(n,m) generators h_0..h_{d-1}:
/// the diagonal is filled along cosets, g_{(r+km) mod n}(x) = h_r(w^{km} x),
/// and the components are f = (1/sqrt(n)) Fourier * (g_0(x),...,g_{n-1}(x)).
SolutionFamily construct_solution(Order n, std::size_t m, std::vector<ScalarFunction> generators);

struct VerifyReport {
    std::size_t n = 0;
    std::size_t m_test = 0;
    std::size_t pair_count = 0;
    double tol = 0.0;
    double max_residual = 0.0;
    bool pass = false;
    bool in_subgroup = false; ///< m_test is a multiple of d mod n
};

/// Max residual of the family's equation at m_test over the sample pairs.
VerifyReport verify_family(const SolutionFamily& family, std::size_t m_test,
                           std::span<const std::pair<Cplx, Cplx>> pairs, double tol);

} // namespace circfn
