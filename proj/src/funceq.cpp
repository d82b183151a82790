#include "circfn/funceq.hpp"

#include <cmath>
#include <memory>
#include <numeric>

#include "circfn/samples.hpp"

namespace circfn {

EquationIndex equation_index(Order n, std::size_t m) {
    const std::size_t N = n;
    if (m >= N) throw std::invalid_argument("equation_index: m must satisfy 0 <= m < n");
    return {N, m, std::gcd(N, m)}; // gcd(n, 0) == n
}

CMatrix residual_matrix(const ComponentVector& f, std::size_t m, Cplx x, Cplx y) {
    const std::size_t n = f.n;
    const Cplx wm = root_of_unity(n, static_cast<long long>(m));
    const CMatrix lhs = to_dense(circulant_at(f, x + wm * y));
    const CMatrix mid = omega_conjugate(circulant_at(f, y), static_cast<long long>(m));
    const CMatrix rhs = mid * to_dense(circulant_at(f, x));
    return lhs - rhs;
}

CMatrix residual_matrix(const ScalarFunction& f, Order n, std::size_t m, Cplx x, Cplx y) {
    return residual_matrix(decompose(f, n), m, x, y);
}

Cplx residual_scalar(const ComponentVector& f, std::size_t m, std::size_t j, Cplx x, Cplx y) {
    const std::size_t n = f.n;
    if (j >= n) throw std::invalid_argument("residual_scalar: component index out of range");
    if (m >= n) throw std::invalid_argument("residual_scalar: m must satisfy 0 <= m < n");
    const Cplx wm = root_of_unity(n, static_cast<long long>(m));
    Cplx s = 0.0;
    for (std::size_t l = 0; l <= j; ++l)
        s += root_of_unity(n, static_cast<long long>((j - l) * m)) * f.parts[l](x) *
             f.parts[j - l](y);
    for (std::size_t l = j + 1; l < n; ++l)
        s += root_of_unity(n, static_cast<long long>((n + j - l) * m)) * f.parts[l](x) *
             f.parts[n + j - l](y);
    return f.parts[j](x + wm * y) - s;
}

namespace {

bool looks_exponential_or_zero(const ScalarFunction& h,
                               std::span<const std::pair<Cplx, Cplx>> pairs, double tol) {
    double defect = 0.0;
    double magnitude = 0.0;
    for (const auto& [x, y] : pairs) {
        const Cplx hx = h(x);
        const Cplx hy = h(y);
        defect = std::max(defect, std::abs(h(x + y) - hx * hy));
        magnitude = std::max({magnitude, std::abs(hx), std::abs(hy)});
    }
    return defect <= tol || magnitude <= tol;
}

} // namespace

SolutionFamily construct_solution(Order n, std::size_t m, std::vector<ScalarFunction> generators) {
    const EquationIndex index = equation_index(n, m);
    const std::size_t N = index.n;
    const std::size_t d = index.d;
    if (generators.size() != d)
        throw std::invalid_argument("construct_solution: expected gcd(n,m) generators");

    // Coset fill of the diagonal: g_{(r+km) mod n}(x) = h_r(w^{km} x).
    auto diag = std::make_shared<std::vector<ScalarFunction>>(N);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < N / d; ++k) {
            const std::size_t at = (r + k * m) % N;
            const Cplx rot = root_of_unity(N, static_cast<long long>(k * m));
            (*diag)[at] = [h = generators[r], rot](Cplx x) { return h(rot * x); };
        }
    }

    // f_j(x) = (1/n) sum_i w^{-ji} g_i(x)
    ComponentVector parts;
    parts.n = N;
    parts.parts.reserve(N);
    for (std::size_t j = 0; j < N; ++j) {
        std::vector<Cplx> weight(N);
        for (std::size_t i = 0; i < N; ++i)
            weight[i] = root_of_unity(N, -static_cast<long long>(j * i)) / static_cast<double>(N);
        parts.parts.push_back([diag, weight = std::move(weight)](Cplx x) {
            Cplx s = 0.0;
            for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * (*diag)[i](x);
            return s;
        });
    }

    const auto pairs = sample_pairs();
    std::vector<bool> exponential;
    exponential.reserve(d);
    for (const auto& h : generators)
        exponential.push_back(looks_exponential_or_zero(h, pairs, 1e-9));

    SolutionFamily family;
    family.index = index;
    family.generators = std::move(generators);
    family.generator_exponential = std::move(exponential);
    family.diagonal = *diag;
    family.components = std::move(parts);
    return family;
}

VerifyReport verify_family(const SolutionFamily& family, std::size_t m_test,
                           std::span<const std::pair<Cplx, Cplx>> pairs, double tol) {
    const std::size_t n = family.index.n;
    if (m_test >= n) throw std::invalid_argument("verify_family: m_test must satisfy 0 <= m_test < n");
    double worst = 0.0;
    for (const auto& [x, y] : pairs)
        worst = std::max(worst, one_norm(residual_matrix(family.components, m_test, x, y)));
    VerifyReport report;
    report.n = n;
    report.m_test = m_test;
    report.pair_count = pairs.size();
    report.tol = tol;
    report.max_residual = worst;
    report.pass = worst <= tol;
    report.in_subgroup = (m_test % family.index.d) == 0;
    return report;
}

} // namespace circfn
