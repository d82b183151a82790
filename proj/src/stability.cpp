#include "circfn/stability.hpp"

#include <cmath>

namespace circfn {

namespace {
constexpr double kExactTol = 1e-10;

CMatrix family_residual(const CirculantFamily& F, std::size_t m, Cplx x, Cplx y) {
    const Cplx wm = root_of_unity(F.n, static_cast<long long>(m));
    const CMatrix lhs = to_dense(F.at(x + wm * y));
    const CMatrix mid = omega_conjugate(F.at(y), static_cast<long long>(m));
    return lhs - mid * to_dense(F.at(x));
}
} // namespace

double residual_sup(const CirculantFamily& F, std::size_t m,
                    std::span<const std::pair<Cplx, Cplx>> pairs) {
    if (m >= F.n) throw std::invalid_argument("residual_sup: m must satisfy 0 <= m < n");
    double worst = 0.0;
    for (const auto& [x, y] : pairs)
        worst = std::max(worst, one_norm(family_residual(F, m, x, y)));
    return worst;
}

double residual_sup(const ScalarFunction& f, Order n, std::size_t m,
                    std::span<const std::pair<Cplx, Cplx>> pairs) {
    const ComponentVector parts = decompose(f, n);
    if (m >= parts.n) throw std::invalid_argument("residual_sup: m must satisfy 0 <= m < n");
    double worst = 0.0;
    for (const auto& [x, y] : pairs)
        worst = std::max(worst, one_norm(residual_matrix(parts, m, x, y)));
    return worst;
}

CirculantFamily counterexample(Order n, std::size_t m) {
    const EquationIndex index = equation_index(n, m);
    if (index.d <= 1)
        throw std::invalid_argument("counterexample requires gcd(n,m) > 1");
    const std::size_t N = index.n;
    const std::size_t d = index.d;
    CirculantFamily F;
    F.n = N;
    F.at = [N, d](Cplx x) {
        std::vector<Cplx> diag(N);
        for (std::size_t i = 0; i < N; ++i)
            diag[i] = (i % d == 0)
                          ? std::exp(root_of_unity(N, static_cast<long long>(i)) * x)
                          : Cplx{2.0};
        return circulant_from_eigenvalues(diag);
    };
    return F;
}

SuperstabilityReport superstability_probe(const ScalarFunction& g, double epsilon,
                                          std::span<const std::pair<Cplx, Cplx>> pairs,
                                          std::span<const Cplx> growth_points) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("superstability_probe: epsilon must be > 0");
    SuperstabilityReport report;
    report.epsilon = epsilon;
    for (const auto& [x, y] : pairs)
        report.max_defect = std::max(report.max_defect, std::abs(g(x + y) - g(x) * g(y)));
    for (const Cplx& t : growth_points)
        report.max_magnitude = std::max(report.max_magnitude, std::abs(g(t)));
    report.approx_exponential = report.max_defect <= epsilon;
    report.unbounded = report.max_magnitude > growth_threshold();
    return report;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::ExactSolution: return "exact-solution";
        case Classification::Bounded: return "bounded";
        case Classification::UnstableWitness: return "unstable-witness";
    }
    return "unknown";
}

StabilityReport stability_experiment(Order n, std::size_t m,
                                     std::span<const std::pair<Cplx, Cplx>> pairs) {
    const EquationIndex index = equation_index(n, m);
    const std::size_t N = index.n;
    StabilityReport report;
    report.n = N;
    report.m = m;

    if (index.d > 1) {
        const CirculantFamily F = counterexample(n, m);
        report.epsilon = 2.0 * static_cast<double>(N);
        report.max_residual = residual_sup(F, m, pairs);
        report.unbounded_witness = one_norm(to_dense(F.at(growth_probe_point())));
        report.satisfies_equation = report.max_residual <= kExactTol;
    } else {
        // Unbounded-exponential corpus; each family is an exact solution by
        // Baker-type collapse, and the numbers should agree. Every exponent
        // has Re c >= 3/4 so the growth witness clears the threshold, and
        // |c| <= sqrt(2) so values on the sample box stay ~e^8 and the
        // round-off in the residual stays far below the exactness tolerance.
        const std::vector<Cplx> exponents = {Cplx{1.0}, Cplx{1.0, 1.0}, Cplx{0.75}};
        report.epsilon = kExactTol;
        for (const Cplx& c : exponents) {
            auto family = construct_solution(n, m, {[c](Cplx x) { return std::exp(c * x); }});
            const auto verdict = verify_family(family, m, pairs, kExactTol);
            report.max_residual = std::max(report.max_residual, verdict.max_residual);
            const double witness =
                one_norm(to_dense(circulant_at(family.components, growth_probe_point())));
            report.unbounded_witness = std::max(report.unbounded_witness, witness);
        }
        report.satisfies_equation = report.max_residual <= kExactTol;
    }

    if (report.satisfies_equation)
        report.classification = Classification::ExactSolution;
    else if (report.unbounded_witness > growth_threshold())
        report.classification = Classification::UnstableWitness;
    else
        report.classification = Classification::Bounded;
    return report;
}

} // namespace circfn
