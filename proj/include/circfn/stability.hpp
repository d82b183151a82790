#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circfn/funceq.hpp"
#include "circfn/samples.hpp"

namespace circfn {

/// A circulant-matrix-valued function of one complex variable.
struct CirculantFamily {
    std::size_t n = 0;
    std::function<Circulant(Cplx)> at;
};

/// Max over sample pairs of the 1-norm of the equation residual at m.
double residual_sup(const CirculantFamily& F, std::size_t m,
                    std::span<const std::pair<Cplx, Cplx>> pairs);
double residual_sup(const ScalarFunction& f, Order n, std::size_t m,
                    std::span<const std::pair<Cplx, Cplx>> pairs);

/// Instability witness for gcd(n,m) = d > 1: the circulant family whose
/// diagonalization has entries g_i(x) = e^{w^i x} when d | i and g_i(x) = 2
/// otherwise. The exponential coset satisfies its sub-system exactly, so the
/// only defect comes from the constant entries: the residual stays <= 2n on
/// any sample set while the family is unbounded and violates the equation.
/// Throws when gcd(n,m) = 1.
CirculantFamily counterexample(Order n, std::size_t m);

struct SuperstabilityReport {
    double epsilon = 0.0;
    double max_defect = 0.0;     ///< max |g(x+y) - g(x) g(y)| over pairs
    bool approx_exponential = false;
    double max_magnitude = 0.0;  ///< max |g| over growth points
    bool unbounded = false;      ///< max_magnitude exceeds growth_threshold()
};

/// Probes whether g is an epsilon-approximate exponential on the given pairs
/// and whether it looks unbounded on the growth points. Local evidence only.
SuperstabilityReport superstability_probe(const ScalarFunction& g, double epsilon,
                                          std::span<const std::pair<Cplx, Cplx>> pairs,
                                          std::span<const Cplx> growth_points);

enum class Classification { ExactSolution, Bounded, UnstableWitness };

std::string to_string(Classification c);

struct StabilityReport {
    std::size_t n = 0;
    std::size_t m = 0;
    double epsilon = 0.0;           ///< residual bound the family is known to obey
    double max_residual = 0.0;
    double unbounded_witness = 0.0; ///< largest observed ||F(x)|| along the growth ray
    bool satisfies_equation = false;
    Classification classification = Classification::Bounded;
};

/// The gcd dichotomy, probed empirically. gcd(n,m) > 1: evaluates the
/// counterexample family (unbounded, approximately but not exactly a
/// solution). gcd(n,m) = 1: runs the corpus of families generated from
/// single unbounded exponentials e^{cx} through the coset transfer chain and
/// reports that their residual collapses to zero at m.
StabilityReport stability_experiment(Order n, std::size_t m,
                                     std::span<const std::pair<Cplx, Cplx>> pairs);

} // namespace circfn
