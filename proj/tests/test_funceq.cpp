#include <doctest.h>

#include "circfn/funceq.hpp"
#include "circfn/samples.hpp"
#include "test_support.hpp"

using namespace circfn;

namespace {

ScalarFunction cexp(Cplx rate = Cplx{1.0}) {
    return [rate](Cplx x) { return std::exp(rate * x); };
}

ScalarFunction zero_fn() {
    return [](Cplx) { return Cplx{0.0}; };
}

} // namespace

TEST_SUITE("funceq") {

TEST_CASE("equation_index") {
    CHECK(equation_index(Order(4), 2).d == 2);
    CHECK(equation_index(Order(6), 4).d == 2);
    CHECK(equation_index(Order(5), 3).d == 1);
    CHECK(equation_index(Order(4), 0).d == 4);
    CHECK_THROWS_AS(equation_index(Order(4), 4), std::invalid_argument);
}

TEST_CASE("exponential functions satisfy the matrix equation at every m") {
    const auto pairs = sample_pairs(20, 7u);
    for (std::size_t n : {2u, 3u, 4u, 6u})
        for (std::size_t m = 0; m < n; ++m) {
            const ComponentVector parts = decompose(cexp(), Order(n));
            for (const auto& [x, y] : pairs)
                CHECK(one_norm(residual_matrix(parts, m, x, y)) <= 1e-10);
        }
}

TEST_CASE("zero function has zero residual") {
    const ComponentVector parts = decompose(zero_fn(), Order(3));
    CHECK(one_norm(residual_matrix(parts, 1, Cplx{0.4, 0.3}, Cplx{-1.0})) == 0.0);
}

TEST_CASE("scalar residual expands the first matrix row") {
    std::mt19937 rng(501u);
    const ScalarFunction f = [](Cplx x) { return std::exp(0.8 * x) + x * x; };
    for (std::size_t n : {2u, 4u, 5u}) {
        const ComponentVector parts = decompose(f, Order(n));
        for (std::size_t m = 0; m < n; ++m) {
            const Cplx x = testsupport::random_cplx(rng, 1.5);
            const Cplx y = testsupport::random_cplx(rng, 1.5);
            const CMatrix R = residual_matrix(parts, m, x, y);
            for (std::size_t j = 0; j < n; ++j)
                CHECK(std::abs(residual_scalar(parts, m, j, x, y) - R(0, j)) <= 1e-11);
        }
    }
}

TEST_CASE("scalar residual of exp at n=2, m=0 is the classical sum system") {
    const ComponentVector parts = decompose(cexp(), Order(2));
    for (const auto& [x, y] : sample_pairs(10, 9u)) {
        CHECK(std::abs(residual_scalar(parts, 0, 0, x, y)) <= 1e-12);
        CHECK(std::abs(residual_scalar(parts, 0, 1, x, y)) <= 1e-12);
    }
    const ComponentVector zeros = decompose(zero_fn(), Order(2));
    CHECK(residual_scalar(zeros, 0, 0, Cplx{1.0}, Cplx{1.0}) == Cplx{0.0});
    CHECK_THROWS_AS(residual_scalar(parts, 0, 2, Cplx{0.0}, Cplx{0.0}), std::invalid_argument);
}

TEST_CASE("construct_solution at n=2, m=1 recovers cosh and sinh") {
    const SolutionFamily family = construct_solution(Order(2), 1, {cexp()});
    for (const Cplx& x : standard_points()) {
        CHECK(std::abs(family.components.parts[0](x) - std::cosh(x)) <= 1e-12);
        CHECK(std::abs(family.components.parts[1](x) - std::sinh(x)) <= 1e-12);
    }
    CHECK(family.generator_exponential[0]);
}

TEST_CASE("construct_solution at n=2, m=0 with (exp, 0) halves the exponential") {
    const SolutionFamily family = construct_solution(Order(2), 0, {cexp(), zero_fn()});
    for (const Cplx& x : standard_points()) {
        const Cplx half = std::exp(x) / 2.0;
        CHECK(std::abs(family.components.parts[0](x) - half) <= 1e-13);
        CHECK(std::abs(family.components.parts[1](x) - half) <= 1e-13);
    }
    CHECK(family.generator_exponential[1]); // identically zero counts
}

TEST_CASE("construct_solution validates the generator count") {
    CHECK_THROWS_AS(construct_solution(Order(4), 2, {cexp()}), std::invalid_argument);
    CHECK_THROWS_AS(construct_solution(Order(4), 1, {cexp(), cexp()}), std::invalid_argument);
}

TEST_CASE("diagonal obeys the coset transfer rule") {
    const std::size_t n = 6, m = 4, d = 2;
    const SolutionFamily family =
        construct_solution(Order(n), m, {cexp(), cexp(Cplx{0.5, 0.2})});
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < n / d; ++k) {
            const std::size_t at = (r + k * m) % n;
            const Cplx rot = root_of_unity(n, static_cast<long long>(k * m));
            for (const Cplx& x : {Cplx{0.3, 0.1}, Cplx{-0.8, 0.6}})
                CHECK(std::abs(family.diagonal[at](x) - family.generators[r](rot * x)) == 0.0);
        }
}

TEST_CASE("non-exponential generators are flagged but still usable") {
    const SolutionFamily family =
        construct_solution(Order(2), 0, {cexp(), [](Cplx) { return Cplx{2.0}; }});
    CHECK(family.generator_exponential[0]);
    CHECK_FALSE(family.generator_exponential[1]);
}

TEST_CASE("verify_family: gcd 1 family passes every index") {
    const SolutionFamily family = construct_solution(Order(4), 1, {cexp()});
    const auto pairs = sample_pairs();
    for (std::size_t mt = 0; mt < 4; ++mt) {
        const VerifyReport r = verify_family(family, mt, pairs, 1e-10);
        CHECK(r.pass);
        CHECK(r.in_subgroup);
    }
    CHECK_THROWS_AS(verify_family(family, 4, pairs, 1e-10), std::invalid_argument);
}

TEST_CASE("verify_family: subgroup closure and generic failure outside it") {
    const auto pairs = sample_pairs();

    const SolutionFamily exp_zero = construct_solution(Order(4), 2, {cexp(), zero_fn()});
    CHECK(verify_family(exp_zero, 2, pairs, 1e-10).pass);
    CHECK(verify_family(exp_zero, 0, pairs, 1e-10).pass);

    const SolutionFamily independent =
        construct_solution(Order(4), 2, {cexp(), cexp(Cplx{2.0})});
    CHECK(verify_family(independent, 2, pairs, 1e-10).pass);
    CHECK(verify_family(independent, 0, pairs, 1e-10).pass);
    const VerifyReport off = verify_family(independent, 1, pairs, 1e-10);
    CHECK_FALSE(off.pass);
    CHECK_FALSE(off.in_subgroup);
    CHECK(off.max_residual > 1e-3);

    const SolutionFamily six = construct_solution(Order(6), 4, {cexp(), cexp(Cplx{1.5})});
    for (std::size_t mt : {0u, 2u, 4u}) {
        const VerifyReport r = verify_family(six, mt, pairs, 1e-10);
        CHECK(r.pass);
        CHECK(r.in_subgroup);
    }
    for (std::size_t mt : {1u, 3u, 5u}) {
        const VerifyReport r = verify_family(six, mt, pairs, 1e-10);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.in_subgroup);
    }
}

TEST_CASE("zero generators are absorbed per coset") {
    const auto pairs = sample_pairs();
    const SolutionFamily family = construct_solution(Order(4), 2, {zero_fn(), cexp()});
    CHECK(verify_family(family, 2, pairs, 1e-10).pass);
}

TEST_CASE("n=2 contrast between the sum and difference systems") {
    const auto pairs = sample_pairs();

    const SolutionFamily coshsinh = construct_solution(Order(2), 1, {cexp()});
    CHECK(verify_family(coshsinh, 0, pairs, 1e-10).pass);
    CHECK(verify_family(coshsinh, 1, pairs, 1e-10).pass);

    const SolutionFamily halves = construct_solution(Order(2), 0, {cexp(), zero_fn()});
    CHECK(verify_family(halves, 0, pairs, 1e-10).pass);
    CHECK_FALSE(verify_family(halves, 1, pairs, 1e-10).pass);
    const CMatrix at11 = residual_matrix(halves.components, 1, Cplx{1.0}, Cplx{1.0});
    CHECK(one_norm(at11) > 0.1);
}

TEST_CASE("black-box residual_matrix overload decomposes first") {
    std::mt19937 rng(521u);
    const ScalarFunction f = cexp(Cplx{0.5, 0.5});
    const Cplx x = testsupport::random_cplx(rng);
    const Cplx y = testsupport::random_cplx(rng);
    const CMatrix a = residual_matrix(f, Order(3), 1, x, y);
    const CMatrix b = residual_matrix(decompose(f, Order(3)), 1, x, y);
    CHECK(testsupport::entry_dist(a, b) <= 1e-14);
}

} // TEST_SUITE
