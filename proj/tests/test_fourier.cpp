#include <doctest.h>

#include "circfn/fourier.hpp"
#include "test_support.hpp"

using namespace circfn;
using testsupport::entry_dist;
using testsupport::random_row;

TEST_SUITE("fourier") {

TEST_CASE("root_of_unity hits quarter turns exactly") {
    CHECK(root_of_unity(2, 1) == Cplx{-1.0, 0.0});
    CHECK(root_of_unity(4, 1) == Cplx{0.0, 1.0});
    CHECK(root_of_unity(4, 3) == Cplx{0.0, -1.0});
    CHECK(root_of_unity(8, 4) == Cplx{-1.0, 0.0});
    CHECK(root_of_unity(5, 0) == Cplx{1.0, 0.0});
}

TEST_CASE("root_of_unity n=3 matches independent trig values") {
    const Cplx w = root_of_unity(3, 1);
    CHECK(std::abs(w.real() - (-0.5)) <= 1e-15);
    CHECK(std::abs(w.imag() - 0.86602540378443865) <= 1e-15);
}

TEST_CASE("root_of_unity is exactly periodic in j") {
    for (std::size_t n : {2u, 3u, 5u, 7u, 12u})
        for (long long j = -7; j <= 7; ++j) {
            CHECK(root_of_unity(n, j) == root_of_unity(n, j + static_cast<long long>(n)));
            CHECK(root_of_unity(n, j) == root_of_unity(n, j - 3 * static_cast<long long>(n)));
        }
}

TEST_CASE("fourier_matrix small cases") {
    const CMatrix f1 = fourier_matrix(1);
    CHECK(f1.order() == 1);
    CHECK(f1(0, 0) == Cplx{1.0, 0.0});

    const double s = 1.0 / std::sqrt(2.0);
    const CMatrix f2 = fourier_matrix(2);
    CHECK(std::abs(f2(0, 0) - s) <= 1e-16);
    CHECK(std::abs(f2(0, 1) - s) <= 1e-16);
    CHECK(std::abs(f2(1, 0) - s) <= 1e-16);
    CHECK(std::abs(f2(1, 1) + s) <= 1e-16);
}

TEST_CASE("fourier_matrix is exactly symmetric by construction") {
    for (std::size_t n : {2u, 3u, 5u, 8u, 13u, 16u}) {
        const CMatrix F = fourier_matrix(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) CHECK(F(j, k) == F(k, j));
    }
}

TEST_CASE("fourier matrix is unitary up to n=64") {
    for (std::size_t n = 1; n <= 64; ++n) {
        const CMatrix F = fourier_matrix(n);
        const CMatrix Fs = fourier_adjoint(n);
        const CMatrix I = CMatrix::identity(n);
        CHECK(one_norm(F * Fs - I) <= 1e-12);
        CHECK(one_norm(Fs * F - I) <= 1e-12);
    }
}

TEST_CASE("fourier_adjoint is the conjugate of fourier_matrix") {
    for (std::size_t n : {1u, 2u, 3u, 6u}) {
        const CMatrix F = fourier_matrix(n);
        const CMatrix Fs = fourier_adjoint(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                CHECK(std::abs(Fs(j, k) - std::conj(F(j, k))) <= 1e-15);
    }
    CHECK(entry_dist(fourier_adjoint(3), adjoint(fourier_matrix(3))) <= 1e-15);
}

TEST_CASE("omega_matrix") {
    const CMatrix d2 = omega_matrix(2, 1);
    CHECK(d2(0, 0) == Cplx{1.0, 0.0});
    CHECK(d2(1, 1) == Cplx{-1.0, 0.0});
    CHECK(d2(0, 1) == Cplx{0.0, 0.0});

    const CMatrix d4 = omega_matrix(4, -1);
    CHECK(d4(0, 0) == Cplx{1.0, 0.0});
    CHECK(d4(1, 1) == Cplx{0.0, -1.0});
    CHECK(d4(2, 2) == Cplx{-1.0, 0.0});
    CHECK(d4(3, 3) == Cplx{0.0, 1.0});

    CHECK(entry_dist(omega_matrix(3, 3), CMatrix::identity(3)) == 0.0);
}

TEST_CASE("permutation_matrix") {
    const CMatrix p2 = permutation_matrix(2, 1);
    CHECK(p2(0, 1) == Cplx{1.0, 0.0});
    CHECK(p2(1, 0) == Cplx{1.0, 0.0});
    CHECK(p2(0, 0) == Cplx{0.0, 0.0});

    CHECK(entry_dist(permutation_matrix(3, 0), CMatrix::identity(3)) == 0.0);
    CHECK(entry_dist(permutation_matrix(3, 3), CMatrix::identity(3)) == 0.0);
    CHECK(entry_dist(permutation_matrix(5, -1), permutation_matrix(5, 4)) == 0.0);
}

TEST_CASE("conjugation identity F* Omega F = pi") {
    for (std::size_t n = 1; n <= 64; ++n) {
        const CMatrix lhs = fourier_adjoint(n) * omega_matrix(n, 1) * fourier_matrix(n);
        CHECK(one_norm(lhs - permutation_matrix(n, 1)) <= 1e-12);
    }
}

TEST_CASE("shift identity F Omega^-m F* = pi^m for positive and negative m") {
    for (std::size_t n : {2u, 3u, 4u, 6u, 8u, 12u, 16u}) {
        const CMatrix F = fourier_matrix(n);
        const CMatrix Fs = fourier_adjoint(n);
        for (long long m = -static_cast<long long>(n); m <= static_cast<long long>(n); ++m) {
            const CMatrix lhs = F * omega_matrix(n, -m) * Fs;
            CHECK(one_norm(lhs - permutation_matrix(n, m)) <= 1e-12);
        }
    }
}

TEST_CASE("matrix arithmetic basics") {
    std::mt19937 rng(11u);
    const std::size_t n = 4;
    CMatrix A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = testsupport::random_cplx(rng);

    CHECK(entry_dist(CMatrix::identity(n) * A, A) == 0.0);
    CHECK(entry_dist(adjoint(fourier_matrix(5)), fourier_adjoint(5)) <= 1e-15);
    CHECK_THROWS_AS(A * CMatrix(3), std::invalid_argument);
    CHECK_THROWS_AS(A - CMatrix(5), std::invalid_argument);

    const std::vector<Cplx> v = random_row(rng, n);
    const auto Av = mat_vec(A, v);
    Cplx expect = 0.0;
    for (std::size_t j = 0; j < n; ++j) expect += A(2, j) * v[j];
    CHECK(std::abs(Av[2] - expect) <= 1e-14);
}

TEST_CASE("one_norm examples") {
    CHECK(one_norm(CMatrix::identity(3)) == 1.0);

    CMatrix A(2);
    A(0, 0) = 1.0;
    A(0, 1) = -2.0;
    A(1, 0) = Cplx{0.0, 3.0};
    A(1, 1) = 0.0;
    CHECK(one_norm(A) == 3.0);

    for (std::size_t n : {2u, 3u, 9u, 16u})
        CHECK(std::abs(one_norm(fourier_matrix(n)) - std::sqrt(double(n))) <= 1e-12);
}

TEST_CASE("one_norm is submultiplicative and respects diagonal lower bound") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        CMatrix A(n), B(n), D(n);
        double dmin = 1e9;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                A(i, j) = testsupport::random_cplx(rng);
                B(i, j) = testsupport::random_cplx(rng);
            }
            D(i, i) = testsupport::random_cplx(rng);
            dmin = std::min(dmin, std::abs(D(i, i)));
        }
        CHECK(one_norm(A * B) <= one_norm(A) * one_norm(B) + 1e-12);
        CHECK(one_norm(A * D) >= one_norm(A) * dmin - 1e-12);
    }
}

} // TEST_SUITE
