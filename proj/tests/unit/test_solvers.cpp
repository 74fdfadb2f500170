#include <doctest.h>

#include <cmath>
#include <random>

#include "ipd/errors.hpp"
#include "ipd/solvers.hpp"
#include "oracles.hpp"

using namespace ipd;

namespace {

// random SPD band matrix: diagonally dominant by construction
BandedSymmetric random_spd_band(int n, int w, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    BandedSymmetric G(n, w);
    for (int d = 1; d <= w; ++d)
        for (int j = 0; j + d < n; ++j) G.at(d, j) = unif(rng);
    for (int j = 0; j < n; ++j) {
        double rowsum = 0.0;
        for (int d = 1; d <= w; ++d) {
            if (j + d < n) rowsum += std::abs(G.at(d, j));
            if (j - d >= 0) rowsum += std::abs(G.at(d, j - d));
        }
        G.at(0, j) = rowsum + 0.5 + unif(rng) * 0.25;
    }
    return G;
}

std::vector<std::vector<double>> to_dense(const BandedSymmetric& G) {
    std::vector<std::vector<double>> A(G.n, std::vector<double>(G.n, 0.0));
    for (int i = 0; i < G.n; ++i)
        for (int j = 0; j < G.n; ++j) A[i][j] = G.entry(i, j);
    return A;
}

}  // namespace

TEST_CASE("identity system returns the rhs") {
    BandedSymmetric G(5, 0);
    for (int j = 0; j < 5; ++j) G.at(0, j) = 1.0;
    const std::vector<double> rhs{1.0, -2.0, 0.0, 4.0, 0.5};
    CHECK(cholesky_banded_solve(G, rhs) == rhs);
}

TEST_CASE("banded cholesky matches the dense oracle on random SPD systems") {
    std::mt19937_64 rng(404);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 50;
        const int w = 3;
        const BandedSymmetric G = random_spd_band(n, w, rng);
        std::vector<double> rhs(n);
        for (auto& v : rhs) v = gauss(rng);
        const auto d = cholesky_banded_solve(G, rhs);
        const auto ref = oracle::dense_solve(to_dense(G), rhs);
        for (int j = 0; j < n; ++j) CHECK(d[j] == doctest::Approx(ref[j]).epsilon(1e-8));
    }
}

TEST_CASE("cholesky residual is tiny") {
    std::mt19937_64 rng(7);
    const BandedSymmetric G = random_spd_band(80, 4, rng);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> rhs(80);
    for (auto& v : rhs) v = gauss(rng);
    const auto d = cholesky_banded_solve(G, rhs);
    std::vector<double> Gd(80);
    G.multiply(d, Gd);
    double rnorm = 0.0, bnorm = 0.0;
    for (int j = 0; j < 80; ++j) {
        rnorm = std::max(rnorm, std::abs(Gd[j] - rhs[j]));
        bnorm = std::max(bnorm, std::abs(rhs[j]));
    }
    CHECK(rnorm / bnorm < 1e-10);
}

TEST_CASE("cholesky throws on indefinite matrices and callers can tell") {
    BandedSymmetric G(3, 1);
    G.at(0, 0) = 1.0;
    G.at(0, 1) = -2.0;  // negative diagonal: not PD
    G.at(0, 2) = 1.0;
    CHECK_THROWS_AS(cholesky_banded_solve(G, std::vector<double>{1, 1, 1}), NotPositiveDefinite);
}

TEST_CASE("cholesky cost stays within the banded budget") {
    std::mt19937_64 rng(11);
    for (int w : {1, 3, 8}) {
        const int n = 400;
        const BandedSymmetric G = random_spd_band(n, w, rng);
        std::vector<double> rhs(n, 1.0);
        SolveStats stats;
        cholesky_banded_solve(G, rhs, &stats);
        // factorization + two substitutions: well under 3 (w+1)^2 n fused ops
        CHECK(stats.multiply_adds <= std::size_t(3) * (w + 1) * (w + 1) * n);
    }
}

TEST_CASE("jacobi on a diagonal system approaches the solution geometrically") {
    BandedSymmetric G(4, 0);
    for (int j = 0; j < 4; ++j) G.at(0, j) = 2.0;
    const std::vector<double> rhs{2.0, 4.0, -2.0, 6.0};
    SolverParams p;
    p.jacobi_omega = 0.8;
    // exact solution is rhs/2; after K iterations the error scales by 0.2^K
    for (int iters : {1, 2, 5}) {
        p.jacobi_iters = iters;
        const auto x = jacobi_ur_solve(G, rhs, p);
        const double shrink = std::pow(0.2, iters);
        for (int j = 0; j < 4; ++j)
            CHECK(x[j] == doctest::Approx((rhs[j] / 2.0) * (1.0 - shrink)).epsilon(1e-12));
    }
}

TEST_CASE("jacobi residual decreases monotonically on dominant systems") {
    std::mt19937_64 rng(99);
    const BandedSymmetric G = random_spd_band(60, 2, rng);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> rhs(60);
    for (auto& v : rhs) v = gauss(rng);
    SolverParams p;
    double prev = std::numeric_limits<double>::infinity();
    for (int iters = 1; iters <= 12; ++iters) {
        p.jacobi_iters = iters;
        const auto x = jacobi_ur_solve(G, rhs, p);
        std::vector<double> Gx(60);
        G.multiply(x, Gx);
        double res = 0.0;
        for (int j = 0; j < 60; ++j) res += (Gx[j] - rhs[j]) * (Gx[j] - rhs[j]);
        CHECK(res < prev + 1e-15);
        prev = res;
    }
}

TEST_CASE("jacobi is deterministic and validates input") {
    std::mt19937_64 rng(3);
    const BandedSymmetric G = random_spd_band(20, 2, rng);
    const std::vector<double> rhs(20, 1.0);
    SolverParams p;
    CHECK(jacobi_ur_solve(G, rhs, p) == jacobi_ur_solve(G, rhs, p));

    SolverParams bad = p;
    bad.jacobi_omega = 1.0;
    CHECK_THROWS_AS(jacobi_ur_solve(G, rhs, bad), std::invalid_argument);
    bad.jacobi_omega = 0.8;
    bad.jacobi_iters = 0;
    CHECK_THROWS_AS(jacobi_ur_solve(G, rhs, bad), std::invalid_argument);

    BandedSymmetric Z(2, 0);
    Z.at(0, 0) = 1.0;  // zero diagonal at index 1
    CHECK_THROWS_AS(jacobi_ur_solve(Z, std::vector<double>{1, 1}, p), std::invalid_argument);
}

TEST_CASE("cholesky L reproduces G (roundtrip via multiply)") {
    std::mt19937_64 rng(21);
    const BandedSymmetric G = random_spd_band(30, 3, rng);
    // solve against several unit vectors and verify G * x = e
    for (int col = 0; col < 30; col += 7) {
        std::vector<double> e(30, 0.0);
        e[col] = 1.0;
        const auto x = cholesky_banded_solve(G, e);
        std::vector<double> Gx(30);
        G.multiply(x, Gx);
        for (int j = 0; j < 30; ++j) CHECK(Gx[j] == doctest::Approx(e[j]).epsilon(1e-10));
    }
}
