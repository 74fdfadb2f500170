#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ipd {

/// Symmetric band matrix, lower band stored by diagonal:
/// band[d * n + j] holds entry (j + d, j) for offset d in [0, w].
struct BandedSymmetric {
    int n = 0;
    int bandwidth = 0;  // half-band w
    std::vector<double> band;

    BandedSymmetric() = default;
    BandedSymmetric(int n_, int w) : n(n_), bandwidth(w), band(std::size_t(w + 1) * n_, 0.0) {}

    double& at(int offset, int col) { return band[std::size_t(offset) * n + col]; }
    double at(int offset, int col) const { return band[std::size_t(offset) * n + col]; }

    /// Full (i, j) accessor; zero outside the band.
    double entry(int i, int j) const;

    /// y = G x.
    void multiply(std::span<const double> x, std::span<double> y) const;
};

struct SolverParams {
    enum class Kind { cholesky, jacobi };
    Kind kind = Kind::cholesky;
    double jacobi_omega = 0.8;  // under-relaxation, 0 < omega < 1
    int jacobi_iters = 30;
};

struct SolveStats {
    std::size_t multiply_adds = 0;
};

/// Solves G d = rhs by banded Cholesky (L L^T) plus substitution.
/// Throws NotPositiveDefinite on a non-positive pivot. O((w+1)^2 n).
std::vector<double> cholesky_banded_solve(const BandedSymmetric& G, std::span<const double> rhs,
                                          SolveStats* stats = nullptr);

/// Fixed-iteration Jacobi with under relaxation from x(0) = 0:
///   y(k) = D^{-1}(rhs - (L+U) x(k-1)),  x(k) = omega y(k) + (1-omega) x(k-1).
std::vector<double> jacobi_ur_solve(const BandedSymmetric& G, std::span<const double> rhs,
                                    const SolverParams& params);

}  // namespace ipd
