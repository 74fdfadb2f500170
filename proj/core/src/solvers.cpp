#include "ipd/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ipd/errors.hpp"

namespace ipd {

double BandedSymmetric::entry(int i, int j) const {
    if (i < j) std::swap(i, j);
    const int d = i - j;
    if (d > bandwidth) return 0.0;
    return at(d, j);
}

void BandedSymmetric::multiply(std::span<const double> x, std::span<double> y) const {
    for (int i = 0; i < n; ++i) y[i] = at(0, i) * x[i];
    for (int d = 1; d <= bandwidth; ++d) {
        for (int j = 0; j + d < n; ++j) {
            const double v = at(d, j);
            y[j + d] += v * x[j];
            y[j] += v * x[j + d];
        }
    }
}

std::vector<double> cholesky_banded_solve(const BandedSymmetric& G, std::span<const double> rhs,
                                          SolveStats* stats) {
    const int n = G.n;
    const int w = G.bandwidth;
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("cholesky_banded_solve: rhs length mismatch");

    BandedSymmetric L(n, w);
    std::size_t mads = 0;
    for (int j = 0; j < n; ++j) {
        double diag = G.at(0, j);
        const int kmin = std::max(0, j - w);
        for (int k = kmin; k < j; ++k) {
            const double ljk = L.at(j - k, k);
            diag -= ljk * ljk;
            ++mads;
        }
        if (!(diag > 0.0) || !std::isfinite(diag)) throw NotPositiveDefinite(j);
        const double ljj = std::sqrt(diag);
        L.at(0, j) = ljj;
        const int imax = std::min(n - 1, j + w);
        for (int i = j + 1; i <= imax; ++i) {
            double v = G.at(i - j, j);
            const int k0 = std::max(0, i - w);
            for (int k = std::max(kmin, k0); k < j; ++k) {
                v -= L.at(i - k, k) * L.at(j - k, k);
                ++mads;
            }
            L.at(i - j, j) = v / ljj;
        }
    }

    // forward: L y = rhs
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double v = rhs[i];
        for (int k = std::max(0, i - w); k < i; ++k) {
            v -= L.at(i - k, k) * y[k];
            ++mads;
        }
        y[i] = v / L.at(0, i);
    }
    // backward: L^T d = y
    std::vector<double> d(n);
    for (int i = n - 1; i >= 0; --i) {
        double v = y[i];
        const int kmax = std::min(n - 1, i + w);
        for (int k = i + 1; k <= kmax; ++k) {
            v -= L.at(k - i, i) * d[k];
            ++mads;
        }
        d[i] = v / L.at(0, i);
    }
    if (stats) stats->multiply_adds = mads;
    return d;
}

std::vector<double> jacobi_ur_solve(const BandedSymmetric& G, std::span<const double> rhs,
                                    const SolverParams& params) {
    const int n = G.n;
    const int w = G.bandwidth;
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("jacobi_ur_solve: rhs length mismatch");
    if (!(params.jacobi_omega > 0.0 && params.jacobi_omega < 1.0))
        throw std::invalid_argument("jacobi_ur_solve: omega must be in (0, 1)");
    if (params.jacobi_iters < 1) throw std::invalid_argument("jacobi_ur_solve: iters must be >= 1");
    for (int j = 0; j < n; ++j)
        if (G.at(0, j) == 0.0) throw std::invalid_argument("jacobi_ur_solve: zero diagonal entry");

    const double omega = params.jacobi_omega;
    std::vector<double> x(n, 0.0), off(n);
    for (int it = 0; it < params.jacobi_iters; ++it) {
        // off = (L+U) x
        std::fill(off.begin(), off.end(), 0.0);
        for (int d = 1; d <= w; ++d) {
            for (int j = 0; j + d < n; ++j) {
                const double v = G.at(d, j);
                off[j + d] += v * x[j];
                off[j] += v * x[j + d];
            }
        }
        for (int j = 0; j < n; ++j) {
            const double yj = (rhs[j] - off[j]) / G.at(0, j);
            x[j] = omega * yj + (1.0 - omega) * x[j];
        }
    }
    return x;
}

}  // namespace ipd
