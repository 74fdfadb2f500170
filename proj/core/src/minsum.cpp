#include "ipd/minsum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ipd {

std::vector<double> llr_from_point(std::span<const double> x) {
    std::vector<double> lambda(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] > 0.0 && x[j] < 1.0))
            throw std::domain_error("llr_from_point: coordinate outside (0, 1)");
        lambda[j] = std::log((1.0 - x[j]) / x[j]);
    }
    return lambda;
}

std::vector<std::uint8_t> round_gamma(std::span<const double> x) {
    std::vector<std::uint8_t> b(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) b[j] = x[j] >= 0.5 ? 1 : 0;
    return b;
}

MinSumResult minsum_decode(const SparseParityCheck& H, std::span<const double> lambda,
                           double kappa, int l_max) {
    if (static_cast<int>(lambda.size()) != H.n)
        throw std::invalid_argument("minsum_decode: lambda length mismatch");
    if (l_max < 1) throw std::invalid_argument("minsum_decode: l_max must be >= 1");

    // edges enumerated row-major: (check i, bit j) for j in A_i
    const int n_edges = H.edge_count();
    std::vector<int> row_start(H.m + 1, 0);
    std::vector<int> edge_bit(n_edges);
    {
        int e = 0;
        for (int i = 0; i < H.m; ++i) {
            row_start[i] = e;
            for (int j : H.rows[i]) edge_bit[e++] = j;
        }
        row_start[H.m] = e;
    }

    std::vector<double> xi(n_edges, 0.0), eta(n_edges, 0.0);
    std::vector<double> total(H.n);
    MinSumResult res;
    res.estimate.assign(H.n, 0);

    auto sign = [](double v) { return v >= 0.0 ? 1.0 : -1.0; };

    for (int it = 1; it <= l_max; ++it) {
        // bit-to-check: eta_{j->i} = lambda_j + sum_{k in B_j \ i} xi_{k->j}
        for (int j = 0; j < H.n; ++j) total[j] = lambda[j];
        for (int e = 0; e < n_edges; ++e) total[edge_bit[e]] += xi[e];
        for (int e = 0; e < n_edges; ++e) eta[e] = total[edge_bit[e]] - xi[e];

        // check-to-bit: xi_{i->j} = kappa * prod sign * min |eta| over A_i \ j
        for (int i = 0; i < H.m; ++i) {
            double min1 = std::numeric_limits<double>::infinity();
            double min2 = min1;
            int argmin = -1;
            double sgn_all = 1.0;
            for (int e = row_start[i]; e < row_start[i + 1]; ++e) {
                const double a = std::abs(eta[e]);
                sgn_all *= sign(eta[e]);
                if (a < min1) {
                    min2 = min1;
                    min1 = a;
                    argmin = e;
                } else if (a < min2) {
                    min2 = a;
                }
            }
            for (int e = row_start[i]; e < row_start[i + 1]; ++e) {
                const double mag = e == argmin ? min2 : min1;
                xi[e] = kappa * sgn_all * sign(eta[e]) * mag;
            }
        }

        // tentative decision on lambda_j + sum_{k in B_j} xi_{k->j}
        for (int j = 0; j < H.n; ++j) total[j] = lambda[j];
        for (int e = 0; e < n_edges; ++e) total[edge_bit[e]] += xi[e];
        for (int j = 0; j < H.n; ++j) res.estimate[j] = total[j] >= 0.0 ? 0 : 1;

        res.iterations = it;
        if (check_parity(H, res.estimate)) {
            res.parity_flag = 0;
            break;
        }
    }
    res.extrinsic.resize(H.n);
    for (int j = 0; j < H.n; ++j) res.extrinsic[j] = total[j] - lambda[j];
    res.xi = std::move(xi);
    return res;
}

}  // namespace ipd
