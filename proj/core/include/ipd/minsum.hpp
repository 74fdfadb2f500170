#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ipd/code.hpp"

namespace ipd {

/// lambda_j = ln((1 - x_j) / x_j); positive leans bit 0. Requires 0 < x_j < 1.
std::vector<double> llr_from_point(std::span<const double> x);

struct MinSumResult {
    int parity_flag = 1;  // 0 = estimate satisfies all checks
    std::vector<std::uint8_t> estimate;
    std::vector<double> extrinsic;  // per-bit sum of check-to-bit messages at exit
    std::vector<double> xi;         // final check-to-bit messages, edge order (row-major)
    int iterations = 0;
};

/// Normalized (dump factor kappa) log-domain min-sum with flooding schedule.
/// Runs at most l_max iterations; exits early as soon as the hard decision
/// satisfies the parity check. sign(0) = +1, LLR >= 0 decides bit 0.
MinSumResult minsum_decode(const SparseParityCheck& H, std::span<const double> lambda,
                           double kappa, int l_max);

/// Elementwise threshold at 0.5, ties to 1.
std::vector<std::uint8_t> round_gamma(std::span<const double> x);

}  // namespace ipd
