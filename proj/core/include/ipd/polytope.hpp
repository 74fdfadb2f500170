#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ipd/code.hpp"

namespace ipd {

/// Result of the fundamental-polytope feasibility test.
///
/// theta[i] is the maximum of the parity-constraint expression
///   1 + sum_{l in S}(x_l - 1) - sum_{l in A_i \ S} x_l
/// over odd subsets S of A_i; beta[i] marks the maximizing subset S^(i)
/// (beta aligned with H.rows[i], 1 = member). Feasible iff the box holds
/// strictly and every theta is strictly negative.
struct FeasibilityReport {
    bool feasible = false;
    bool box_ok = false;
    std::vector<double> theta;
    std::vector<std::vector<std::uint8_t>> beta;

    struct Violation {
        enum Kind { box, parity } kind;
        int index;  // bit index for box, check index for parity (0-based)
    };
    std::optional<Violation> first_violation;

    // per-edge visit count of the run that produced this report; lets tests
    // assert the O(w_r m) bound
    std::size_t edge_visits = 0;
};

/// Full report: theta and S^(i) for every check, even when infeasible.
FeasibilityReport feasibility(const SparseParityCheck& H, std::span<const double> x);

/// Buffer-reusing variant for hot loops.
void feasibility_into(const SparseParityCheck& H, std::span<const double> x,
                      FeasibilityReport& report);

/// Early-exit boolean check (line-search probes); no allocation.
bool is_feasible(const SparseParityCheck& H, std::span<const double> x);

/// tau_k^{(i,S)}(x): signed reciprocal of the parity-constraint slack.
///
/// S is given as a sorted list of bit indices, must be an odd subset of
/// A_i, and the constraint must hold strictly at x (denominator < 0).
double tau(const SparseParityCheck& H, std::span<const double> x, int check,
           std::span<const int> S, int k);

/// Exact log-barrier over all odd subsets plus box terms. Exponential in
/// w_r; diagnostic only. Returns +infinity outside the open polytope.
double barrier_value(const SparseParityCheck& H, std::span<const double> x);

}  // namespace ipd
