#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ipd/channel.hpp"
#include "ipd/code.hpp"
#include "ipd/polytope.hpp"
#include "ipd/solvers.hpp"

namespace ipd {

struct DecoderParams {
    int i_max = 5;
    int o_max = 5;
    double t0 = 5.0;
    double alpha = 2.0;
    enum class Inner { gradient, newton } inner_kind = Inner::newton;
    SolverParams solver;
    int minsum_lmax = 20;
    double minsum_kappa = 0.7;
    // floating-point guard for the bisection line search; the paper's
    // termination argument holds in exact arithmetic only
    int max_step_halvings = 60;
    // trace mode: run all o_max outer iterations even after the built-in
    // min-sum finds a codeword (used to reproduce convergence curves)
    bool exit_on_parity = true;
};

struct DecodeOutcome {
    enum class Kind { decoded, failure } kind = Kind::failure;
    std::optional<Codeword> estimate;           // set iff kind == decoded
    std::vector<std::uint8_t> minsum_tentative;  // last min-sum hard decision
    std::vector<double> final_point;
    int iterations_used = 0;                    // inner-loop executions
    std::vector<double> objective_trace;        // f(x) after each inner-loop execution
};

/// Observers for test instrumentation; null members are skipped.
struct DecodeHooks {
    std::function<void(const BandedSymmetric& G, const std::vector<double>& rhs)>
        on_newton_system;
    std::function<void(std::span<const double> x)> on_committed_point;
};

/// x = (1/2, ..., 1/2); requires a row-regular H with w_r >= 3, which makes
/// every theta_i = 1 - w_r/2 < 0.
std::vector<double> initial_point(const SparseParityCheck& H);

/// g_k = t df/dx_k + sum_i tau_k^{(i,S^(i))} - 1/x_k - 1/(x_k - 1).
/// x must be interior. `report` may carry a precomputed feasibility report
/// for x; otherwise one is computed.
std::vector<double> approx_gradient(const SparseParityCheck& H, const PRChannelSpec& spec,
                                    std::span<const double> r, std::span<const double> x,
                                    double t, const FeasibilityReport* report = nullptr);

/// Objective Hessian band plus diagonal barrier terms
/// sum_i tau_p^2 + 1/x_p^2 + 1/(x_p - 1)^2.
BandedSymmetric approx_hessian(const SparseParityCheck& H, const PRChannelSpec& spec,
                               std::span<const double> x, double t,
                               const FeasibilityReport* report = nullptr);

/// One gradient-descent step with bisection feasibility line search:
/// largest s in {1, 1/2, 1/4, ...} with x - s g feasible.
std::vector<double> inner_loop_gradient(const SparseParityCheck& H, const PRChannelSpec& spec,
                                        std::span<const double> r, std::span<const double> x,
                                        double t, int max_step_halvings = 60);

/// One Newton step: solve G d = -g, then the same feasibility bisection on
/// x - s d. Falls back to a gradient step if the Hessian is not positive
/// definite.
std::vector<double> inner_loop_newton(const SparseParityCheck& H, const PRChannelSpec& spec,
                                      std::span<const double> r, std::span<const double> x,
                                      double t, const SolverParams& solver,
                                      int max_step_halvings = 60);

/// Interior point decoding: o_max outer iterations of (i_max inner-loop
/// executions, built-in min-sum, t *= alpha), exiting when the min-sum
/// estimate satisfies the parity check.
DecodeOutcome decode(const SparseParityCheck& H, const PRChannelSpec& spec,
                     std::span<const double> r, const DecoderParams& params,
                     const DecodeHooks* hooks = nullptr);

}  // namespace ipd
