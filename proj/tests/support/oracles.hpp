#pragma once

// Independent brute-force reference implementations used by the tests.
// Everything here enumerates or recomputes definitions directly and must
// stay independent of the library's fast paths.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ipd/channel.hpp"
#include "ipd/code.hpp"

namespace oracle {

struct BruteFeasibility {
    bool feasible;
    std::vector<double> theta;             // max over odd subsets, per check
    std::vector<std::vector<int>> arg_set;  // maximizing subset via the spec'd tie rule
};

/// Evaluates every parity inequality (all odd subsets) and the box directly.
BruteFeasibility brute_feasibility(const ipd::SparseParityCheck& H, std::span<const double> x);

/// Parity-constraint expression 1 + sum_{l in S}(x_l-1) - sum_{l in A_i\S} x_l.
double constraint_value(const ipd::SparseParityCheck& H, int check, std::span<const int> S,
                        std::span<const double> x);

/// tau from its definition, using explicit membership tests.
double brute_tau(const ipd::SparseParityCheck& H, std::span<const double> x, int check,
                 std::span<const int> S, int k);

/// Approximate gradient rebuilt from enumeration: S^(i) by explicit odd-subset
/// maximization (ties broken by the documented beta/flip rule), then the
/// defining formula term by term.
std::vector<double> brute_approx_gradient(const ipd::SparseParityCheck& H,
                                          const ipd::PRChannelSpec& spec,
                                          std::span<const double> r, std::span<const double> x,
                                          double t);

/// Dense symmetric solve by Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(std::vector<std::vector<double>> A, std::vector<double> b);

/// Central finite difference of f at x in coordinate k.
template <typename F>
double central_diff(F&& f, std::vector<double> x, int k, double step = 1e-5) {
    x[k] += step;
    const double fp = f(x);
    x[k] -= 2.0 * step;
    const double fm = f(x);
    return (fp - fm) / (2.0 * step);
}

/// Random row-regular parity-check matrix (column weights roughly even).
ipd::SparseParityCheck random_regular_code(int n, int m, int w_r, std::uint64_t seed);

/// All codewords of H (via the library encoder over all 2^k messages).
std::vector<ipd::Codeword> all_codewords(const ipd::SparseParityCheck& H);

/// Exhaustive MLD over a codeword list: argmin ||r - (A x + b)||^2.
ipd::Codeword exhaustive_mld(const std::vector<ipd::Codeword>& codewords,
                             const ipd::LinearVectorChannel& ch, std::span<const double> r);

/// Exact per-bit a-posteriori LLRs by enumerating all 2^n binary inputs of a
/// PR channel with independent priors.
std::vector<double> exhaustive_app_llr(const ipd::PRChannelSpec& spec, std::span<const double> r,
                                       std::span<const double> prior_llr);

}  // namespace oracle
