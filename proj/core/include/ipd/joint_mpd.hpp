#pragma once

#include <span>
#include <vector>

#include "ipd/channel.hpp"
#include "ipd/code.hpp"
#include "ipd/interior_point.hpp"

namespace ipd {

/// Trellis over the 2^delta states of the PR channel memory. State bits
/// hold the most recent input first: bit (d-1) of the state is x_{j-d}.
/// Branch outputs at the first delta symbol times drop the taps that fall
/// before the block (those inputs are pinned to 1/2 and contribute 0).
struct PRTrellis {
    int delta = 0;
    int num_states = 1;
    std::vector<double> h;

    int next_state(int state, int input) const {
        return ((state << 1) | input) & (num_states - 1);
    }

    /// Noiseless output for symbol time j (0-based) leaving `state` on `input`.
    double output(int j, int state, int input) const;
};

/// Guarded construction: delta <= 12 (the state count doubles per tap).
PRTrellis build_trellis(const PRChannelSpec& spec);

struct BcjrConfig {
    bool max_log = false;  // default exact log-sum-exp
};

/// Per-bit extrinsic LLRs (a posteriori minus prior) from the forward/backward
/// recursion. Positive LLR leans bit 0. sigma2 must be positive.
std::vector<double> bcjr_extrinsic(const PRTrellis& trellis, std::span<const double> r,
                                   std::span<const double> prior_llr, double sigma2,
                                   const BcjrConfig& cfg = {});

struct JointMPDParams {
    int overall_iters = 20;
    int minsum_iters_per_round = 10;
    double kappa = 0.7;
    bool max_log = false;
};

/// Turbo equalization baseline: BCJR over the channel trellis and min-sum
/// over the code exchange extrinsic information until the parity check
/// passes or the round limit is hit.
DecodeOutcome joint_decode(const SparseParityCheck& H, const PRChannelSpec& spec,
                           std::span<const double> r, const JointMPDParams& params);

}  // namespace ipd
