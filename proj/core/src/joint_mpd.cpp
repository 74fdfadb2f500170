#include "ipd/joint_mpd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ipd/errors.hpp"
#include "ipd/minsum.hpp"

namespace ipd {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

// log P(bit = 0) and log P(bit = 1) from an LLR, overflow-safe
void log_priors(double llr, double& lp0, double& lp1) {
    if (llr >= 0.0) {
        lp1 = -llr - std::log1p(std::exp(-llr));
        lp0 = lp1 + llr;
    } else {
        lp0 = llr - std::log1p(std::exp(llr));
        lp1 = lp0 - llr;
    }
}
}  // namespace

double PRTrellis::output(int j, int state, int input) const {
    const int delta_eff = std::min(delta, j);  // taps past the block head vanish
    double y = h[0] * (1.0 - 2.0 * input);
    for (int d = 1; d <= delta_eff; ++d) {
        const int bit = (state >> (d - 1)) & 1;
        y += h[d] * (1.0 - 2.0 * bit);
    }
    return y;
}

PRTrellis build_trellis(const PRChannelSpec& spec) {
    const int delta = spec.delta();
    if (delta > 12)
        throw ConfigError("joint MPD trellis limited to delta <= 12 (2^delta states); got delta=" +
                          std::to_string(delta));
    PRTrellis t;
    t.delta = delta;
    t.num_states = 1 << delta;
    t.h = spec.h;
    return t;
}

std::vector<double> bcjr_extrinsic(const PRTrellis& trellis, std::span<const double> r,
                                   std::span<const double> prior_llr, double sigma2,
                                   const BcjrConfig& cfg) {
    const int n = static_cast<int>(r.size());
    if (static_cast<int>(prior_llr.size()) != n)
        throw std::invalid_argument("bcjr_extrinsic: prior length mismatch");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("bcjr_extrinsic: sigma2 must be positive");
    const int S = trellis.num_states;
    const double inv2s2 = 1.0 / (2.0 * sigma2);
    auto acc = cfg.max_log
                   ? +[](double a, double b) { return std::max(a, b); }
                   : +[](double a, double b) { return log_sum_exp(a, b); };

    // branch metrics per time: gamma[j][state*2 + input]
    std::vector<double> gamma(std::size_t(n) * S * 2);
    for (int j = 0; j < n; ++j) {
        double lp0, lp1;
        log_priors(prior_llr[j], lp0, lp1);
        for (int s = 0; s < S; ++s) {
            for (int u = 0; u < 2; ++u) {
                const double e = r[j] - trellis.output(j, s, u);
                gamma[(std::size_t(j) * S + s) * 2 + u] = -e * e * inv2s2 + (u ? lp1 : lp0);
            }
        }
    }

    // forward: the block starts in state 0 (head taps are masked, so the
    // unused state bits never influence an output)
    std::vector<double> alpha(std::size_t(n + 1) * S, kNegInf);
    alpha[0] = 0.0;
    for (int j = 0; j < n; ++j) {
        double norm = kNegInf;
        for (int s = 0; s < S; ++s) {
            const double a = alpha[std::size_t(j) * S + s];
            if (a == kNegInf) continue;
            for (int u = 0; u < 2; ++u) {
                const int ns = trellis.next_state(s, u);
                double& slot = alpha[std::size_t(j + 1) * S + ns];
                slot = acc(slot, a + gamma[(std::size_t(j) * S + s) * 2 + u]);
            }
        }
        for (int s = 0; s < S; ++s) norm = std::max(norm, alpha[std::size_t(j + 1) * S + s]);
        for (int s = 0; s < S; ++s) alpha[std::size_t(j + 1) * S + s] -= norm;
    }

    // backward: final state unconstrained
    std::vector<double> beta(std::size_t(n + 1) * S, 0.0);
    for (int j = n - 1; j >= 0; --j) {
        double norm = kNegInf;
        for (int s = 0; s < S; ++s) {
            double acc_v = kNegInf;
            for (int u = 0; u < 2; ++u) {
                const int ns = trellis.next_state(s, u);
                acc_v = acc(acc_v, gamma[(std::size_t(j) * S + s) * 2 + u] +
                                       beta[std::size_t(j + 1) * S + ns]);
            }
            beta[std::size_t(j) * S + s] = acc_v;
            norm = std::max(norm, acc_v);
        }
        for (int s = 0; s < S; ++s) beta[std::size_t(j) * S + s] -= norm;
    }

    std::vector<double> extrinsic(n);
    for (int j = 0; j < n; ++j) {
        double l0 = kNegInf, l1 = kNegInf;
        for (int s = 0; s < S; ++s) {
            const double a = alpha[std::size_t(j) * S + s];
            if (a == kNegInf) continue;
            for (int u = 0; u < 2; ++u) {
                const int ns = trellis.next_state(s, u);
                const double v = a + gamma[(std::size_t(j) * S + s) * 2 + u] +
                                 beta[std::size_t(j + 1) * S + ns];
                if (u)
                    l1 = acc(l1, v);
                else
                    l0 = acc(l0, v);
            }
        }
        extrinsic[j] = (l0 - l1) - prior_llr[j];
    }
    return extrinsic;
}

DecodeOutcome joint_decode(const SparseParityCheck& H, const PRChannelSpec& spec,
                           std::span<const double> r, const JointMPDParams& params) {
    if (params.overall_iters < 1 || params.minsum_iters_per_round < 1)
        throw ConfigError("joint MPD iteration counts must be >= 1");
    if (static_cast<int>(r.size()) != H.n)
        throw std::invalid_argument("joint_decode: r length mismatch");
    const PRTrellis trellis = build_trellis(spec);
    const BcjrConfig bcfg{params.max_log};

    DecodeOutcome out;
    std::vector<double> code_extrinsic(H.n, 0.0);  // round-1 prior is zero
    for (int round = 0; round < params.overall_iters; ++round) {
        std::vector<double> channel_extrinsic =
            bcjr_extrinsic(trellis, r, code_extrinsic, spec.sigma2, bcfg);
        MinSumResult ms = minsum_decode(H, channel_extrinsic, params.kappa,
                                        params.minsum_iters_per_round);
        ++out.iterations_used;
        out.minsum_tentative = ms.estimate;
        if (ms.parity_flag == 0) {
            out.kind = DecodeOutcome::Kind::decoded;
            out.estimate = std::move(ms.estimate);
            return out;
        }
        code_extrinsic = std::move(ms.extrinsic);
    }
    out.kind = DecodeOutcome::Kind::failure;
    return out;
}

}  // namespace ipd
