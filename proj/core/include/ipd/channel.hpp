#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "ipd/code.hpp"
#include "ipd/solvers.hpp"

namespace ipd {

/// Partial response channel: FIR taps h_0..h_delta plus AWGN variance.
/// Symbols before the block start are fixed at 1/2, so their bipolar
/// contribution 1 - 2x vanishes.
struct PRChannelSpec {
    std::vector<double> h;
    double sigma2 = 0.0;

    int delta() const { return static_cast<int>(h.size()) - 1; }
    double energy() const;  // sum of h_d^2
};

/// r = A x + b + z with a dense interference matrix.
struct LinearVectorChannel {
    int n = 0;
    std::vector<double> A;  // row-major n x n
    std::vector<double> b;
    double sigma2 = 0.0;

    double at(int i, int j) const { return A[static_cast<std::size_t>(i) * n + j]; }
};

using ReceivedWord = std::vector<double>;

PRChannelSpec make_pr_channel(std::vector<double> taps, double sigma2);

/// sigma^2 for a given SNR in dB, snr = (sum h_d^2) / sigma^2.
double sigma2_from_snr_db(std::span<const double> taps, double snr_db);
double snr_db_from_sigma2(std::span<const double> taps, double sigma2);

/// Named tap sets: "dicode", "epr4", "pr-deg3", "longtail16".
std::vector<double> channel_preset(const std::string& name);

/// Expands the PR band into the interference matrix and offset vector:
/// A[j][j-d] = -2 h_d, b_j = cumulative tap sum truncated at the block head.
LinearVectorChannel pr_to_linear(const PRChannelSpec& spec, int n);

ReceivedWord transmit(const LinearVectorChannel& ch, const Codeword& x, std::mt19937_64& rng);

/// Noiseless PR output for a relaxed (real-valued) input.
void pr_signal(const PRChannelSpec& spec, std::span<const double> x, std::span<double> out);

/// f(x) = sum_j (r_j - sum_d h_d (1 - 2 x_{j-d}))^2.
double objective(const PRChannelSpec& spec, std::span<const double> r, std::span<const double> x);

/// Gradient of t f(x); O(delta^2 n).
std::vector<double> objective_gradient(const PRChannelSpec& spec, std::span<const double> r,
                                       std::span<const double> x, double t);
void objective_gradient_into(const PRChannelSpec& spec, std::span<const double> r,
                             std::span<const double> x, double t, std::span<double> g);

/// Hessian of t f(x): banded symmetric with half-bandwidth delta,
/// independent of x and r. Entries follow the quadratic form exactly, so
/// the band is Toeplitz except for the truncated sums in the last delta
/// columns.
BandedSymmetric objective_hessian_band(const PRChannelSpec& spec, double t, int n);

}  // namespace ipd
