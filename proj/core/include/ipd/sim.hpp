#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ipd/channel.hpp"
#include "ipd/code.hpp"
#include "ipd/interior_point.hpp"
#include "ipd/joint_mpd.hpp"

namespace ipd {

enum class DecoderKind { gradient, newton_cholesky, newton_jacobi, joint_mpd };

std::string decoder_kind_name(DecoderKind k);
DecoderKind decoder_kind_from_name(const std::string& name);

enum class CodewordSource { zero, random_encoded };

struct SimConfig {
    SparseParityCheck H;
    std::string code_name;  // recorded in outputs
    std::vector<double> taps;
    std::string channel_name;
    std::vector<double> snr_db;

    DecoderKind decoder = DecoderKind::newton_cholesky;
    DecoderParams dec;
    JointMPDParams jmp;

    long trials = 1000;          // minimum trials per SNR point
    long min_bit_errors = 200;   // keep going until this many errors (0 disables)
    long max_trials = 0;         // hard cap; 0 means 50x trials
    std::uint64_t seed = 1;
    CodewordSource source = CodewordSource::random_encoded;
    int threads = 0;             // 0 = hardware concurrency
    bool include_timing = true;  // false zeroes the wall/throughput columns
};

struct BERSummary {
    double snr_db = 0.0;
    long trials = 0;
    long bit_err_minsum = 0;   // errors of the decoder estimate (tentative on failure)
    long bit_err_rounded = 0;  // failure trials scored by rounding the final point
    long block_err = 0;
    double ber = 0.0;   // bit_err_minsum / (trials * n)
    double bler = 0.0;
    long failures = 0;
    double mean_inner_iters = 0.0;
    double wall_sec = 0.0;
    double blocks_per_sec = 0.0;
};

std::vector<BERSummary> run_sweep(const SimConfig& cfg);

/// CSV with the fixed column set; `# key: value` comment lines record the
/// code file and channel.
std::string summaries_to_csv(const SimConfig& cfg, const std::vector<BERSummary>& rows);
void write_csv_file(const std::string& path, const SimConfig& cfg,
                    const std::vector<BERSummary>& rows);

struct ObjectiveTrace {
    std::vector<double> mean_f;  // indexed by inner-loop execution (1-based in output)
    long trials = 0;
};

/// Mean objective value per inner-loop execution at snr_db[0]; the decoder
/// runs all outer iterations (no parity early exit) so every trial
/// contributes to every iteration.
ObjectiveTrace run_objective_trace(const SimConfig& cfg);
void write_trace_file(const std::string& path, const ObjectiveTrace& trace);

/// Blocks decoded per second at snr_db[0], single-threaded, including
/// encoding and noise generation; `warmup` blocks are excluded.
double measure_throughput(const SimConfig& cfg, int warmup = 50);

}  // namespace ipd
