#include "ipd/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "ipd/errors.hpp"
#include "ipd/minsum.hpp"
#include "ipd/rng.hpp"

namespace ipd {

std::string decoder_kind_name(DecoderKind k) {
    switch (k) {
        case DecoderKind::gradient: return "gradient";
        case DecoderKind::newton_cholesky: return "newton-cholesky";
        case DecoderKind::newton_jacobi: return "newton-jacobi";
        case DecoderKind::joint_mpd: return "joint-mpd";
    }
    return "?";
}

DecoderKind decoder_kind_from_name(const std::string& name) {
    if (name == "gradient") return DecoderKind::gradient;
    if (name == "newton-cholesky") return DecoderKind::newton_cholesky;
    if (name == "newton-jacobi") return DecoderKind::newton_jacobi;
    if (name == "joint-mpd") return DecoderKind::joint_mpd;
    throw ConfigError("unknown decoder '" + name + "'");
}

namespace {

struct TrialResult {
    int bit_err_minsum = 0;
    int bit_err_rounded = 0;
    bool block_err = false;
    bool failure = false;
    int iterations = 0;
};

struct TrialContext {
    const SimConfig& cfg;
    const LinearVectorChannel& ch;
    const PRChannelSpec& spec;
    const Encoder* encoder;  // null in all-zero mode
    std::size_t snr_index;
};

DecoderParams decoder_params_for(const SimConfig& cfg) {
    DecoderParams p = cfg.dec;
    switch (cfg.decoder) {
        case DecoderKind::gradient: p.inner_kind = DecoderParams::Inner::gradient; break;
        case DecoderKind::newton_cholesky:
            p.inner_kind = DecoderParams::Inner::newton;
            p.solver.kind = SolverParams::Kind::cholesky;
            break;
        case DecoderKind::newton_jacobi:
            p.inner_kind = DecoderParams::Inner::newton;
            p.solver.kind = SolverParams::Kind::jacobi;
            break;
        case DecoderKind::joint_mpd: break;
    }
    return p;
}

Codeword draw_codeword(const TrialContext& ctx, std::mt19937_64& rng) {
    if (ctx.cfg.source == CodewordSource::zero || !ctx.encoder)
        return Codeword(ctx.cfg.H.n, 0);
    std::vector<std::uint8_t> msg(ctx.encoder->message_length());
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1u);
    return ctx.encoder->encode(msg);
}

int hamming(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

TrialResult run_trial(const TrialContext& ctx, const DecoderParams& dec_params, long trial,
                      std::vector<double>* trace_out) {
    std::mt19937_64 rng = substream(ctx.cfg.seed, ctx.snr_index, static_cast<std::uint64_t>(trial));
    const Codeword sent = draw_codeword(ctx, rng);
    const ReceivedWord r = transmit(ctx.ch, sent, rng);

    DecodeOutcome out;
    if (ctx.cfg.decoder == DecoderKind::joint_mpd) {
        JointMPDParams jp = ctx.cfg.jmp;
        out = joint_decode(ctx.cfg.H, ctx.spec, r, jp);
    } else {
        out = decode(ctx.cfg.H, ctx.spec, r, dec_params);
    }

    TrialResult res;
    res.iterations = out.iterations_used;
    if (out.kind == DecodeOutcome::Kind::decoded) {
        const int e = hamming(*out.estimate, sent);
        res.bit_err_minsum = e;
        res.bit_err_rounded = e;
        res.block_err = e != 0;
    } else {
        res.failure = true;
        res.block_err = true;
        res.bit_err_minsum = hamming(out.minsum_tentative, sent);
        if (!out.final_point.empty())
            res.bit_err_rounded = hamming(round_gamma(out.final_point), sent);
        else
            res.bit_err_rounded = res.bit_err_minsum;
    }
    if (trace_out) *trace_out = std::move(out.objective_trace);
    return res;
}

// runs trials [first, last) across the worker pool; results land in
// index order so aggregation is schedule-independent
void run_batch(const TrialContext& ctx, const DecoderParams& dec_params, long first, long last,
               std::vector<TrialResult>& results, std::vector<std::vector<double>>* traces) {
    const long count = last - first;
    long threads = ctx.cfg.threads > 0 ? ctx.cfg.threads
                                       : static_cast<long>(std::thread::hardware_concurrency());
    threads = std::max<long>(1, std::min<long>(threads, count));
    results.resize(count);
    if (traces) traces->resize(count);

    auto work = [&](int worker) {
        for (long t = worker; t < count; t += threads) {
            results[t] = run_trial(ctx, dec_params, first + t,
                                   traces ? &(*traces)[t] : nullptr);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (long w = 0; w < threads; ++w) pool.emplace_back(work, static_cast<int>(w));
        for (auto& th : pool) th.join();
    }
}

}  // namespace

std::vector<BERSummary> run_sweep(const SimConfig& cfg) {
    if (cfg.snr_db.empty()) throw ConfigError("snr grid is empty");
    if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
    const long max_trials = cfg.max_trials > 0 ? cfg.max_trials : 50 * cfg.trials;

    Encoder encoder_storage = build_encoder(cfg.H);
    const Encoder* encoder =
        cfg.source == CodewordSource::random_encoded ? &encoder_storage : nullptr;
    const DecoderParams dec_params = decoder_params_for(cfg);

    std::vector<BERSummary> summaries;
    for (std::size_t pi = 0; pi < cfg.snr_db.size(); ++pi) {
        PRChannelSpec spec = make_pr_channel(cfg.taps, sigma2_from_snr_db(cfg.taps, cfg.snr_db[pi]));
        LinearVectorChannel ch = pr_to_linear(spec, cfg.H.n);
        TrialContext ctx{cfg, ch, spec, encoder, pi};

        BERSummary sum;
        sum.snr_db = cfg.snr_db[pi];
        long iter_total = 0;
        const auto t_begin = std::chrono::steady_clock::now();

        long next = 0;
        std::vector<TrialResult> batch;
        while (true) {
            long target = next == 0 ? cfg.trials
                                    : std::min(max_trials, next + std::max<long>(cfg.trials / 4, 500));
            target = std::min(target, max_trials);
            run_batch(ctx, dec_params, next, target, batch, nullptr);
            for (const TrialResult& tr : batch) {
                sum.bit_err_minsum += tr.bit_err_minsum;
                sum.bit_err_rounded += tr.bit_err_rounded;
                sum.block_err += tr.block_err;
                sum.failures += tr.failure;
                iter_total += tr.iterations;
            }
            next = target;
            const bool enough_errors =
                cfg.min_bit_errors <= 0 || sum.bit_err_minsum >= cfg.min_bit_errors;
            if ((next >= cfg.trials && enough_errors) || next >= max_trials) break;
        }
        const auto t_end = std::chrono::steady_clock::now();

        sum.trials = next;
        sum.ber = double(sum.bit_err_minsum) / (double(sum.trials) * cfg.H.n);
        sum.bler = double(sum.block_err) / double(sum.trials);
        sum.mean_inner_iters = double(iter_total) / double(sum.trials);
        if (cfg.include_timing) {
            sum.wall_sec = std::chrono::duration<double>(t_end - t_begin).count();
            sum.blocks_per_sec = sum.wall_sec > 0.0 ? sum.trials / sum.wall_sec : 0.0;
        }
        summaries.push_back(sum);
    }
    return summaries;
}

std::string summaries_to_csv(const SimConfig& cfg, const std::vector<BERSummary>& rows) {
    std::string out;
    out += "# code: " + (cfg.code_name.empty() ? std::string("(inline)") : cfg.code_name) + "\n";
    out += "# channel: " + (cfg.channel_name.empty() ? std::string("custom") : cfg.channel_name);
    out += ", decoder: " + decoder_kind_name(cfg.decoder);
    out += ", codewords: " + std::string(cfg.source == CodewordSource::zero ? "zero" : "random");
    out += ", seed: " + std::to_string(cfg.seed) + "\n";
    out += "snr_db,trials,bit_err_minsum,bit_err_rounded,block_err,ber,bler,failures,"
           "mean_inner_iters,wall_sec,blocks_per_sec\n";
    char buf[320];
    for (const BERSummary& s : rows) {
        std::snprintf(buf, sizeof buf, "%.6g,%ld,%ld,%ld,%ld,%.9g,%.9g,%ld,%.6g,%.4g,%.6g\n",
                      s.snr_db, s.trials, s.bit_err_minsum, s.bit_err_rounded, s.block_err, s.ber,
                      s.bler, s.failures, s.mean_inner_iters, s.wall_sec, s.blocks_per_sec);
        out += buf;
    }
    return out;
}

void write_csv_file(const std::string& path, const SimConfig& cfg,
                    const std::vector<BERSummary>& rows) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << summaries_to_csv(cfg, rows);
}

ObjectiveTrace run_objective_trace(const SimConfig& cfg) {
    if (cfg.snr_db.empty()) throw ConfigError("snr grid is empty");
    if (cfg.decoder == DecoderKind::joint_mpd)
        throw ConfigError("objective traces apply to interior point decoders only");

    SimConfig full = cfg;
    full.dec.exit_on_parity = false;
    const DecoderParams dec_params = decoder_params_for(full);

    PRChannelSpec spec = make_pr_channel(cfg.taps, sigma2_from_snr_db(cfg.taps, cfg.snr_db[0]));
    LinearVectorChannel ch = pr_to_linear(spec, cfg.H.n);
    Encoder encoder_storage = build_encoder(cfg.H);
    const Encoder* encoder =
        cfg.source == CodewordSource::random_encoded ? &encoder_storage : nullptr;
    TrialContext ctx{full, ch, spec, encoder, 0};

    std::vector<TrialResult> results;
    std::vector<std::vector<double>> traces;
    run_batch(ctx, dec_params, 0, cfg.trials, results, &traces);

    const std::size_t len = std::size_t(dec_params.i_max) * dec_params.o_max;
    ObjectiveTrace tr;
    tr.trials = cfg.trials;
    tr.mean_f.assign(len, 0.0);
    for (const auto& t : traces) {
        for (std::size_t i = 0; i < len && i < t.size(); ++i) tr.mean_f[i] += t[i];
    }
    for (double& v : tr.mean_f) v /= double(cfg.trials);
    return tr;
}

void write_trace_file(const std::string& path, const ObjectiveTrace& trace) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open trace file '" + path + "'");
    f << "iteration,mean_f\n";
    char buf[64];
    for (std::size_t i = 0; i < trace.mean_f.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.9g\n", i + 1, trace.mean_f[i]);
        f << buf;
    }
}

double measure_throughput(const SimConfig& cfg, int warmup) {
    if (cfg.snr_db.empty()) throw ConfigError("snr grid is empty");
    PRChannelSpec spec = make_pr_channel(cfg.taps, sigma2_from_snr_db(cfg.taps, cfg.snr_db[0]));
    LinearVectorChannel ch = pr_to_linear(spec, cfg.H.n);
    Encoder encoder_storage = build_encoder(cfg.H);
    const Encoder* encoder =
        cfg.source == CodewordSource::random_encoded ? &encoder_storage : nullptr;
    TrialContext ctx{cfg, ch, spec, encoder, 0};
    const DecoderParams dec_params = decoder_params_for(cfg);

    for (int t = 0; t < warmup; ++t) run_trial(ctx, dec_params, t, nullptr);
    const auto t_begin = std::chrono::steady_clock::now();
    for (long t = 0; t < cfg.trials; ++t) run_trial(ctx, dec_params, warmup + t, nullptr);
    const auto t_end = std::chrono::steady_clock::now();
    const double sec = std::chrono::duration<double>(t_end - t_begin).count();
    return sec > 0.0 ? cfg.trials / sec : 0.0;
}

}  // namespace ipd
