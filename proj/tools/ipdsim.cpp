// Monte Carlo BER/convergence/throughput harness for interior point decoding
// of LDPC codes over partial response channels.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipd/errors.hpp"
#include "ipd/sim.hpp"

namespace {

std::vector<double> parse_snr_grid(const std::string& s) {
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(std::stod(tok));
    std::vector<double> grid;
    if (parts.size() == 1) {
        grid.push_back(parts[0]);
    } else if (parts.size() == 3) {
        const double start = parts[0], step = parts[1], stop = parts[2];
        if (step <= 0.0) throw ipd::ConfigError("--snr step must be positive");
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    } else {
        throw ipd::ConfigError("--snr expects 'value' or 'start:step:stop'");
    }
    if (grid.empty()) throw ipd::ConfigError("--snr grid is empty");
    return grid;
}

std::vector<double> parse_channel(const std::string& s) {
    if (s.find(',') == std::string::npos) return ipd::channel_preset(s);
    std::vector<double> taps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) taps.push_back(std::stod(tok));
    return taps;
}

void print_summary_table(const std::vector<ipd::BERSummary>& rows) {
    std::printf("%8s %9s %10s %10s %9s %12s %12s %9s\n", "snr_db", "trials", "bit_err",
                "bit_err_g", "blk_err", "ber", "bler", "fails");
    for (const auto& s : rows) {
        std::printf("%8.3f %9ld %10ld %10ld %9ld %12.4e %12.4e %9ld\n", s.snr_db, s.trials,
                    s.bit_err_minsum, s.bit_err_rounded, s.block_err, s.ber, s.bler, s.failures);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interior point decoding simulator for LDPC codes on PR channels"};
    app.set_config("--config", "", "flat key=value config file; flags override");

    std::string code_path, channel_str = "dicode", snr_str = "6", decoder_str = "newton-cholesky";
    std::string out_path, trace_path, throughput_path, codewords_str = "random";
    ipd::SimConfig cfg;

    app.add_option("--code", code_path, "parity-check matrix (alist)")->required();
    app.add_option("--channel", channel_str, "preset name or comma-separated taps h0,h1,...");
    app.add_option("--snr", snr_str, "SNR grid in dB: value or start:step:stop");
    app.add_option("--decoder", decoder_str,
                   "gradient | newton-cholesky | newton-jacobi | joint-mpd");
    app.add_option("--imax", cfg.dec.i_max, "inner-loop executions per outer iteration");
    app.add_option("--omax", cfg.dec.o_max, "outer iterations");
    app.add_option("--t0", cfg.dec.t0, "initial scale parameter");
    app.add_option("--alpha", cfg.dec.alpha, "scale multiplier per outer iteration");
    app.add_option("--kappa", cfg.dec.minsum_kappa, "min-sum dump factor");
    app.add_option("--lmax", cfg.dec.minsum_lmax, "built-in min-sum iteration cap");
    app.add_option("--omega", cfg.dec.solver.jacobi_omega, "Jacobi under-relaxation factor");
    app.add_option("--jacobi-iters", cfg.dec.solver.jacobi_iters, "Jacobi iteration count");
    app.add_option("--trials", cfg.trials, "minimum trials per SNR point");
    app.add_option("--min-errors", cfg.min_bit_errors,
                   "keep sampling until this many bit errors (0 disables)");
    app.add_option("--max-trials", cfg.max_trials, "hard trial cap (0 = 50x trials)");
    app.add_option("--seed", cfg.seed, "master RNG seed");
    app.add_option("--codewords", codewords_str, "zero | random");
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    app.add_flag("!--no-timing", cfg.include_timing, "zero the wall/throughput CSV columns");
    app.add_option("--out", out_path, "write BER sweep CSV here");
    app.add_option("--trace", trace_path,
                   "write mean-objective trace CSV here (runs full iterations, first SNR point)");
    app.add_option("--throughput", throughput_path,
                   "measure single-thread decode throughput, write 'decoder,blocks_per_sec'");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.snr_db = parse_snr_grid(snr_str);
        cfg.taps = parse_channel(channel_str);
        cfg.channel_name = channel_str;
        cfg.decoder = ipd::decoder_kind_from_name(decoder_str);
        cfg.jmp.kappa = cfg.dec.minsum_kappa;
        if (codewords_str == "zero")
            cfg.source = ipd::CodewordSource::zero;
        else if (codewords_str == "random")
            cfg.source = ipd::CodewordSource::random_encoded;
        else
            throw ipd::ConfigError("--codewords expects 'zero' or 'random'");

        std::ifstream code_file(code_path);
        if (!code_file) {
            std::cerr << "error: cannot open code file '" << code_path << "'\n";
            return 2;
        }
        cfg.H = ipd::parse_alist(code_file);
        cfg.code_name = code_path;
    } catch (const ipd::ParseError& e) {
        std::cerr << "error: " << code_path << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (!trace_path.empty()) {
            ipd::ObjectiveTrace trace = ipd::run_objective_trace(cfg);
            ipd::write_trace_file(trace_path, trace);
            std::printf("trace: %ld trials, %zu iterations -> %s\n", trace.trials,
                        trace.mean_f.size(), trace_path.c_str());
        }
        if (!throughput_path.empty()) {
            const double bps = ipd::measure_throughput(cfg);
            std::ofstream f(throughput_path);
            if (!f) throw std::runtime_error("cannot open '" + throughput_path + "'");
            f << ipd::decoder_kind_name(cfg.decoder) << "," << bps << "\n";
            std::printf("throughput: %.1f blocks/sec (%s)\n", bps,
                        ipd::decoder_kind_name(cfg.decoder).c_str());
        }
        if (trace_path.empty() && throughput_path.empty()) {
            std::vector<ipd::BERSummary> rows = ipd::run_sweep(cfg);
            print_summary_table(rows);
            if (!out_path.empty()) ipd::write_csv_file(out_path, cfg, rows);
        } else if (!out_path.empty()) {
            std::vector<ipd::BERSummary> rows = ipd::run_sweep(cfg);
            print_summary_table(rows);
            ipd::write_csv_file(out_path, cfg, rows);
        }
    } catch (const ipd::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
