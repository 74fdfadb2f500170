#include "ipd/interior_point.hpp"

#include <cmath>
#include <stdexcept>

#include "ipd/errors.hpp"
#include "ipd/minsum.hpp"

namespace ipd {

namespace {

void require_interior(const FeasibilityReport& rep) {
    if (!rep.feasible)
        throw std::domain_error("approximate gradient/Hessian require an interior point");
}

// adds the tau contributions of every check to g; the constraint value at
// S^(i) is exactly theta_i, so tau_l = (beta_l ? -1 : +1) / theta_i
void add_tau_terms(const SparseParityCheck& H, const FeasibilityReport& rep,
                   std::span<double> g) {
    for (int i = 0; i < H.m; ++i) {
        const double inv = 1.0 / rep.theta[i];
        const auto& row = H.rows[i];
        const auto& beta = rep.beta[i];
        for (std::size_t a = 0; a < row.size(); ++a)
            g[row[a]] += beta[a] ? -inv : inv;
    }
}

void gradient_into(const SparseParityCheck& H, const PRChannelSpec& spec,
                   std::span<const double> r, std::span<const double> x, double t,
                   const FeasibilityReport& rep, std::span<double> g) {
    objective_gradient_into(spec, r, x, t, g);
    for (int k = 0; k < H.n; ++k) g[k] += -1.0 / x[k] - 1.0 / (x[k] - 1.0);
    add_tau_terms(H, rep, g);
}

}  // namespace

std::vector<double> initial_point(const SparseParityCheck& H) {
    if (!H.row_regular || H.max_row_weight < 3)
        throw ConfigError("interior point decoding requires a row-regular H with w_r >= 3");
    return std::vector<double>(H.n, 0.5);
}

std::vector<double> approx_gradient(const SparseParityCheck& H, const PRChannelSpec& spec,
                                    std::span<const double> r, std::span<const double> x,
                                    double t, const FeasibilityReport* report) {
    FeasibilityReport local;
    if (!report) {
        feasibility_into(H, x, local);
        report = &local;
    }
    require_interior(*report);
    std::vector<double> g(H.n);
    gradient_into(H, spec, r, x, t, *report, g);
    return g;
}

BandedSymmetric approx_hessian(const SparseParityCheck& H, const PRChannelSpec& spec,
                               std::span<const double> x, double t,
                               const FeasibilityReport* report) {
    FeasibilityReport local;
    if (!report) {
        feasibility_into(H, x, local);
        report = &local;
    }
    require_interior(*report);
    BandedSymmetric G = objective_hessian_band(spec, t, H.n);
    for (int i = 0; i < H.m; ++i) {
        const double inv2 = 1.0 / (report->theta[i] * report->theta[i]);
        for (int l : H.rows[i]) G.at(0, l) += inv2;
    }
    for (int p = 0; p < H.n; ++p)
        G.at(0, p) += 1.0 / (x[p] * x[p]) + 1.0 / ((x[p] - 1.0) * (x[p] - 1.0));
    return G;
}

namespace {

// largest s in {1, 1/2, ...} with x - s*dir feasible; x unchanged when the
// halving cap runs out
std::vector<double> line_search(const SparseParityCheck& H, std::span<const double> x,
                                std::span<const double> dir, int max_halvings) {
    std::vector<double> probe(x.size());
    double s = 1.0;
    for (int half = 0; half <= max_halvings; ++half, s *= 0.5) {
        bool finite = true;
        for (std::size_t j = 0; j < x.size(); ++j) {
            probe[j] = x[j] - s * dir[j];
            finite = finite && std::isfinite(probe[j]);
        }
        if (finite && is_feasible(H, probe)) return probe;
    }
    return std::vector<double>(x.begin(), x.end());
}

}  // namespace

std::vector<double> inner_loop_gradient(const SparseParityCheck& H, const PRChannelSpec& spec,
                                        std::span<const double> r, std::span<const double> x,
                                        double t, int max_step_halvings) {
    FeasibilityReport rep;
    feasibility_into(H, x, rep);
    require_interior(rep);
    std::vector<double> g(H.n);
    gradient_into(H, spec, r, x, t, rep, g);
    return line_search(H, x, g, max_step_halvings);
}

std::vector<double> inner_loop_newton(const SparseParityCheck& H, const PRChannelSpec& spec,
                                      std::span<const double> r, std::span<const double> x,
                                      double t, const SolverParams& solver,
                                      int max_step_halvings) {
    FeasibilityReport rep;
    feasibility_into(H, x, rep);
    require_interior(rep);
    std::vector<double> g(H.n);
    gradient_into(H, spec, r, x, t, rep, g);
    BandedSymmetric G = approx_hessian(H, spec, x, t, &rep);
    std::vector<double> rhs(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) rhs[k] = -g[k];
    std::vector<double> d;
    try {
        if (solver.kind == SolverParams::Kind::cholesky)
            d = cholesky_banded_solve(G, rhs);
        else
            d = jacobi_ur_solve(G, rhs, solver);
        for (double& v : d) v = -v;  // step is x - s*d with G d = -g
    } catch (const NotPositiveDefinite&) {
        d = g;  // gradient fallback
    }
    return line_search(H, x, d, max_step_halvings);
}

DecodeOutcome decode(const SparseParityCheck& H, const PRChannelSpec& spec,
                     std::span<const double> r, const DecoderParams& params,
                     const DecodeHooks* hooks) {
    if (params.i_max < 1 || params.o_max < 1) throw ConfigError("i_max and o_max must be >= 1");
    if (!(params.t0 > 0.0)) throw ConfigError("t0 must be positive");
    if (!(params.alpha > 1.0)) throw ConfigError("alpha must be > 1");
    if (static_cast<int>(r.size()) != H.n) throw std::invalid_argument("decode: r length mismatch");

    std::vector<double> x = initial_point(H);
    double t = params.t0;

    DecodeOutcome out;
    out.objective_trace.reserve(std::size_t(params.i_max) * params.o_max);

    FeasibilityReport rep;
    std::vector<double> g(H.n), rhs(H.n), d;

    for (int outer = 0; outer < params.o_max; ++outer) {
        for (int inner = 0; inner < params.i_max; ++inner) {
            feasibility_into(H, x, rep);
            require_interior(rep);
            gradient_into(H, spec, r, x, t, rep, g);
            if (params.inner_kind == DecoderParams::Inner::newton) {
                BandedSymmetric G = approx_hessian(H, spec, x, t, &rep);
                for (int k = 0; k < H.n; ++k) rhs[k] = -g[k];
                if (hooks && hooks->on_newton_system) hooks->on_newton_system(G, rhs);
                try {
                    if (params.solver.kind == SolverParams::Kind::cholesky)
                        d = cholesky_banded_solve(G, rhs);
                    else
                        d = jacobi_ur_solve(G, rhs, params.solver);
                    for (double& v : d) v = -v;
                } catch (const NotPositiveDefinite&) {
                    d = g;
                }
                x = line_search(H, x, d, params.max_step_halvings);
            } else {
                x = line_search(H, x, g, params.max_step_halvings);
            }
            if (hooks && hooks->on_committed_point) hooks->on_committed_point(x);
            out.objective_trace.push_back(objective(spec, r, x));
            ++out.iterations_used;
        }
        MinSumResult ms = minsum_decode(H, llr_from_point(x), params.minsum_kappa,
                                        params.minsum_lmax);
        out.minsum_tentative = ms.estimate;
        if (ms.parity_flag == 0 && out.kind != DecodeOutcome::Kind::decoded) {
            out.kind = DecodeOutcome::Kind::decoded;
            out.estimate = ms.estimate;
            if (params.exit_on_parity) {
                out.final_point = std::move(x);
                return out;
            }
        }
        t *= params.alpha;
    }
    out.final_point = std::move(x);
    return out;
}

}  // namespace ipd
