#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oracle {

double constraint_value(const ipd::SparseParityCheck& H, int check, std::span<const int> S,
                        std::span<const double> x) {
    double v = 1.0;
    for (int l : H.rows[check]) {
        const bool in_S = std::find(S.begin(), S.end(), l) != S.end();
        v += in_S ? x[l] - 1.0 : -x[l];
    }
    return v;
}

namespace {

// odd subsets of row `check` as index lists
std::vector<std::vector<int>> odd_subsets(const ipd::SparseParityCheck& H, int check) {
    const auto& row = H.rows[check];
    const int w = static_cast<int>(row.size());
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << w); ++mask) {
        if ((__builtin_popcount(mask) & 1) == 0) continue;
        std::vector<int> S;
        for (int a = 0; a < w; ++a)
            if (mask >> a & 1u) S.push_back(row[a]);
        out.push_back(std::move(S));
    }
    return out;
}

// the documented maximizer: beta_l = 1 iff x_l - 1 > -x_l, flip at the
// smallest-index argmin of |2 x_l - 1| if the set has even size
std::vector<int> rule_subset(const ipd::SparseParityCheck& H, int check,
                             std::span<const double> x) {
    const auto& row = H.rows[check];
    std::vector<int> member;
    std::vector<char> beta(row.size(), 0);
    for (std::size_t a = 0; a < row.size(); ++a)
        beta[a] = x[row[a]] - 1.0 > -x[row[a]] ? 1 : 0;
    int count = 0;
    for (char b : beta) count += b;
    if (count % 2 == 0) {
        std::size_t best = 0;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < row.size(); ++a) {
            const double gap = std::abs(2.0 * x[row[a]] - 1.0);
            if (gap < best_gap) {
                best_gap = gap;
                best = a;
            }
        }
        beta[best] ^= 1;
    }
    for (std::size_t a = 0; a < row.size(); ++a)
        if (beta[a]) member.push_back(row[a]);
    return member;
}

}  // namespace

BruteFeasibility brute_feasibility(const ipd::SparseParityCheck& H, std::span<const double> x) {
    BruteFeasibility out;
    out.feasible = true;
    for (int j = 0; j < H.n; ++j)
        if (!(x[j] > 0.0 && x[j] < 1.0)) out.feasible = false;
    out.theta.resize(H.m);
    out.arg_set.resize(H.m);
    for (int i = 0; i < H.m; ++i) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& S : odd_subsets(H, i)) best = std::max(best, constraint_value(H, i, S, x));
        out.theta[i] = best;
        out.arg_set[i] = rule_subset(H, i, x);
        if (best >= 0.0) out.feasible = false;
    }
    return out;
}

double brute_tau(const ipd::SparseParityCheck& H, std::span<const double> x, int check,
                 std::span<const int> S, int k) {
    const auto& row = H.rows[check];
    const bool in_row = std::find(row.begin(), row.end(), k) != row.end();
    const bool in_S = std::find(S.begin(), S.end(), k) != S.end();
    const double denom = constraint_value(H, check, S, x);
    const double num = (in_row && !in_S ? 1.0 : 0.0) - (in_S ? 1.0 : 0.0);
    return num / denom;
}

std::vector<double> brute_approx_gradient(const ipd::SparseParityCheck& H,
                                          const ipd::PRChannelSpec& spec,
                                          std::span<const double> r, std::span<const double> x,
                                          double t) {
    const int n = H.n;
    // objective part by central differences of t*f
    std::vector<double> g(n);
    std::vector<double> xv(x.begin(), x.end());
    for (int k = 0; k < n; ++k) {
        g[k] = central_diff(
            [&](const std::vector<double>& p) { return t * ipd::objective(spec, r, p); }, xv, k,
            1e-6);
    }
    // box barrier derivative
    for (int k = 0; k < n; ++k) g[k] += -1.0 / x[k] - 1.0 / (x[k] - 1.0);
    // dominant tau term per check, S^(i) chosen by enumeration + documented tie rule
    for (int i = 0; i < H.m; ++i) {
        const auto S = rule_subset(H, i, x);
        for (int k : H.rows[i]) g[k] += brute_tau(H, x, i, S, k);
    }
    return g;
}

std::vector<double> dense_solve(std::vector<std::vector<double>> A, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        if (A[piv][c] == 0.0) throw std::runtime_error("dense_solve: singular matrix");
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (int r = c + 1; r < n; ++r) {
            const double f = A[r][c] / A[c][c];
            if (f == 0.0) continue;
            for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double v = b[r];
        for (int k = r + 1; k < n; ++k) v -= A[r][k] * x[k];
        x[r] = v / A[r][r];
    }
    return x;
}

ipd::SparseParityCheck random_regular_code(int n, int m, int w_r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> sockets(static_cast<std::size_t>(m) * w_r);
    for (std::size_t e = 0; e < sockets.size(); ++e) sockets[e] = static_cast<int>(e % n);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::shuffle(sockets.begin(), sockets.end(), rng);
        std::vector<std::vector<int>> rows(m);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            rows[i].assign(sockets.begin() + std::size_t(i) * w_r,
                           sockets.begin() + std::size_t(i + 1) * w_r);
            std::sort(rows[i].begin(), rows[i].end());
            ok = std::adjacent_find(rows[i].begin(), rows[i].end()) == rows[i].end();
        }
        if (ok) return ipd::SparseParityCheck::from_rows(n, std::move(rows));
    }
    throw std::runtime_error("random_regular_code: could not draw a duplicate-free matrix");
}

std::vector<ipd::Codeword> all_codewords(const ipd::SparseParityCheck& H) {
    const ipd::Encoder enc(H);
    const int k = enc.message_length();
    if (k > 20) throw std::runtime_error("all_codewords: 2^k too large");
    std::vector<ipd::Codeword> out;
    out.reserve(std::size_t(1) << k);
    std::vector<std::uint8_t> msg(k);
    for (std::uint32_t v = 0; v < (1u << k); ++v) {
        for (int b = 0; b < k; ++b) msg[b] = v >> b & 1u;
        out.push_back(enc.encode(msg));
    }
    return out;
}

ipd::Codeword exhaustive_mld(const std::vector<ipd::Codeword>& codewords,
                             const ipd::LinearVectorChannel& ch, std::span<const double> r) {
    double best = std::numeric_limits<double>::infinity();
    const ipd::Codeword* arg = nullptr;
    for (const auto& cw : codewords) {
        double dist = 0.0;
        for (int i = 0; i < ch.n; ++i) {
            double s = ch.b[i];
            for (int j = 0; j < ch.n; ++j)
                if (cw[j]) s += ch.at(i, j);
            const double e = r[i] - s;
            dist += e * e;
        }
        if (dist < best) {
            best = dist;
            arg = &cw;
        }
    }
    return *arg;
}

std::vector<double> exhaustive_app_llr(const ipd::PRChannelSpec& spec, std::span<const double> r,
                                       std::span<const double> prior_llr) {
    const int n = static_cast<int>(r.size());
    if (n > 14) throw std::runtime_error("exhaustive_app_llr: n too large");
    const double inv2s2 = 1.0 / (2.0 * spec.sigma2);
    std::vector<double> logw(std::size_t(1) << n);
    std::vector<double> xreal(n), sig(n);
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        for (int j = 0; j < n; ++j) xreal[j] = v >> j & 1u;
        ipd::pr_signal(spec, xreal, sig);
        double lw = 0.0;
        for (int j = 0; j < n; ++j) {
            const double e = r[j] - sig[j];
            lw -= e * e * inv2s2;
            // log P(x_j) from the prior LLR, stable in both tails
            const double l = prior_llr[j];
            const double lp0 = l >= 0.0 ? -std::log1p(std::exp(-l)) : l - std::log1p(std::exp(l));
            lw += (v >> j & 1u) ? lp0 - l : lp0;
        }
        logw[v] = lw;
    }
    auto lse = [](const std::vector<double>& vals) {
        double mx = -std::numeric_limits<double>::infinity();
        for (double v : vals) mx = std::max(mx, v);
        double s = 0.0;
        for (double v : vals) s += std::exp(v - mx);
        return mx + std::log(s);
    };
    std::vector<double> llr(n);
    std::vector<double> bucket0, bucket1;
    for (int j = 0; j < n; ++j) {
        bucket0.clear();
        bucket1.clear();
        for (std::uint32_t v = 0; v < (1u << n); ++v)
            ((v >> j & 1u) ? bucket1 : bucket0).push_back(logw[v]);
        llr[j] = lse(bucket0) - lse(bucket1);
    }
    return llr;
}

}  // namespace oracle
