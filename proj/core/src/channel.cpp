#include "ipd/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipd {

double PRChannelSpec::energy() const {
    double e = 0.0;
    for (double v : h) e += v * v;
    return e;
}

PRChannelSpec make_pr_channel(std::vector<double> taps, double sigma2) {
    if (taps.empty()) throw std::invalid_argument("PR channel needs at least h_0");
    if (taps[0] == 0.0) throw std::invalid_argument("PR channel requires h_0 != 0");
    if (!(sigma2 >= 0.0)) throw std::invalid_argument("sigma2 must be nonnegative");
    return PRChannelSpec{std::move(taps), sigma2};
}

double sigma2_from_snr_db(std::span<const double> taps, double snr_db) {
    double e = 0.0;
    for (double v : taps) e += v * v;
    return e / std::pow(10.0, snr_db / 10.0);
}

double snr_db_from_sigma2(std::span<const double> taps, double sigma2) {
    double e = 0.0;
    for (double v : taps) e += v * v;
    return 10.0 * std::log10(e / sigma2);
}

std::vector<double> channel_preset(const std::string& name) {
    if (name == "dicode") return {1.0, -1.0};
    if (name == "epr4") return {1.0, 1.0, -1.0, -1.0};
    if (name == "pr-deg3") return {1.0, 1.0, 1.0, -1.0};
    if (name == "longtail16")
        return {1.000, 0.253, -0.293, 0.084, -0.057, 0.992, -1.438, -0.910, 0.106,
                -0.600, -0.844, 0.018, 0.197, -0.743, 0.490, -0.070, 1.43};
    throw std::invalid_argument("unknown channel preset '" + name + "'");
}

LinearVectorChannel pr_to_linear(const PRChannelSpec& spec, int n) {
    if (n < 1) throw std::invalid_argument("pr_to_linear: n must be >= 1");
    const int delta = spec.delta();
    LinearVectorChannel ch;
    ch.n = n;
    ch.sigma2 = spec.sigma2;
    ch.A.assign(std::size_t(n) * n, 0.0);
    ch.b.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {  // 0-based row j corresponds to symbol j+1
        const int dmax = std::min(delta, j);
        double cum = 0.0;
        for (int d = 0; d <= dmax; ++d) {
            ch.A[std::size_t(j) * n + (j - d)] = -2.0 * spec.h[d];
            cum += spec.h[d];
        }
        ch.b[j] = cum;
    }
    return ch;
}

ReceivedWord transmit(const LinearVectorChannel& ch, const Codeword& x, std::mt19937_64& rng) {
    if (static_cast<int>(x.size()) != ch.n) throw std::invalid_argument("transmit: length mismatch");
    ReceivedWord r(ch.n);
    for (int i = 0; i < ch.n; ++i) {
        double acc = ch.b[i];
        const double* row = &ch.A[std::size_t(i) * ch.n];
        for (int j = 0; j < ch.n; ++j)
            if (x[j]) acc += row[j];
        r[i] = acc;
    }
    if (ch.sigma2 > 0.0) {
        std::normal_distribution<double> noise(0.0, std::sqrt(ch.sigma2));
        for (int i = 0; i < ch.n; ++i) r[i] += noise(rng);
    }
    return r;
}

void pr_signal(const PRChannelSpec& spec, std::span<const double> x, std::span<double> out) {
    const int n = static_cast<int>(x.size());
    const int delta = spec.delta();
    for (int j = 0; j < n; ++j) {
        const int dmax = std::min(delta, j);
        double s = 0.0;
        for (int d = 0; d <= dmax; ++d) s += spec.h[d] * (1.0 - 2.0 * x[j - d]);
        out[j] = s;
    }
}

double objective(const PRChannelSpec& spec, std::span<const double> r, std::span<const double> x) {
    if (r.size() != x.size()) throw std::invalid_argument("objective: length mismatch");
    const int n = static_cast<int>(x.size());
    const int delta = spec.delta();
    double f = 0.0;
    for (int j = 0; j < n; ++j) {
        const int dmax = std::min(delta, j);
        double s = 0.0;
        for (int d = 0; d <= dmax; ++d) s += spec.h[d] * (1.0 - 2.0 * x[j - d]);
        const double e = r[j] - s;
        f += e * e;
    }
    return f;
}

void objective_gradient_into(const PRChannelSpec& spec, std::span<const double> r,
                             std::span<const double> x, double t, std::span<double> g) {
    if (r.size() != x.size() || g.size() != x.size())
        throw std::invalid_argument("objective_gradient: length mismatch");
    const int n = static_cast<int>(x.size());
    const int delta = spec.delta();
    // residuals e_j = r_j - s_j(x)
    std::vector<double> e(n);
    for (int j = 0; j < n; ++j) {
        const int dmax = std::min(delta, j);
        double s = 0.0;
        for (int d = 0; d <= dmax; ++d) s += spec.h[d] * (1.0 - 2.0 * x[j - d]);
        e[j] = r[j] - s;
    }
    for (int p = 0; p < n; ++p) {
        const int jmax = std::min(n - 1, p + delta);
        double acc = 0.0;
        for (int j = p; j <= jmax; ++j) acc += spec.h[j - p] * e[j];
        g[p] = 4.0 * t * acc;
    }
}

std::vector<double> objective_gradient(const PRChannelSpec& spec, std::span<const double> r,
                                       std::span<const double> x, double t) {
    std::vector<double> g(x.size());
    objective_gradient_into(spec, r, x, t, g);
    return g;
}

BandedSymmetric objective_hessian_band(const PRChannelSpec& spec, double t, int n) {
    const int delta = spec.delta();
    BandedSymmetric G(n, std::min(delta, n - 1));
    // entry (q+d, q) = 8t sum_{a} h_{a+d} h_a over terms whose residual index
    // stays inside the block: j = q + d + a <= n - 1 (0-based)
    for (int d = 0; d <= G.bandwidth; ++d) {
        for (int q = 0; q + d < n; ++q) {
            const int amax = std::min(delta - d, n - 1 - (q + d));
            double acc = 0.0;
            for (int a = 0; a <= amax; ++a) acc += spec.h[a + d] * spec.h[a];
            G.at(d, q) = 8.0 * t * acc;
        }
    }
    return G;
}

}  // namespace ipd
