#include "ipd/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ipd {

namespace {

void validate_point(const SparseParityCheck& H, std::span<const double> x) {
    if (static_cast<int>(x.size()) != H.n)
        throw std::invalid_argument("feasibility: point length mismatch");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("feasibility: non-finite entry");
}

// theta_i and the maximizing odd subset for one check.
// beta_l = 1 iff x_l - 1 > -x_l; if the set has even size, flip the entry
// minimizing |2 x_l - 1| (ties to the smallest index).
double check_theta(const std::vector<int>& row, std::span<const double> x,
                   std::uint8_t* beta_out) {
    double u = 1.0;
    int v = 0;
    double best = std::numeric_limits<double>::infinity();
    int best_pos = -1;
    for (std::size_t a = 0; a < row.size(); ++a) {
        const double xl = x[row[a]];
        const bool member = xl - 1.0 > -xl;
        u += member ? xl - 1.0 : -xl;
        v += member;
        if (beta_out) beta_out[a] = member;
        const double gap = std::abs(2.0 * xl - 1.0);
        if (gap < best) {
            best = gap;
            best_pos = static_cast<int>(a);
        }
    }
    if ((v & 1) == 0) {
        u -= best;
        if (beta_out) beta_out[best_pos] ^= 1u;
    }
    return u;
}

}  // namespace

void feasibility_into(const SparseParityCheck& H, std::span<const double> x,
                      FeasibilityReport& rep) {
    validate_point(H, x);
    rep.feasible = false;
    rep.box_ok = true;
    rep.first_violation.reset();
    rep.theta.resize(H.m);
    rep.beta.resize(H.m);
    rep.edge_visits = 0;

    for (int j = 0; j < H.n; ++j) {
        if (!(x[j] > 0.0 && x[j] < 1.0)) {
            rep.box_ok = false;
            if (!rep.first_violation)
                rep.first_violation = FeasibilityReport::Violation{
                    FeasibilityReport::Violation::box, j};
            break;
        }
    }
    bool all_neg = true;
    for (int i = 0; i < H.m; ++i) {
        rep.beta[i].resize(H.rows[i].size());
        rep.theta[i] = check_theta(H.rows[i], x, rep.beta[i].data());
        rep.edge_visits += H.rows[i].size();
        if (rep.theta[i] >= 0.0) {
            all_neg = false;
            if (!rep.first_violation)
                rep.first_violation = FeasibilityReport::Violation{
                    FeasibilityReport::Violation::parity, i};
        }
    }
    rep.feasible = rep.box_ok && all_neg;
}

FeasibilityReport feasibility(const SparseParityCheck& H, std::span<const double> x) {
    FeasibilityReport rep;
    feasibility_into(H, x, rep);
    return rep;
}

bool is_feasible(const SparseParityCheck& H, std::span<const double> x) {
    validate_point(H, x);
    for (int j = 0; j < H.n; ++j)
        if (!(x[j] > 0.0 && x[j] < 1.0)) return false;
    for (int i = 0; i < H.m; ++i)
        if (check_theta(H.rows[i], x, nullptr) >= 0.0) return false;
    return true;
}

double tau(const SparseParityCheck& H, std::span<const double> x, int check,
           std::span<const int> S, int k) {
    if (check < 0 || check >= H.m) throw std::out_of_range("tau: check index");
    if (k < 0 || k >= H.n) throw std::out_of_range("tau: bit index");
    if (S.size() % 2 == 0) throw std::invalid_argument("tau: S must have odd size");
    const auto& row = H.rows[check];

    std::vector<int> s_sorted(S.begin(), S.end());
    std::sort(s_sorted.begin(), s_sorted.end());
    for (int s : s_sorted)
        if (!std::binary_search(row.begin(), row.end(), s))
            throw std::invalid_argument("tau: S is not a subset of the check support");

    double denom = 1.0;
    int in_S = 0;  // indicator values for bit k
    int in_row = 0;
    std::size_t si = 0;
    for (int l : row) {
        while (si < s_sorted.size() && s_sorted[si] < l) ++si;
        const bool member = si < s_sorted.size() && s_sorted[si] == l;
        denom += member ? x[l] - 1.0 : -x[l];
        if (l == k) {
            in_row = 1;
            in_S = member;
        }
    }
    if (denom >= 0.0)
        throw std::domain_error("tau: parity constraint not strictly satisfied for (check, S)");
    if (!in_row) return 0.0;
    return ((1 - in_S) - in_S) / denom;
}

double barrier_value(const SparseParityCheck& H, std::span<const double> x) {
    validate_point(H, x);
    const double inf = std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (int j = 0; j < H.n; ++j) {
        if (!(x[j] > 0.0 && x[j] < 1.0)) return inf;
        total += -std::log(x[j]) - std::log(1.0 - x[j]);
    }
    for (const auto& row : H.rows) {
        const int w = static_cast<int>(row.size());
        if (w > 30) throw std::invalid_argument("barrier_value: row weight too large to enumerate");
        double sum_x = 0.0;
        for (int l : row) sum_x += x[l];
        const double base = 1.0 - sum_x;
        for (std::uint32_t s = 0; s < (1u << w); ++s) {
            if ((__builtin_popcount(s) & 1) == 0) continue;
            double expr = base;
            for (int a = 0; a < w; ++a)
                if (s >> a & 1u) expr += 2.0 * x[row[a]] - 1.0;
            if (expr >= 0.0) return inf;
            total += -std::log(-expr);
        }
    }
    return total;
}

}  // namespace ipd
