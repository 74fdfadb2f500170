#include "ipd/code.hpp"

#include <algorithm>
#include <cstddef>
#include <istream>
#include <numeric>
#include <sstream>

#include "ipd/errors.hpp"

namespace ipd {

int SparseParityCheck::edge_count() const {
    int e = 0;
    for (const auto& r : rows) e += static_cast<int>(r.size());
    return e;
}

SparseParityCheck SparseParityCheck::from_rows(int n, std::vector<std::vector<int>> rows) {
    SparseParityCheck H;
    H.n = n;
    H.m = static_cast<int>(rows.size());
    H.rows = std::move(rows);
    H.cols.assign(n, {});
    for (int i = 0; i < H.m; ++i) {
        auto& r = H.rows[i];
        std::sort(r.begin(), r.end());
        for (std::size_t a = 0; a < r.size(); ++a) {
            if (r[a] < 0 || r[a] >= n) throw std::out_of_range("row index out of range");
            if (a > 0 && r[a] == r[a - 1]) throw std::invalid_argument("duplicate index in row");
            H.cols[r[a]].push_back(i);
        }
    }
    H.max_row_weight = 0;
    H.row_regular = true;
    for (const auto& r : H.rows) {
        int w = static_cast<int>(r.size());
        if (H.max_row_weight != 0 && w != H.max_row_weight) H.row_regular = false;
        H.max_row_weight = std::max(H.max_row_weight, w);
    }
    if (H.m == 0) H.row_regular = false;
    return H;
}

namespace {

// Line-oriented integer reader; keeps the 1-based line number for errors.
struct LineReader {
    std::istream& in;
    int line_no = 0;

    // next non-empty line as a vector of ints
    std::vector<int> next_line(const char* what) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::vector<int> vals;
            long long v;
            while (ls >> v) {
                if (v < 0 || v > 1 << 30) throw ParseError(line_no, std::string(what) + ": value out of range");
                vals.push_back(static_cast<int>(v));
            }
            std::string tail;
            if (ls.clear(), ls >> tail) throw ParseError(line_no, std::string(what) + ": non-integer token '" + tail + "'");
            if (!vals.empty()) return vals;
        }
        throw ParseError(line_no + 1, std::string("unexpected end of input while reading ") + what);
    }
};

}  // namespace

SparseParityCheck parse_alist(std::istream& in) {
    LineReader rd{in};

    auto header = rd.next_line("header");
    if (header.size() != 2 || header[0] <= 0 || header[1] <= 0)
        throw ParseError(rd.line_no, "malformed header, expected 'n m'");
    const int n = header[0], m = header[1];

    auto maxw = rd.next_line("max weights");
    if (maxw.size() != 2 || maxw[0] <= 0 || maxw[1] <= 0)
        throw ParseError(rd.line_no, "malformed header, expected 'max_col_weight max_row_weight'");
    const int cmax = maxw[0], rmax = maxw[1];

    auto read_weights = [&](int count, int cap, const char* what) {
        std::vector<int> w;
        w.reserve(count);
        while (static_cast<int>(w.size()) < count) {
            for (int v : rd.next_line(what)) {
                if (static_cast<int>(w.size()) == count)
                    throw ParseError(rd.line_no, std::string("too many ") + what);
                if (v <= 0 || v > cap)
                    throw ParseError(rd.line_no, std::string(what) + " must be in [1, " +
                                                     std::to_string(cap) + "]");
                w.push_back(v);
            }
        }
        return w;
    };
    auto col_w = read_weights(n, cmax, "column weight");
    auto row_w = read_weights(m, rmax, "row weight");

    // one line per column / row; zero entries are padding and ignored
    auto read_lists = [&](int count, const std::vector<int>& weights, int index_limit,
                          const char* what) {
        std::vector<std::vector<int>> lists(count);
        for (int j = 0; j < count; ++j) {
            auto vals = rd.next_line(what);
            std::vector<int> idx;
            for (int v : vals) {
                if (v == 0) continue;  // padding
                if (v < 1 || v > index_limit)
                    throw ParseError(rd.line_no, std::string(what) + " index " + std::to_string(v) +
                                                     " out of range [1, " +
                                                     std::to_string(index_limit) + "]");
                idx.push_back(v - 1);
            }
            std::sort(idx.begin(), idx.end());
            if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
                throw ParseError(rd.line_no, std::string("duplicate ") + what + " index");
            if (static_cast<int>(idx.size()) != weights[j])
                throw ParseError(rd.line_no, std::string(what) + " list has " +
                                                 std::to_string(idx.size()) + " entries, declared weight is " +
                                                 std::to_string(weights[j]));
            lists[j] = std::move(idx);
        }
        return lists;
    };
    auto col_lists = read_lists(n, col_w, m, "column");
    const int col_section_end = rd.line_no;
    auto row_lists = read_lists(m, row_w, n, "row");

    // duality: j in A_i <=> i in B_j
    std::vector<std::vector<int>> cols_from_rows(n);
    for (int i = 0; i < m; ++i)
        for (int j : row_lists[i]) cols_from_rows[j].push_back(i);
    for (int j = 0; j < n; ++j) {
        if (cols_from_rows[j] != col_lists[j])
            throw ParseError(col_section_end,
                             "row/column lists are inconsistent at column " + std::to_string(j + 1));
    }

    return SparseParityCheck::from_rows(n, std::move(row_lists));
}

SparseParityCheck parse_alist(const std::string& text) {
    std::istringstream ss(text);
    return parse_alist(ss);
}

std::string serialize_alist(const SparseParityCheck& H) {
    int cmax = 0;
    for (const auto& c : H.cols) cmax = std::max<int>(cmax, c.size());
    std::ostringstream out;
    out << H.n << ' ' << H.m << '\n' << cmax << ' ' << H.max_row_weight << '\n';
    for (int j = 0; j < H.n; ++j) out << H.cols[j].size() << (j + 1 < H.n ? ' ' : '\n');
    for (int i = 0; i < H.m; ++i) out << H.rows[i].size() << (i + 1 < H.m ? ' ' : '\n');
    auto emit = [&out](const std::vector<int>& idx, int width) {
        for (int a = 0; a < width; ++a) {
            out << (a < static_cast<int>(idx.size()) ? idx[a] + 1 : 0);
            out << (a + 1 < width ? ' ' : '\n');
        }
    };
    for (const auto& c : H.cols) emit(c, cmax);
    for (const auto& r : H.rows) emit(r, H.max_row_weight);
    return out.str();
}

bool check_parity(const SparseParityCheck& H, std::span<const std::uint8_t> b) {
    if (static_cast<int>(b.size()) != H.n) throw std::invalid_argument("check_parity: length mismatch");
    for (const auto& row : H.rows) {
        unsigned acc = 0;
        for (int j : row) acc ^= b[j];
        if (acc & 1u) return false;
    }
    return true;
}

Encoder::Encoder(const SparseParityCheck& H) : n_(H.n) {
    if (H.n <= 0 || H.m <= 0) throw std::invalid_argument("Encoder: empty matrix");
    const int words = (H.n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> mat(H.m, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < H.m; ++i)
        for (int j : H.rows[i]) mat[i][j / 64] |= std::uint64_t(1) << (j % 64);

    auto bit = [&](int r, int c) { return (mat[r][c / 64] >> (c % 64)) & 1u; };

    // reduced row echelon form with column pivoting in natural order
    int rank = 0;
    pivot_cols_.clear();
    for (int c = 0; c < H.n && rank < H.m; ++c) {
        int piv = -1;
        for (int r = rank; r < H.m; ++r)
            if (bit(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        for (int r = 0; r < H.m; ++r) {
            if (r != rank && bit(r, c)) {
                for (int w = 0; w < words; ++w) mat[r][w] ^= mat[rank][w];
            }
        }
        pivot_cols_.push_back(c);
        ++rank;
    }
    std::vector<char> is_pivot(H.n, 0);
    for (int c : pivot_cols_) is_pivot[c] = 1;
    for (int c = 0; c < H.n; ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
    k_ = static_cast<int>(free_cols_.size());

    // x_pivot[r] = XOR over free columns f with mat[r][f] = 1 of message bit at f
    const int kwords = (k_ + 63) / 64;
    combine_.assign(rank, std::vector<std::uint64_t>(std::max(kwords, 1), 0));
    for (int r = 0; r < rank; ++r) {
        for (int fi = 0; fi < k_; ++fi) {
            if (bit(r, free_cols_[fi])) combine_[r][fi / 64] |= std::uint64_t(1) << (fi % 64);
        }
    }
}

Codeword Encoder::encode(std::span<const std::uint8_t> message) const {
    if (static_cast<int>(message.size()) != k_)
        throw std::invalid_argument("encode: message length " + std::to_string(message.size()) +
                                    ", expected " + std::to_string(k_));
    const int kwords = (k_ + 63) / 64;
    std::vector<std::uint64_t> msg(std::max(kwords, 1), 0);
    for (int fi = 0; fi < k_; ++fi)
        if (message[fi] & 1u) msg[fi / 64] |= std::uint64_t(1) << (fi % 64);

    Codeword x(n_, 0);
    for (int fi = 0; fi < k_; ++fi) x[free_cols_[fi]] = message[fi] & 1u;
    for (std::size_t r = 0; r < combine_.size(); ++r) {
        std::uint64_t acc = 0;
        for (int w = 0; w < kwords; ++w) acc ^= combine_[r][w] & msg[w];
        x[pivot_cols_[r]] = static_cast<std::uint8_t>(__builtin_popcountll(acc) & 1);
    }
    return x;
}

}  // namespace ipd
