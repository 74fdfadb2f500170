#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ipd {

using Codeword = std::vector<std::uint8_t>;

/// Sparse binary parity-check matrix stored as row/column index sets.
///
/// `rows[i]` is A_i (bit positions checked by row i), `cols[j]` is B_j
/// (checks touching bit j). Indices are 0-based internally; the alist text
/// format and parse errors use 1-based indices.
struct SparseParityCheck {
    int n = 0;  // columns (bits)
    int m = 0;  // rows (checks)
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols;
    int max_row_weight = 0;
    bool row_regular = false;

    int edge_count() const;

    /// Builds from row index sets; derives cols, validates range/duplicates
    /// and row/column duality by construction.
    static SparseParityCheck from_rows(int n, std::vector<std::vector<int>> rows);
};

SparseParityCheck parse_alist(std::istream& in);
SparseParityCheck parse_alist(const std::string& text);
std::string serialize_alist(const SparseParityCheck& H);

/// True iff every check has even overlap with b (H b = 0 over F2).
bool check_parity(const SparseParityCheck& H, std::span<const std::uint8_t> b);

/// Systematic encoder derived from H by Gaussian elimination over F2.
///
/// Message bits are placed at the free columns of the reduced matrix and the
/// pivot columns are solved from them, so codewords come out in the original
/// column order. k = n - rank2(H); rank deficiency just enlarges the code.
class Encoder {
public:
    explicit Encoder(const SparseParityCheck& H);

    int message_length() const { return k_; }
    int block_length() const { return n_; }

    Codeword encode(std::span<const std::uint8_t> message) const;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> pivot_cols_;
    std::vector<int> free_cols_;
    // per pivot row: mask over message bits (k_ bits, 64-bit words)
    std::vector<std::vector<std::uint64_t>> combine_;
};

inline Encoder build_encoder(const SparseParityCheck& H) { return Encoder(H); }

}  // namespace ipd
