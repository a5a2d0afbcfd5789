#include "core/oracle.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace banmf {

OracleResult exhaustive_bmf(const BoolMatrix& x, std::uint32_t k, std::uint64_t budget) {
    if (x.size() == 0) throw ArgumentError("exhaustive_bmf: empty matrix");
    if (k < 1) throw ArgumentError("exhaustive_bmf: rank must be >= 1");
    const std::size_t n = x.rows, m = x.cols;
    const std::uint64_t bits = static_cast<std::uint64_t>(n) * k + static_cast<std::uint64_t>(k) * m;
    if (bits >= 64 || (1ULL << bits) > budget) {
        std::ostringstream os;
        os << "exhaustive_bmf: search space 2^" << bits << " candidate (W,H) pairs exceeds budget "
           << budget;
        throw BudgetError(os.str());
    }
    // bits < 64 implies n <= 63 and k <= 63, so column bitmasks fit uint64.
    std::vector<std::uint64_t> x_col(m, 0);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (x(i, j)) x_col[j] |= 1ULL << i;

    const std::uint64_t w_count = 1ULL << (n * k);
    const std::uint32_t col_count = 1u << k;
    std::vector<std::uint64_t> recon(col_count);  // recon[c]: product column for H-column c
    std::vector<std::uint64_t> w_col(k);

    std::uint64_t best_ham = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best_w_mask = 0;
    std::vector<std::uint32_t> best_h_cols(m, 0), h_cols(m, 0);

    // W mask bit (n*k - 1 - p) holds row-major entry p, so ascending masks
    // enumerate W in row-major lexicographic order; likewise H-column
    // candidate c holds H(l, j) at bit (k - 1 - l).
    for (std::uint64_t w_mask = 0; w_mask < w_count; ++w_mask) {
        for (std::uint32_t l = 0; l < k; ++l) {
            std::uint64_t col = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t bit_index = n * k - 1 - (i * k + l);
                if (w_mask >> bit_index & 1ULL) col |= 1ULL << i;
            }
            w_col[l] = col;
        }
        recon[0] = 0;
        for (std::uint32_t c = 1; c < col_count; ++c) {
            const std::uint32_t low = c & (c - 1);
            const std::uint32_t l = k - 1 - std::countr_zero(c);  // bit cleared by low
            recon[c] = recon[low] | w_col[l];
        }
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint32_t best_c = 0;
            std::uint32_t best_col_ham = std::numeric_limits<std::uint32_t>::max();
            for (std::uint32_t c = 0; c < col_count; ++c) {
                const auto ham =
                    static_cast<std::uint32_t>(std::popcount(x_col[j] ^ recon[c]));
                if (ham < best_col_ham) {  // ascending c keeps the lex-smallest column
                    best_col_ham = ham;
                    best_c = c;
                }
            }
            total += best_col_ham;
            h_cols[j] = best_c;
            if (total >= best_ham) break;  // cannot beat the incumbent
        }
        if (total < best_ham) {
            best_ham = total;
            best_w_mask = w_mask;
            best_h_cols = h_cols;
        }
    }

    OracleResult out;
    out.min_hamming = best_ham;
    out.w = BoolMatrix(n, k);
    for (std::size_t p = 0; p < n * k; ++p)
        out.w.data[p] = (best_w_mask >> (n * k - 1 - p)) & 1ULL ? 1 : 0;
    out.h = BoolMatrix(k, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::uint32_t l = 0; l < k; ++l)
            out.h(l, j) = (best_h_cols[j] >> (k - 1 - l)) & 1u ? 1 : 0;
    return out;
}

}  // namespace banmf
