#include "core/booleanize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace banmf {

BoolMatrix threshold(const DenseMatrix& c, double delta) {
    if (delta < 0.0) throw ArgumentError("threshold: delta must be >= 0");
    BoolMatrix out(c.rows, c.cols);
    for (std::size_t i = 0; i < c.data.size(); ++i) out.data[i] = c.data[i] > delta ? 1 : 0;
    return out;
}

namespace {

// Inclusive linspace over [min, max] plus the point 0, ascending, deduplicated.
std::vector<double> threshold_grid(const DenseMatrix& m, std::uint32_t npoint) {
    const auto [lo_it, hi_it] = std::minmax_element(m.data.begin(), m.data.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> grid;
    grid.reserve(npoint + 1);
    grid.push_back(0.0);
    const double step = (hi - lo) / static_cast<double>(npoint - 1);
    for (std::uint32_t i = 0; i < npoint; ++i) {
        grid.push_back(i + 1 == npoint ? hi : lo + step * static_cast<double>(i));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

// hamming_error(x, w bool* h) without materializing the product.
std::uint64_t reconstruction_hamming(const BoolMatrix& x, const BoolMatrix& w,
                                     const BoolMatrix& h) {
    const std::size_t n = x.rows, m = x.cols, k = w.cols;
    std::uint64_t ham = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* wi = w.data.data() + i * k;
        const std::uint8_t* xi = x.data.data() + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint8_t bit = 0;
            for (std::size_t l = 0; l < k; ++l) {
                if (wi[l] && h.data[l * m + j]) {
                    bit = 1;
                    break;
                }
            }
            ham += bit != xi[j];
        }
    }
    return ham;
}

}  // namespace

ThresholdChoice booleanize(const BoolMatrix& x, const DenseMatrix& w, const DenseMatrix& h,
                           std::uint32_t npoint) {
    if (npoint < 2) throw ArgumentError("booleanize: npoint must be >= 2");
    if (w.rows != x.rows || h.cols != x.cols || w.cols != h.rows) {
        std::ostringstream os;
        os << "booleanize: factor shapes " << w.rows << "x" << w.cols << " * " << h.rows << "x"
           << h.cols << " incompatible with X " << x.rows << "x" << x.cols;
        throw ShapeError(os.str());
    }
    if (w.size() == 0 || h.size() == 0) throw ArgumentError("booleanize: empty factor");

    const std::vector<double> grid_w = threshold_grid(w, npoint);
    const std::vector<double> grid_h = threshold_grid(h, npoint);

    std::vector<BoolMatrix> h_hats;
    h_hats.reserve(grid_h.size());
    for (double dh : grid_h) h_hats.push_back(threshold(h, dh));

    ThresholdChoice best;
    std::uint64_t best_ham = std::numeric_limits<std::uint64_t>::max();
    for (double dw : grid_w) {
        const BoolMatrix w_hat = threshold(w, dw);
        for (std::size_t jh = 0; jh < grid_h.size(); ++jh) {
            const std::uint64_t ham = reconstruction_hamming(x, w_hat, h_hats[jh]);
            // ascending grids: keeping strict improvements yields the
            // lexicographically smallest (dw, dh) among minimizers
            if (ham < best_ham) {
                best_ham = ham;
                best.delta_w = dw;
                best.delta_h = grid_h[jh];
                best.hamming = ham;
                best.w_hat = w_hat;
                best.h_hat = h_hats[jh];
            }
        }
    }
    return best;
}

}  // namespace banmf
