#pragma once

#include <cstdint>

#include "core/matrix.hpp"

namespace banmf {

/// Winning threshold pair with its Booleanized factors and the reconstruction
/// Hamming error against the X it was searched on.
struct ThresholdChoice {
    double delta_w = 0.0;
    double delta_h = 0.0;
    std::uint64_t hamming = 0;
    BoolMatrix w_hat;
    BoolMatrix h_hat;
};

/// Entry 1 iff c(i,j) > delta (strict). Requires delta >= 0.
BoolMatrix threshold(const DenseMatrix& c, double delta);

/// Grid search over threshold pairs: both grids are npoint inclusive linspace
/// points between the factor's min and max, with delta = 0 always added so
/// the exact-solution case is covered. Returns the pair minimizing
/// hamming_error(x, threshold(w, dw) bool* threshold(h, dh)); ties go to the
/// smallest (dw, dh) lexicographically. Requires npoint >= 2.
ThresholdChoice booleanize(const BoolMatrix& x, const DenseMatrix& w, const DenseMatrix& h,
                           std::uint32_t npoint);

}  // namespace banmf
