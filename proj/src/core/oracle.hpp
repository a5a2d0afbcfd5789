#pragma once

#include <cstdint>

#include "core/matrix.hpp"

namespace banmf {

struct OracleResult {
    BoolMatrix w;
    BoolMatrix h;
    std::uint64_t min_hamming = 0;
};

constexpr std::uint64_t kDefaultOracleBudget = 1ULL << 24;

/// Global optimum of the rank-k Boolean factorization problem by exhaustive
/// enumeration of all binary W (N x k) and H (k x M). Ties are broken by the
/// smallest (W, H) in row-major lexicographic order, W compared first.
/// Requires 2^(N*k + k*M) <= budget; throws BudgetError naming the
/// search-space size otherwise. Internally the H side is minimized column by
/// column (columns of W bool* H are independent), which changes nothing about
/// the returned optimum but makes small instances fast.
OracleResult exhaustive_bmf(const BoolMatrix& x, std::uint32_t k,
                            std::uint64_t budget = kDefaultOracleBudget);

}  // namespace banmf
