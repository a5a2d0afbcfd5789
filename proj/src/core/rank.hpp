#pragma once

#include <cstdint>

#include "core/matrix.hpp"

namespace banmf {

/// Rank of the 0/1 matrix over the rationals, computed by fraction-free
/// (Bareiss) integer Gaussian elimination in exact big-integer arithmetic,
/// so there is no floating-point rank tolerance.
std::uint32_t exact_rank(const BoolMatrix& x);

}  // namespace banmf
