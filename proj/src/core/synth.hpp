#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace banmf {

/// Parameters for one planted Boolean factorization.
struct SynthSpec {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint32_t rank = 1;
    double density = 0.5;   // target fraction of 1-entries in the clean X
    double noise = 0.0;     // per-entry flip probability, applied after planting
    std::uint64_t seed = 0;
};

/// A generated instance. x_clean is the exact Boolean product of the planted
/// factors; x is x_clean after flip noise (identical when noise = 0).
struct PlantedInstance {
    SynthSpec spec;
    BoolMatrix x;
    BoolMatrix w_true;
    BoolMatrix h_true;
    BoolMatrix x_clean;
    std::optional<std::int64_t> rank_lower_bound_gap;  // exact_rank(x_clean) - k, when computed
};

/// Factor entry probability p = sqrt(1 - (1 - d)^(1/k)) that makes the
/// Boolean product of two iid Bernoulli(p) factors have expected density d.
/// Throws ArgumentError unless 0 < d < 1 and k >= 1.
double factor_density(double d, std::uint32_t k);

/// Draws w_true and h_true iid Bernoulli(factor_density(d, k)) and applies
/// flip noise when spec.noise > 0. Instances whose clean product is all-zero
/// are rejected and redrawn, up to 100 attempts (BudgetError afterwards,
/// naming the spec). Streams for W, H and the noise mask are seeded at
/// spec.seed, spec.seed + 1, spec.seed + 2; retries shift the base by 3 per
/// attempt so the streams never overlap.
PlantedInstance generate_planted(const SynthSpec& spec);

/// Each entry independently negated with probability p_e (0 <= p_e < 1).
BoolMatrix apply_flip_noise(const BoolMatrix& x, double p_e, std::uint64_t seed);

/// Rank-gap suite parameters: one cell per (n, m, k, density) combination.
struct RankGapParams {
    std::vector<std::size_t> n_values;
    std::vector<std::size_t> m_values;
    std::vector<std::uint32_t> k_values;
    std::vector<double> densities;
    std::uint32_t per_cell = 5;
    std::uint64_t seed = 0;
    std::uint32_t retry_budget = 100;  // per-instance redraws to reach k <= rank
};

struct RankGapSuite {
    std::vector<PlantedInstance> instances;
    std::vector<std::string> warnings;  // one entry per skipped cell
};

/// Noiseless planted instances, per_cell per cell, each redrawn until
/// k <= exact_rank(x_clean) so the rank-gap lower bound
/// rank(x_clean) - k (stored in rank_lower_bound_gap) is nonnegative. A cell
/// whose retry budget runs out is skipped and reported in warnings. Instance
/// seeds are derived from (seed, cell index, trial index), so the suite is
/// reproducible and independent of evaluation order.
RankGapSuite generate_rank_gap_suite(const RankGapParams& params);

}  // namespace banmf
