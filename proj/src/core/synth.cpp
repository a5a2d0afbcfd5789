#include "core/synth.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "core/errors.hpp"
#include "core/rank.hpp"
#include "core/rng.hpp"

namespace banmf {

double factor_density(double d, std::uint32_t k) {
    if (!(d > 0.0 && d < 1.0)) {
        std::ostringstream os;
        os << "factor_density: density must be in (0,1), got " << d;
        throw ArgumentError(os.str());
    }
    if (k < 1) throw ArgumentError("factor_density: rank must be >= 1");
    return std::sqrt(1.0 - std::pow(1.0 - d, 1.0 / static_cast<double>(k)));
}

namespace {

void validate(const SynthSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1) throw ArgumentError("synth spec: rows and cols must be >= 1");
    if (spec.rank < 1) throw ArgumentError("synth spec: rank must be >= 1");
    if (spec.rank > std::min(spec.rows, spec.cols))
        throw ArgumentError("synth spec: rank must be <= min(rows, cols)");
    if (!(spec.density > 0.0 && spec.density < 1.0))
        throw ArgumentError("synth spec: density must be in (0,1)");
    if (!(spec.noise >= 0.0 && spec.noise < 1.0))
        throw ArgumentError("synth spec: noise must be in [0,1)");
}

BoolMatrix bernoulli_matrix(std::size_t rows, std::size_t cols, double p, std::uint64_t seed) {
    BoolMatrix m(rows, cols);
    std::mt19937_64 eng(seed);
    for (std::uint8_t& v : m.data) v = bernoulli(eng, p) ? 1 : 0;
    return m;
}

constexpr int kDegenerateRetries = 100;

}  // namespace

PlantedInstance generate_planted(const SynthSpec& spec) {
    validate(spec);
    const double p = factor_density(spec.density, spec.rank);
    for (int attempt = 0; attempt < kDegenerateRetries; ++attempt) {
        const std::uint64_t base = spec.seed + 3ULL * static_cast<std::uint64_t>(attempt);
        PlantedInstance inst;
        inst.spec = spec;
        inst.w_true = bernoulli_matrix(spec.rows, spec.rank, p, base);
        inst.h_true = bernoulli_matrix(spec.rank, spec.cols, p, base + 1);
        inst.x_clean = bool_mat_mul(inst.w_true, inst.h_true);
        // Conditioning on stronger nondegeneracy (e.g. no all-zero row) would
        // skew the achieved density away from the target d, so only the
        // all-zero product, which downstream solvers reject, is redrawn.
        if (support_size(inst.x_clean) == 0) continue;
        inst.x = spec.noise > 0.0 ? apply_flip_noise(inst.x_clean, spec.noise, base + 2)
                                  : inst.x_clean;
        return inst;
    }
    std::ostringstream os;
    os << "generate_planted: no instance with nonempty support after " << kDegenerateRetries
       << " attempts (rows=" << spec.rows << " cols=" << spec.cols << " rank=" << spec.rank
       << " density=" << spec.density << " seed=" << spec.seed << ")";
    throw BudgetError(os.str());
}

BoolMatrix apply_flip_noise(const BoolMatrix& x, double p_e, std::uint64_t seed) {
    if (!(p_e >= 0.0 && p_e < 1.0)) throw ArgumentError("apply_flip_noise: p_e must be in [0,1)");
    BoolMatrix out = x;
    if (p_e == 0.0) return out;
    std::mt19937_64 eng(seed);
    for (std::uint8_t& v : out.data) {
        if (bernoulli(eng, p_e)) v ^= 1;
    }
    return out;
}

RankGapSuite generate_rank_gap_suite(const RankGapParams& params) {
    if (params.n_values.empty() || params.m_values.empty() || params.k_values.empty() ||
        params.densities.empty() || params.per_cell < 1) {
        throw ArgumentError("rank-gap suite: all parameter ranges must be nonempty");
    }
    RankGapSuite suite;
    std::uint64_t cell = 0;
    for (std::size_t n : params.n_values) {
        for (std::size_t m : params.m_values) {
            for (std::uint32_t k : params.k_values) {
                for (double d : params.densities) {
                    std::vector<PlantedInstance> cell_instances;
                    bool cell_ok = true;
                    for (std::uint32_t t = 0; t < params.per_cell && cell_ok; ++t) {
                        const std::uint64_t inst_seed = derive_seed(params.seed, {cell, t});
                        bool found = false;
                        for (std::uint32_t r = 0; r < params.retry_budget; ++r) {
                            SynthSpec spec{n, m, k, d, 0.0, derive_seed(inst_seed, {r})};
                            PlantedInstance inst = generate_planted(spec);
                            const std::uint32_t rank = exact_rank(inst.x_clean);
                            if (rank >= k) {
                                inst.rank_lower_bound_gap =
                                    static_cast<std::int64_t>(rank) - static_cast<std::int64_t>(k);
                                cell_instances.push_back(std::move(inst));
                                found = true;
                                break;
                            }
                        }
                        if (!found) cell_ok = false;
                    }
                    if (cell_ok) {
                        for (auto& inst : cell_instances) suite.instances.push_back(std::move(inst));
                    } else {
                        std::ostringstream os;
                        os << "rank-gap suite: skipped cell n=" << n << " m=" << m << " k=" << k
                           << " density=" << d << " (no instance with rank >= k in "
                           << params.retry_budget << " redraws)";
                        suite.warnings.push_back(os.str());
                    }
                    ++cell;
                }
            }
        }
    }
    return suite;
}

}  // namespace banmf
