#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "core/errors.hpp"
#include "core/matrix.hpp"
#include "core/rank.hpp"
#include "core/rng.hpp"
#include "core/synth.hpp"
#include "support.hpp"

using namespace banmf;
using testutil::random_bool;

namespace {

SynthSpec spec_of(std::size_t rows, std::size_t cols, std::uint32_t rank, double density,
                  double noise, std::uint64_t seed) {
    SynthSpec s;
    s.rows = rows;
    s.cols = cols;
    s.rank = rank;
    s.density = density;
    s.noise = noise;
    s.seed = seed;
    return s;
}

double density_of(const BoolMatrix& x) {
    return static_cast<double>(support_size(x)) / static_cast<double>(x.size());
}

}  // namespace

TEST_CASE("factor density at rank 1 is the square root of the target") {
    CHECK(std::abs(factor_density(0.25, 1) - 0.5) < 1e-12);
}

TEST_CASE("factor density matches the closed form at rank 5") {
    CHECK(std::abs(factor_density(0.5, 5) - 0.359790) < 1e-6);
}

TEST_CASE("factor density inverts the product-density map") {
    const double ds[] = {0.1, 0.25, 0.5, 0.75, 0.9};
    for (double d : ds) {
        for (std::uint32_t k = 1; k <= 8; ++k) {
            const double p = factor_density(d, k);
            CHECK(p > 0.0);
            CHECK(p < 1.0);
            const double back = 1.0 - std::pow(1.0 - p * p, static_cast<double>(k));
            CHECK(std::abs(back - d) < 1e-12);
        }
    }
}

TEST_CASE("factor density rejects out-of-range arguments") {
    CHECK_THROWS_AS(factor_density(0.0, 2), ArgumentError);
    CHECK_THROWS_AS(factor_density(1.0, 2), ArgumentError);
    CHECK_THROWS_AS(factor_density(-0.2, 2), ArgumentError);
    CHECK_THROWS_AS(factor_density(1.5, 2), ArgumentError);
    CHECK_THROWS_AS(factor_density(0.5, 0), ArgumentError);
}

TEST_CASE("planted instances are consistent and noiseless by default") {
    const PlantedInstance inst = generate_planted(spec_of(12, 9, 3, 0.5, 0.0, 77));
    CHECK(inst.x == inst.x_clean);
    CHECK(inst.x_clean == bool_mat_mul(inst.w_true, inst.h_true));
    CHECK(inst.w_true.rows == 12);
    CHECK(inst.w_true.cols == 3);
    CHECK(inst.h_true.rows == 3);
    CHECK(inst.h_true.cols == 9);

    CHECK(support_size(inst.x_clean) > 0);
}

TEST_CASE("planted instances are reproducible from the spec") {
    const SynthSpec s = spec_of(10, 10, 2, 0.4, 0.02, 123);
    const PlantedInstance a = generate_planted(s);
    const PlantedInstance b = generate_planted(s);
    CHECK(a.x == b.x);
    CHECK(a.w_true == b.w_true);
    CHECK(a.h_true == b.h_true);
    CHECK(a.x_clean == b.x_clean);
}

TEST_CASE("planted instance validation") {
    CHECK_THROWS_AS(generate_planted(spec_of(0, 5, 1, 0.5, 0.0, 1)), ArgumentError);
    CHECK_THROWS_AS(generate_planted(spec_of(5, 5, 0, 0.5, 0.0, 1)), ArgumentError);
    CHECK_THROWS_AS(generate_planted(spec_of(5, 5, 6, 0.5, 0.0, 1)), ArgumentError);
    CHECK_THROWS_AS(generate_planted(spec_of(5, 5, 2, 0.0, 0.0, 1)), ArgumentError);
    CHECK_THROWS_AS(generate_planted(spec_of(5, 5, 2, 0.5, 1.0, 1)), ArgumentError);
}

TEST_CASE("hopeless plant parameters exhaust the retry budget") {
    try {
        generate_planted(spec_of(1, 1, 1, 1e-9, 0.0, 0));
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("rows=1") != std::string::npos);
        CHECK(msg.find("100") != std::string::npos);
    }
}

TEST_CASE("planted density concentrates near the target") {
    double total = 0.0;
    const int draws = 100;
    for (int t = 0; t < draws; ++t) {
        const PlantedInstance inst = generate_planted(spec_of(50, 50, 5, 0.5, 0.0, 1000 + t));
        total += density_of(inst.x_clean);
    }
    const double mean = total / draws;
    CHECK(mean > 0.45);
    CHECK(mean < 0.55);
}

TEST_CASE("flip noise at zero probability is the identity") {
    const BoolMatrix x = random_bool(8, 8, 130);
    CHECK(apply_flip_noise(x, 0.0, 99) == x);
}

TEST_CASE("flip noise is an involution under the same mask seed") {
    const BoolMatrix x = random_bool(20, 20, 131);
    const BoolMatrix once = apply_flip_noise(x, 0.3, 42);
    CHECK(once != x);
    CHECK(apply_flip_noise(once, 0.3, 42) == x);  // same mask flips back
}

TEST_CASE("flip noise validation") {
    const BoolMatrix x = random_bool(4, 4, 132);
    CHECK_THROWS_AS(apply_flip_noise(x, -0.01, 1), ArgumentError);
    CHECK_THROWS_AS(apply_flip_noise(x, 1.0, 1), ArgumentError);
}

TEST_CASE("flip count matches binomial statistics at scale") {
    const BoolMatrix x(1000, 1000, 0);
    const BoolMatrix noisy = apply_flip_noise(x, 0.05, 77);
    const double flips = static_cast<double>(hamming_error(x, noisy));
    const double expected = 0.05 * 1000.0 * 1000.0;
    const double sigma = std::sqrt(1000.0 * 1000.0 * 0.05 * 0.95);
    CHECK(std::abs(flips - expected) <= 3.0 * sigma);
}

TEST_CASE("planted factor fill rate tracks the derived probability") {
    const double p = factor_density(0.5, 4);
    double ones = 0.0, total = 0.0;
    for (int t = 0; t < 30; ++t) {
        const PlantedInstance inst = generate_planted(spec_of(40, 40, 4, 0.5, 0.0, 2000 + t));
        ones += support_size(inst.w_true) + support_size(inst.h_true);
        total += inst.w_true.size() + inst.h_true.size();
    }
    const double rate = ones / total;
    CHECK(std::abs(rate - p) < 0.03);
}

TEST_CASE("rank-gap suite annotates nonnegative exact gaps") {
    RankGapParams params;
    params.n_values = {6, 7};
    params.m_values = {6, 7};
    params.k_values = {2, 3};
    params.densities = {0.5};
    params.per_cell = 2;
    params.seed = 9;
    const RankGapSuite suite = generate_rank_gap_suite(params);
    CHECK(suite.warnings.empty());
    REQUIRE(suite.instances.size() == 2u * 2u * 2u * 1u * 2u);
    for (const PlantedInstance& inst : suite.instances) {
        REQUIRE(inst.rank_lower_bound_gap.has_value());
        CHECK(*inst.rank_lower_bound_gap >= 0);
        const std::int64_t expected = static_cast<std::int64_t>(exact_rank(inst.x_clean)) -
                                      static_cast<std::int64_t>(inst.spec.rank);
        CHECK(*inst.rank_lower_bound_gap == expected);
        CHECK(inst.x == inst.x_clean);  // suite is noiseless
    }
}

TEST_CASE("rank-gap suite is reproducible") {
    RankGapParams params;
    params.n_values = {8};
    params.m_values = {8};
    params.k_values = {2};
    params.densities = {0.25, 0.75};
    params.per_cell = 3;
    params.seed = 31;
    const RankGapSuite a = generate_rank_gap_suite(params);
    const RankGapSuite b = generate_rank_gap_suite(params);
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        CHECK(a.instances[i].x == b.instances[i].x);
        CHECK(a.instances[i].rank_lower_bound_gap == b.instances[i].rank_lower_bound_gap);
    }
}

TEST_CASE("rank-gap suite rejects empty parameter ranges") {
    RankGapParams params;
    params.m_values = {8};
    params.k_values = {2};
    params.densities = {0.5};
    CHECK_THROWS_AS(generate_rank_gap_suite(params), ArgumentError);
}

TEST_CASE("seed derivation is order-sensitive and stable") {
    CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
    CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
    CHECK(derive_seed(1, {}) != derive_seed(2, {}));
}
