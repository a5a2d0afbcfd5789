#include <doctest.h>

#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/matrix.hpp"
#include "core/solver.hpp"
#include "core/synth.hpp"
#include "support.hpp"

using namespace banmf;
using testutil::bmat;
using testutil::dmat;
using testutil::random_bool;

namespace {

SolverConfig config(std::uint32_t rank, std::uint32_t iters, double lambda = 0.0,
                    std::uint64_t seed = 0) {
    SolverConfig cfg;
    cfg.rank = rank;
    cfg.max_iters = iters;
    cfg.lambda = lambda;
    cfg.seed = seed;
    return cfg;
}

BoolMatrix nonempty_random(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    BoolMatrix x = random_bool(rows, cols, seed);
    x(0, 0) = 1;
    return x;
}

}  // namespace

TEST_CASE("solver config validation") {
    CHECK_THROWS_AS(validate(config(0, 10)), ArgumentError);
    CHECK_THROWS_AS(validate(config(1, 0)), ArgumentError);
    CHECK_THROWS_AS(validate(config(1, 10, -0.1)), ArgumentError);
    SolverConfig bad_eps = config(1, 10);
    bad_eps.epsilon = 0.0;
    CHECK_THROWS_AS(validate(bad_eps), ArgumentError);
    SolverConfig bad_tol = config(1, 10);
    bad_tol.early_stop_tol = -1.0;
    CHECK_THROWS_AS(validate(bad_tol), ArgumentError);
    CHECK_NOTHROW(validate(config(3, 100, 0.1, 42)));
}

TEST_CASE("init_state is deterministic in the seed") {
    const BoolMatrix x = nonempty_random(5, 4, 81);
    const SolverState a = init_state(x, config(3, 10, 0.0, 99));
    const SolverState b = init_state(x, config(3, 10, 0.0, 99));
    CHECK(a.w.data == b.w.data);
    CHECK(a.h.data == b.h.data);
    const SolverState c = init_state(x, config(3, 10, 0.0, 100));
    CHECK(a.w.data != c.w.data);
}

TEST_CASE("init_state shapes and starting auxiliary matrix") {
    const BoolMatrix x = nonempty_random(3, 4, 82);
    const SolverState st = init_state(x, config(2, 10));
    CHECK(st.w.rows == 3);
    CHECK(st.w.cols == 2);
    CHECK(st.h.rows == 2);
    CHECK(st.h.cols == 4);
    CHECK(st.objective_trace.empty());
    for (std::size_t p = 0; p < x.size(); ++p)
        CHECK(st.y.data[p] == static_cast<double>(x.data[p]));

    const SolverState one = init_state(bmat({{1}}), config(1, 10));
    CHECK(one.y(0, 0) == 1.0);
}

TEST_CASE("init_state draws factors from (0,1]") {
    const BoolMatrix x = nonempty_random(10, 10, 83);
    const SolverState st = init_state(x, config(4, 10, 0.0, 7));
    for (double v : st.w.data) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
    for (double v : st.h.data) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("init_state rejects an all-zero matrix with the documented message") {
    try {
        init_state(BoolMatrix(3, 3, 0), config(1, 10));
        FAIL("expected EmptySupportError");
    } catch (const EmptySupportError& e) {
        CHECK(std::string(e.what()) == "trivial input: X has empty support");
    }
}

TEST_CASE("update_w single-entry arithmetic") {
    SolverState st;
    st.y = dmat({{1.0}});
    st.w = dmat({{2.0}});
    st.h = dmat({{3.0}});
    update_w(st, config(1, 1));
    CHECK(std::abs(st.w(0, 0) - 1.0 / 3.0) < 1e-9);  // 2 * (1*3) / (2*3*3)
}

TEST_CASE("update_h single-entry arithmetic") {
    SolverState st;
    st.y = dmat({{1.0}});
    st.w = dmat({{1.0 / 3.0}});
    st.h = dmat({{3.0}});
    update_h(st, config(1, 1));
    CHECK(std::abs(st.h(0, 0) - 3.0) < 1e-9);  // WH already equals Y
}

TEST_CASE("updates fix points where Y equals WH") {
    const DenseMatrix w0 = testutil::random_dense(4, 2, 84, 0.1, 1.0);
    const DenseMatrix h0 = testutil::random_dense(2, 5, 85, 0.1, 1.0);
    SolverState st;
    st.w = w0;
    st.h = h0;
    st.y = mat_mul(w0, h0);
    update_w(st, config(2, 1));
    for (std::size_t p = 0; p < w0.size(); ++p)
        CHECK(std::abs(st.w.data[p] - w0.data[p]) < 1e-9);
    st.w = w0;
    update_h(st, config(2, 1));
    for (std::size_t p = 0; p < h0.size(); ++p)
        CHECK(std::abs(st.h.data[p] - h0.data[p]) < 1e-9);
}

TEST_CASE("multiplicative updates lock zero entries at zero") {
    SolverState st;
    st.w = testutil::random_dense(3, 2, 86, 0.1, 1.0);
    st.h = testutil::random_dense(2, 3, 87, 0.1, 1.0);
    st.y = dmat({{1, 0, 1}, {0, 1, 0}, {1, 1, 1}});
    st.w(1, 0) = 0.0;
    st.h(0, 2) = 0.0;
    for (int it = 0; it < 5; ++it) {
        update_w(st, config(2, 1));
        update_h(st, config(2, 1));
        CHECK(st.w(1, 0) == 0.0);
        CHECK(st.h(0, 2) == 0.0);
    }
}

TEST_CASE("project_y clamps the product onto the feasible box") {
    const BoolMatrix x = bmat({{1, 1, 1, 0}});
    SolverState st;
    // W H chosen so the product row is (0.5, 7, 2, 3): below, above, inside,
    // and off-support.
    st.w = dmat({{1.0}});
    st.h = dmat({{0.5, 7.0, 2.0, 3.0}});
    st.y = DenseMatrix(1, 4, 0.0);
    project_y(st, x, 5);
    CHECK(st.y(0, 0) == 1.0);  // 0.5 < 1 pulls up to 1
    CHECK(st.y(0, 1) == 5.0);  // 7 > k caps at k
    CHECK(st.y(0, 2) == 2.0);  // interior value kept
    CHECK(st.y(0, 3) == 0.0);  // off support stays 0
    CHECK(is_feasible(st.y, x, 5));
    CHECK_THROWS_AS(project_y(st, BoolMatrix(2, 2, 1), 5), ShapeError);
}

TEST_CASE("solve factorizes the all-ones 2x2 matrix at rank 1") {
    const SolverState st = solve(bmat({{1, 1}, {1, 1}}), config(1, 300, 0.0, 5));
    REQUIRE(!st.objective_trace.empty());
    CHECK(st.objective_trace.back() < 1e-6);
}

TEST_CASE("solve objective trace is non-increasing without regularization") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const BoolMatrix x = nonempty_random(8, 6, 900 + seed);
        const SolverState st = solve(x, config(2, 200, 0.0, seed));
        REQUIRE(st.objective_trace.size() == 200);
        for (std::size_t t = 1; t < st.objective_trace.size(); ++t)
            CHECK(st.objective_trace[t] <= st.objective_trace[t - 1] + 1e-9);
    }
}

TEST_CASE("solve keeps the auxiliary matrix feasible") {
    const BoolMatrix x = nonempty_random(7, 7, 91);
    const SolverState st = solve(x, config(3, 50, 0.0, 3));
    CHECK(is_feasible(st.y, x, 3));
}

TEST_CASE("solve is deterministic given input and config") {
    const BoolMatrix x = nonempty_random(6, 5, 92);
    const SolverState a = solve(x, config(2, 80, 0.0, 17));
    const SolverState b = solve(x, config(2, 80, 0.0, 17));
    CHECK(a.w.data == b.w.data);
    CHECK(a.h.data == b.h.data);
    CHECK(a.y.data == b.y.data);
    CHECK(a.objective_trace == b.objective_trace);
    CHECK(a.iterations_run == b.iterations_run);
}

TEST_CASE("early stopping ends the loop once the objective flattens") {
    SolverConfig cfg = config(1, 2000, 0.0, 5);
    cfg.early_stop_tol = 1e-6;
    const SolverState st = solve(bmat({{1, 1}, {1, 1}}), cfg);
    CHECK(st.iterations_run < 2000);
    CHECK(st.objective_trace.size() == st.iterations_run);
}

TEST_CASE("early stopping is ignored for regularized runs") {
    SolverConfig cfg = config(1, 50, 0.1, 5);
    cfg.early_stop_tol = 1e9;  // would stop immediately if honored
    const SolverState st = solve(bmat({{1, 1}, {1, 1}}), cfg);
    CHECK(st.iterations_run == 50);
}

TEST_CASE("regularized solve ends no worse than its first iteration") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        SynthSpec spec;
        spec.rows = 10;
        spec.cols = 8;
        spec.rank = 3;
        spec.density = 0.5;
        spec.seed = 700 + seed;
        const PlantedInstance inst = generate_planted(spec);
        const SolverState st = solve(inst.x, config(3, 300, 0.1, seed));
        CHECK(st.objective_trace.back() <= st.objective_trace.front() + 1e-9);
        const SolverState nm = nmf_solve(inst.x, config(3, 300, 0.1, seed));
        CHECK(nm.objective_trace.back() <= nm.objective_trace.front() + 1e-9);
    }
}

TEST_CASE("seeding with exact planted factors gives objective exactly zero") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SynthSpec spec;
        spec.rows = 6;
        spec.cols = 5;
        spec.rank = 2;
        spec.density = 0.5;
        spec.seed = 500 + seed;
        const PlantedInstance inst = generate_planted(spec);
        SolverState st;
        st.w = to_dense(inst.w_true);
        st.h = to_dense(inst.h_true);
        st.y = mat_mul(st.w, st.h);
        CHECK(objective(st) == 0.0);
        CHECK(is_feasible(st.y, inst.x, spec.rank));
    }
}

TEST_CASE("nmf baseline keeps Y frozen at the input") {
    const BoolMatrix x = nonempty_random(6, 6, 93);
    const SolverState st = nmf_solve(x, config(2, 60, 0.0, 11));
    for (std::size_t p = 0; p < x.size(); ++p)
        CHECK(st.y.data[p] == static_cast<double>(x.data[p]));
}

TEST_CASE("nmf baseline descends monotonically without regularization") {
    const BoolMatrix x = nonempty_random(8, 7, 94);
    const SolverState st = nmf_solve(x, config(2, 150, 0.0, 13));
    for (std::size_t t = 1; t < st.objective_trace.size(); ++t)
        CHECK(st.objective_trace[t] <= st.objective_trace[t - 1] + 1e-9);
}

TEST_CASE("nmf baseline reaches an exact rank-1 factorization of all-ones") {
    const SolverState st = nmf_solve(BoolMatrix(4, 4, 1), config(1, 300, 0.0, 5));
    CHECK(st.objective_trace.back() < 1e-6);
}

TEST_CASE("nmf baseline is deterministic given input and config") {
    const BoolMatrix x = nonempty_random(5, 5, 95);
    const SolverState a = nmf_solve(x, config(2, 40, 0.0, 23));
    const SolverState b = nmf_solve(x, config(2, 40, 0.0, 23));
    CHECK(a.w.data == b.w.data);
    CHECK(a.h.data == b.h.data);
    CHECK(a.objective_trace == b.objective_trace);
}

TEST_CASE("iteration accounting matches the trace") {
    const BoolMatrix x = nonempty_random(5, 5, 96);
    const SolverState st = solve(x, config(2, 37, 0.0, 29));
    CHECK(st.iterations_run == 37);
    CHECK(st.objective_trace.size() == 37);
    CHECK(st.loop_wall_ms >= 0.0);
}
