#include "core/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace banmf {

void validate(const SolverConfig& cfg) {
    if (cfg.rank < 1) throw ArgumentError("solver config: rank must be >= 1");
    if (cfg.max_iters < 1) throw ArgumentError("solver config: max_iters must be >= 1");
    if (cfg.lambda < 0.0) throw ArgumentError("solver config: lambda must be >= 0");
    if (!(cfg.epsilon > 0.0)) throw ArgumentError("solver config: epsilon must be > 0");
    if (cfg.early_stop_tol && *cfg.early_stop_tol < 0.0)
        throw ArgumentError("solver config: early_stop_tol must be >= 0");
}

SolverState init_state(const BoolMatrix& x, const SolverConfig& cfg) {
    validate(cfg);
    if (x.size() == 0) throw ArgumentError("init_state: X is empty");
    if (support_size(x) == 0) throw EmptySupportError("trivial input: X has empty support");

    SolverState st;
    st.w = DenseMatrix(x.rows, cfg.rank);
    st.h = DenseMatrix(cfg.rank, x.cols);
    std::mt19937_64 eng(cfg.seed);
    for (double& v : st.w.data) v = uniform_open01(eng);
    for (double& v : st.h.data) v = uniform_open01(eng);
    st.y = to_dense(x);  // X is 0/1, so Y starts feasible for any k >= 1
    return st;
}

namespace {

void multiplicative_step(std::vector<double>& factor, const DenseMatrix& numerator,
                         const DenseMatrix& denominator, double lambda, double epsilon) {
    const std::size_t n = factor.size();
    const double* num = numerator.data.data();
    const double* den = denominator.data.data();
    if (lambda > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            const double v = factor[i];
            const double v2 = v * v;
            factor[i] = v * (num[i] + 3.0 * lambda * v2) /
                        (den[i] + 2.0 * lambda * v2 * v + lambda * v2 + epsilon);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            factor[i] = factor[i] * num[i] / (den[i] + epsilon);
        }
    }
}

void project_y_from_product(DenseMatrix& y, const DenseMatrix& wh, const BoolMatrix& x,
                            std::uint32_t k) {
    const double hi = static_cast<double>(k);
    for (std::size_t i = 0; i < y.data.size(); ++i) {
        y.data[i] = x.data[i] ? std::clamp(wh.data[i], 1.0, hi) : 0.0;
    }
}

SolverState run_loop(const BoolMatrix& x, const SolverConfig& cfg, bool project) {
    SolverState st = init_state(x, cfg);
    const std::optional<double> tol =
        (cfg.lambda == 0.0) ? cfg.early_stop_tol : std::nullopt;
    std::uint32_t flat_run = 0;
    double prev = -1.0;
    const auto loop_start = std::chrono::steady_clock::now();
    for (std::uint32_t iter = 0; iter < cfg.max_iters; ++iter) {
        update_w(st, cfg);
        update_h(st, cfg);
        DenseMatrix wh = mat_mul(st.w, st.h);
        if (project) project_y_from_product(st.y, wh, x, cfg.rank);
        const double obj = frobenius_error(st.y, wh);
        st.objective_trace.push_back(obj);
        st.iterations_run = iter + 1;
        if (tol) {
            if (iter > 0) {
                const double rel = std::abs(prev - obj) / std::max(prev, 1e-300);
                flat_run = (rel < *tol) ? flat_run + 1 : 0;
                if (flat_run >= 10) break;
            }
            prev = obj;
        }
    }
    st.loop_wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - loop_start)
            .count();
    return st;
}

}  // namespace

void update_w(SolverState& state, const SolverConfig& cfg) {
    const DenseMatrix numerator = mat_mul_transb(state.y, state.h);   // Y H^T
    const DenseMatrix hht = mat_mul_transb(state.h, state.h);         // H H^T
    const DenseMatrix denominator = mat_mul(state.w, hht);            // W H H^T
    multiplicative_step(state.w.data, numerator, denominator, cfg.lambda, cfg.epsilon);
}

void update_h(SolverState& state, const SolverConfig& cfg) {
    const DenseMatrix numerator = mat_mul_transa(state.w, state.y);   // W^T Y
    const DenseMatrix wtw = mat_mul_transa(state.w, state.w);         // W^T W
    const DenseMatrix denominator = mat_mul(wtw, state.h);            // W^T W H
    multiplicative_step(state.h.data, numerator, denominator, cfg.lambda, cfg.epsilon);
}

void project_y(SolverState& state, const BoolMatrix& x, std::uint32_t k) {
    if (state.y.rows != x.rows || state.y.cols != x.cols) {
        std::ostringstream os;
        os << "project_y: Y is " << state.y.rows << "x" << state.y.cols << " but X is "
           << x.rows << "x" << x.cols;
        throw ShapeError(os.str());
    }
    const DenseMatrix wh = mat_mul(state.w, state.h);
    project_y_from_product(state.y, wh, x, k);
}

double objective(const SolverState& state) {
    return frobenius_error(state.y, mat_mul(state.w, state.h));
}

SolverState solve(const BoolMatrix& x, const SolverConfig& cfg) {
    return run_loop(x, cfg, /*project=*/true);
}

SolverState nmf_solve(const BoolMatrix& x, const SolverConfig& cfg) {
    return run_loop(x, cfg, /*project=*/false);
}

bool is_feasible(const DenseMatrix& y, const BoolMatrix& x, std::uint32_t k) {
    if (y.rows != x.rows || y.cols != x.cols) return false;
    const double hi = static_cast<double>(k);
    for (std::size_t i = 0; i < y.data.size(); ++i) {
        if (x.data[i]) {
            if (y.data[i] < 1.0 || y.data[i] > hi) return false;
        } else if (y.data[i] != 0.0) {
            return false;
        }
    }
    return true;
}

}  // namespace banmf
