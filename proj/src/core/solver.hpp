#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/matrix.hpp"

namespace banmf {

/// Run parameters shared by the auxiliary solver and the plain NMF baselines.
struct SolverConfig {
    std::uint32_t rank = 1;           // latent dimension k
    std::uint32_t max_iters = 1000;
    double lambda = 0.0;              // binarity regularization weight, 0 disables
    double epsilon = 1e-12;           // added to every update denominator
    std::uint64_t seed = 0;
    std::optional<double> early_stop_tol;  // relative objective change; disabled by default
};

/// Solver iterate: auxiliary matrix Y plus nonnegative factors W (N x k) and
/// H (k x M), with the per-iteration objective ||Y - WH||_F.
struct SolverState {
    DenseMatrix y;
    DenseMatrix w;
    DenseMatrix h;
    std::vector<double> objective_trace;  // one value per full iteration
    std::uint32_t iterations_run = 0;
    double loop_wall_ms = 0.0;  // iteration loop only, excludes init and I/O
};

/// Throws ArgumentError unless rank >= 1, max_iters >= 1, lambda >= 0,
/// epsilon > 0.
void validate(const SolverConfig& cfg);

/// W and H filled with uniform (0,1] draws seeded by cfg.seed (one stream,
/// W row-major first, then H); Y = X entrywise. Throws EmptySupportError if
/// X has no 1-entries.
SolverState init_state(const BoolMatrix& x, const SolverConfig& cfg);

/// Multiplicative update of W against the current Y and H:
///   lambda = 0:  W <- W .* (Y H^T) ./ (W H H^T + eps)
///   lambda > 0:  W <- W .* (Y H^T + 3 lambda W^2)
///                       ./ (W H H^T + 2 lambda W^3 + lambda W^2 + eps)
/// Entries equal to zero stay zero.
void update_w(SolverState& state, const SolverConfig& cfg);

/// Mirror of update_w with the transposed formula:
///   lambda = 0:  H <- H .* (W^T Y) ./ (W^T W H + eps)
///   lambda > 0:  H <- H .* (W^T Y + 3 lambda H^2)
///                       ./ (W^T W H + 2 lambda H^3 + lambda H^2 + eps)
void update_h(SolverState& state, const SolverConfig& cfg);

/// Entrywise projection of Y onto the feasible set: on support(X),
/// Y = clamp(WH, 1, k); off support, Y = 0. Minimizes |Y - WH| per entry.
void project_y(SolverState& state, const BoolMatrix& x, std::uint32_t k);

/// ||Y - WH||_F for the current state.
double objective(const SolverState& state);

/// Auxiliary-matrix solve: init_state, then per iteration update_w, update_h
/// (with the fresh W), project_y, recording ||Y - WH||_F. With lambda = 0 the
/// trace is non-increasing. Early stop (lambda = 0 only) ends the loop after
/// 10 consecutive iterations whose relative objective change is below
/// cfg.early_stop_tol.
SolverState solve(const BoolMatrix& x, const SolverConfig& cfg);

/// Plain / regularized NMF baseline: the identical loop with Y frozen at X
/// and no projection step, so initialization, epsilon-guarding and iteration
/// accounting match solve() exactly.
SolverState nmf_solve(const BoolMatrix& x, const SolverConfig& cfg);

/// True iff y satisfies the auxiliary constraints for x at rank k:
/// y = 0 off support(x) and 1 <= y <= k on it.
bool is_feasible(const DenseMatrix& y, const BoolMatrix& x, std::uint32_t k);

}  // namespace banmf
