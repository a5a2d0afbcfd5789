#include "banmf.h"

#include <cstring>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/booleanize.hpp"
#include "core/csv.hpp"
#include "core/errors.hpp"
#include "core/matrix.hpp"
#include "core/oracle.hpp"
#include "core/rank.hpp"
#include "core/rng.hpp"
#include "core/solver.hpp"
#include "core/synth.hpp"

struct banmf_bool {
    banmf::BoolMatrix m;
};

struct banmf_dense {
    banmf::DenseMatrix m;
};

struct banmf_result {
    banmf_dense w;
    banmf_dense h;
    banmf_dense y;
    std::vector<double> trace;
    std::uint32_t iterations = 0;
    double loop_ms = 0.0;
};

struct banmf_choice {
    double delta_w = 0.0;
    double delta_h = 0.0;
    std::uint64_t hamming = 0;
    banmf_bool w_hat;
    banmf_bool h_hat;
};

struct banmf_instance {
    banmf_bool x;
    banmf_bool w_true;
    banmf_bool h_true;
    banmf_bool x_clean;
    banmf_synth_spec spec{};
    bool has_gap = false;
    std::int64_t gap = 0;
};

struct banmf_suite {
    std::vector<banmf_instance> instances;
    std::vector<std::string> warnings;
};

struct banmf_oracle {
    banmf_bool w;
    banmf_bool h;
    std::uint64_t min_hamming = 0;
};

namespace {

thread_local std::string g_last_error;

void clear_error() { g_last_error.clear(); }

banmf_status fail(banmf_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Runs f(), translating core exceptions into status codes. Every fallible
// entry point goes through here so the mapping stays in one place.
template <typename F>
banmf_status guarded(F&& f) noexcept {
    try {
        clear_error();
        f();
        return BANMF_OK;
    } catch (const banmf::ShapeError& e) {
        return fail(BANMF_ERR_DIM, e.what());
    } catch (const banmf::EmptySupportError& e) {
        return fail(BANMF_ERR_EMPTY, e.what());
    } catch (const banmf::BudgetError& e) {
        return fail(BANMF_ERR_BUDGET, e.what());
    } catch (const banmf::ParseError& e) {
        return fail(BANMF_ERR_PARSE, e.what());
    } catch (const banmf::IoError& e) {
        return fail(BANMF_ERR_IO, e.what());
    } catch (const banmf::ArgumentError& e) {
        return fail(BANMF_ERR_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(BANMF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BANMF_ERR_INTERNAL, "unknown failure");
    }
}

banmf_status require(bool ok, const char* what) {
    if (ok) return BANMF_OK;
    return fail(BANMF_ERR_ARG, std::string("null pointer argument: ") + what);
}

banmf_instance wrap_instance(banmf::PlantedInstance&& inst) {
    banmf_instance out;
    out.x.m = std::move(inst.x);
    out.w_true.m = std::move(inst.w_true);
    out.h_true.m = std::move(inst.h_true);
    out.x_clean.m = std::move(inst.x_clean);
    out.spec.rows = inst.spec.rows;
    out.spec.cols = inst.spec.cols;
    out.spec.rank = inst.spec.rank;
    out.spec.density = inst.spec.density;
    out.spec.noise = inst.spec.noise;
    out.spec.seed = inst.spec.seed;
    out.has_gap = inst.rank_lower_bound_gap.has_value();
    out.gap = inst.rank_lower_bound_gap.value_or(0);
    return out;
}

banmf::SolverConfig to_core(banmf_solver_config cfg) {
    banmf::SolverConfig c;
    c.rank = cfg.rank;
    c.max_iters = cfg.max_iters;
    c.lambda = cfg.lambda;
    c.epsilon = cfg.epsilon;
    c.seed = cfg.seed;
    if (cfg.early_stop) c.early_stop_tol = cfg.early_stop_tol;
    return c;
}

banmf_result* wrap_result(banmf::SolverState&& st) {
    auto* r = new banmf_result;
    r->w.m = std::move(st.w);
    r->h.m = std::move(st.h);
    r->y.m = std::move(st.y);
    r->trace = std::move(st.objective_trace);
    r->iterations = st.iterations_run;
    r->loop_ms = st.loop_wall_ms;
    return r;
}

}  // namespace

extern "C" {

const char* banmf_last_error(void) { return g_last_error.c_str(); }

const char* banmf_status_name(banmf_status s) {
    switch (s) {
        case BANMF_OK: return "ok";
        case BANMF_ERR_DIM: return "dim_error";
        case BANMF_ERR_ARG: return "arg_error";
        case BANMF_ERR_EMPTY: return "empty_support";
        case BANMF_ERR_BUDGET: return "budget_exceeded";
        case BANMF_ERR_IO: return "io_error";
        case BANMF_ERR_PARSE: return "parse_error";
        case BANMF_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* banmf_version(void) { return "1.0.0"; }

/* ---- matrices ---------------------------------------------------------- */

banmf_status banmf_bool_create(size_t rows, size_t cols, const uint8_t* data, banmf_bool** out) {
    if (banmf_status s = require(out != nullptr, "out"); s != BANMF_OK) return s;
    return guarded([&] {
        if (rows == 0 || cols == 0)
            throw banmf::ArgumentError("matrix dimensions must be positive");
        auto m = new banmf_bool{banmf::BoolMatrix(rows, cols)};
        if (data) {
            for (size_t i = 0; i < rows * cols; ++i) {
                if (data[i] > 1) {
                    delete m;
                    std::ostringstream os;
                    os << "entry " << i << " is " << int(data[i]) << ", expected 0 or 1";
                    throw banmf::ArgumentError(os.str());
                }
                m->m.data[i] = data[i];
            }
        }
        *out = m;
    });
}

void banmf_bool_free(banmf_bool* m) { delete m; }

size_t banmf_bool_rows(const banmf_bool* m) { return m ? m->m.rows : 0; }
size_t banmf_bool_cols(const banmf_bool* m) { return m ? m->m.cols : 0; }

banmf_status banmf_bool_get(const banmf_bool* m, size_t i, size_t j, uint8_t* out) {
    if (banmf_status s = require(m && out, "matrix/out"); s != BANMF_OK) return s;
    if (i >= m->m.rows || j >= m->m.cols) return fail(BANMF_ERR_ARG, "index out of range");
    clear_error();
    *out = m->m(i, j);
    return BANMF_OK;
}

banmf_status banmf_bool_set(banmf_bool* m, size_t i, size_t j, uint8_t value) {
    if (banmf_status s = require(m != nullptr, "matrix"); s != BANMF_OK) return s;
    if (i >= m->m.rows || j >= m->m.cols) return fail(BANMF_ERR_ARG, "index out of range");
    if (value > 1) return fail(BANMF_ERR_ARG, "value must be 0 or 1");
    clear_error();
    m->m(i, j) = value;
    return BANMF_OK;
}

const uint8_t* banmf_bool_data(const banmf_bool* m) { return m ? m->m.data.data() : nullptr; }

banmf_status banmf_dense_create(size_t rows, size_t cols, const double* data, banmf_dense** out) {
    if (banmf_status s = require(out != nullptr, "out"); s != BANMF_OK) return s;
    return guarded([&] {
        if (rows == 0 || cols == 0)
            throw banmf::ArgumentError("matrix dimensions must be positive");
        auto m = new banmf_dense{banmf::DenseMatrix(rows, cols)};
        if (data) m->m.data.assign(data, data + rows * cols);
        *out = m;
    });
}

void banmf_dense_free(banmf_dense* m) { delete m; }

size_t banmf_dense_rows(const banmf_dense* m) { return m ? m->m.rows : 0; }
size_t banmf_dense_cols(const banmf_dense* m) { return m ? m->m.cols : 0; }

banmf_status banmf_dense_get(const banmf_dense* m, size_t i, size_t j, double* out) {
    if (banmf_status s = require(m && out, "matrix/out"); s != BANMF_OK) return s;
    if (i >= m->m.rows || j >= m->m.cols) return fail(BANMF_ERR_ARG, "index out of range");
    clear_error();
    *out = m->m(i, j);
    return BANMF_OK;
}

banmf_status banmf_dense_set(banmf_dense* m, size_t i, size_t j, double value) {
    if (banmf_status s = require(m != nullptr, "matrix"); s != BANMF_OK) return s;
    if (i >= m->m.rows || j >= m->m.cols) return fail(BANMF_ERR_ARG, "index out of range");
    clear_error();
    m->m(i, j) = value;
    return BANMF_OK;
}

const double* banmf_dense_data(const banmf_dense* m) { return m ? m->m.data.data() : nullptr; }

banmf_status banmf_bool_product(const banmf_bool* w, const banmf_bool* h, banmf_bool** out) {
    if (banmf_status s = require(w && h && out, "w/h/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = new banmf_bool{banmf::bool_mat_mul(w->m, h->m)}; });
}

banmf_status banmf_hamming(const banmf_bool* a, const banmf_bool* b, uint64_t* out) {
    if (banmf_status s = require(a && b && out, "a/b/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = banmf::hamming_error(a->m, b->m); });
}

banmf_status banmf_relative_error(const banmf_bool* a, const banmf_bool* b, double* out) {
    if (banmf_status s = require(a && b && out, "a/b/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = banmf::boolean_relative_error(a->m, b->m); });
}

banmf_status banmf_frobenius_error(const banmf_dense* a, const banmf_dense* b, double* out) {
    if (banmf_status s = require(a && b && out, "a/b/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = banmf::frobenius_error(a->m, b->m); });
}

/* ---- solver ------------------------------------------------------------ */

banmf_solver_config banmf_default_config(void) {
    banmf_solver_config cfg;
    cfg.rank = 1;
    cfg.max_iters = 1000;
    cfg.lambda = 0.0;
    cfg.epsilon = 1e-12;
    cfg.seed = 0;
    cfg.early_stop = 0;
    cfg.early_stop_tol = 0.0;
    return cfg;
}

banmf_status banmf_solve(const banmf_bool* x, banmf_solver_config cfg, banmf_result** out) {
    if (banmf_status s = require(x && out, "x/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = wrap_result(banmf::solve(x->m, to_core(cfg))); });
}

banmf_status banmf_nmf_solve(const banmf_bool* x, banmf_solver_config cfg, banmf_result** out) {
    if (banmf_status s = require(x && out, "x/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = wrap_result(banmf::nmf_solve(x->m, to_core(cfg))); });
}

void banmf_result_free(banmf_result* r) { delete r; }

const banmf_dense* banmf_result_w(const banmf_result* r) { return r ? &r->w : nullptr; }
const banmf_dense* banmf_result_h(const banmf_result* r) { return r ? &r->h : nullptr; }
const banmf_dense* banmf_result_y(const banmf_result* r) { return r ? &r->y : nullptr; }

uint32_t banmf_result_iterations(const banmf_result* r) { return r ? r->iterations : 0; }
size_t banmf_result_trace_len(const banmf_result* r) { return r ? r->trace.size() : 0; }
const double* banmf_result_trace(const banmf_result* r) { return r ? r->trace.data() : nullptr; }
double banmf_result_loop_ms(const banmf_result* r) { return r ? r->loop_ms : 0.0; }

/* ---- Booleanization ----------------------------------------------------- */

banmf_status banmf_threshold(const banmf_dense* c, double delta, banmf_bool** out) {
    if (banmf_status s = require(c && out, "c/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = new banmf_bool{banmf::threshold(c->m, delta)}; });
}

banmf_status banmf_booleanize(const banmf_bool* x, const banmf_dense* w, const banmf_dense* h,
                              size_t npoint, banmf_choice** out) {
    if (banmf_status s = require(x && w && h && out, "x/w/h/out"); s != BANMF_OK) return s;
    return guarded([&] {
        banmf::ThresholdChoice c =
            banmf::booleanize(x->m, w->m, h->m, static_cast<std::uint32_t>(npoint));
        auto* r = new banmf_choice;
        r->delta_w = c.delta_w;
        r->delta_h = c.delta_h;
        r->hamming = c.hamming;
        r->w_hat.m = std::move(c.w_hat);
        r->h_hat.m = std::move(c.h_hat);
        *out = r;
    });
}

void banmf_choice_free(banmf_choice* c) { delete c; }

double banmf_choice_delta_w(const banmf_choice* c) { return c ? c->delta_w : 0.0; }
double banmf_choice_delta_h(const banmf_choice* c) { return c ? c->delta_h : 0.0; }
uint64_t banmf_choice_hamming(const banmf_choice* c) { return c ? c->hamming : 0; }
const banmf_bool* banmf_choice_w(const banmf_choice* c) { return c ? &c->w_hat : nullptr; }
const banmf_bool* banmf_choice_h(const banmf_choice* c) { return c ? &c->h_hat : nullptr; }

/* ---- synthetic data ----------------------------------------------------- */

banmf_status banmf_factor_density(double density, uint32_t rank, double* out) {
    if (banmf_status s = require(out != nullptr, "out"); s != BANMF_OK) return s;
    return guarded([&] { *out = banmf::factor_density(density, rank); });
}

banmf_status banmf_generate_planted(banmf_synth_spec spec, banmf_instance** out) {
    if (banmf_status s = require(out != nullptr, "out"); s != BANMF_OK) return s;
    return guarded([&] {
        banmf::SynthSpec s;
        s.rows = spec.rows;
        s.cols = spec.cols;
        s.rank = spec.rank;
        s.density = spec.density;
        s.noise = spec.noise;
        s.seed = spec.seed;
        *out = new banmf_instance(wrap_instance(banmf::generate_planted(s)));
    });
}

void banmf_instance_free(banmf_instance* inst) { delete inst; }

const banmf_bool* banmf_instance_x(const banmf_instance* inst) { return inst ? &inst->x : nullptr; }
const banmf_bool* banmf_instance_w(const banmf_instance* inst) {
    return inst ? &inst->w_true : nullptr;
}
const banmf_bool* banmf_instance_h(const banmf_instance* inst) {
    return inst ? &inst->h_true : nullptr;
}
const banmf_bool* banmf_instance_x_clean(const banmf_instance* inst) {
    return inst ? &inst->x_clean : nullptr;
}

banmf_status banmf_instance_spec(const banmf_instance* inst, banmf_synth_spec* out) {
    if (auto s = require(inst != nullptr, "inst"); s != BANMF_OK) return s;
    if (auto s = require(out != nullptr, "out"); s != BANMF_OK) return s;
    clear_error();
    *out = inst->spec;
    return BANMF_OK;
}

int banmf_instance_gap(const banmf_instance* inst, int64_t* out) {
    if (!inst || !inst->has_gap) return 0;
    if (out) *out = inst->gap;
    return 1;
}

banmf_status banmf_flip_noise(const banmf_bool* x, double p, uint64_t seed, banmf_bool** out) {
    if (banmf_status s = require(x && out, "x/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = new banmf_bool{banmf::apply_flip_noise(x->m, p, seed)}; });
}

banmf_status banmf_exact_rank(const banmf_bool* x, size_t* out) {
    if (banmf_status s = require(x && out, "x/out"); s != BANMF_OK) return s;
    return guarded([&] { *out = banmf::exact_rank(x->m); });
}

/* ---- rank-gap suite ----------------------------------------------------- */

banmf_status banmf_rank_gap_suite(banmf_rank_gap_params params, banmf_suite** out) {
    if (banmf_status s = require(out != nullptr, "out"); s != BANMF_OK) return s;
    if (banmf_status s = require(params.n_values && params.m_values && params.k_values &&
                                     params.densities,
                                 "params arrays");
        s != BANMF_OK)
        return s;
    return guarded([&] {
        banmf::RankGapParams p;
        p.n_values.assign(params.n_values, params.n_values + params.n_count);
        p.m_values.assign(params.m_values, params.m_values + params.m_count);
        p.k_values.assign(params.k_values, params.k_values + params.k_count);
        p.densities.assign(params.densities, params.densities + params.density_count);
        p.per_cell = static_cast<std::uint32_t>(params.per_cell);
        p.seed = params.seed;
        p.retry_budget = static_cast<std::uint32_t>(params.retry_budget);
        banmf::RankGapSuite suite = banmf::generate_rank_gap_suite(p);
        auto* s = new banmf_suite;
        s->instances.reserve(suite.instances.size());
        for (banmf::PlantedInstance& inst : suite.instances)
            s->instances.push_back(wrap_instance(std::move(inst)));
        s->warnings = std::move(suite.warnings);
        *out = s;
    });
}

void banmf_suite_free(banmf_suite* s) { delete s; }

size_t banmf_suite_size(const banmf_suite* s) { return s ? s->instances.size() : 0; }

const banmf_instance* banmf_suite_instance(const banmf_suite* s, size_t index) {
    if (!s || index >= s->instances.size()) return nullptr;
    return &s->instances[index];
}

size_t banmf_suite_warning_count(const banmf_suite* s) { return s ? s->warnings.size() : 0; }

const char* banmf_suite_warning(const banmf_suite* s, size_t index) {
    if (!s || index >= s->warnings.size()) return nullptr;
    return s->warnings[index].c_str();
}

/* ---- exhaustive oracle --------------------------------------------------- */

banmf_status banmf_exhaustive_bmf(const banmf_bool* x, uint32_t rank, uint64_t budget,
                                  banmf_oracle** out) {
    if (banmf_status s = require(x && out, "x/out"); s != BANMF_OK) return s;
    return guarded([&] {
        banmf::OracleResult r = banmf::exhaustive_bmf(
            x->m, rank, budget == 0 ? banmf::kDefaultOracleBudget : budget);
        auto* o = new banmf_oracle;
        o->w.m = std::move(r.w);
        o->h.m = std::move(r.h);
        o->min_hamming = r.min_hamming;
        *out = o;
    });
}

void banmf_oracle_free(banmf_oracle* o) { delete o; }

const banmf_bool* banmf_oracle_w(const banmf_oracle* o) { return o ? &o->w : nullptr; }
const banmf_bool* banmf_oracle_h(const banmf_oracle* o) { return o ? &o->h : nullptr; }
uint64_t banmf_oracle_min_hamming(const banmf_oracle* o) { return o ? o->min_hamming : 0; }

/* ---- CSV ---------------------------------------------------------------- */

banmf_status banmf_read_bool_csv(const char* path, int skip_header, banmf_bool** out) {
    if (banmf_status s = require(path && out, "path/out"); s != BANMF_OK) return s;
    return guarded(
        [&] { *out = new banmf_bool{banmf::read_bool_csv(std::string(path), skip_header != 0)}; });
}

banmf_status banmf_write_bool_csv(const char* path, const banmf_bool* m, const char* header) {
    if (banmf_status s = require(path && m, "path/matrix"); s != BANMF_OK) return s;
    return guarded([&] {
        if (header) {
            std::ostringstream body;
            body << header << '\n';
            banmf::write_bool_csv(m->m, body);
            banmf::write_text_file(std::string(path), body.str());
        } else {
            banmf::write_bool_csv(m->m, std::string(path));
        }
    });
}

banmf_status banmf_read_dense_csv(const char* path, int skip_header, banmf_dense** out) {
    if (banmf_status s = require(path && out, "path/out"); s != BANMF_OK) return s;
    return guarded([&] {
        *out = new banmf_dense{banmf::read_dense_csv(std::string(path), skip_header != 0)};
    });
}

banmf_status banmf_write_dense_csv(const char* path, const banmf_dense* m, const char* header) {
    if (banmf_status s = require(path && m, "path/matrix"); s != BANMF_OK) return s;
    return guarded([&] {
        if (header) {
            std::ostringstream body;
            body << header << '\n';
            banmf::write_dense_csv(m->m, body);
            banmf::write_text_file(std::string(path), body.str());
        } else {
            banmf::write_dense_csv(m->m, std::string(path));
        }
    });
}

/* ---- seeds -------------------------------------------------------------- */

uint64_t banmf_derive_seed(uint64_t base, const uint64_t* path, size_t path_len) {
    std::uint64_t s = banmf::splitmix64(base);
    for (size_t i = 0; i < path_len; ++i) s = banmf::splitmix64(s ^ path[i]);
    return s;
}

}  /* extern "C" */
