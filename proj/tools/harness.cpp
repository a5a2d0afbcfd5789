#include "harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "capi_wrap.hpp"

namespace cli {

namespace {

using json = nlohmann::ordered_json;
using clk = std::chrono::steady_clock;

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

struct Method {
    std::string name;
    bool project = false;  // update the auxiliary target each iteration
    bool reg = false;      // apply the cubic regularization term
    bool oracle = false;
    std::size_t idx = 0;
};

const std::array<Method, 4> kSolverMethods = {{
    {"banmf", true, false, false, 0},
    {"banmf-reg", true, true, false, 1},
    {"nmf", false, false, false, 2},
    {"nmf-reg", false, true, false, 3},
}};

std::vector<Method> resolve_methods(const std::vector<std::string>& names) {
    std::vector<Method> out;
    if (names.empty()) {
        out.assign(kSolverMethods.begin(), kSolverMethods.end());
        return out;
    }
    for (const auto& n : names) {
        if (n == "oracle") {
            out.push_back({"oracle", false, false, true, 4});
            continue;
        }
        bool found = false;
        for (const auto& m : kSolverMethods) {
            if (m.name == n) {
                out.push_back(m);
                found = true;
                break;
            }
        }
        if (!found)
            throw CliError(1, "unknown method '" + n +
                                  "': expected banmf, banmf-reg, nmf, nmf-reg, or oracle");
    }
    return out;
}

Method resolve_single_method(const std::string& name, bool allow_oracle) {
    auto v = resolve_methods({name});
    if (v.front().oracle && !allow_oracle)
        throw CliError(1, "method 'oracle' is not available here; use the oracle subcommand");
    return v.front();
}

// fn(i) for i in [0, n); items must be independent. The first exception wins
// and is rethrown after all workers drain.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
    if (workers == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : hc;
    }
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            {
                std::lock_guard<std::mutex> lock(err_mu);
                if (first_error) return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// Runs one method on one instance and fills the measurement fields; the
// caller stamps the experiment context (density, noise, gap, seeds, keys).
TrialRecord run_method(const banmf_bool* x, const banmf_bool* x_clean, const Method& m,
                       std::uint32_t rank, std::uint32_t iters, double lambda,
                       std::uint32_t npoint, std::uint64_t solver_seed, bool repro) {
    TrialRecord r;
    r.method = m.name;
    r.method_idx = m.idx;
    r.rows = banmf_bool_rows(x);
    r.cols = banmf_bool_cols(x);
    r.rank = rank;

    if (m.oracle) {
        auto t0 = clk::now();
        OraclePtr o = exhaustive_bmf(x, rank, 0);
        double wall = ms_since(t0);
        BoolPtr recon = bool_product(banmf_oracle_w(o.get()), banmf_oracle_h(o.get()));
        r.hamming = banmf_oracle_min_hamming(o.get());
        r.relative_error = relative_error(x, recon.get());
        r.clean_relative_error =
            x_clean ? relative_error(x_clean, recon.get()) : r.relative_error;
        r.objective_final = 0.0;
        r.iterations = 0;
        r.wall_time_ms = repro ? 0 : std::llround(wall);
        r.booleanize_ms = 0;
        return r;
    }

    banmf_solver_config cfg = banmf_default_config();
    cfg.rank = rank;
    cfg.max_iters = iters;
    cfg.lambda = m.reg ? lambda : 0.0;
    cfg.seed = solver_seed;
    ResultPtr res = solve(x, cfg, m.project);

    auto t0 = clk::now();
    ChoicePtr ch = booleanize(x, banmf_result_w(res.get()), banmf_result_h(res.get()), npoint);
    double boole_wall = ms_since(t0);

    BoolPtr recon = bool_product(banmf_choice_w(ch.get()), banmf_choice_h(ch.get()));
    r.hamming = banmf_choice_hamming(ch.get());
    r.relative_error = relative_error(x, recon.get());
    r.clean_relative_error = x_clean ? relative_error(x_clean, recon.get()) : r.relative_error;
    std::size_t tlen = banmf_result_trace_len(res.get());
    r.objective_final = tlen > 0 ? banmf_result_trace(res.get())[tlen - 1] : 0.0;
    r.iterations = banmf_result_iterations(res.get());
    r.wall_time_ms = repro ? 0 : std::llround(banmf_result_loop_ms(res.get()));
    r.booleanize_ms = repro ? 0 : std::llround(boole_wall);
    return r;
}

void sort_records(std::vector<TrialRecord>& recs) {
    std::stable_sort(recs.begin(), recs.end(), [](const TrialRecord& a, const TrialRecord& b) {
        if (a.cell != b.cell) return a.cell < b.cell;
        if (a.trial != b.trial) return a.trial < b.trial;
        return a.method_idx < b.method_idx;
    });
}

void write_records(const std::string& path, std::vector<TrialRecord>& recs) {
    sort_records(recs);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError(2, "cannot open '" + path + "' for writing");
    out << record_header() << '\n';
    for (const auto& r : recs) out << record_line(r) << '\n';
    out.flush();
    if (!out) throw CliError(2, "failed while writing '" + path + "'");
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<std::size_t> range_values(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void require_cli(bool ok, const std::string& msg) {
    if (!ok) throw CliError(1, msg);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError(2, "cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw CliError(2, "failed while writing '" + path + "'");
}

std::uint64_t count_ones(const banmf_bool* m) {
    const std::uint8_t* d = banmf_bool_data(m);
    std::size_t n = banmf_bool_rows(m) * banmf_bool_cols(m);
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += d[i];
    return s;
}

void print_bool_csv(std::ostream& os, const banmf_bool* m) {
    const std::uint8_t* d = banmf_bool_data(m);
    std::size_t rows = banmf_bool_rows(m);
    std::size_t cols = banmf_bool_cols(m);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (j > 0) os << ',';
            os << static_cast<int>(d[i * cols + j]);
        }
        os << '\n';
    }
}

}  // namespace

std::string fmt_double(double v) {
    std::array<char, 64> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string record_header() {
    return "experiment,method,rows,cols,rank,density,noise,gap,seed,hamming,relative_error,"
           "objective_final,wall_time_ms,iterations,clean_relative_error,booleanize_ms";
}

std::string record_line(const TrialRecord& r) {
    std::ostringstream os;
    os << r.experiment << ',' << r.method << ',' << r.rows << ',' << r.cols << ',' << r.rank
       << ',' << fmt_double(r.density) << ',' << fmt_double(r.noise) << ',';
    if (r.has_gap) os << r.gap;
    os << ',' << r.seed << ',' << r.hamming << ',' << fmt_double(r.relative_error) << ','
       << fmt_double(r.objective_final) << ',' << r.wall_time_ms << ',' << r.iterations << ','
       << fmt_double(r.clean_relative_error) << ',' << r.booleanize_ms;
    return os.str();
}

int run_density_sweep(const DensityConfig& cfg) {
    require_cli(cfg.trials >= 1, "--trials must be at least 1");
    require_cli(!cfg.densities.empty(), "--densities must name at least one density");
    require_cli(!cfg.common.out.empty(), "--out is required");
    auto methods = resolve_methods(cfg.common.methods);

    const std::size_t items = cfg.densities.size() * cfg.trials;
    std::vector<std::vector<TrialRecord>> slots(items);
    parallel_for(items, cfg.common.workers, [&](std::size_t i) {
        const std::size_t cell = i / cfg.trials;
        const std::size_t trial = i % cfg.trials;
        const std::uint64_t inst_seed = derive_seed(cfg.common.seed, {cell, trial});
        banmf_synth_spec spec{cfg.rows, cfg.cols, cfg.rank, cfg.densities[cell], 0.0, inst_seed};
        InstancePtr inst = generate_planted(spec);
        const std::uint64_t solver_seed = derive_seed(inst_seed, {1});
        for (const auto& m : methods) {
            TrialRecord r = run_method(banmf_instance_x(inst.get()),
                                       banmf_instance_x_clean(inst.get()), m, cfg.rank,
                                       cfg.common.iters, cfg.common.lambda, cfg.common.npoint,
                                       solver_seed, cfg.common.repro);
            r.experiment = "density";
            r.density = cfg.densities[cell];
            r.noise = 0.0;
            r.seed = inst_seed;
            r.cell = cell;
            r.trial = trial;
            slots[i].push_back(std::move(r));
        }
    });

    std::vector<TrialRecord> recs;
    for (auto& s : slots)
        for (auto& r : s) recs.push_back(std::move(r));
    write_records(cfg.common.out, recs);

    std::cout << "method,density,trials,mean_relative_error,std_relative_error\n";
    for (const auto& m : methods) {
        for (std::size_t cell = 0; cell < cfg.densities.size(); ++cell) {
            std::vector<double> vals;
            for (const auto& r : recs)
                if (r.method == m.name && r.cell == cell) vals.push_back(r.relative_error);
            std::cout << m.name << ',' << fmt_double(cfg.densities[cell]) << ',' << vals.size()
                      << ',' << fmt_double(mean_of(vals)) << ',' << fmt_double(sample_std(vals))
                      << '\n';
        }
    }
    return 0;
}

int run_noise_sweep(const NoiseConfig& cfg) {
    require_cli(cfg.trials >= 1, "--trials must be at least 1");
    require_cli(!cfg.levels.empty(), "--noise-levels must name at least one level");
    require_cli(!cfg.common.out.empty(), "--out is required");
    auto methods = resolve_methods(cfg.common.methods);

    // One clean instance per trial, corrupted once per level, so the noise
    // effect is measured on an otherwise identical problem.
    std::vector<std::vector<TrialRecord>> slots(cfg.trials);
    parallel_for(cfg.trials, cfg.common.workers, [&](std::size_t trial) {
        const std::uint64_t inst_seed = derive_seed(cfg.common.seed, {trial});
        banmf_synth_spec spec{cfg.rows, cfg.cols, cfg.rank, cfg.density, 0.0, inst_seed};
        InstancePtr inst = generate_planted(spec);
        const banmf_bool* x_clean = banmf_instance_x_clean(inst.get());
        for (std::size_t cell = 0; cell < cfg.levels.size(); ++cell) {
            BoolPtr x_noisy =
                flip_noise(x_clean, cfg.levels[cell], derive_seed(inst_seed, {2, cell}));
            const std::uint64_t solver_seed = derive_seed(inst_seed, {1, cell});
            for (const auto& m : methods) {
                TrialRecord r =
                    run_method(x_noisy.get(), x_clean, m, cfg.rank, cfg.common.iters,
                               cfg.common.lambda, cfg.common.npoint, solver_seed,
                               cfg.common.repro);
                r.experiment = "noise";
                r.density = cfg.density;
                r.noise = cfg.levels[cell];
                r.seed = inst_seed;
                r.cell = cell;
                r.trial = trial;
                slots[trial].push_back(std::move(r));
            }
        }
    });

    std::vector<TrialRecord> recs;
    for (auto& s : slots)
        for (auto& r : s) recs.push_back(std::move(r));
    write_records(cfg.common.out, recs);

    std::cout << "method,noise,trials,mean_relative_error,std_relative_error,"
                 "mean_clean_relative_error\n";
    for (const auto& m : methods) {
        for (std::size_t cell = 0; cell < cfg.levels.size(); ++cell) {
            std::vector<double> vals;
            std::vector<double> clean_vals;
            for (const auto& r : recs) {
                if (r.method == m.name && r.cell == cell) {
                    vals.push_back(r.relative_error);
                    clean_vals.push_back(r.clean_relative_error);
                }
            }
            std::cout << m.name << ',' << fmt_double(cfg.levels[cell]) << ',' << vals.size()
                      << ',' << fmt_double(mean_of(vals)) << ',' << fmt_double(sample_std(vals))
                      << ',' << fmt_double(mean_of(clean_vals)) << '\n';
        }
    }
    return 0;
}

int run_rank_gap_study(const RankGapConfig& cfg) {
    require_cli(cfg.n_min >= 1 && cfg.n_min <= cfg.n_max, "row range is empty");
    require_cli(cfg.m_min >= 1 && cfg.m_min <= cfg.m_max, "column range is empty");
    require_cli(cfg.k_min >= 1 && cfg.k_min <= cfg.k_max, "rank range is empty");
    require_cli(!cfg.densities.empty(), "--densities must name at least one density");
    require_cli(cfg.per_cell >= 1, "--per-cell must be at least 1");
    require_cli(!cfg.common.out.empty(), "--out is required");
    auto methods = resolve_methods(cfg.common.methods);

    auto ns = range_values(cfg.n_min, cfg.n_max);
    auto ms = range_values(cfg.m_min, cfg.m_max);
    std::vector<std::uint32_t> ks;
    for (std::uint32_t k = cfg.k_min; k <= cfg.k_max; ++k) ks.push_back(k);

    banmf_rank_gap_params params;
    params.n_values = ns.data();
    params.n_count = ns.size();
    params.m_values = ms.data();
    params.m_count = ms.size();
    params.k_values = ks.data();
    params.k_count = ks.size();
    params.densities = cfg.densities.data();
    params.density_count = cfg.densities.size();
    params.per_cell = cfg.per_cell;
    params.seed = cfg.common.seed;
    params.retry_budget = 100;
    SuitePtr suite = rank_gap_suite(params);

    for (std::size_t i = 0; i < banmf_suite_warning_count(suite.get()); ++i)
        std::cerr << "warning: " << banmf_suite_warning(suite.get(), i) << '\n';

    const std::size_t items = banmf_suite_size(suite.get());
    std::vector<std::vector<TrialRecord>> slots(items);
    parallel_for(items, cfg.common.workers, [&](std::size_t i) {
        const banmf_instance* inst = banmf_suite_instance(suite.get(), i);
        banmf_synth_spec spec{};
        check(banmf_instance_spec(inst, &spec));
        std::int64_t gap = 0;
        const bool has_gap = banmf_instance_gap(inst, &gap) != 0;
        const std::uint64_t solver_seed = derive_seed(cfg.common.seed, {1, i});
        for (const auto& m : methods) {
            TrialRecord r = run_method(banmf_instance_x(inst), banmf_instance_x_clean(inst), m,
                                       spec.rank, cfg.common.iters, cfg.common.lambda,
                                       cfg.common.npoint, solver_seed, cfg.common.repro);
            r.experiment = "rankgap";
            r.density = spec.density;
            r.noise = 0.0;
            r.has_gap = has_gap;
            r.gap = gap;
            r.seed = spec.seed;
            r.cell = i;
            r.trial = 0;
            slots[i].push_back(std::move(r));
        }
    });

    std::vector<TrialRecord> recs;
    for (auto& s : slots)
        for (auto& r : s) recs.push_back(std::move(r));
    write_records(cfg.common.out, recs);

    std::map<std::pair<std::size_t, std::int64_t>, std::vector<double>> groups;
    for (const auto& r : recs)
        if (r.has_gap) groups[{r.method_idx, r.gap}].push_back(r.relative_error);
    std::cout << "method,gap,count,mean_relative_error\n";
    for (const auto& m : methods) {
        for (const auto& [key, vals] : groups) {
            if (key.first != m.idx) continue;
            std::cout << m.name << ',' << key.second << ',' << vals.size() << ','
                      << fmt_double(mean_of(vals)) << '\n';
        }
    }
    return 0;
}

int run_timing_study(const TimingConfig& cfg) {
    require_cli(cfg.trials >= 1, "--trials must be at least 1");
    require_cli(!cfg.sizes.empty(), "--sizes must name at least one size");
    require_cli(!cfg.common.out.empty(), "--out is required");
    auto methods = resolve_methods(cfg.common.methods);

    // Sequential on purpose: concurrent trials would contend for cores and
    // distort the measured wall times.
    std::vector<TrialRecord> recs;
    for (std::size_t cell = 0; cell < cfg.sizes.size(); ++cell) {
        const std::size_t size = cfg.sizes[cell];
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t inst_seed = derive_seed(cfg.common.seed, {cell, trial});
            banmf_synth_spec spec{size, size, cfg.rank, cfg.density, 0.0, inst_seed};
            InstancePtr inst = generate_planted(spec);
            const std::uint64_t solver_seed = derive_seed(inst_seed, {1});
            for (const auto& m : methods) {
                TrialRecord r = run_method(banmf_instance_x(inst.get()),
                                           banmf_instance_x_clean(inst.get()), m, cfg.rank,
                                           cfg.common.iters, cfg.common.lambda,
                                           cfg.common.npoint, solver_seed, cfg.common.repro);
                r.experiment = "time";
                r.density = cfg.density;
                r.noise = 0.0;
                r.seed = inst_seed;
                r.cell = cell;
                r.trial = trial;
                recs.push_back(std::move(r));
            }
        }
    }
    write_records(cfg.common.out, recs);

    std::cout << "method,size,runs,median_wall_time_ms\n";
    for (const auto& m : methods) {
        for (std::size_t cell = 0; cell < cfg.sizes.size(); ++cell) {
            std::vector<double> walls;
            for (const auto& r : recs)
                if (r.method == m.name && r.cell == cell)
                    walls.push_back(static_cast<double>(r.wall_time_ms));
            std::cout << m.name << ',' << cfg.sizes[cell] << ',' << walls.size() << ','
                      << fmt_double(median_of(walls)) << '\n';
        }
    }
    return 0;
}

int run_factorize(const FactorizeConfig& cfg) {
    require_cli(!cfg.input.empty(), "an input CSV path is required");
    require_cli(!cfg.out_prefix.empty(), "--out prefix is required");
    Method m = resolve_single_method(cfg.method, false);

    BoolPtr x = read_bool_csv(cfg.input, cfg.header);

    banmf_solver_config c = banmf_default_config();
    c.rank = cfg.rank;
    c.max_iters = cfg.iters;
    c.lambda = m.reg ? cfg.lambda : 0.0;
    c.epsilon = cfg.epsilon;
    c.seed = cfg.seed;
    c.early_stop = cfg.early_stop ? 1 : 0;
    c.early_stop_tol = cfg.early_stop_tol;
    ResultPtr res = solve(x.get(), c, m.project);

    auto t0 = clk::now();
    ChoicePtr ch = booleanize(x.get(), banmf_result_w(res.get()), banmf_result_h(res.get()),
                              cfg.npoint);
    double boole_wall = ms_since(t0);

    BoolPtr recon = bool_product(banmf_choice_w(ch.get()), banmf_choice_h(ch.get()));
    const double rel = relative_error(x.get(), recon.get());

    const std::string w_path = cfg.out_prefix + "W.csv";
    const std::string h_path = cfg.out_prefix + "H.csv";
    const std::string y_path = cfg.out_prefix + "Y.csv";
    const std::string metrics_path = cfg.out_prefix + "metrics.json";
    check(banmf_write_bool_csv(w_path.c_str(), banmf_choice_w(ch.get()), nullptr));
    check(banmf_write_bool_csv(h_path.c_str(), banmf_choice_h(ch.get()), nullptr));
    if (m.project)
        check(banmf_write_dense_csv(y_path.c_str(), banmf_result_y(res.get()), nullptr));

    json j;
    j["input"] = cfg.input;
    j["method"] = m.name;
    j["rows"] = banmf_bool_rows(x.get());
    j["cols"] = banmf_bool_cols(x.get());
    j["rank"] = cfg.rank;
    j["config"] = {{"iters", cfg.iters},         {"lambda", c.lambda},
                   {"epsilon", c.epsilon},       {"seed", cfg.seed},
                   {"npoint", cfg.npoint},       {"early_stop", cfg.early_stop},
                   {"early_stop_tol", cfg.early_stop_tol}};
    j["iterations"] = banmf_result_iterations(res.get());
    std::size_t tlen = banmf_result_trace_len(res.get());
    const double* trace = banmf_result_trace(res.get());
    j["objective_final"] = tlen > 0 ? trace[tlen - 1] : 0.0;
    j["objective_trace"] = std::vector<double>(trace, trace + tlen);
    j["delta_w"] = banmf_choice_delta_w(ch.get());
    j["delta_h"] = banmf_choice_delta_h(ch.get());
    j["hamming"] = banmf_choice_hamming(ch.get());
    j["relative_error"] = rel;
    j["wall_time_ms"] =
        cfg.repro ? 0 : static_cast<std::int64_t>(std::llround(banmf_result_loop_ms(res.get())));
    j["booleanize_ms"] = cfg.repro ? 0 : static_cast<std::int64_t>(std::llround(boole_wall));
    j["outputs"] = {{"w", w_path}, {"h", h_path}};
    if (m.project) j["outputs"]["y"] = y_path;
    write_json_file(metrics_path, j);

    std::cout << "factorize: hamming=" << banmf_choice_hamming(ch.get())
              << " relative_error=" << fmt_double(rel)
              << " iterations=" << banmf_result_iterations(res.get()) << " -> " << metrics_path
              << '\n';
    return 0;
}

int run_synth(const SynthCliConfig& cfg) {
    require_cli(!cfg.out_prefix.empty(), "--out prefix is required");
    banmf_synth_spec spec{cfg.rows, cfg.cols, cfg.rank, cfg.density, cfg.noise, cfg.seed};
    InstancePtr inst = generate_planted(spec);

    const std::string x_path = cfg.out_prefix + "x.csv";
    const std::string w_path = cfg.out_prefix + "w_true.csv";
    const std::string h_path = cfg.out_prefix + "h_true.csv";
    const std::string meta_path = cfg.out_prefix + "meta.json";
    check(banmf_write_bool_csv(x_path.c_str(), banmf_instance_x(inst.get()), nullptr));
    check(banmf_write_bool_csv(w_path.c_str(), banmf_instance_w(inst.get()), nullptr));
    check(banmf_write_bool_csv(h_path.c_str(), banmf_instance_h(inst.get()), nullptr));

    double p = 0.0;
    check(banmf_factor_density(cfg.density, cfg.rank, &p));
    const std::uint64_t ones = count_ones(banmf_instance_x(inst.get()));
    const double achieved =
        static_cast<double>(ones) / (static_cast<double>(cfg.rows) * static_cast<double>(cfg.cols));
    const std::uint64_t flips =
        hamming(banmf_instance_x(inst.get()), banmf_instance_x_clean(inst.get()));

    json j;
    j["rows"] = cfg.rows;
    j["cols"] = cfg.cols;
    j["rank"] = cfg.rank;
    j["density"] = cfg.density;
    j["noise"] = cfg.noise;
    j["seed"] = cfg.seed;
    j["factor_density"] = p;
    j["support_size"] = ones;
    j["achieved_density"] = achieved;
    j["noise_flips"] = flips;
    j["outputs"] = {{"x", x_path}, {"w_true", w_path}, {"h_true", h_path}};
    write_json_file(meta_path, j);

    std::cout << "synth: wrote " << x_path << " (" << cfg.rows << "x" << cfg.cols
              << ", achieved_density=" << fmt_double(achieved) << ")\n";
    return 0;
}

int run_oracle(const OracleConfig& cfg) {
    require_cli(!cfg.input.empty(), "an input CSV path is required");
    BoolPtr x = read_bool_csv(cfg.input, cfg.header);
    OraclePtr o = exhaustive_bmf(x.get(), cfg.rank, cfg.budget);
    std::cout << "min_hamming," << banmf_oracle_min_hamming(o.get()) << '\n';
    std::cout << "W\n";
    print_bool_csv(std::cout, banmf_oracle_w(o.get()));
    std::cout << "H\n";
    print_bool_csv(std::cout, banmf_oracle_h(o.get()));
    return 0;
}

}  // namespace cli
