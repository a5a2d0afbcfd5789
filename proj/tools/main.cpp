// Command-line front end: factorize, synth, oracle, and the bench suite.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <banmf.h>

#include "capi_wrap.hpp"
#include "harness.hpp"

namespace {

int guarded_run(const std::function<int()>& f) {
    try {
        return f();
    } catch (const cli::CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Fills options from a flat key=value file. Options already given on the
// command line keep their values.
void apply_flat_config(CLI::App* cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli::CliError(1, "cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const auto eq = t.find('=');
        const std::string where = path + " line " + std::to_string(lineno);
        if (eq == std::string::npos)
            throw cli::CliError(1, "config file " + where + ": expected key=value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        CLI::Option* opt = cmd->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw cli::CliError(1, "config file " + where + ": unknown key '" + key + "'");
        if (opt->count() > 0) continue;
        try {
            opt->add_result(value);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw cli::CliError(1, "config file " + where + ": " + e.what());
        }
    }
}

void add_config_flag(CLI::App* cmd, std::string& slot) {
    cmd->add_option("--config", slot, "Flat key=value config file; command-line flags win");
}

// Flags every bench experiment shares. Defaults come pre-seeded in `common`
// so experiments can differ (e.g. rankgap runs fewer iterations).
void add_common_flags(CLI::App* sub, cli::BenchCommon& common) {
    sub->add_option("--method", common.methods,
                    "Methods to run (banmf, banmf-reg, nmf, nmf-reg, oracle); default all four "
                    "solver methods")
        ->delimiter(',');
    sub->add_option("--iters", common.iters, "Iteration budget per solve")
        ->capture_default_str();
    sub->add_option("--lambda", common.lambda, "Regularization weight for the -reg methods")
        ->capture_default_str();
    sub->add_option("--npoint", common.npoint, "Threshold grid resolution per factor")
        ->capture_default_str();
    sub->add_option("--seed", common.seed, "Base seed; trial seeds derive from it")
        ->capture_default_str();
    sub->add_option("--workers", common.workers,
                    "Worker threads for independent trials (0 = one per hardware thread)")
        ->capture_default_str();
    sub->add_flag("--repro", common.repro,
                  "Zero all timing fields so repeated runs are byte-identical");
    sub->add_option("--out", common.out, "Records CSV path")->capture_default_str();
    add_config_flag(sub, common.config_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean matrix factorization toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", banmf_version());

    // factorize -----------------------------------------------------------
    cli::FactorizeConfig fact;
    CLI::App* fact_cmd = app.add_subcommand("factorize", "Factorize a Boolean CSV matrix");
    fact_cmd->add_option("input", fact.input, "Input CSV of 0/1 entries")->required();
    fact_cmd->add_option("--rank,-k", fact.rank, "Factorization rank (required)");
    fact_cmd->add_option("--method,-m", fact.method, "banmf, banmf-reg, nmf, or nmf-reg")
        ->capture_default_str();
    fact_cmd->add_option("--iters", fact.iters, "Iteration budget")->capture_default_str();
    fact_cmd->add_option("--lambda", fact.lambda, "Regularization weight for -reg methods")
        ->capture_default_str();
    fact_cmd->add_option("--epsilon", fact.epsilon, "Multiplicative-update denominator guard")
        ->capture_default_str();
    fact_cmd->add_option("--npoint", fact.npoint, "Threshold grid resolution per factor")
        ->capture_default_str();
    fact_cmd->add_option("--seed", fact.seed, "Factor initialization seed")
        ->capture_default_str();
    fact_cmd->add_flag("--early-stop", fact.early_stop,
                       "Stop once the objective improvement drops to --early-stop-tol");
    fact_cmd->add_option("--early-stop-tol", fact.early_stop_tol, "Improvement threshold")
        ->capture_default_str();
    fact_cmd->add_flag("--header", fact.header, "Skip the first CSV line");
    fact_cmd->add_option("--out", fact.out_prefix,
                         "Output prefix (default: input path without extension, plus '.')");
    fact_cmd->add_flag("--repro", fact.repro, "Zero timing fields in metrics.json");
    add_config_flag(fact_cmd, fact.config_path);

    // synth ---------------------------------------------------------------
    cli::SynthCliConfig synth;
    synth.out_prefix = "synth.";
    CLI::App* synth_cmd = app.add_subcommand("synth", "Generate a planted Boolean instance");
    synth_cmd->add_option("--rows", synth.rows, "Rows (required)");
    synth_cmd->add_option("--cols", synth.cols, "Columns (required)");
    synth_cmd->add_option("--rank,-k", synth.rank, "Planted rank (required)");
    synth_cmd->add_option("--density", synth.density, "Target product density in (0,1)")
        ->capture_default_str();
    synth_cmd->add_option("--noise", synth.noise, "Per-entry flip probability in [0,1)")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth.seed, "Generation seed")->capture_default_str();
    synth_cmd->add_option("--out", synth.out_prefix, "Output prefix")->capture_default_str();
    add_config_flag(synth_cmd, synth.config_path);

    // oracle ----------------------------------------------------------------
    cli::OracleConfig oracle;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "Exhaustive minimum-Hamming factorization (tiny inputs)");
    oracle_cmd->add_option("input", oracle.input, "Input CSV of 0/1 entries")->required();
    oracle_cmd->add_option("--rank,-k", oracle.rank, "Factorization rank (required)");
    oracle_cmd->add_option("--budget", oracle.budget,
                           "Max candidate factor pairs (0 = library default)")
        ->capture_default_str();
    oracle_cmd->add_flag("--header", oracle.header, "Skip the first CSV line");
    add_config_flag(oracle_cmd, oracle.config_path);

    // bench -----------------------------------------------------------------
    CLI::App* bench = app.add_subcommand("bench", "Benchmark experiments");
    bench->require_subcommand(1);

    cli::DensityConfig density;
    density.common.out = "density.csv";
    CLI::App* density_cmd =
        bench->add_subcommand("density", "Relative error across target densities");
    density_cmd->add_option("--rows", density.rows, "Rows")->capture_default_str();
    density_cmd->add_option("--cols", density.cols, "Columns")->capture_default_str();
    density_cmd->add_option("--rank,-k", density.rank, "Planted and solver rank")
        ->capture_default_str();
    density_cmd->add_option("--densities", density.densities, "Target densities")
        ->delimiter(',')
        ->capture_default_str();
    density_cmd->add_option("--trials", density.trials, "Trials per density")
        ->capture_default_str();
    add_common_flags(density_cmd, density.common);

    cli::NoiseConfig noise;
    noise.common.out = "noise.csv";
    CLI::App* noise_cmd =
        bench->add_subcommand("noise", "Recovery degradation under bit-flip noise");
    noise_cmd->add_option("--rows", noise.rows, "Rows")->capture_default_str();
    noise_cmd->add_option("--cols", noise.cols, "Columns")->capture_default_str();
    noise_cmd->add_option("--rank,-k", noise.rank, "Planted and solver rank")
        ->capture_default_str();
    noise_cmd->add_option("--density", noise.density, "Target density of the clean instance")
        ->capture_default_str();
    noise_cmd->add_option("--noise-levels", noise.levels, "Flip probabilities")
        ->delimiter(',')
        ->capture_default_str();
    noise_cmd->add_option("--trials", noise.trials, "Clean instances per level")
        ->capture_default_str();
    add_common_flags(noise_cmd, noise.common);

    cli::RankGapConfig rankgap;
    rankgap.common.out = "rankgap.csv";
    rankgap.common.iters = 500;
    CLI::App* rankgap_cmd =
        bench->add_subcommand("rankgap", "Error grouped by real-rank lower-bound gap");
    rankgap_cmd->add_option("--n-min", rankgap.n_min, "Smallest row count")
        ->capture_default_str();
    rankgap_cmd->add_option("--n-max", rankgap.n_max, "Largest row count")
        ->capture_default_str();
    rankgap_cmd->add_option("--m-min", rankgap.m_min, "Smallest column count")
        ->capture_default_str();
    rankgap_cmd->add_option("--m-max", rankgap.m_max, "Largest column count")
        ->capture_default_str();
    rankgap_cmd->add_option("--k-min", rankgap.k_min, "Smallest planted rank")
        ->capture_default_str();
    rankgap_cmd->add_option("--k-max", rankgap.k_max, "Largest planted rank")
        ->capture_default_str();
    rankgap_cmd->add_option("--densities", rankgap.densities, "Target densities")
        ->delimiter(',')
        ->capture_default_str();
    rankgap_cmd->add_option("--per-cell", rankgap.per_cell, "Instances per parameter cell")
        ->capture_default_str();
    add_common_flags(rankgap_cmd, rankgap.common);

    cli::TimingConfig timing;
    timing.common.out = "time.csv";
    CLI::App* timing_cmd = bench->add_subcommand("time", "Wall time at a fixed iteration count");
    timing_cmd->add_option("--sizes", timing.sizes, "Square instance sizes")
        ->delimiter(',')
        ->capture_default_str();
    timing_cmd->add_option("--rank,-k", timing.rank, "Planted and solver rank")
        ->capture_default_str();
    timing_cmd->add_option("--density", timing.density, "Target density")
        ->capture_default_str();
    timing_cmd->add_option("--trials", timing.trials, "Runs per size")->capture_default_str();
    add_common_flags(timing_cmd, timing.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // anything but help/version is a usage error
    }

    if (fact_cmd->parsed())
        return guarded_run([&] {
            if (!fact.config_path.empty()) apply_flat_config(fact_cmd, fact.config_path);
            if (fact.out_prefix.empty()) {
                std::filesystem::path in(fact.input);
                fact.out_prefix = (in.parent_path() / (in.stem().string() + ".")).string();
            }
            return cli::run_factorize(fact);
        });
    if (synth_cmd->parsed())
        return guarded_run([&] {
            if (!synth.config_path.empty()) apply_flat_config(synth_cmd, synth.config_path);
            return cli::run_synth(synth);
        });
    if (oracle_cmd->parsed())
        return guarded_run([&] {
            if (!oracle.config_path.empty()) apply_flat_config(oracle_cmd, oracle.config_path);
            return cli::run_oracle(oracle);
        });
    if (density_cmd->parsed())
        return guarded_run([&] {
            if (!density.common.config_path.empty())
                apply_flat_config(density_cmd, density.common.config_path);
            return cli::run_density_sweep(density);
        });
    if (noise_cmd->parsed())
        return guarded_run([&] {
            if (!noise.common.config_path.empty())
                apply_flat_config(noise_cmd, noise.common.config_path);
            return cli::run_noise_sweep(noise);
        });
    if (rankgap_cmd->parsed())
        return guarded_run([&] {
            if (!rankgap.common.config_path.empty())
                apply_flat_config(rankgap_cmd, rankgap.common.config_path);
            return cli::run_rank_gap_study(rankgap);
        });
    if (timing_cmd->parsed())
        return guarded_run([&] {
            if (!timing.common.config_path.empty())
                apply_flat_config(timing_cmd, timing.common.config_path);
            return cli::run_timing_study(timing);
        });

    std::cerr << "error: no subcommand selected\n";
    return 1;
}
