// Benchmark experiments and single-run commands behind the CLI.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

// One method run on one instance; a row of the records CSV.
struct TrialRecord {
    std::string experiment;
    std::string method;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint32_t rank = 0;
    double density = 0.0;
    double noise = 0.0;
    bool has_gap = false;
    std::int64_t gap = 0;
    std::uint64_t seed = 0;
    std::uint64_t hamming = 0;
    double relative_error = 0.0;
    double objective_final = 0.0;
    std::int64_t wall_time_ms = 0;
    std::uint32_t iterations = 0;
    double clean_relative_error = 0.0;
    std::int64_t booleanize_ms = 0;

    // Ordering key, not written to the CSV.
    std::size_t cell = 0;
    std::size_t trial = 0;
    std::size_t method_idx = 0;
};

std::string record_header();
std::string record_line(const TrialRecord& r);

// Shortest decimal representation that round-trips.
std::string fmt_double(double v);

// Flags shared by every bench experiment.
struct BenchCommon {
    std::vector<std::string> methods;  // empty selects banmf, banmf-reg, nmf, nmf-reg
    std::uint32_t iters = 1000;
    double lambda = 0.1;      // regularization weight of the -reg variants
    std::uint32_t npoint = 20;
    std::uint64_t seed = 0;
    std::size_t workers = 0;  // 0 = one per hardware thread
    bool repro = false;       // zero all timing fields for byte-stable output
    std::string out;          // records CSV path
    std::string config_path;  // CLI plumbing; applied before the run starts
};

struct DensityConfig {
    BenchCommon common;
    std::size_t rows = 30;
    std::size_t cols = 30;
    std::uint32_t rank = 4;
    std::vector<double> densities{0.2, 0.5, 0.8};
    std::size_t trials = 20;
};

struct NoiseConfig {
    BenchCommon common;
    std::size_t rows = 30;
    std::size_t cols = 30;
    std::uint32_t rank = 5;
    double density = 0.5;
    std::vector<double> levels{0.0, 0.01, 0.05};
    std::size_t trials = 20;
};

struct RankGapConfig {
    BenchCommon common;
    std::size_t n_min = 10, n_max = 20;
    std::size_t m_min = 10, m_max = 20;
    std::uint32_t k_min = 2, k_max = 4;
    std::vector<double> densities{0.25, 0.5, 0.75};
    std::size_t per_cell = 3;
};

struct TimingConfig {
    BenchCommon common;
    std::vector<std::size_t> sizes{50, 100, 200, 350, 500};
    std::uint32_t rank = 10;
    double density = 0.5;
    std::size_t trials = 3;
};

// Each runner writes the records CSV to common.out and a summary table to
// stdout, then returns the process exit code.
int run_density_sweep(const DensityConfig& cfg);
int run_noise_sweep(const NoiseConfig& cfg);
int run_rank_gap_study(const RankGapConfig& cfg);
int run_timing_study(const TimingConfig& cfg);

struct FactorizeConfig {
    std::string input;
    bool header = false;
    std::string method = "banmf";
    std::uint32_t rank = 0;
    std::uint32_t iters = 1000;
    double lambda = 0.1;
    double epsilon = 1e-12;
    std::uint32_t npoint = 20;
    std::uint64_t seed = 0;
    bool early_stop = false;
    double early_stop_tol = 0.0;
    std::string out_prefix;
    bool repro = false;
    std::string config_path;
};

// Writes <prefix>W.csv, <prefix>H.csv, <prefix>Y.csv (auxiliary methods only)
// and <prefix>metrics.json.
int run_factorize(const FactorizeConfig& cfg);

struct SynthCliConfig {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint32_t rank = 0;
    double density = 0.5;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string out_prefix;
    std::string config_path;
};

// Writes <prefix>x.csv, <prefix>w_true.csv, <prefix>h_true.csv, <prefix>meta.json.
int run_synth(const SynthCliConfig& cfg);

struct OracleConfig {
    std::string input;
    bool header = false;
    std::uint32_t rank = 0;
    std::uint64_t budget = 0;  // 0 = library default
    std::string config_path;
};

// Prints min_hamming and the optimal factors as CSV on stdout.
int run_oracle(const OracleConfig& cfg);

}  // namespace cli
