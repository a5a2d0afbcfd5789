// RAII and error-translation layer over the C API for CLI use.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <banmf.h>

namespace cli {

// Carries the process exit code alongside the message.
struct CliError : std::runtime_error {
    CliError(int code, const std::string& msg) : std::runtime_error(msg), exit_code(code) {}
    int exit_code;
};

inline int exit_code_for(banmf_status s) {
    switch (s) {
        case BANMF_OK: return 0;
        case BANMF_ERR_ARG: return 1;
        case BANMF_ERR_BUDGET: return 3;
        default: return 2;  // malformed data, shape mismatch, I/O
    }
}

// Throws CliError when a C API call reports failure.
inline void check(banmf_status s) {
    if (s != BANMF_OK) throw CliError(exit_code_for(s), banmf_last_error());
}

struct BoolFree { void operator()(banmf_bool* p) const { banmf_bool_free(p); } };
struct DenseFree { void operator()(banmf_dense* p) const { banmf_dense_free(p); } };
struct ResultFree { void operator()(banmf_result* p) const { banmf_result_free(p); } };
struct ChoiceFree { void operator()(banmf_choice* p) const { banmf_choice_free(p); } };
struct InstanceFree { void operator()(banmf_instance* p) const { banmf_instance_free(p); } };
struct SuiteFree { void operator()(banmf_suite* p) const { banmf_suite_free(p); } };
struct OracleFree { void operator()(banmf_oracle* p) const { banmf_oracle_free(p); } };

using BoolPtr = std::unique_ptr<banmf_bool, BoolFree>;
using DensePtr = std::unique_ptr<banmf_dense, DenseFree>;
using ResultPtr = std::unique_ptr<banmf_result, ResultFree>;
using ChoicePtr = std::unique_ptr<banmf_choice, ChoiceFree>;
using InstancePtr = std::unique_ptr<banmf_instance, InstanceFree>;
using SuitePtr = std::unique_ptr<banmf_suite, SuiteFree>;
using OraclePtr = std::unique_ptr<banmf_oracle, OracleFree>;

inline BoolPtr read_bool_csv(const std::string& path, bool header) {
    banmf_bool* raw = nullptr;
    check(banmf_read_bool_csv(path.c_str(), header ? 1 : 0, &raw));
    return BoolPtr(raw);
}

inline BoolPtr bool_product(const banmf_bool* w, const banmf_bool* h) {
    banmf_bool* raw = nullptr;
    check(banmf_bool_product(w, h, &raw));
    return BoolPtr(raw);
}

inline ResultPtr solve(const banmf_bool* x, banmf_solver_config cfg, bool project) {
    banmf_result* raw = nullptr;
    check(project ? banmf_solve(x, cfg, &raw) : banmf_nmf_solve(x, cfg, &raw));
    return ResultPtr(raw);
}

inline ChoicePtr booleanize(const banmf_bool* x, const banmf_dense* w, const banmf_dense* h,
                            std::size_t npoint) {
    banmf_choice* raw = nullptr;
    check(banmf_booleanize(x, w, h, npoint, &raw));
    return ChoicePtr(raw);
}

inline InstancePtr generate_planted(banmf_synth_spec spec) {
    banmf_instance* raw = nullptr;
    check(banmf_generate_planted(spec, &raw));
    return InstancePtr(raw);
}

inline BoolPtr flip_noise(const banmf_bool* x, double p, std::uint64_t seed) {
    banmf_bool* raw = nullptr;
    check(banmf_flip_noise(x, p, seed, &raw));
    return BoolPtr(raw);
}

inline SuitePtr rank_gap_suite(banmf_rank_gap_params params) {
    banmf_suite* raw = nullptr;
    check(banmf_rank_gap_suite(params, &raw));
    return SuitePtr(raw);
}

inline OraclePtr exhaustive_bmf(const banmf_bool* x, std::uint32_t rank, std::uint64_t budget) {
    banmf_oracle* raw = nullptr;
    check(banmf_exhaustive_bmf(x, rank, budget, &raw));
    return OraclePtr(raw);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::vector<std::uint64_t> p(path);
    return banmf_derive_seed(base, p.data(), p.size());
}

inline double relative_error(const banmf_bool* a, const banmf_bool* b) {
    double out = 0.0;
    check(banmf_relative_error(a, b, &out));
    return out;
}

inline std::uint64_t hamming(const banmf_bool* a, const banmf_bool* b) {
    std::uint64_t out = 0;
    check(banmf_hamming(a, b, &out));
    return out;
}

}  // namespace cli
