#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <random>
#include <string>

#include "core/matrix.hpp"

namespace testutil {

inline banmf::BoolMatrix bmat(std::initializer_list<std::initializer_list<int>> rows) {
    banmf::BoolMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m(i, j++) = static_cast<std::uint8_t>(v);
        ++i;
    }
    return m;
}

inline banmf::DenseMatrix dmat(std::initializer_list<std::initializer_list<double>> rows) {
    banmf::DenseMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline banmf::BoolMatrix random_bool(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                     double p = 0.5) {
    banmf::BoolMatrix m(rows, cols);
    std::mt19937_64 eng(seed);
    std::bernoulli_distribution coin(p);
    for (auto& v : m.data) v = coin(eng) ? 1 : 0;
    return m;
}

inline banmf::DenseMatrix random_dense(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                       double lo = 0.0, double hi = 1.0) {
    banmf::DenseMatrix m(rows, cols);
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    for (auto& v : m.data) v = u(eng);
    return m;
}

// Scratch file deleted when the guard leaves scope.
class TempFile {
public:
    explicit TempFile(const std::string& stem) {
        static std::uint64_t counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 (stem + "." + std::to_string(++counter) + "." +
                  std::to_string(std::random_device{}()) + ".tmp"))
                    .string();
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace testutil
