#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace banmf {

/// Dense real matrix, row-major. Holds the nonnegative quantities of the
/// pipeline (factors W, H and the auxiliary matrix Y).
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // rows*cols entries, row-major

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::size_t size() const { return data.size(); }
    bool same_shape(const DenseMatrix& o) const { return rows == o.rows && cols == o.cols; }
};

/// Binary matrix, row-major, one byte per entry (desk-scale sizes make
/// bit-packing unnecessary). Holds X and the Booleanized factors.
struct BoolMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data;  // entries in {0,1}

    BoolMatrix() = default;
    BoolMatrix(std::size_t r, std::size_t c, std::uint8_t fill = 0)
        : rows(r), cols(c), data(r * c, fill) {}

    std::uint8_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::size_t size() const { return data.size(); }
    bool same_shape(const BoolMatrix& o) const { return rows == o.rows && cols == o.cols; }

    bool operator==(const BoolMatrix& o) const = default;
};

/// a * b. Throws ShapeError (naming both shapes) on an inner-dimension mismatch.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

/// a * b^T.
DenseMatrix mat_mul_transb(const DenseMatrix& a, const DenseMatrix& b);

/// a^T * b.
DenseMatrix mat_mul_transa(const DenseMatrix& a, const DenseMatrix& b);

/// Boolean product: entry (i,j) is 1 iff some l has w(i,l) = h(l,j) = 1.
BoolMatrix bool_mat_mul(const BoolMatrix& w, const BoolMatrix& h);

/// ||a - b||_F. Throws ShapeError unless shapes match.
double frobenius_error(const DenseMatrix& a, const DenseMatrix& b);

/// Number of positions where x and xhat disagree.
std::uint64_t hamming_error(const BoolMatrix& x, const BoolMatrix& xhat);

/// hamming_error / (rows * cols), in [0, 1].
double boolean_relative_error(const BoolMatrix& x, const BoolMatrix& xhat);

/// 0/1 entries reinterpreted as reals.
DenseMatrix to_dense(const BoolMatrix& x);

/// Count of 1-entries.
std::uint64_t support_size(const BoolMatrix& x);

}  // namespace banmf
