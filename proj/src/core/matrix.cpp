#include "core/matrix.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace banmf {

namespace {

std::string shape_str(std::size_t r, std::size_t c) {
    std::ostringstream os;
    os << r << "x" << c;
    return os.str();
}

[[noreturn]] void throw_inner_mismatch(const char* op, std::size_t ar, std::size_t ac,
                                       std::size_t br, std::size_t bc) {
    std::ostringstream os;
    os << op << ": inner dimensions do not match, " << shape_str(ar, ac) << " * "
       << shape_str(br, bc);
    throw ShapeError(os.str());
}

[[noreturn]] void throw_shape_mismatch(const char* op, std::size_t ar, std::size_t ac,
                                       std::size_t br, std::size_t bc) {
    std::ostringstream os;
    os << op << ": shapes differ, " << shape_str(ar, ac) << " vs " << shape_str(br, bc);
    throw ShapeError(os.str());
}

}  // namespace

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) throw_inner_mismatch("mat_mul", a.rows, a.cols, b.rows, b.cols);
    DenseMatrix c(a.rows, b.cols, 0.0);
    const std::size_t n = a.rows, k = a.cols, m = b.cols;
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.data.data() + i * k;
        double* ci = c.data.data() + i * m;
        for (std::size_t l = 0; l < k; ++l) {
            const double ail = ai[l];
            if (ail == 0.0) continue;
            const double* bl = b.data.data() + l * m;
            for (std::size_t j = 0; j < m; ++j) ci[j] += ail * bl[j];
        }
    }
    return c;
}

DenseMatrix mat_mul_transb(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.cols) throw_inner_mismatch("mat_mul_transb", a.rows, a.cols, b.cols, b.rows);
    DenseMatrix c(a.rows, b.rows, 0.0);
    const std::size_t n = a.rows, m = a.cols, k = b.rows;
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.data.data() + i * m;
        double* ci = c.data.data() + i * k;
        for (std::size_t l = 0; l < k; ++l) {
            const double* bl = b.data.data() + l * m;
            double acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += ai[j] * bl[j];
            ci[l] = acc;
        }
    }
    return c;
}

DenseMatrix mat_mul_transa(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows) throw_inner_mismatch("mat_mul_transa", a.cols, a.rows, b.rows, b.cols);
    DenseMatrix c(a.cols, b.cols, 0.0);
    const std::size_t n = a.rows, k = a.cols, m = b.cols;
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.data.data() + i * k;
        const double* bi = b.data.data() + i * m;
        for (std::size_t l = 0; l < k; ++l) {
            const double ail = ai[l];
            if (ail == 0.0) continue;
            double* cl = c.data.data() + l * m;
            for (std::size_t j = 0; j < m; ++j) cl[j] += ail * bi[j];
        }
    }
    return c;
}

BoolMatrix bool_mat_mul(const BoolMatrix& w, const BoolMatrix& h) {
    if (w.cols != h.rows) throw_inner_mismatch("bool_mat_mul", w.rows, w.cols, h.rows, h.cols);
    BoolMatrix x(w.rows, h.cols, 0);
    const std::size_t n = w.rows, k = w.cols, m = h.cols;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* wi = w.data.data() + i * k;
        std::uint8_t* xi = x.data.data() + i * m;
        for (std::size_t l = 0; l < k; ++l) {
            if (!wi[l]) continue;
            const std::uint8_t* hl = h.data.data() + l * m;
            for (std::size_t j = 0; j < m; ++j) xi[j] |= hl[j];
        }
    }
    return x;
}

double frobenius_error(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) throw_shape_mismatch("frobenius_error", a.rows, a.cols, b.rows, b.cols);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

std::uint64_t hamming_error(const BoolMatrix& x, const BoolMatrix& xhat) {
    if (!x.same_shape(xhat)) throw_shape_mismatch("hamming_error", x.rows, x.cols, xhat.rows, xhat.cols);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < x.data.size(); ++i) count += x.data[i] != xhat.data[i];
    return count;
}

double boolean_relative_error(const BoolMatrix& x, const BoolMatrix& xhat) {
    if (x.size() == 0) throw ArgumentError("boolean_relative_error: empty matrix");
    return static_cast<double>(hamming_error(x, xhat)) / static_cast<double>(x.size());
}

DenseMatrix to_dense(const BoolMatrix& x) {
    DenseMatrix d(x.rows, x.cols);
    for (std::size_t i = 0; i < x.data.size(); ++i) d.data[i] = x.data[i];
    return d;
}

std::uint64_t support_size(const BoolMatrix& x) {
    std::uint64_t count = 0;
    for (std::uint8_t v : x.data) count += v;
    return count;
}

}  // namespace banmf
