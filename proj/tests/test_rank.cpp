#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "core/errors.hpp"
#include "core/matrix.hpp"
#include "core/rank.hpp"
#include "support.hpp"

using namespace banmf;
using testutil::bmat;
using testutil::random_bool;

namespace {

// Reference rank via Gauss-Jordan elimination over exact rationals. Slower
// than the production routine but independent of it.
std::uint32_t rref_rank(const BoolMatrix& x) {
    using rational = boost::multiprecision::cpp_rational;
    const std::size_t n = x.rows, m = x.cols;
    std::vector<std::vector<rational>> a(n, std::vector<rational>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i][j] = x(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t pivot = r;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(a[pivot], a[r]);
        const rational inv = a[r][c];
        for (std::size_t j = 0; j < m; ++j) a[r][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const rational f = a[i][c];
            for (std::size_t j = 0; j < m; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

TEST_CASE("rank of the identity equals its size") {
    CHECK(exact_rank(bmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
}

TEST_CASE("rank of the all-ones matrix is one") {
    CHECK(exact_rank(BoolMatrix(4, 4, 1)) == 1);
}

TEST_CASE("rank of the 3x3 circulant difference matrix is three") {
    CHECK(exact_rank(bmat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 3);  // determinant 2
}

TEST_CASE("rank of the zero matrix is zero") {
    CHECK(exact_rank(BoolMatrix(3, 5, 0)) == 0);
}

TEST_CASE("rank handles rectangular and rank-deficient inputs") {
    CHECK(exact_rank(bmat({{1, 1}, {1, 1}, {0, 1}})) == 2);
    CHECK(exact_rank(bmat({{1, 0, 1, 0}})) == 1);
    CHECK(exact_rank(bmat({{1, 1, 0}, {1, 1, 0}, {1, 1, 0}, {0, 0, 1}})) == 2);
}

TEST_CASE("rank never exceeds either dimension and survives transposition") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const BoolMatrix x = random_bool(6, 9, 1500 + seed);
        const std::uint32_t r = exact_rank(x);
        CHECK(r <= 6);
        BoolMatrix xt(9, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 9; ++j) xt(j, i) = x(i, j);
        CHECK(exact_rank(xt) == r);
    }
}

TEST_CASE("rank agrees with rational row reduction on random matrices") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const BoolMatrix x = random_bool(8, 8, 1600 + seed);
        CHECK(exact_rank(x) == rref_rank(x));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const BoolMatrix x = random_bool(5, 11, 1700 + seed, 0.3);
        CHECK(exact_rank(x) == rref_rank(x));
    }
}

TEST_CASE("rank rejects an empty matrix") {
    CHECK_THROWS_AS(exact_rank(BoolMatrix()), ArgumentError);
}
