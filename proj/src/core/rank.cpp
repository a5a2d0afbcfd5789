#include "core/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace banmf {

std::uint32_t exact_rank(const BoolMatrix& x) {
    if (x.size() == 0) throw ArgumentError("exact_rank: empty matrix");
    using bigint = boost::multiprecision::cpp_int;
    const std::size_t n = x.rows, m = x.cols;
    std::vector<std::vector<bigint>> a(n, std::vector<bigint>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i][j] = x(i, j);

    // Bareiss elimination: every division below is exact.
    std::size_t r = 0;
    bigint prev = 1;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t pivot = r;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != r) std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < m; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace banmf
