#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monores/errors.hpp"

namespace monores {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::int64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Sparse integer matrix in compressed-sparse-column layout; used for the
/// chain complex differentials, whose entries are signed units.
struct SparseIntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> col_ptr;  // size cols + 1
    std::vector<std::size_t> row_idx;
    std::vector<int> val;

    SparseIntMat() = default;
    explicit SparseIntMat(std::size_t r, std::size_t c) : rows(r), cols(c), col_ptr(c + 1, 0) {}
};

namespace detail {

struct Int64Overflow {};

/// Eliminates with +-1 pivots using int64 row operations; returns the
/// number of pivots used. Throws Int64Overflow if an update would leave
/// the representable range, and stops early when no unit pivot remains.
inline std::size_t eliminate_unit_pivots(IntMat& m, std::vector<char>& row_active,
                                         std::vector<char>& col_active) {
    std::size_t rank = 0;
    for (;;) {
        std::size_t pr = m.rows, pc = m.cols;
        for (std::size_t r = 0; r < m.rows && pr == m.rows; ++r) {
            if (!row_active[r]) continue;
            for (std::size_t c = 0; c < m.cols; ++c) {
                if (!col_active[c]) continue;
                const std::int64_t v = m.at(r, c);
                if (v == 1 || v == -1) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == m.rows) return rank;

        const std::int64_t p = m.at(pr, pc);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (!row_active[r] || r == pr) continue;
            const std::int64_t f = m.at(r, pc);
            if (f == 0) continue;
            const __int128 mult = static_cast<__int128>(f) * p;  // f / p since p*p == 1
            for (std::size_t c = 0; c < m.cols; ++c) {
                if (!col_active[c]) continue;
                const __int128 nv =
                    static_cast<__int128>(m.at(r, c)) - mult * m.at(pr, c);
                if (nv > INT64_MAX || nv < INT64_MIN) throw Int64Overflow{};
                m.at(r, c) = static_cast<std::int64_t>(nv);
            }
        }
        row_active[pr] = 0;
        col_active[pc] = 0;
        ++rank;
    }
}

/// Fraction-free (Bareiss) elimination over arbitrary-precision integers.
/// Pivots are chosen with the smallest nonzero magnitude to limit entry
/// growth; every division is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    BigInt prev = 1;
    while (rank < rows && rank < cols) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = rank; r < rows; ++r)
            for (std::size_t c = rank; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                if (pr == rows || abs(m[r][c]) < abs(m[pr][pc])) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break;
        std::swap(m[rank], m[pr]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][rank], m[r][pc]);

        const BigInt& pivot = m[rank][rank];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = rank + 1; c < cols; ++c)
                m[r][c] = (pivot * m[r][c] - m[r][rank] * m[rank][c]) / prev;
            m[r][rank] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<BigInt>> to_big(const IntMat& m, const std::vector<char>& row_active,
                                               const std::vector<char>& col_active) {
    std::vector<std::vector<BigInt>> out;
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (!row_active[r]) continue;
        std::vector<BigInt> row;
        for (std::size_t c = 0; c < m.cols; ++c)
            if (col_active[c]) row.emplace_back(m.at(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace detail

/// Exact rank over the rationals. Unit pivots are eliminated first with
/// machine integers; whatever remains goes through fraction-free
/// elimination with arbitrary-precision integers. No floating point.
inline std::size_t exact_rank(const IntMat& matrix) {
    if (matrix.rows == 0 || matrix.cols == 0) return 0;
    IntMat m = matrix;
    std::vector<char> row_active(m.rows, 1), col_active(m.cols, 1);
    try {
        const std::size_t units = detail::eliminate_unit_pivots(m, row_active, col_active);
        return units + detail::bareiss_rank(detail::to_big(m, row_active, col_active));
    } catch (const detail::Int64Overflow&) {
        std::vector<char> all_rows(matrix.rows, 1), all_cols(matrix.cols, 1);
        return detail::bareiss_rank(detail::to_big(matrix, all_rows, all_cols));
    }
}

inline std::size_t exact_rank(const SparseIntMat& s) {
    IntMat m(s.rows, s.cols);
    for (std::size_t c = 0; c < s.cols; ++c)
        for (std::size_t k = s.col_ptr[c]; k < s.col_ptr[c + 1]; ++k)
            m.at(s.row_idx[k], c) = s.val[k];
    return exact_rank(m);
}

}  // namespace monores
