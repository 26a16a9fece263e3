#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "viro/rational.hpp"

namespace viro {

using RatVec = std::vector<Rat>;

struct RatMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<RatVec> a;  // rows x cols

    RatMatrix() = default;
    RatMatrix(long r, long c) : rows(r), cols(c), a(r, RatVec(c, Rat(0))) {}

    Rat& operator()(long i, long j) { return a[i][j]; }
    const Rat& operator()(long i, long j) const { return a[i][j]; }

    bool operator==(const RatMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline RatMatrix from_rows(std::vector<RatVec> rows_in) {
    RatMatrix m;
    m.rows = static_cast<long>(rows_in.size());
    m.cols = m.rows ? static_cast<long>(rows_in[0].size()) : 0;
    for (const auto& r : rows_in)
        if (static_cast<long>(r.size()) != m.cols)
            throw std::invalid_argument("ragged matrix rows");
    m.a = std::move(rows_in);
    return m;
}

inline RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols, m.rows);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

inline RatVec mat_vec(const RatMatrix& m, const RatVec& x) {
    if (static_cast<long>(x.size()) != m.cols) throw std::invalid_argument("mat_vec shape");
    RatVec y(m.rows, Rat(0));
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j)
            if (m(i, j) != 0 && x[j] != 0) y[i] += m(i, j) * x[j];
    return y;
}

// Columns picked by 0-based indices, in the given order.
inline RatMatrix select_columns(const RatMatrix& m, const std::vector<int>& idx) {
    RatMatrix s(m.rows, static_cast<long>(idx.size()));
    for (long j = 0; j < s.cols; ++j) {
        if (idx[j] < 0 || idx[j] >= m.cols) throw std::invalid_argument("column index out of range");
        for (long i = 0; i < m.rows; ++i) s(i, j) = m(i, idx[j]);
    }
    return s;
}

// Fraction-free Bareiss elimination on a denominator-cleared copy.
// Pivoting: first row with a nonzero entry; row swaps flip the sign.
inline Rat determinant(const RatMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    const long n = m.rows;
    if (n == 0) return Rat(1);

    std::vector<std::vector<Int>> b(n, std::vector<Int>(n));
    Int denom_scale = 1;
    for (long i = 0; i < n; ++i) {
        Int l = 1;
        for (long j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(m(i, j)));
        for (long j = 0; j < n; ++j) b[i][j] = num(m(i, j)) * (l / den(m(i, j)));
        denom_scale *= l;
    }

    int sign = 1;
    Int prev = 1;
    for (long k = 0; k + 1 < n; ++k) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (b[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            std::swap(b[piv], b[k]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
            }
            b[i][k] = 0;
        }
        prev = b[k][k];
    }
    Int det_int = b[n - 1][n - 1];
    if (sign < 0) det_int = -det_int;
    return Rat(det_int, denom_scale);
}

// For a d x (d+1) matrix: entry i is (-1)^i * det(M with column i removed).
// M is positively spanning iff all entries are nonzero and share one sign.
inline RatVec signed_minors(const RatMatrix& m) {
    if (m.cols != m.rows + 1) throw std::invalid_argument("signed_minors wants d x (d+1)");
    RatVec out(m.cols);
    for (long skip = 0; skip < m.cols; ++skip) {
        std::vector<int> idx;
        for (long j = 0; j < m.cols; ++j)
            if (j != skip) idx.push_back(static_cast<int>(j));
        Rat d = determinant(select_columns(m, idx));
        out[skip] = (skip % 2 == 0) ? d : -d;
    }
    return out;
}

namespace detail {

struct Rref {
    RatMatrix r;
    std::vector<long> pivot_col;  // per pivot row
    long rank = 0;
};

inline Rref rref(RatMatrix m) {
    Rref out;
    long row = 0;
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long piv = -1;
        for (long i = row; i < m.rows; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m.a[piv], m.a[row]);
        const Rat p = m(row, col);
        for (long j = col; j < m.cols; ++j) m(row, j) /= p;
        for (long i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rat f = m(i, col);
            for (long j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        out.pivot_col.push_back(col);
        ++row;
    }
    out.rank = row;
    out.r = std::move(m);
    return out;
}

}  // namespace detail

inline long rank(const RatMatrix& m) { return detail::rref(m).rank; }

// Scale to a primitive integer vector; first nonzero entry made positive.
inline RatVec primitive(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (l / den(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g == 0) return RatVec(v.size(), Rat(0));
    int sign = 0;
    for (const auto& x : w)
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int q = w[i] / g;
        out[i] = Rat(sign > 0 ? q : Int(-q));
    }
    return out;
}

// Basis of { x : M x = 0 }, one primitive integer vector per free column.
inline std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    auto rr = detail::rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (long c : rr.pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (long f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols, Rat(0));
        v[f] = 1;
        for (long r = 0; r < rr.rank; ++r) v[rr.pivot_col[r]] = -rr.r(r, f);
        basis.push_back(primitive(v));
    }
    return basis;
}

// Unique solution of M x = b; throws (reporting the rank) when the system is
// singular, inconsistent, or underdetermined.
inline RatVec solve_unique(const RatMatrix& m, const RatVec& b) {
    if (static_cast<long>(b.size()) != m.rows) throw std::invalid_argument("solve shape");
    RatMatrix aug(m.rows, m.cols + 1);
    for (long i = 0; i < m.rows; ++i) {
        for (long j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    auto rr = detail::rref(aug);
    for (long r = 0; r < rr.rank; ++r)
        if (rr.pivot_col[r] == m.cols)
            throw std::domain_error("inconsistent linear system (rank " +
                                    std::to_string(rr.rank - 1) + ")");
    if (rr.rank < m.cols)
        throw std::domain_error("singular linear system (rank " + std::to_string(rr.rank) +
                                " of " + std::to_string(m.cols) + ")");
    RatVec x(m.cols, Rat(0));
    for (long r = 0; r < rr.rank; ++r) x[rr.pivot_col[r]] = rr.r(r, m.cols);
    return x;
}

}  // namespace viro
