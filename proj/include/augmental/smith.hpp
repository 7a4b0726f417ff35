#ifndef AUGMENTAL_SMITH_HPP
#define AUGMENTAL_SMITH_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "augmental/integer.hpp"

namespace augmental {

/** Dense integer matrix, row major. */
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Integer> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c) {}

    Integer& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
    const Integer& at(int r, int c) const { return a[(std::size_t)r * cols + c]; }

    Matrix transposed() const {
        Matrix t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }
};

struct SmithResult {
    std::vector<Integer> diagonal;  // positive, d1 | d2 | ..., nonzero entries only
    int rank = 0;                   // = diagonal.size()
};

namespace detail {

inline void row_swap(Matrix& m, int r1, int r2) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}
inline void col_swap(Matrix& m, int c1, int c2) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}
// row r1 -= q * row r2, from column `from` on
inline void row_axpy(Matrix& m, int r1, const Integer& q, int r2, int from) {
    if (q.is_zero()) return;
    for (int c = from; c < m.cols; ++c)
        if (!m.at(r2, c).is_zero()) m.at(r1, c) -= q * m.at(r2, c);
}
inline void col_axpy(Matrix& m, int c1, const Integer& q, int c2, int from) {
    if (q.is_zero()) return;
    for (int r = from; r < m.rows; ++r)
        if (!m.at(r, c2).is_zero()) m.at(r, c1) -= q * m.at(r, c2);
}

}  // namespace detail

/**
 * Smith normal form by minimal-absolute-value pivoting with exact integers.
 * Returns the nontrivial diagonal (all positive, each dividing the next) and
 * the rank.  When `right` is non-null it accumulates the column transform V
 * with M V having the kernel of M in its trailing columns.
 */
inline SmithResult smith_normal_form(Matrix m, Matrix* right = nullptr) {
    if (right) {
        *right = Matrix(m.cols, m.cols);
        for (int i = 0; i < m.cols; ++i) right->at(i, i) = Integer(1);
    }
    int t = 0;
    int bound = std::min(m.rows, m.cols);
    while (t < bound) {
        // locate a minimal nonzero entry in the trailing submatrix
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                const Integer& v = m.at(r, c);
                if (v.is_zero()) continue;
                if (pr < 0 || Integer::cmp_abs(v, m.at(pr, pc)) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // submatrix is zero
        detail::row_swap(m, t, pr);
        detail::col_swap(m, t, pc);
        if (right) detail::col_swap(*right, t, pc);

        bool clean = true;
        for (int r = t + 1; r < m.rows; ++r) {
            Integer q = m.at(r, t) / m.at(t, t);
            detail::row_axpy(m, r, q, t, t);
            if (!m.at(r, t).is_zero()) clean = false;
        }
        for (int c = t + 1; c < m.cols; ++c) {
            Integer q = m.at(t, c) / m.at(t, t);
            detail::col_axpy(m, c, q, t, t);
            if (right) detail::col_axpy(*right, c, q, t, 0);
            if (!m.at(t, c).is_zero()) clean = false;
        }
        if (!clean) continue;  // smaller remainders exist; re-pick the pivot

        // enforce divisibility of the remaining block by the pivot
        bool restart = false;
        for (int r = t + 1; r < m.rows && !restart; ++r)
            for (int c = t + 1; c < m.cols && !restart; ++c)
                if (!(m.at(r, c) % m.at(t, t)).is_zero()) {
                    for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
                    restart = true;
                }
        if (restart) continue;
        ++t;
    }
    SmithResult res;
    for (int i = 0; i < t; ++i) res.diagonal.push_back(abs(m.at(i, i)));
    res.rank = t;
    return res;
}

inline int rank_over_z(const Matrix& m) { return smith_normal_form(m).rank; }

/**
 * Integer basis of ker(M) as columns of the returned matrix (possibly 0
 * columns).  Taken from the trailing columns of the Smith column transform.
 */
inline Matrix kernel_basis_int(const Matrix& m) {
    Matrix v;
    SmithResult s = smith_normal_form(m, &v);
    Matrix k(m.cols, m.cols - s.rank);
    for (int r = 0; r < m.cols; ++r)
        for (int c = s.rank; c < m.cols; ++c) k.at(r, c - s.rank) = v.at(r, c);
    return k;
}

// ---------------------------------------------------------------------------
// Field linear algebra
// ---------------------------------------------------------------------------

namespace detail {

inline long long mod_reduce(const Integer& v, long long p) {
    // boundary-matrix entries and kernels stay small; fall back through
    // string conversion is never needed because |entry| always fits here
    long long x = v.fits_longlong() ? v.to_longlong() % p : (v % Integer(p)).to_longlong();
    if (x < 0) x += p;
    return x;
}

inline long long mod_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}
inline long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

}  // namespace detail

inline int rank_mod_p(const Matrix& m, long long p) {
    std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = detail::mod_reduce(m.at(r, c), p);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        long long inv = detail::mod_inv(a[rank][c], p);
        for (int cc = c; cc < m.cols; ++cc) a[rank][cc] = (__int128)a[rank][cc] * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            long long f = a[r][c];
            for (int cc = c; cc < m.cols; ++cc) {
                a[r][cc] = (a[r][cc] - (__int128)f * a[rank][cc]) % p;
                if (a[r][cc] < 0) a[r][cc] += p;
            }
        }
        ++rank;
    }
    return rank;
}

/** Kernel basis over Z_p; columns of the result span ker(M mod p). */
inline std::vector<std::vector<long long>> kernel_basis_mod_p(const Matrix& m, long long p) {
    std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = detail::mod_reduce(m.at(r, c), p);
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        long long inv = detail::mod_inv(a[rank][c], p);
        for (int cc = c; cc < m.cols; ++cc) a[rank][cc] = (__int128)a[rank][cc] * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            long long f = a[r][c];
            for (int cc = c; cc < m.cols; ++cc) {
                a[r][cc] = (a[r][cc] - (__int128)f * a[rank][cc]) % p;
                if (a[r][cc] < 0) a[r][cc] += p;
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<long long>> kernel;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<long long> v(m.cols, 0);
        v[c] = 1;
        for (int r = 0; r < rank; ++r) {
            long long coeff = a[r][c];
            if (coeff) v[pivot_col[r]] = (p - coeff) % p;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

/** Exact rank over Q: fraction-free elimination with per-row gcd reduction. */
inline int rank_over_q(const Matrix& m) {
    std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
    auto reduce_row = [&](std::vector<Integer>& row) {
        Integer g(0);
        for (const Integer& v : row) {
            g = gcd(g, v);
            if (g.is_one()) return;
        }
        if (g.is_zero() || g.is_one()) return;
        for (Integer& v : row) v = v / g;
    };
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!a[r][c].is_zero() &&
                (pivot < 0 || Integer::cmp_abs(a[r][c], a[pivot][c]) < 0))
                pivot = r;
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][c].is_zero()) continue;
            Integer g = gcd(a[r][c], a[rank][c]);
            Integer fr = a[rank][c] / g, fp = a[r][c] / g;
            for (int cc = c; cc < m.cols; ++cc)
                a[r][cc] = a[r][cc] * fr - a[rank][cc] * fp;
            reduce_row(a[r]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace augmental

#endif
