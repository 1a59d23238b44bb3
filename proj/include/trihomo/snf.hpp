#pragma once

// Smith normal form over the integers, with the unimodular transforms:
// U * M * V = S, S diagonal with d_1 | d_2 | ... >= 0. Only concrete
// integer matrices are accepted; Z[n] is not a PID, so symbolic input is
// rejected with "evaluate first".

#include <vector>

#include "trihomo/checked_int.hpp"
#include "trihomo/errors.hpp"
#include "trihomo/symplectic.hpp"

namespace trihomo {

using IntMat = std::vector<std::vector<Int128>>;

inline size_t row_count(const IntMat& m) { return m.size(); }
inline size_t col_count(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

inline IntMat identity_matrix(size_t k) {
    IntMat m(k, std::vector<Int128>(k, Int128(0)));
    for (size_t i = 0; i < k; ++i) m[i][i] = Int128(1);
    return m;
}

// Strict conversion from polynomial rows; degree >= 1 anywhere is an error.
inline IntMat to_int_matrix(const std::vector<HClass>& rows) {
    IntMat m;
    m.reserve(rows.size());
    for (const HClass& r : rows) {
        std::vector<Int128> row;
        row.reserve(r.size());
        for (const IntPoly& e : r.entries()) {
            if (!e.is_constant()) throw SymbolicEntryError("matrix has symbolic entries; evaluate first");
            row.push_back(e.coeff(0));
        }
        m.push_back(std::move(row));
    }
    return m;
}

struct SnfResult {
    IntMat u;  // rows x rows, |det| = 1
    IntMat s;  // diagonal, divisibility chain, nonnegative
    IntMat v;  // cols x cols, |det| = 1
};

// g = gcd(a, b) >= 0 with x*a + y*b = g.
inline Int128 gcdext(Int128 a, Int128 b, Int128& x, Int128& y) {
    Int128 old_r = a, r = b;
    Int128 old_x(1), xx(0), old_y(0), yy(1);
    while (!r.is_zero()) {
        Int128 q = old_r / r;
        Int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * xx;
        old_x = xx;
        xx = t;
        t = old_y - q * yy;
        old_y = yy;
        yy = t;
    }
    if (old_r.sign() < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

inline SnfResult smith_normal_form(const IntMat& m) {
    const size_t nrow = row_count(m), ncol = col_count(m);
    for (const auto& r : m)
        if (r.size() != ncol) throw DimensionError("ragged matrix");

    SnfResult res{identity_matrix(nrow), m, identity_matrix(ncol)};
    IntMat& s = res.s;
    IntMat& u = res.u;
    IntMat& v = res.v;

    // (row_a, row_b) <- (x*row_a + y*row_b, p*row_a + q*row_b); det = xq-yp = +-1
    auto combine_rows = [&](size_t a, size_t b, Int128 x, Int128 y, Int128 p, Int128 q) {
        for (size_t j = 0; j < ncol; ++j) {
            Int128 ra = s[a][j], rb = s[b][j];
            s[a][j] = x * ra + y * rb;
            s[b][j] = p * ra + q * rb;
        }
        for (size_t j = 0; j < nrow; ++j) {
            Int128 ra = u[a][j], rb = u[b][j];
            u[a][j] = x * ra + y * rb;
            u[b][j] = p * ra + q * rb;
        }
    };
    auto combine_cols = [&](size_t a, size_t b, Int128 x, Int128 y, Int128 p, Int128 q) {
        for (size_t i = 0; i < nrow; ++i) {
            Int128 ca = s[i][a], cb = s[i][b];
            s[i][a] = x * ca + y * cb;
            s[i][b] = p * ca + q * cb;
        }
        for (size_t i = 0; i < ncol; ++i) {
            Int128 ca = v[i][a], cb = v[i][b];
            v[i][a] = x * ca + y * cb;
            v[i][b] = p * ca + q * cb;
        }
    };

    size_t t = 0;
    while (t < nrow && t < ncol) {
        // smallest |entry| in the remaining block becomes the pivot
        size_t pr = nrow, pc = ncol;
        for (size_t i = t; i < nrow; ++i)
            for (size_t j = t; j < ncol; ++j) {
                if (s[i][j].is_zero()) continue;
                if (pr == nrow || abs(s[i][j]) < abs(s[pr][pc])) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == nrow) break;  // remaining block is zero
        if (pr != t) {
            std::swap(s[t], s[pr]);
            std::swap(u[t], u[pr]);
        }
        if (pc != t) {
            for (auto& row : s) std::swap(row[t], row[pc]);
            for (auto& row : v) std::swap(row[t], row[pc]);
        }

        for (;;) {
            // plain elimination when the pivot divides, otherwise one
            // extended-gcd combination clears the entry and shrinks the pivot
            for (size_t i = t + 1; i < nrow; ++i) {
                if (s[i][t].is_zero()) continue;
                if ((s[i][t] % s[t][t]).is_zero()) {
                    Int128 q = s[i][t] / s[t][t];
                    for (size_t j = 0; j < ncol; ++j) s[i][j] -= q * s[t][j];
                    for (size_t j = 0; j < nrow; ++j) u[i][j] -= q * u[t][j];
                } else {
                    Int128 x, y;
                    Int128 g = gcdext(s[t][t], s[i][t], x, y);
                    combine_rows(t, i, x, y, -(s[i][t] / g), s[t][t] / g);
                }
            }
            bool touched_pivot_column = false;
            for (size_t j = t + 1; j < ncol; ++j) {
                if (s[t][j].is_zero()) continue;
                if ((s[t][j] % s[t][t]).is_zero()) {
                    Int128 q = s[t][j] / s[t][t];
                    for (size_t i = 0; i < nrow; ++i) s[i][j] -= q * s[i][t];
                    for (size_t i = 0; i < ncol; ++i) v[i][j] -= q * v[i][t];
                } else {
                    Int128 x, y;
                    Int128 g = gcdext(s[t][t], s[t][j], x, y);
                    combine_cols(t, j, x, y, -(s[t][j] / g), s[t][t] / g);
                    touched_pivot_column = true;
                }
            }
            if (touched_pivot_column) {  // generic column ops may repopulate column t
                bool column_t_clear = true;
                for (size_t i = t + 1; i < nrow && column_t_clear; ++i) column_t_clear = s[i][t].is_zero();
                if (!column_t_clear) continue;
            }

            // pivot must divide the rest of the block for the chain to hold
            bool fixed = false;
            for (size_t i = t + 1; i < nrow && !fixed; ++i)
                for (size_t j = t + 1; j < ncol && !fixed; ++j)
                    if (!(s[i][j] % s[t][t]).is_zero()) {
                        for (size_t jj = 0; jj < ncol; ++jj) s[t][jj] += s[i][jj];
                        for (size_t jj = 0; jj < nrow; ++jj) u[t][jj] += u[i][jj];
                        fixed = true;
                    }
            if (!fixed) break;
        }
        ++t;
    }

    for (size_t i = 0; i < t; ++i)
        if (s[i][i].sign() < 0) {
            for (size_t j = 0; j < ncol; ++j) s[i][j] = -s[i][j];
            for (size_t j = 0; j < nrow; ++j) u[i][j] = -u[i][j];
        }
    return res;
}

// Nonzero diagonal entries of the Smith form, in chain order.
inline std::vector<Int128> invariant_factors(const IntMat& m) {
    SnfResult r = smith_normal_form(m);
    std::vector<Int128> d;
    for (size_t i = 0; i < row_count(r.s) && i < col_count(r.s); ++i)
        if (!r.s[i][i].is_zero()) d.push_back(r.s[i][i]);
    return d;
}

// Determinant by fraction-free elimination (square matrices only).
inline Int128 determinant(const IntMat& m) {
    const size_t k = row_count(m);
    if (k != col_count(m)) throw DimensionError("determinant of a non-square matrix");
    if (k == 0) return Int128(1);
    IntMat a = m;
    Int128 prev(1);
    int sign = 1;
    for (size_t col = 0; col < k; ++col) {
        size_t piv = k;
        for (size_t i = col; i < k; ++i)
            if (!a[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == k) return Int128(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        for (size_t i = col + 1; i < k; ++i) {
            for (size_t j = col + 1; j < k; ++j)
                a[i][j] = (a[col][col] * a[i][j] - a[i][col] * a[col][j]) / prev;
            a[i][col] = Int128(0);
        }
        prev = a[col][col];
    }
    return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

inline bool is_unimodular(const IntMat& m) { return abs(determinant(m)) == Int128(1); }

// The abelian group Z^{ambient} / (row span): free rank plus the torsion
// invariant factors (> 1).
struct Cokernel {
    int free_rank = 0;
    std::vector<Int128> torsion;

    bool torsion_free() const { return torsion.empty(); }
    friend bool operator==(const Cokernel&, const Cokernel&) = default;
};

inline Cokernel cokernel_of_rows(const IntMat& rows, size_t ambient) {
    if (!rows.empty() && col_count(rows) != ambient) throw DimensionError("rows do not live in Z^ambient");
    Cokernel c;
    std::vector<Int128> d = rows.empty() ? std::vector<Int128>{} : invariant_factors(rows);
    c.free_rank = static_cast<int>(ambient - d.size());
    for (const Int128& x : d)
        if (x > Int128(1)) c.torsion.push_back(x);
    return c;
}

}  // namespace trihomo
