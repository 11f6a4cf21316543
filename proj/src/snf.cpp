#include "polytc/snf.hpp"

#include <cstdlib>

#include "polytc/errors.hpp"

namespace polytc {

namespace {

struct Worker {
    IntMatrix m;
    int rows, cols;
    IntMatrix v;     // accumulated column transform
    IntMatrix vinv;  // its inverse, maintained alongside

    Worker(IntMatrix mat, int k) : m(std::move(mat)), rows(static_cast<int>(m.size())), cols(k) {
        v.assign(static_cast<std::size_t>(cols), IntRow(static_cast<std::size_t>(cols), 0));
        vinv = v;
        for (int i = 0; i < cols; ++i) {
            v[i][i] = 1;
            vinv[i][i] = 1;
        }
    }

    void swap_rows(int a, int b) {
        if (a != b) std::swap(m[a], m[b]);
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
        std::swap(vinv[a], vinv[b]);
    }

    void negate_col(int j) {
        for (int i = 0; i < rows; ++i) m[i][j] = -m[i][j];
        for (int i = 0; i < cols; ++i) v[i][j] = -v[i][j];
        for (int i = 0; i < cols; ++i) vinv[j][i] = -vinv[j][i];
    }

    // row[a] -= q * row[b]
    void row_axpy(int a, int b, const Integer& q) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) m[a][j] -= q * m[b][j];
    }

    // col[a] -= q * col[b]; V follows, Vinv gets the inverse row op.
    void col_axpy(int a, int b, const Integer& q) {
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) m[i][a] -= q * m[i][b];
        for (int i = 0; i < cols; ++i) v[i][a] -= q * v[i][b];
        for (int i = 0; i < cols; ++i) vinv[b][i] += q * vinv[a][i];
    }

    bool find_pivot(int from, int& pi, int& pj) const {
        bool found = false;
        Integer best;
        for (int i = from; i < rows; ++i)
            for (int j = from; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Integer a = abs(m[i][j]);
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }
};

Integer floordiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithNormalForm smith_normal_form(IntMatrix mat, int cols) {
    for (const IntRow& r : mat)
        if (static_cast<int>(r.size()) != cols)
            throw input_error("ragged matrix passed to smith_normal_form");

    Worker w(std::move(mat), cols);
    SmithNormalForm out;

    const int bound = std::min(w.rows, cols);
    int t = 0;
    while (t < bound) {
        int pi = 0, pj = 0;
        if (!w.find_pivot(t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        // Clear row t and column t; smallest-pivot selection keeps the
        // remainders shrinking, so this terminates.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < w.rows; ++i) {
                if (w.m[i][t] == 0) continue;
                w.row_axpy(i, t, floordiv(w.m[i][t], w.m[t][t]));
                if (w.m[i][t] != 0) {
                    w.swap_rows(t, i);  // strictly smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (w.m[t][j] == 0) continue;
                w.col_axpy(j, t, floordiv(w.m[t][j], w.m[t][t]));
                if (w.m[t][j] != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
        }

        // Divisibility: if the pivot misses an entry in the remaining
        // block, fold that row in and redo this pivot.
        bool redo = false;
        for (int i = t + 1; i < w.rows && !redo; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (w.m[i][j] % w.m[t][t] != 0) {
                    w.row_axpy(t, i, Integer(-1));
                    redo = true;
                    break;
                }
        if (redo) continue;

        if (w.m[t][t] < 0) w.negate_col(t);
        ++t;
    }

    out.rank = t;
    out.divisors.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) out.divisors.push_back(w.m[i][i]);
    out.col_transform = std::move(w.v);
    out.col_transform_inv = std::move(w.vinv);
    return out;
}

IntRow apply_col_transform(const IntRow& x, const IntMatrix& c) {
    const std::size_t k = c.size();
    if (x.size() != k) throw input_error("dimension mismatch in apply_col_transform");
    IntRow y(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) y[j] += x[i] * c[i][j];
    }
    return y;
}

}  // namespace polytc
