#include "nilcoh/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace nilcoh {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Pick the nonzero entry of smallest absolute value in the submatrix starting at (t, t).
// Keeps coefficient growth under control during the reduction.
bool find_pivot(const IntMat& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Int& x = m.at(i, j);
            if (x == 0) continue;
            Int ax = int_abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_axpy(IntMat& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(IntMat& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

// Rounded quotient keeps remainders in [-|b|/2, |b|/2].
Int rounded_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    Int hb = int_abs(b);
    if (2 * int_abs(r) > hb) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMat& input) {
    IntMat m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat U = IntMat::identity(rows);
    IntMat V = IntMat::identity(cols);

    std::size_t t = 0;
    const std::size_t tmax = std::min(rows, cols);
    while (t < tmax) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(m, t, pi, pj)) break;
        swap_rows(m, t, pi);
        swap_rows(U, t, pi);
        swap_cols(m, t, pj);
        swap_cols(V, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = rounded_div(m.at(i, t), m.at(t, t));
                row_axpy(m, i, t, q);
                row_axpy(U, i, t, q);
                if (m.at(i, t) != 0) {
                    // remainder became the smaller pivot
                    swap_rows(m, t, i);
                    swap_rows(U, t, i);
                    dirty = true;
                }
            }
            // clear row t
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = rounded_div(m.at(t, j), m.at(t, t));
                col_axpy(m, j, t, q);
                col_axpy(V, j, t, q);
                if (m.at(t, j) != 0) {
                    swap_cols(m, t, j);
                    swap_cols(V, t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // pivot must divide every remaining entry; if not, fold the offending
                // row into row t and restart the reduction for this pivot
                for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j) {
                        if (m.at(i, j) % m.at(t, t) != 0) {
                            row_axpy(m, t, i, Int(-1));
                            row_axpy(U, t, i, Int(-1));
                            dirty = true;
                            break;
                        }
                    }
            }
        }
        ++t;
    }

    // normalize signs
    for (std::size_t i = 0; i < t; ++i) {
        if (m.at(i, i) < 0) {
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = -m.at(i, j);
            for (std::size_t j = 0; j < rows; ++j) U.at(i, j) = -U.at(i, j);
        }
    }

    SNFResult out;
    out.U = std::move(U);
    out.V = std::move(V);
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(m.at(i, i));
    return out;
}

std::size_t rank_of(const IntMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // fraction-free Gaussian elimination on a working copy
    IntMat w = m;
    std::size_t rank = 0;
    std::size_t rows = w.rows(), cols = w.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && w.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        swap_rows(w, r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (w.at(i, c) == 0) continue;
            Int g = boost::multiprecision::gcd(w.at(i, c), w.at(r, c));
            Int fr = w.at(r, c) / g, fi = w.at(i, c) / g;
            for (std::size_t j = c; j < cols; ++j) w.at(i, j) = w.at(i, j) * fr - w.at(r, j) * fi;
        }
        ++r;
        ++rank;
    }
    return rank;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            swap_rows(w, k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

}  // namespace nilcoh
