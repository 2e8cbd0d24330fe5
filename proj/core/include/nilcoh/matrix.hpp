#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nilcoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense integer matrix with exact (arbitrary precision) entries.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMat mul(const IntMat& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("IntMat::mul shape mismatch");
        IntMat out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    const Int& b = other.at(k, j);
                    if (b != 0) out.at(i, j) += aik * b;
                }
            }
        return out;
    }

    std::vector<Int> mul_vec(const std::vector<Int>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMat::mul_vec shape mismatch");
        std::vector<Int> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Smith normal form: U * M * V = diag(d_1, ..., d_r, 0, ...) with d_1 | d_2 | ... and U, V unimodular.
struct SNFResult {
    std::vector<Int> invariant_factors;  // the nonzero d_i, positive, divisibility chain
    IntMat U;                            // rows x rows
    IntMat V;                            // cols x cols
    std::size_t rank() const { return invariant_factors.size(); }
};

SNFResult smith_normal_form(const IntMat& m);

/// Rank of an integer matrix (exact).
std::size_t rank_of(const IntMat& m);

/// Determinant via fraction-free (Bareiss) elimination. Square matrices only.
Int determinant(const IntMat& m);

}  // namespace nilcoh
