#pragma once

#include <vector>

#include "nilcoh/matrix.hpp"

namespace nilcoh {

/// Free integer ring model Z[x]/(m) for a monic m, used for base-change checks
/// and cyclotomic Galois oracles. Elements are coefficient vectors of degree < e.
class MonicQuotientRing {
public:
    /// modulus coefficients c_0..c_e with c_e = 1
    explicit MonicQuotientRing(std::vector<Int> modulus);

    static MonicQuotientRing cyclotomic(int m);

    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Int>& modulus() const { return modulus_; }

    std::vector<Int> reduce(std::vector<Int> poly) const;
    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const;

    /// e x e integer matrix of multiplication by elem on the basis 1, x, ..., x^{e-1}
    IntMat mult_matrix(const std::vector<Int>& elem) const;

    /// e x e matrix of the ring map x -> x^g (a Galois automorphism when m is cyclotomic)
    IntMat power_substitution_matrix(int64_t g) const;

private:
    std::vector<Int> modulus_;
};

/// Smallest generator of (Z/m)^* when the unit group is cyclic; throws otherwise.
int64_t primitive_root_mod(int64_t m);

int64_t euler_phi(int64_t m);

}  // namespace nilcoh
