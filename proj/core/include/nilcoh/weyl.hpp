#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "nilcoh/rootsystem.hpp"

namespace nilcoh {

struct GroupTooLarge : std::runtime_error {
    explicit GroupTooLarge(const std::string& what) : std::runtime_error(what) {}
};

using IMat = std::vector<std::vector<int64_t>>;  // small dense integer matrix

struct WeylElement {
    std::vector<int> reduced_word;  // simple reflection indices, BFS-shortest
    IMat action;                    // on fundamental-weight coordinates
    IMat root_action;               // on simple-root coordinates
    int length = 0;
};

struct WeylGroup {
    std::vector<WeylElement> elements;        // BFS order; element 0 is the identity
    std::map<int, std::vector<int>> by_length;
};

WeylGroup enumerate_weyl_group(const RootSystem& rs);

/// Phi(w) = w Phi^- cap Phi^+, as indices into rs.positive_roots. Sorted.
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);

/// w . lambda = w(lambda + rho) - rho
Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

/// coefficient of t^n = #{w : l(w) = n}
std::vector<int64_t> poincare_polynomial(const WeylGroup& w);

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
std::vector<int64_t> imat_apply(const IMat& m, const std::vector<int64_t>& v);

}  // namespace nilcoh
