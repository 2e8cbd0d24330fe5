#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilcoh/rootsystem.hpp"

namespace nilcoh {

/// One term of a bracket: [x_i, x_j] = coeff * x_target (target < 0 means zero bracket).
struct BracketTerm {
    int target = -1;
    int64_t coeff = 0;
};

/// Nilpotent Lie algebra on Chevalley root vectors, graded by root height,
/// optionally Weil-restricted into d commuting Galois slots. Basis index
/// slot * base_dim + root; cross-slot brackets vanish.
struct NilpotentLieAlgebra {
    RootSystem rs;
    int d = 1;                                    // Galois slots
    int base_dim = 0;                             // |Phi^+|
    std::vector<std::vector<BracketTerm>> table;  // base_dim x base_dim, antisymmetric
    int64_t min_valid_prime = 5;                  // max(5, Coxeter number), metadata only

    int dim() const { return d * base_dim; }
    int slot_of(int basis_idx) const { return basis_idx / base_dim; }
    int root_of(int basis_idx) const { return basis_idx % base_dim; }
    int height_of(int basis_idx) const { return rs.positive_roots[root_of(basis_idx)].height; }
    Weight weight_of(int basis_idx) const { return rs.root_weight(root_of(basis_idx)); }

    BracketTerm bracket(int a, int b) const {
        if (slot_of(a) != slot_of(b)) return {};
        BracketTerm t = table[root_of(a)][root_of(b)];
        if (t.target >= 0) t.target += slot_of(a) * base_dim;
        return t;
    }
};

/// Chevalley structure constants for the positive part, |N_ab| = p_ab + 1,
/// signs fixed by making extraspecial pairs positive in the height-lex order.
NilpotentLieAlgebra chevalley_structure_constants(const RootSystem& rs);

NilpotentLieAlgebra weil_restrict(const NilpotentLieAlgebra& base, int d);

struct JacobiReport {
    bool ok = true;
    std::array<int, 3> triple = {-1, -1, -1};
    std::string message;
};

/// Exhaustive antisymmetry + Jacobi check over all basis triples.
JacobiReport jacobi_check(const NilpotentLieAlgebra& l);

}  // namespace nilcoh
