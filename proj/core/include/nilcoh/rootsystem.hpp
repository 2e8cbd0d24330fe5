#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilcoh {

struct UnsupportedType : std::runtime_error {
    explicit UnsupportedType(const std::string& what) : std::runtime_error(what) {}
};

/// Element of the character lattice in fundamental-weight coordinates
/// (simply connected convention, so rho is the all-ones vector).
struct Weight {
    std::vector<int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<int64_t> c) : coords(std::move(c)) {}
    static Weight zero(std::size_t rank) { return Weight(std::vector<int64_t>(rank, 0)); }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator<(const Weight& o) const { return coords < o.coords; }
    bool is_zero() const;
    std::string str() const;
};

/// Positive root in simple-root coordinates; height is the coordinate sum.
struct Root {
    std::vector<int64_t> coords;
    int height = 0;
};

struct RootSystem {
    char type_label = 'A';
    int rank = 0;
    std::vector<std::vector<int64_t>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
    std::vector<Weight> simple_roots;          // columns of the Cartan matrix
    std::vector<Root> positive_roots;          // non-decreasing height, lex tie-break on coords
    Weight rho;                                // all ones

    std::string label() const { return std::string(1, type_label) + std::to_string(rank); }

    /// Index into positive_roots, or -1 if the coordinate vector is not a positive root.
    int positive_root_index(const std::vector<int64_t>& coords) const;

    /// True if coords is a root (positive or negative).
    bool is_root(const std::vector<int64_t>& coords) const;

    /// Fundamental-weight coordinates of a positive root (Cartan matrix times coords).
    Weight root_weight(int index) const;

    /// Symmetrizer d_i with d_i * cartan[i][j] symmetric; normalized to minimum 1.
    std::vector<int64_t> symmetrizer() const;

    /// <alpha^vee, lambda> for a positive root alpha via the symmetrized form.
    int64_t coroot_pairing(int root_index, const Weight& lambda) const;
};

RootSystem build_root_system(char type_label, int rank);
RootSystem build_root_system(std::string_view label);  // e.g. "A2", "G2"

int coxeter_number(const RootSystem& rs);

/// Sum of the given positive roots, in fundamental-weight coordinates.
Weight sum_of_subset(const RootSystem& rs, const std::vector<int>& subset);

}  // namespace nilcoh
