#include "nilcoh/nilpotent.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace nilcoh {

namespace {

std::vector<int64_t> vec_add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    std::vector<int64_t> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

std::vector<int64_t> vec_sub(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    std::vector<int64_t> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

// p_ab = largest i >= 0 with beta - i*alpha a root (of either sign)
int string_down_length(const RootSystem& rs, int a, int b) {
    std::vector<int64_t> v = rs.positive_roots[b].coords;
    const std::vector<int64_t>& alpha = rs.positive_roots[a].coords;
    int p = 0;
    for (;;) {
        v = vec_sub(v, alpha);
        if (!rs.is_root(v)) break;
        ++p;
    }
    return p;
}

// Structure-constant solver. Signs of extraspecial pairs are set positive;
// every other special pair is resolved through the Jacobi identity
//   N_{y,z} N_{x,y+z} + N_{z,x} N_{y,z+x} + N_{x,y} N_{z,x+y} = 0.
class ConstantSolver {
public:
    explicit ConstantSolver(const RootSystem& rs) : rs_(rs), n_(static_cast<int>(rs.positive_roots.size())) {}

    std::vector<std::vector<BracketTerm>> solve() {
        sum_.assign(n_, std::vector<int>(n_, -1));
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                if (a == b) continue;
                sum_[a][b] = rs_.positive_root_index(
                    vec_add(rs_.positive_roots[a].coords, rs_.positive_roots[b].coords));
            }

        // special pairs grouped by their sum, pairs (a, b) normalized a < b
        struct PendingPair {
            int a, b;
        };
        for (int g = 0; g < n_; ++g) {
            std::vector<PendingPair> pairs;
            for (int a = 0; a < n_; ++a) {
                if (a == g) continue;
                for (int b = a; b < n_; ++b)
                    if (sum_[a][b] == g && a != b) pairs.push_back({a, b});
            }
            if (pairs.empty()) continue;
            std::sort(pairs.begin(), pairs.end(), [](const PendingPair& x, const PendingPair& y) {
                return x.a < y.a;
            });
            // extraspecial pair: minimal first member, constant positive
            const PendingPair extra = pairs.front();
            set_constant(extra.a, extra.b, string_down_length(rs_, extra.a, extra.b) + 1);

            std::vector<PendingPair> pending(pairs.begin() + 1, pairs.end());
            bool progress = true;
            while (!pending.empty() && progress) {
                progress = false;
                std::vector<PendingPair> still;
                for (const auto& pr : pending) {
                    if (resolve_pair(pr.a, pr.b, extra.a)) {
                        progress = true;
                    } else {
                        still.push_back(pr);
                    }
                }
                pending = std::move(still);
            }
            if (!pending.empty())
                throw std::logic_error("structure constant resolution stalled at root " + std::to_string(g));
        }

        std::vector<std::vector<BracketTerm>> table(n_, std::vector<BracketTerm>(n_));
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                if (a == b || sum_[a][b] < 0) continue;
                table[a][b] = BracketTerm{sum_[a][b], constant(a, b)};
            }
        return table;
    }

private:
    const RootSystem& rs_;
    int n_;
    std::vector<std::vector<int>> sum_;
    std::map<std::pair<int, int>, int64_t> known_;  // keyed by (min, max)

    bool has_constant(int a, int b) const { return known_.count({std::min(a, b), std::max(a, b)}) != 0; }

    int64_t constant(int a, int b) const {
        auto it = known_.find({std::min(a, b), std::max(a, b)});
        if (it == known_.end()) throw std::logic_error("constant not yet resolved");
        return a < b ? it->second : -it->second;
    }

    void set_constant(int a, int b, int64_t v) { known_[{std::min(a, b), std::max(a, b)}] = a < b ? v : -v; }

    // N for a pair that may not bracket to a root; 0 when the sum is not a root.
    // Returns nullopt if the pair is special but not resolved yet.
    std::optional<int64_t> try_constant(int a, int b) const {
        if (sum_[a][b] < 0) return int64_t(0);
        if (!has_constant(a, b)) return std::nullopt;
        return constant(a, b);
    }

    // Resolve N_{a,b} for a non-extraspecial special pair with extraspecial first member eps.
    // Uses the Jacobi triple (eps, delta, other) where delta = a - eps or b - eps.
    bool resolve_pair(int a, int b, int eps) {
        const auto& eps_coords = rs_.positive_roots[eps].coords;
        auto minus_eps = [&](int r) {
            return rs_.positive_root_index(vec_sub(rs_.positive_roots[r].coords, eps_coords));
        };

        int delta = minus_eps(a);
        if (delta >= 0) {
            // J(eps, delta, b): N_{delta,b} N_{eps,eta} + N_{b,eps} N_{delta,b+eps} + N_{eps,delta} N_{b,a} = 0
            auto n_delta_b = try_constant(delta, b);
            int eta = sum_[delta][b];
            auto n_eps_eta = try_constant(eps, eta);
            auto n_b_eps = try_constant(b, eps);
            std::optional<int64_t> second_factor = int64_t(0);
            if (sum_[b][eps] >= 0) second_factor = try_constant(delta, sum_[b][eps]);
            auto n_eps_delta = try_constant(eps, delta);
            if (!n_delta_b || !n_eps_eta || !n_b_eps || !second_factor || !n_eps_delta) return false;
            int64_t rhs = *n_delta_b * *n_eps_eta + *n_b_eps * *second_factor;
            if (*n_eps_delta == 0 || rhs % *n_eps_delta != 0)
                throw std::logic_error("non-exact division in sign resolution");
            set_constant(a, b, rhs / *n_eps_delta);
            return true;
        }
        delta = minus_eps(b);
        if (delta >= 0) {
            // J(eps, delta, a): N_{delta,a} N_{eps,eta} + N_{a,eps} N_{delta,a+eps} + N_{eps,delta} N_{a,b} = 0
            auto n_delta_a = try_constant(delta, a);
            int eta = sum_[delta][a];
            auto n_eps_eta = try_constant(eps, eta);
            auto n_a_eps = try_constant(a, eps);
            std::optional<int64_t> second_factor = int64_t(0);
            if (sum_[a][eps] >= 0) second_factor = try_constant(delta, sum_[a][eps]);
            auto n_eps_delta = try_constant(eps, delta);
            if (!n_delta_a || !n_eps_eta || !n_a_eps || !second_factor || !n_eps_delta) return false;
            int64_t rhs = *n_delta_a * *n_eps_eta + *n_a_eps * *second_factor;
            if (*n_eps_delta == 0 || rhs % *n_eps_delta != 0)
                throw std::logic_error("non-exact division in sign resolution");
            set_constant(a, b, -(rhs / *n_eps_delta));
            return true;
        }
        throw std::logic_error("neither a-eps nor b-eps is a root; cannot resolve pair");
    }
};

}  // namespace

NilpotentLieAlgebra chevalley_structure_constants(const RootSystem& rs) {
    NilpotentLieAlgebra l;
    l.rs = rs;
    l.d = 1;
    l.base_dim = static_cast<int>(rs.positive_roots.size());
    l.table = ConstantSolver(rs).solve();
    l.min_valid_prime = std::max<int64_t>(5, coxeter_number(rs));

    // magnitude sanity: |N_ab| = p_ab + 1 on every special pair
    for (int a = 0; a < l.base_dim; ++a)
        for (int b = 0; b < l.base_dim; ++b) {
            if (a == b || l.table[a][b].target < 0) continue;
            int64_t expect = string_down_length(rs, a, b) + 1;
            if (std::abs(l.table[a][b].coeff) != expect)
                throw std::logic_error("structure constant magnitude mismatch");
        }

    JacobiReport rep = jacobi_check(l);
    if (!rep.ok) throw std::logic_error("constructed algebra fails Jacobi: " + rep.message);
    return l;
}

NilpotentLieAlgebra weil_restrict(const NilpotentLieAlgebra& base, int d) {
    if (d < 1) throw std::invalid_argument("weil_restrict: d >= 1 required");
    if (base.d != 1) throw std::invalid_argument("weil_restrict: base algebra must have d = 1");
    NilpotentLieAlgebra l = base;
    l.d = d;
    return l;
}

JacobiReport jacobi_check(const NilpotentLieAlgebra& l) {
    const int n = l.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            BracketTerm ab = l.bracket(a, b);
            BracketTerm ba = l.bracket(b, a);
            bool anti = (ab.target < 0 && ba.target < 0) ||
                        (ab.target == ba.target && ab.coeff == -ba.coeff);
            if (!anti)
                return {false, {a, b, -1}, "antisymmetry fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
        }

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::vector<int64_t> acc(n, 0);
                auto add_term = [&](int x, int y, int z) {
                    BracketTerm inner = l.bracket(y, z);
                    if (inner.target < 0) return;
                    BracketTerm outer = l.bracket(x, inner.target);
                    if (outer.target < 0) return;
                    acc[outer.target] += inner.coeff * outer.coeff;
                };
                add_term(a, b, c);
                add_term(b, c, a);
                add_term(c, a, b);
                for (int t = 0; t < n; ++t)
                    if (acc[t] != 0)
                        return {false,
                                {a, b, c},
                                "Jacobi fails at triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")"};
            }
    return {};
}

}  // namespace nilcoh
