#include "nilcoh/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "nilcoh/caps.hpp"

namespace nilcoh {

Weight Weight::operator+(const Weight& o) const {
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] -= o.coords[i];
    return w;
}

Weight Weight::operator-() const {
    Weight w = *this;
    for (auto& c : w.coords) c = -c;
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int64_t c) { return c == 0; });
}

std::string Weight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

namespace {

std::vector<std::vector<int64_t>> cartan_matrix(char type, int rank) {
    auto path = [&](int r) {
        std::vector<std::vector<int64_t>> c(r, std::vector<int64_t>(r, 0));
        for (int i = 0; i < r; ++i) {
            c[i][i] = 2;
            if (i + 1 < r) c[i][i + 1] = c[i + 1][i] = -1;
        }
        return c;
    };
    switch (type) {
        case 'A':
            if (rank < 1) throw UnsupportedType("type A needs rank >= 1");
            return path(rank);
        case 'B': {
            if (rank < 2) throw UnsupportedType("type B needs rank >= 2");
            if (rank == 2) {
                // alpha_1 short: <alpha_1^vee, alpha_2> = -2
                return {{2, -2}, {-1, 2}};
            }
            auto c = path(rank);  // alpha_rank short
            c[rank - 2][rank - 1] = -1;
            c[rank - 1][rank - 2] = -2;
            return c;
        }
        case 'C': {
            if (rank < 3) throw UnsupportedType("type C needs rank >= 3 (C2 = B2)");
            auto c = path(rank);  // alpha_rank long
            c[rank - 2][rank - 1] = -2;
            c[rank - 1][rank - 2] = -1;
            return c;
        }
        case 'D': {
            if (rank < 4) throw UnsupportedType("type D needs rank >= 4");
            auto c = path(rank);
            c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0;
            c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1;
            return c;
        }
        case 'G':
            if (rank != 2) throw UnsupportedType("type G needs rank 2");
            // alpha_1 short
            return {{2, -3}, {-1, 2}};
        case 'E':
        case 'F':
            throw UnsupportedType(std::string("type ") + type + " is not supported");
        default:
            throw UnsupportedType(std::string("unknown type label '") + type + "'");
    }
}

}  // namespace

int RootSystem::positive_root_index(const std::vector<int64_t>& coords) const {
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
        if (positive_roots[i].coords == coords) return static_cast<int>(i);
    return -1;
}

bool RootSystem::is_root(const std::vector<int64_t>& coords) const {
    if (positive_root_index(coords) >= 0) return true;
    std::vector<int64_t> neg(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
    return positive_root_index(neg) >= 0;
}

Weight RootSystem::root_weight(int index) const {
    const Root& r = positive_roots.at(index);
    Weight w = Weight::zero(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) w.coords[i] += cartan[i][j] * r.coords[j];
    return w;
}

std::vector<int64_t> RootSystem::symmetrizer() const {
    // solve d_i c_ij = d_j c_ji over the Dynkin graph, normalize min to 1
    std::vector<int64_t> num(rank, 0), den(rank, 1);
    num[0] = 1;
    std::vector<int> todo = {0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < rank; ++j) {
            if (i == j || cartan[i][j] == 0 || num[j] != 0) continue;
            // d_j = d_i * c_ij / c_ji
            num[j] = num[i] * cartan[i][j];
            den[j] = den[i] * cartan[j][i];
            int64_t g = std::gcd(std::abs(num[j]), std::abs(den[j]));
            num[j] /= g;
            den[j] /= g;
            if (num[j] < 0) {
                num[j] = -num[j];
                den[j] = -den[j];
            }
            todo.push_back(j);
        }
    }
    int64_t l = 1;
    for (int i = 0; i < rank; ++i) l = std::lcm(l, den[i]);
    std::vector<int64_t> d(rank);
    for (int i = 0; i < rank; ++i) d[i] = num[i] * (l / den[i]);
    int64_t mn = *std::min_element(d.begin(), d.end());
    for (auto& x : d)
        if (x % mn == 0) x /= mn;
    return d;
}

int64_t RootSystem::coroot_pairing(int root_index, const Weight& lambda) const {
    // <alpha^vee, lambda> = 2 (alpha, lambda) / (alpha, alpha)
    const auto d = symmetrizer();
    const Root& r = positive_roots.at(root_index);
    // (alpha_i, alpha_j) = d_i * cartan[i][j]; (alpha_i, varpi_j) = delta_ij d_i
    int64_t alpha_lambda = 0;
    for (int i = 0; i < rank; ++i) alpha_lambda += r.coords[i] * d[i] * lambda.coords[i];
    int64_t alpha_alpha = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) alpha_alpha += r.coords[i] * d[i] * cartan[i][j] * r.coords[j];
    if (alpha_alpha == 0 || (2 * alpha_lambda) % alpha_alpha != 0)
        throw std::logic_error("coroot_pairing: non-integral pairing");
    return 2 * alpha_lambda / alpha_alpha;
}

RootSystem build_root_system(char type_label, int rank) {
    const int rank_cap = caps::root_rank_cap();
    if (rank > rank_cap)
        throw UnsupportedType("rank " + std::to_string(rank) + " exceeds cap " + std::to_string(rank_cap));

    RootSystem rs;
    rs.type_label = type_label;
    rs.rank = rank;
    rs.cartan = cartan_matrix(type_label, rank);
    for (int j = 0; j < rank; ++j) {
        Weight w = Weight::zero(rank);
        for (int i = 0; i < rank; ++i) w.coords[i] = rs.cartan[i][j];
        rs.simple_roots.push_back(w);
    }
    rs.rho = Weight(std::vector<int64_t>(rank, 1));

    // Generate positive roots by height layers. beta + alpha_i is a root iff
    // q = p - <beta, alpha_i^vee> >= 1 where p is the length of the descending
    // alpha_i-string through beta.
    std::set<std::vector<int64_t>> known;
    std::vector<std::vector<int64_t>> layer;
    for (int i = 0; i < rank; ++i) {
        std::vector<int64_t> e(rank, 0);
        e[i] = 1;
        known.insert(e);
        layer.push_back(e);
    }
    while (!layer.empty()) {
        std::vector<std::vector<int64_t>> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < rank; ++i) {
                int64_t pairing = 0;
                for (int j = 0; j < rank; ++j) pairing += rs.cartan[i][j] * beta[j];
                int64_t p = 0;
                std::vector<int64_t> down = beta;
                for (;;) {
                    down[i] -= 1;
                    bool neg = std::any_of(down.begin(), down.end(), [](int64_t c) { return c < 0; });
                    if (neg || !known.count(down)) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    std::vector<int64_t> up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }

    for (const auto& c : known) {
        Root r;
        r.coords = c;
        r.height = static_cast<int>(std::accumulate(c.begin(), c.end(), int64_t(0)));
        rs.positive_roots.push_back(r);
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords < b.coords;
    });
    return rs;
}

RootSystem build_root_system(std::string_view label) {
    if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
        throw UnsupportedType("bad type label '" + std::string(label) + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw UnsupportedType("bad type label '" + std::string(label) + "'");
        rank = rank * 10 + (label[i] - '0');
    }
    return build_root_system(t, rank);
}

int coxeter_number(const RootSystem& rs) {
    int64_t best = 0;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        best = std::max(best, rs.coroot_pairing(static_cast<int>(i), rs.rho));
    return static_cast<int>(best) + 1;
}

Weight sum_of_subset(const RootSystem& rs, const std::vector<int>& subset) {
    Weight w = Weight::zero(rs.rank);
    for (int idx : subset) w = w + rs.root_weight(idx);
    return w;
}

}  // namespace nilcoh
