#include "nilcoh/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "nilcoh/caps.hpp"

namespace nilcoh {

IMat imat_identity(int n) {
    IMat m(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    const std::size_t n = a.size(), k = b.size(), c = b[0].size();
    IMat out(n, std::vector<int64_t>(c, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            int64_t x = a[i][t];
            if (!x) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += x * b[t][j];
        }
    return out;
}

std::vector<int64_t> imat_apply(const IMat& m, const std::vector<int64_t>& v) {
    std::vector<int64_t> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

namespace {

// s_i on weight coordinates: lambda -> lambda - lambda_i * (i-th column of the Cartan matrix)
IMat simple_reflection_weight(const RootSystem& rs, int i) {
    IMat m = imat_identity(rs.rank);
    for (int k = 0; k < rs.rank; ++k) m[k][i] -= rs.cartan[k][i];
    return m;
}

// s_i on simple-root coordinates: c -> c - (row i of Cartan . c) e_i
IMat simple_reflection_root(const RootSystem& rs, int i) {
    IMat m = imat_identity(rs.rank);
    for (int j = 0; j < rs.rank; ++j) m[i][j] -= rs.cartan[i][j];
    return m;
}

}  // namespace

WeylGroup enumerate_weyl_group(const RootSystem& rs) {
    const int r = rs.rank;
    std::vector<IMat> gen_w(r), gen_r(r);
    for (int i = 0; i < r; ++i) {
        gen_w[i] = simple_reflection_weight(rs, i);
        gen_r[i] = simple_reflection_root(rs, i);
    }

    const int64_t cap = caps::weyl_order_cap();
    WeylGroup wg;
    std::map<IMat, int> seen;

    WeylElement id;
    id.reduced_word = {};
    id.action = imat_identity(r);
    id.root_action = imat_identity(r);
    id.length = 0;
    seen[id.action] = 0;
    wg.elements.push_back(id);

    std::deque<int> queue = {0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            IMat next = imat_mul(wg.elements[cur].action, gen_w[i]);
            if (seen.count(next)) continue;
            WeylElement e;
            e.reduced_word = wg.elements[cur].reduced_word;
            e.reduced_word.push_back(i);
            e.action = std::move(next);
            e.root_action = imat_mul(wg.elements[cur].root_action, gen_r[i]);
            e.length = static_cast<int>(e.reduced_word.size());
            seen[e.action] = static_cast<int>(wg.elements.size());
            wg.elements.push_back(std::move(e));
            queue.push_back(static_cast<int>(wg.elements.size()) - 1);
            if (static_cast<int64_t>(wg.elements.size()) > cap)
                throw GroupTooLarge("Weyl group exceeds cap " + std::to_string(cap));
        }
    }

    for (std::size_t i = 0; i < wg.elements.size(); ++i)
        wg.by_length[wg.elements[i].length].push_back(static_cast<int>(i));
    return wg;
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> out;
    for (std::size_t j = 0; j < rs.positive_roots.size(); ++j) {
        // alpha in Phi(w) iff alpha = w(beta) for a negative root beta, i.e. w(-alpha_j) positive
        std::vector<int64_t> neg(rs.rank);
        for (int k = 0; k < rs.rank; ++k) neg[k] = -rs.positive_roots[j].coords[k];
        std::vector<int64_t> img = imat_apply(w.root_action, neg);
        int idx = rs.positive_root_index(img);
        if (idx >= 0) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    Weight shifted = lambda + rs.rho;
    Weight moved(imat_apply(w.action, shifted.coords));
    return moved - rs.rho;
}

std::vector<int64_t> poincare_polynomial(const WeylGroup& w) {
    int max_len = w.by_length.empty() ? 0 : w.by_length.rbegin()->first;
    std::vector<int64_t> coef(max_len + 1, 0);
    for (const auto& [len, idxs] : w.by_length) coef[len] = static_cast<int64_t>(idxs.size());
    return coef;
}

}  // namespace nilcoh
