#include "nilcoh/ringext.hpp"

#include <numeric>
#include <stdexcept>

namespace nilcoh {

namespace {

// exact division of polynomials over Z, divisor monic; returns quotient
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() != 1) throw std::invalid_argument("poly_div_exact: monic divisor required");
    if (num.size() < den.size()) {
        for (const Int& c : num)
            if (c != 0) throw std::logic_error("poly_div_exact: non-exact division");
        return {Int(0)};
    }
    std::vector<Int> q(num.size() - den.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

void trim(std::vector<Int>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

MonicQuotientRing::MonicQuotientRing(std::vector<Int> modulus) : modulus_(std::move(modulus)) {
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw std::invalid_argument("MonicQuotientRing: monic modulus of degree >= 1 required");
}

MonicQuotientRing MonicQuotientRing::cyclotomic(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic: m >= 1 required");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<std::vector<Int>> phi(m + 1);
    for (int k = 1; k <= m; ++k) {
        std::vector<Int> num(k + 1, Int(0));
        num[0] = -1;
        num[k] = 1;
        for (int d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            num = poly_div_exact(num, phi[d]);
            trim(num);
        }
        phi[k] = num;
    }
    return MonicQuotientRing(phi[m]);
}

std::vector<Int> MonicQuotientRing::reduce(std::vector<Int> poly) const {
    const std::size_t e = degree();
    while (poly.size() > e) {
        Int c = poly.back();
        poly.pop_back();
        if (c == 0) continue;
        for (std::size_t j = 0; j < e; ++j) poly[poly.size() - e + j] -= c * modulus_[j];
    }
    poly.resize(e, Int(0));
    return poly;
}

std::vector<Int> MonicQuotientRing::mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> prod(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    return reduce(std::move(prod));
}

IntMat MonicQuotientRing::mult_matrix(const std::vector<Int>& elem) const {
    const int e = degree();
    IntMat m(e, e);
    std::vector<Int> basis(e, Int(0));
    for (int j = 0; j < e; ++j) {
        std::fill(basis.begin(), basis.end(), Int(0));
        basis[j] = 1;
        std::vector<Int> img = mul(elem, basis);
        for (int i = 0; i < e; ++i) m.at(i, j) = img[i];
    }
    return m;
}

IntMat MonicQuotientRing::power_substitution_matrix(int64_t g) const {
    const int e = degree();
    // image of x: x^g reduced
    std::vector<Int> xg(static_cast<std::size_t>(g) + 1, Int(0));
    xg[static_cast<std::size_t>(g)] = 1;
    xg = reduce(std::move(xg));
    IntMat m(e, e);
    std::vector<Int> cur(e, Int(0));
    cur[0] = 1;  // x^0
    for (int j = 0; j < e; ++j) {
        for (int i = 0; i < e; ++i) m.at(i, j) = cur[i];
        cur = mul(cur, xg);
    }
    return m;
}

int64_t euler_phi(int64_t m) {
    int64_t out = 0;
    for (int64_t a = 1; a <= m; ++a)
        if (std::gcd(a, m) == 1) ++out;
    return out;
}

int64_t primitive_root_mod(int64_t m) {
    const int64_t phi = euler_phi(m);
    for (int64_t g = 2; g < m; ++g) {
        if (std::gcd(g, m) != 1) continue;
        int64_t x = 1;
        int64_t order = 0;
        do {
            x = (x * g) % m;
            ++order;
        } while (x != 1);
        if (order == phi) return g;
    }
    throw std::invalid_argument("unit group of Z/" + std::to_string(m) + " is not cyclic");
}

}  // namespace nilcoh
