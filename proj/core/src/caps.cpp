#include "nilcoh/caps.hpp"

#include <cstdlib>
#include <string>

namespace nilcoh::caps {

int64_t override_value() {
    const char* v = std::getenv("NILCOH_CAP");
    if (!v || !*v) return -1;
    try {
        return std::stoll(v);
    } catch (...) {
        return -1;
    }
}

namespace {
int64_t capped(int64_t dflt) {
    int64_t o = override_value();
    return o > 0 ? o : dflt;
}
}  // namespace

int64_t weyl_order_cap() { return capped(2000); }
int64_t exterior_dim_cap() { return capped(14); }
int64_t group_order_cap() { return capped(100000); }
int64_t group_algebra_cap() { return capped(700); }

int root_rank_cap() {
    int64_t o = override_value();
    // the rank cap only loosens under an explicit override; E/F stay out either way
    return o > 4 ? static_cast<int>(o > 8 ? 8 : o) : 4;
}

}  // namespace nilcoh::caps
