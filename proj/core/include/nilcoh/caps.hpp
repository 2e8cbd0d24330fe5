#pragma once

#include <cstdint>

namespace nilcoh::caps {

/// Size caps guarding the exhaustive computations. NILCOH_CAP in the environment
/// overrides every cap with its value (intended for exploration, not for the
/// acceptance suite).
int64_t override_value();  // -1 when NILCOH_CAP is unset

int64_t weyl_order_cap();       // default 2000
int64_t exterior_dim_cap();     // default 14 (algebra dimension)
int64_t group_order_cap();      // default 100000 (commutator closures)
int64_t group_algebra_cap();    // default 700 (dense F_p linear algebra)
int root_rank_cap();            // default 4

}  // namespace nilcoh::caps
