#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "nilcoh/matrix.hpp"
#include "nilcoh/nilpotent.hpp"
#include "nilcoh/ringext.hpp"

namespace nilcoh {

struct DimensionCap : std::runtime_error {
    explicit DimensionCap(const std::string& what) : std::runtime_error(what) {}
};

/// Weight label of an exterior monomial: per slot, minus the sum of its roots
/// (the torus acts on the dual), flattened to d * rank integers.
struct WeightLabel {
    std::vector<int64_t> flat;
    bool operator<(const WeightLabel& o) const { return flat < o.flat; }
    bool operator==(const WeightLabel& o) const { return flat == o.flat; }
};

struct CochainComplex {
    int dim = 0;       // algebra dimension n; degrees 0..n
    int slots = 1;     // d
    int rank = 0;
    std::vector<std::vector<std::vector<int>>> basis;  // basis[q]: lex-ordered q-subsets
    std::vector<IntMat> differential;                  // differential[q]: wedge^q -> wedge^{q+1}
    std::vector<std::vector<WeightLabel>> labels;      // labels[q][monomial]
};

CochainComplex build_ce_complex(const NilpotentLieAlgebra& l);

struct DegreeCohomology {
    int64_t free_rank = 0;
    std::vector<Int> torsion;                  // invariant factors > 1, sorted
    std::map<WeightLabel, int64_t> weights;    // free rank per weight block
};

struct CohomologyResult {
    std::vector<DegreeCohomology> degrees;  // 0..dim
};

/// Free rank + torsion per degree via Smith normal form, computed blockwise
/// per weight label (the differential is weight-preserving). `jobs` > 1 runs
/// independent blocks on worker threads; results are schedule-independent.
CohomologyResult cohomology(const CochainComplex& c, int jobs = 1);

struct BaseChangeDegree {
    int64_t base_rank = 0;
    int64_t extended_rank = 0;
    bool ok = false;
};

struct BaseChangeReport {
    int e = 1;
    bool ok = true;
    std::vector<BaseChangeDegree> degrees;
};

/// Extends coefficients to R = Z[x]/(m) by blowing every differential entry up
/// to its e x e multiplication matrix, recomputes ranks over Z, and checks
/// rank H^n(L (x) R) = e * rank H^n(L, Z) in every degree.
BaseChangeReport base_change_rank_check(const NilpotentLieAlgebra& l, const MonicQuotientRing& r);

}  // namespace nilcoh
