#pragma once

#include "f2b/analysis.hpp"

namespace f2b {

/// Exact signed sum of m(x) * (-1)^(x.y) over the support.
long long balance_sum(const BoolMultiset& m, BitVec y);

/// Weighted balance test; y must be nonzero.
bool is_balanced(const BoolMultiset& m, BitVec y);

/// |weighted sum| equals the total multiplicity.
bool is_constant(const BoolMultiset& m, BitVec y);

/// C(M) coincides with the constant set of the support.
Subspace constant_set(const BoolMultiset& m);

/// B(M) via the coset sweep with weighted balance tests. The sweep tests one
/// representative per piece: shifting by a constant-set member multiplies
/// every term by one global sign, which cannot create or destroy a zero sum.
BalanceStructure balancing_set(const BoolMultiset& m, const Limits& limits = {});

long long balancing_number(const BoolMultiset& m, const Limits& limits = {});

struct MultisetBalanceClass {
    bool fully_balanced;          // b(M) = 2^rank - 1
    bool support_affine;          // structural witness, part 1
    bool multiplicity_constant;   // structural witness, part 2
};

/// Fully-balanced test with its structural witness: the balance law must
/// coincide with (affine support AND constant multiplicity); disagreement is
/// an internal consistency failure.
MultisetBalanceClass classify_fully_balanced(const BoolMultiset& m, const Limits& limits = {});

bool is_fully_balanced(const BoolMultiset& m, const Limits& limits = {});

}  // namespace f2b
