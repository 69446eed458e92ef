#pragma once

#include <vector>

#include "f2b/limits.hpp"
#include "f2b/sets.hpp"

namespace f2b {

enum class BalanceMethod { coset, spectrum, oracle };

/// Compressed description of B(S) and C(S): the constant space plus one
/// canonical coset representative per balancing piece. B(S) itself is never
/// materialized; enumeration is an explicit, guarded request.
struct BalanceStructure {
    Subspace constant_space;
    std::vector<BitVec> balancing_reps;  // sorted by index, canonical w.r.t. constant_space
    long long balancing_number = 0;      // == balancing_reps.size()
    int rank = 0;
    BalanceMethod method = BalanceMethod::coset;

    /// All members of B, sorted; refused when b * 2^dim exceeds 2^guard.
    std::vector<BitVec> enumerate_balancing(int guard = 24) const;
    std::vector<AffineCoset> cosets() const;
};

/// Content equality; the method tag is bookkeeping and is ignored.
bool operator==(const BalanceStructure& a, const BalanceStructure& b);
inline bool operator!=(const BalanceStructure& a, const BalanceStructure& b) { return !(a == b); }

/// Exact signed sum over members of (-1)^(x.y); zero iff y balances S.
long long balance_sum(const VectorSet& s, BitVec y);

/// Whether y splits S in half under the pairing. y must be nonzero.
bool is_balanced(const VectorSet& s, BitVec y);

/// Whether every member of S pairs to the same value with y.
bool is_constant(const VectorSet& s, BitVec y);

/// C(S): all y making S y-constant. A subspace of dimension n - rank_of(s),
/// invariant under translation.
Subspace constant_set(const VectorSet& s);

/// B(S) via the coset sweep: one solved system per pattern in F_2^rank, one
/// balance test per system. Guarded by limits.max_rank.
BalanceStructure balancing_set(const VectorSet& s, const Limits& limits = {});

long long balancing_number(const VectorSet& s, const Limits& limits = {});

/// B(S) union C(S) covers everything iff b = 2^rank - 1; cross-checked
/// against the affine-closure test, with disagreement reported as an
/// internal consistency failure.
bool is_fully_balanced(const VectorSet& s, const Limits& limits = {});
bool is_fully_balanced(const VectorSet& s, const BalanceStructure& precomputed);

/// F(S) = {x : x + S = S}; a subspace, invariant under translation.
Subspace fixing_set(const VectorSet& s);

struct QuotientView {
    Subspace fixing_space;       // F(S), dimension f
    Subspace h_space;            // intersection of the hyperplanes of F(S), dimension n - f
    VectorSet representatives;   // one member of S per class, canonical picks
};

/// Partition of S into classes x + F(S); classes have equal size 2^f.
QuotientView quotient(const VectorSet& s);

/// B(S) assembled from the fixing structure: everything outside h_space
/// balances S, and inside h_space balancing S reduces to balancing the class
/// representatives. Cross-validation path; output equals balancing_set(s).
BalanceStructure balancing_via_quotient(const VectorSet& s, const Limits& limits = {});

namespace detail {
// Shared sweep core over zero-containing weighted items, sorted by key.
BalanceStructure coset_sweep(int width,
                             const std::vector<std::pair<uint64_t, long long>>& items,
                             const Limits& limits);
}  // namespace detail

}  // namespace f2b
