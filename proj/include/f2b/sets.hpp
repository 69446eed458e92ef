#pragma once

#include <span>
#include <utility>
#include <vector>

#include "f2b/bitvec.hpp"
#include "f2b/gf2.hpp"

namespace f2b {

/// A finite nonempty subset of F_2^n. Members are kept sorted by index with
/// no duplicates, so equality is bit-exact and order-independent.
class VectorSet {
public:
    /// Validates: nonempty, uniform width, no duplicates.
    static VectorSet from_members(int width, std::vector<BitVec> members);

    int width() const noexcept { return width_; }
    size_t size() const noexcept { return members_.size(); }
    const std::vector<BitVec>& members() const noexcept { return members_; }
    bool contains(BitVec v) const;
    bool contains_zero() const { return !members_.empty() && members_.front().is_zero(); }

    friend bool operator==(const VectorSet&, const VectorSet&) = default;

private:
    VectorSet(int width, std::vector<BitVec> sorted_members)
        : width_(width), members_(std::move(sorted_members)) {}
    friend VectorSet translate(const VectorSet&, BitVec);

    int width_ = 0;
    std::vector<BitVec> members_;
};

/// {t + x : x in S}; an involution for fixed t.
VectorSet translate(const VectorSet& s, BitVec t);

/// Dimension of the span of a zero-containing translate; independent of the
/// chosen translation.
int rank_of(const VectorSet& s);

/// rank_of(s) linearly independent members, chosen greedily in sorted order.
/// Requires the zero vector to be a member (translate first).
std::vector<BitVec> independent_subset(const VectorSet& s);

bool is_vector_space(const VectorSet& s);
bool is_affine(const VectorSet& s);

// Total-multiplicity cap so spectrum sums stay inside a signed 64-bit
// accumulator.
inline constexpr long long kMaxTotalMultiplicity = 1LL << 62;

/// A Boolean multiset M = (F_2^n, m): positive multiplicities on a nonempty
/// support, entries sorted by key.
class BoolMultiset {
public:
    /// Accumulates repeated keys, drops zero counts, rejects negatives and
    /// an empty result; the running total must stay within the cap.
    static BoolMultiset from_pairs(int width, std::span<const std::pair<BitVec, long long>> pairs);

    int width() const noexcept { return width_; }
    const std::vector<std::pair<BitVec, long long>>& entries() const noexcept { return entries_; }
    size_t support_size() const noexcept { return entries_.size(); }
    long long total() const noexcept { return total_; }
    long long multiplicity(BitVec v) const;
    VectorSet support() const;
    bool multiplicity_constant() const;

    friend bool operator==(const BoolMultiset&, const BoolMultiset&) = default;

private:
    BoolMultiset(int width, std::vector<std::pair<BitVec, long long>> entries, long long total)
        : width_(width), entries_(std::move(entries)), total_(total) {}
    friend BoolMultiset translate(const BoolMultiset&, BitVec);

    int width_ = 0;
    std::vector<std::pair<BitVec, long long>> entries_;
    long long total_ = 0;
};

/// Multiset translation: m'(x) = m(t + x).
BoolMultiset translate(const BoolMultiset& m, BitVec t);

}  // namespace f2b
