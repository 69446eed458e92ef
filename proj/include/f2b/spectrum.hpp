#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "f2b/analysis.hpp"
#include "f2b/multiset.hpp"

namespace f2b {

/// The full table of balance sums: sums[index_of(y)] = sum_x m(x)(-1)^(x.y).
/// An unnormalized Walsh-Hadamard transform of the multiplicity function;
/// everything stays in exact integers.
struct SpectrumTable {
    int width = 0;
    std::vector<int64_t> sums;

    long long total() const { return sums.empty() ? 0 : sums.front(); }
};

/// In-place fast transform; length must be a power of two. Applying it twice
/// multiplies by the length.
void wht_in_place(std::span<int64_t> values);

std::vector<int64_t> wht(std::vector<int64_t> values);

SpectrumTable spectrum_of(const VectorSet& s, const Limits& limits = {});
SpectrumTable spectrum_of(const BoolMultiset& m, const Limits& limits = {});

/// B and C read off the spectrum: zeros away from the origin are balancing,
/// entries of magnitude total() are constant. Zeros are grouped into cosets
/// by canonical representative; the result equals the coset-method output.
BalanceStructure spectrum_analysis(const VectorSet& s, const Limits& limits = {});
BalanceStructure spectrum_analysis(const BoolMultiset& m, const Limits& limits = {});

/// Sign of the 2^n x 2^n tensor-power sign matrix at row ix, column iy:
/// +1 when the indexed vectors pair to zero, -1 otherwise.
int hadamard_sign(uint64_t ix, uint64_t iy, int n);

}  // namespace f2b
