#include "f2b/multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace f2b {

namespace {

std::vector<std::pair<uint64_t, long long>> zero_translated_items(const BoolMultiset& m) {
    const uint64_t origin = m.entries().front().first.bits();
    std::vector<std::pair<uint64_t, long long>> items;
    items.reserve(m.entries().size());
    for (const auto& [key, count] : m.entries()) items.emplace_back(key.bits() ^ origin, count);
    std::sort(items.begin(), items.end());
    return items;
}

}  // namespace

long long balance_sum(const BoolMultiset& m, BitVec y) {
    require_same_width(m.entries().front().first, y, "balance_sum");
    long long sum = 0;
    for (const auto& [key, count] : m.entries()) sum += dot(key, y) ? -count : count;
    return sum;
}

bool is_balanced(const BoolMultiset& m, BitVec y) {
    if (y.is_zero()) throw std::invalid_argument("is_balanced: y must be nonzero");
    return balance_sum(m, y) == 0;
}

bool is_constant(const BoolMultiset& m, BitVec y) {
    const long long sum = balance_sum(m, y);
    return sum == m.total() || -sum == m.total();
}

Subspace constant_set(const BoolMultiset& m) {
    return constant_set(m.support());
}

BalanceStructure balancing_set(const BoolMultiset& m, const Limits& limits) {
    return detail::coset_sweep(m.width(), zero_translated_items(m), limits);
}

long long balancing_number(const BoolMultiset& m, const Limits& limits) {
    return balancing_set(m, limits).balancing_number;
}

MultisetBalanceClass classify_fully_balanced(const BoolMultiset& m, const Limits& limits) {
    const BalanceStructure bs = balancing_set(m, limits);
    MultisetBalanceClass out;
    out.fully_balanced = bs.balancing_number == (1LL << bs.rank) - 1;
    out.support_affine = is_affine(m.support());
    out.multiplicity_constant = m.multiplicity_constant();
    if (out.fully_balanced != (out.support_affine && out.multiplicity_constant))
        throw std::logic_error("internal consistency failure: multiset balance law and "
                               "structural witness disagree");
    return out;
}

bool is_fully_balanced(const BoolMultiset& m, const Limits& limits) {
    return classify_fully_balanced(m, limits).fully_balanced;
}

}  // namespace f2b
