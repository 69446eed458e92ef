#include "f2b/sets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "f2b/errors.hpp"

namespace f2b {

VectorSet VectorSet::from_members(int width, std::vector<BitVec> members) {
    if (width < 1 || width > kMaxWidth)
        throw std::invalid_argument("VectorSet: width must be in [1, 64]");
    if (members.empty()) throw InputError("set must be nonempty");
    for (const BitVec& v : members) {
        if (v.width() != width) throw std::invalid_argument("VectorSet: member width mismatch");
    }
    std::sort(members.begin(), members.end());
    auto dup = std::adjacent_find(members.begin(), members.end());
    if (dup != members.end())
        throw InputError("duplicate member " + to_string(*dup) +
                         " (use multiset input for repeated vectors)");
    return VectorSet(width, std::move(members));
}

bool VectorSet::contains(BitVec v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VectorSet translate(const VectorSet& s, BitVec t) {
    require_same_width(s.members().front(), t, "translate");
    std::vector<BitVec> out;
    out.reserve(s.size());
    for (const BitVec& v : s.members()) out.push_back(v + t);
    std::sort(out.begin(), out.end());
    return VectorSet(s.width(), std::move(out));
}

namespace {

// Linear basis keyed by leading bit; insertion order independent rank.
struct RankBasis {
    std::vector<uint64_t> rows;  // decreasing leading bit

    bool insert(uint64_t v) {
        for (uint64_t row : rows) {
            if (v >> (std::bit_width(row) - 1) & 1) v ^= row;
        }
        if (v == 0) return false;
        rows.insert(std::upper_bound(rows.begin(), rows.end(), v, std::greater<>()), v);
        return true;
    }
};

}  // namespace

int rank_of(const VectorSet& s) {
    const uint64_t origin = s.members().front().bits();
    RankBasis basis;
    for (const BitVec& v : s.members()) basis.insert(v.bits() ^ origin);
    return static_cast<int>(basis.rows.size());
}

std::vector<BitVec> independent_subset(const VectorSet& s) {
    if (!s.contains_zero())
        throw std::invalid_argument("independent_subset: zero vector must be a member");
    RankBasis basis;
    std::vector<BitVec> chosen;
    for (const BitVec& v : s.members()) {
        if (!v.is_zero() && basis.insert(v.bits())) chosen.push_back(v);
    }
    return chosen;
}

bool is_vector_space(const VectorSet& s) {
    if (!s.contains_zero()) return false;
    const int r = rank_of(s);
    // S is contained in its span; equal sizes force closure.
    return r < 64 && s.size() == (uint64_t{1} << r);
}

bool is_affine(const VectorSet& s) {
    return is_vector_space(translate(s, s.members().front()));
}

BoolMultiset BoolMultiset::from_pairs(int width,
                                      std::span<const std::pair<BitVec, long long>> pairs) {
    if (width < 1 || width > kMaxWidth)
        throw std::invalid_argument("BoolMultiset: width must be in [1, 64]");
    std::map<BitVec, long long> acc;
    long long total = 0;
    for (const auto& [key, count] : pairs) {
        if (key.width() != width) throw std::invalid_argument("BoolMultiset: key width mismatch");
        if (count < 0) throw InputError("negative multiplicity for " + to_string(key));
        if (count > kMaxTotalMultiplicity - total)
            throw InputError("total multiplicity exceeds 2^62");
        total += count;
        acc[key] += count;
    }
    std::vector<std::pair<BitVec, long long>> entries;
    entries.reserve(acc.size());
    for (const auto& [key, count] : acc) {
        if (count > 0) entries.emplace_back(key, count);
    }
    if (entries.empty()) throw InputError("multiset must have nonempty support");
    return BoolMultiset(width, std::move(entries), total);
}

long long BoolMultiset::multiplicity(BitVec v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const auto& e, const BitVec& key) { return e.first < key; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

VectorSet BoolMultiset::support() const {
    std::vector<BitVec> keys;
    keys.reserve(entries_.size());
    for (const auto& [key, count] : entries_) keys.push_back(key);
    return VectorSet::from_members(width_, std::move(keys));
}

bool BoolMultiset::multiplicity_constant() const {
    for (const auto& [key, count] : entries_) {
        if (count != entries_.front().second) return false;
    }
    return true;
}

BoolMultiset translate(const BoolMultiset& m, BitVec t) {
    require_same_width(m.entries().front().first, t, "translate");
    std::vector<std::pair<BitVec, long long>> entries;
    entries.reserve(m.entries().size());
    for (const auto& [key, count] : m.entries()) entries.emplace_back(key + t, count);
    std::sort(entries.begin(), entries.end());
    return BoolMultiset(m.width(), std::move(entries), m.total());
}

}  // namespace f2b
