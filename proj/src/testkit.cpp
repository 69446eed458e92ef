#include "f2b/testkit.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "f2b/errors.hpp"

namespace f2b::testkit {

const char* family_name(Family f) {
    switch (f) {
        case Family::subspace: return "subspace";
        case Family::affine: return "affine";
        case Family::independent: return "independent";
        case Family::one_relation: return "one_relation";
        case Family::fixed_by: return "fixed_by";
        case Family::random_set: return "random_set";
        case Family::random_multiset: return "random_multiset";
    }
    throw std::invalid_argument("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::subspace, Family::affine, Family::independent, Family::one_relation,
                     Family::fixed_by, Family::random_set, Family::random_multiset}) {
        if (name == family_name(f)) return f;
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument("generate: " + message);
}

uint64_t random_word(SplitMix64& rng, int n) { return rng.next() & width_mask(n); }

// Random vectors appended while they grow the span; returns basis-input
// vectors in generation order.
std::vector<uint64_t> random_independent(SplitMix64& rng, int n, int r) {
    std::vector<uint64_t> vectors;
    std::vector<uint64_t> basis;  // decreasing leading bit
    while (static_cast<int>(vectors.size()) < r) {
        const uint64_t candidate = random_word(rng, n);
        uint64_t residue = candidate;
        for (uint64_t row : basis) {
            if (residue >> (std::bit_width(row) - 1) & 1) residue ^= row;
        }
        if (residue == 0) continue;
        basis.insert(std::upper_bound(basis.begin(), basis.end(), residue, std::greater<>()),
                     residue);
        vectors.push_back(candidate);
    }
    return vectors;
}

std::vector<uint64_t> span_of(const std::vector<uint64_t>& generators) {
    std::vector<uint64_t> members{0};
    for (uint64_t g : generators) {
        if (std::find(members.begin(), members.end(), g) != members.end()) continue;
        const size_t count = members.size();
        for (size_t i = 0; i < count; ++i) members.push_back(members[i] ^ g);
    }
    return members;
}

VectorSet set_from_bits(int n, const std::vector<uint64_t>& bits) {
    std::vector<BitVec> members;
    members.reserve(bits.size());
    for (uint64_t b : bits) members.emplace_back(n, b);
    return VectorSet::from_members(n, std::move(members));
}

VectorSet generate_subspace(SplitMix64& rng, int n, int r, bool canonical) {
    require(r >= 0 && r <= n, "need 0 <= r <= n");
    require(r <= 24, "subspace family materializes 2^r members; r must be <= 24");
    std::vector<uint64_t> gens;
    if (canonical) {
        for (int j = 1; j <= r; ++j) gens.push_back(uint64_t{1} << (n - j));
    } else {
        gens = random_independent(rng, n, r);
    }
    return set_from_bits(n, span_of(gens));
}

VectorSet generate_independent(SplitMix64& rng, int n, int r, bool canonical) {
    require(r >= 0 && r <= n, "need 0 <= r <= n");
    std::vector<uint64_t> bits{0};
    if (canonical) {
        for (int j = 1; j <= r; ++j) bits.push_back(uint64_t{1} << (n - j));
    } else {
        const std::vector<uint64_t> vs = random_independent(rng, n, r);
        bits.insert(bits.end(), vs.begin(), vs.end());
    }
    return set_from_bits(n, bits);
}

VectorSet generate_one_relation(SplitMix64& rng, int n, int r, int k, bool canonical) {
    require(r >= 2 && r <= n, "need 2 <= r <= n");
    require(k >= 2 && k <= r,
            "need 2 <= k <= r (a weight-1 dependency would duplicate a member)");
    std::vector<uint64_t> independent;
    if (canonical) {
        for (int j = 1; j <= r; ++j) independent.push_back(uint64_t{1} << (n - j));
    } else {
        independent = random_independent(rng, n, r);
    }
    // The dependent member: sum of k of the independent ones.
    std::vector<size_t> picks(independent.size());
    for (size_t i = 0; i < picks.size(); ++i) picks[i] = i;
    if (!canonical) {
        for (size_t i = 0; i + 1 < picks.size(); ++i) {
            const size_t j = i + static_cast<size_t>(rng.next_below(picks.size() - i));
            std::swap(picks[i], picks[j]);
        }
    }
    uint64_t dependent = 0;
    for (int i = 0; i < k; ++i) dependent ^= independent[picks[static_cast<size_t>(i)]];

    std::vector<uint64_t> bits{0};
    bits.insert(bits.end(), independent.begin(), independent.end());
    bits.push_back(dependent);
    return set_from_bits(n, bits);
}

VectorSet generate_fixed_by(SplitMix64& rng, int n, int r, int f, long long classes,
                            bool canonical) {
    require(f >= 1 && f <= r && r <= n, "need 1 <= f <= r <= n");
    if (classes < 0) {
        classes = r - f + 1;
        if (classes % 2 == 0) ++classes;  // odd class count pins the fixing space exactly
    }
    require(classes >= r - f + 1, "class count too small to reach rank r");
    require(r - f >= 63 || classes <= (1LL << (r - f)), "class count exceeds 2^(r-f)");
    require(f <= 20 && classes <= (1LL << 20), "fixed_by family materializes classes * 2^f members");

    std::vector<uint64_t> fixing_gens;
    if (canonical) {
        for (int j = 1; j <= f; ++j) fixing_gens.push_back(uint64_t{1} << (n - j));
    } else {
        fixing_gens = random_independent(rng, n, f);
    }
    const std::vector<uint64_t> fixing_members = span_of(fixing_gens);
    const Subspace fixing = [&] {
        std::vector<BitVec> rows;
        for (uint64_t g : fixing_gens) rows.emplace_back(n, g);
        return Subspace::from_rows(n, rows);
    }();

    // Class representatives live in canonical position (zero at the fixing
    // pivots), so their span meets the fixing space trivially and ranks add.
    std::vector<uint64_t> rep_gens;
    while (static_cast<int>(rep_gens.size()) < r - f) {
        const uint64_t candidate =
            canonical ? (uint64_t{1} << (n - f - 1 - static_cast<int>(rep_gens.size())))
                      : canonical_rep(BitVec(n, random_word(rng, n)), fixing).bits();
        std::vector<uint64_t> probe = rep_gens;
        probe.push_back(candidate);
        if (span_of(probe).size() == (size_t{1} << probe.size())) rep_gens = std::move(probe);
    }
    const std::vector<uint64_t> rep_space = span_of(rep_gens);

    std::set<uint64_t> reps{0};
    reps.insert(rep_gens.begin(), rep_gens.end());
    size_t cursor = 0;
    while (reps.size() < static_cast<size_t>(classes)) {
        if (canonical) {
            while (std::find(rep_space.begin(), rep_space.end(), rep_space[cursor]) !=
                       rep_space.end() &&
                   reps.contains(rep_space[cursor]))
                ++cursor;
            reps.insert(rep_space[cursor]);
        } else {
            reps.insert(rep_space[rng.next_below(rep_space.size())]);
        }
    }

    std::vector<uint64_t> bits;
    bits.reserve(static_cast<size_t>(classes) << f);
    for (uint64_t rep : reps)
        for (uint64_t m : fixing_members) bits.push_back(rep ^ m);
    VectorSet out = set_from_bits(n, bits);

    const Subspace actual = fixing_set(out);
    if (actual.dimension() < f || rank_of(out) != r)
        throw std::logic_error("generate: fixed_by family failed its predicate");
    return out;
}

VectorSet generate_random_set(SplitMix64& rng, int n, long long cardinality) {
    const uint64_t space = n >= 63 ? ~uint64_t{0} : (uint64_t{1} << n);
    if (cardinality < 0)
        cardinality = 1 + static_cast<long long>(rng.next_below(std::min<uint64_t>(space, 32)));
    require(cardinality >= 1, "cardinality must be positive");
    require(n >= 63 || static_cast<uint64_t>(cardinality) <= space,
            "cardinality exceeds 2^n");
    std::set<uint64_t> picked;
    while (picked.size() < static_cast<size_t>(cardinality)) picked.insert(random_word(rng, n));
    return set_from_bits(n, {picked.begin(), picked.end()});
}

BoolMultiset generate_random_multiset(SplitMix64& rng, int n, long long cardinality,
                                      long long max_multiplicity) {
    require(max_multiplicity >= 1, "max multiplicity must be positive");
    const VectorSet support = generate_random_set(rng, n, cardinality);
    std::vector<std::pair<BitVec, long long>> pairs;
    pairs.reserve(support.size());
    for (const BitVec& v : support.members())
        pairs.emplace_back(v, 1 + static_cast<long long>(rng.next_below(
                                  static_cast<uint64_t>(max_multiplicity))));
    return BoolMultiset::from_pairs(n, pairs);
}

// ---- oracle internals: private elimination, no gf2 calls -----------------

struct OracleBasis {
    std::vector<uint64_t> rows;  // RREF, decreasing leading bit

    void insert(uint64_t v) {
        v = reduce(v);
        if (v == 0) return;
        const int p = std::bit_width(v) - 1;
        for (uint64_t& row : rows)
            if (row >> p & 1) row ^= v;
        rows.insert(std::upper_bound(rows.begin(), rows.end(), v, std::greater<>()), v);
    }

    uint64_t reduce(uint64_t v) const {
        for (uint64_t row : rows)
            if (v >> (std::bit_width(row) - 1) & 1) v ^= row;
        return v;
    }
};

BalanceStructure oracle_core(int n, const std::vector<std::pair<uint64_t, long long>>& items) {
    if (n > kOracleMaxWidth)
        throw GuardError("oracle guard: width " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kOracleMaxWidth));
    long long total = 0;
    for (const auto& [key, count] : items) total += count;

    std::vector<uint64_t> balancing;
    std::vector<uint64_t> constant;
    const uint64_t space = uint64_t{1} << n;
    for (uint64_t y = 0; y < space; ++y) {
        long long sum = 0;
        for (const auto& [key, count] : items)
            sum += (std::popcount(key & y) & 1) ? -count : count;
        if (sum == 0 && y != 0) balancing.push_back(y);
        if (sum == total || -sum == total) constant.push_back(y);
    }

    OracleBasis basis;
    for (uint64_t c : constant) basis.insert(c);
    if (constant.size() != size_t{1} << basis.rows.size())
        throw std::logic_error("oracle: constant set is not a subspace");

    std::vector<uint64_t> reps;
    reps.reserve(balancing.size());
    for (uint64_t y : balancing) reps.push_back(basis.reduce(y));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    if (balancing.size() != reps.size() * constant.size())
        throw std::logic_error("oracle: balancing set does not fill whole cosets");

    BalanceStructure out;
    std::vector<BitVec> basis_rows;
    for (uint64_t row : basis.rows) basis_rows.emplace_back(n, row);
    out.constant_space = Subspace::from_rows(n, basis_rows);
    for (uint64_t rep : reps) out.balancing_reps.emplace_back(n, rep);
    out.balancing_number = static_cast<long long>(reps.size());
    out.rank = n - static_cast<int>(basis.rows.size());
    out.method = BalanceMethod::oracle;
    return out;
}

}  // namespace

Generated generate(const FamilySpec& spec) {
    require(spec.n >= 1 && spec.n <= kMaxWidth, "n must be in [1, 64]");
    SplitMix64 rng(spec.seed);
    switch (spec.family) {
        case Family::subspace:
            require(spec.r >= 0, "subspace family needs r");
            return generate_subspace(rng, spec.n, spec.r, spec.canonical);
        case Family::affine: {
            require(spec.r >= 0, "affine family needs r");
            VectorSet base = generate_subspace(rng, spec.n, spec.r, spec.canonical);
            const uint64_t shift = spec.canonical && spec.n > spec.r
                                       ? uint64_t{1}  // last coordinate, outside the span
                                       : random_word(rng, spec.n);
            return translate(base, BitVec(spec.n, shift));
        }
        case Family::independent:
            require(spec.r >= 0, "independent family needs r");
            return generate_independent(rng, spec.n, spec.r, spec.canonical);
        case Family::one_relation:
            require(spec.r >= 0 && spec.k >= 0, "one_relation family needs r and k");
            return generate_one_relation(rng, spec.n, spec.r, spec.k, spec.canonical);
        case Family::fixed_by:
            require(spec.r >= 0 && spec.f >= 0, "fixed_by family needs r and f");
            return generate_fixed_by(rng, spec.n, spec.r, spec.f, spec.classes, spec.canonical);
        case Family::random_set:
            return generate_random_set(rng, spec.n, spec.cardinality);
        case Family::random_multiset:
            return generate_random_multiset(rng, spec.n, spec.cardinality, spec.max_multiplicity);
    }
    throw std::invalid_argument("generate: unknown family");
}

BalanceStructure oracle_analyze(const VectorSet& s) {
    std::vector<std::pair<uint64_t, long long>> items;
    items.reserve(s.size());
    for (const BitVec& v : s.members()) items.emplace_back(v.bits(), 1);
    return oracle_core(s.width(), items);
}

BalanceStructure oracle_analyze(const BoolMultiset& m) {
    std::vector<std::pair<uint64_t, long long>> items;
    items.reserve(m.entries().size());
    for (const auto& [key, count] : m.entries()) items.emplace_back(key.bits(), count);
    return oracle_core(m.width(), items);
}

}  // namespace f2b::testkit
