#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "f2b/analysis.hpp"

namespace f2b::testkit {

/// splitmix64 with the standard constants, so streams reproduce across
/// platforms and implementations.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound) via the multiply-shift reduction.
    uint64_t next_below(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * bound) >> 64);
    }

private:
    uint64_t state_;
};

enum class Family {
    subspace,
    affine,
    independent,
    one_relation,
    fixed_by,
    random_set,
    random_multiset,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Parameters for one generated witness. Unused fields stay at their
/// defaults; each family validates what it needs.
struct FamilySpec {
    Family family = Family::random_set;
    int n = 0;
    int r = -1;
    int k = -1;
    int f = -1;
    long long cardinality = -1;       // random_set / random_multiset support size
    long long classes = -1;           // fixed_by: number of quotient classes
    long long max_multiplicity = 4;   // random_multiset
    uint64_t seed = 0;
    bool canonical = false;           // standard-basis witness instead of a random one
};

using Generated = std::variant<VectorSet, BoolMultiset>;

/// Deterministic for a fixed spec and seed; the family's defining predicate
/// is checked after generation.
Generated generate(const FamilySpec& spec);

inline constexpr int kOracleMaxWidth = 20;

/// Brute-force analysis: evaluates the balance sum of every vector in
/// F_2^n directly and groups the zeros itself. Shares only BitVec and the
/// pairing with the main code paths so a common bug cannot hide in shared
/// assembly logic.
BalanceStructure oracle_analyze(const VectorSet& s);
BalanceStructure oracle_analyze(const BoolMultiset& m);

}  // namespace f2b::testkit
