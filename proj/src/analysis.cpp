#include "f2b/analysis.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "f2b/errors.hpp"

namespace f2b {

namespace {

std::vector<std::pair<uint64_t, long long>> zero_translated_items(const VectorSet& s) {
    const uint64_t origin = s.members().front().bits();
    std::vector<std::pair<uint64_t, long long>> items;
    items.reserve(s.size());
    for (const BitVec& v : s.members()) items.emplace_back(v.bits() ^ origin, 1);
    std::sort(items.begin(), items.end());
    return items;
}

long long weighted_sum(const std::vector<std::pair<uint64_t, long long>>& items, uint64_t y) {
    long long sum = 0;
    for (const auto& [key, count] : items)
        sum += (std::popcount(key & y) & 1) ? -count : count;
    return sum;
}

}  // namespace

namespace detail {

BalanceStructure coset_sweep(int width,
                             const std::vector<std::pair<uint64_t, long long>>& items,
                             const Limits& limits) {
    std::vector<BitVec> rows;
    rows.reserve(items.size());
    for (const auto& [key, count] : items) rows.emplace_back(width, key);

    Subspace constant_space = nullspace(Gf2Matrix(width, rows));
    const int r = width - constant_space.dimension();
    if (r > limits.max_rank)
        throw GuardError("rank guard: rank " + std::to_string(r) + " exceeds limit " +
                         std::to_string(limits.max_rank) +
                         " for the coset sweep (raise with --max-rank" +
                         (width <= limits.max_spectrum_n
                              ? ", or use --method spectrum for this width)"
                              : ")"));

    // Independent members, greedy over the sorted keys.
    std::vector<BitVec> indep;
    {
        std::vector<uint64_t> basis;
        for (const auto& [key, count] : items) {
            uint64_t v = key;
            for (uint64_t row : basis)
                if (v >> (std::bit_width(row) - 1) & 1) v ^= row;
            if (v != 0) {
                basis.insert(std::upper_bound(basis.begin(), basis.end(), v, std::greater<>()), v);
                indep.emplace_back(width, key);
            }
        }
    }

    // Canonical solutions for unit right-hand sides; the solution for any
    // pattern is their XOR superposition and stays canonical.
    Gf2Matrix system(width, indep);
    std::vector<uint64_t> unit(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
        std::vector<uint8_t> rhs(static_cast<size_t>(r), 0);
        rhs[static_cast<size_t>(j)] = 1;
        unit[static_cast<size_t>(j)] = solve_affine(system, rhs)->bits();
    }

    std::vector<uint64_t> reps;
    uint64_t z = 0;
    const uint64_t sweep = uint64_t{1} << r;
    for (uint64_t i = 1; i < sweep; ++i) {
        z ^= unit[static_cast<size_t>(std::countr_zero(i))];  // Gray-code step
        if (weighted_sum(items, z) == 0) reps.push_back(z);
    }
    std::sort(reps.begin(), reps.end());

    BalanceStructure out;
    out.constant_space = std::move(constant_space);
    out.balancing_reps.reserve(reps.size());
    for (uint64_t rep : reps) out.balancing_reps.emplace_back(width, rep);
    out.balancing_number = static_cast<long long>(reps.size());
    out.rank = r;
    out.method = BalanceMethod::coset;
    return out;
}

}  // namespace detail

bool operator==(const BalanceStructure& a, const BalanceStructure& b) {
    return a.constant_space == b.constant_space && a.balancing_reps == b.balancing_reps &&
           a.balancing_number == b.balancing_number && a.rank == b.rank;
}

std::vector<BitVec> BalanceStructure::enumerate_balancing(int guard) const {
    const int dim = constant_space.dimension();
    if (dim > guard ||
        static_cast<uint64_t>(balancing_number) > (uint64_t{1} << (guard - dim)))
        throw GuardError("enumeration guard: balancing set with " +
                         std::to_string(balancing_number) + " cosets of size 2^" +
                         std::to_string(dim) + " exceeds 2^" + std::to_string(guard) + " members");
    std::vector<BitVec> out;
    const std::vector<BitVec> direction = constant_space.enumerate(guard);
    out.reserve(balancing_reps.size() * direction.size());
    for (const BitVec& rep : balancing_reps)
        for (const BitVec& c : direction) out.push_back(rep + c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AffineCoset> BalanceStructure::cosets() const {
    std::vector<AffineCoset> out;
    out.reserve(balancing_reps.size());
    for (const BitVec& rep : balancing_reps) out.push_back(AffineCoset{rep, constant_space});
    return out;
}

long long balance_sum(const VectorSet& s, BitVec y) {
    require_same_width(s.members().front(), y, "balance_sum");
    long long sum = 0;
    for (const BitVec& x : s.members()) sum += dot(x, y) ? -1 : 1;
    return sum;
}

bool is_balanced(const VectorSet& s, BitVec y) {
    if (y.is_zero()) throw std::invalid_argument("is_balanced: y must be nonzero");
    return balance_sum(s, y) == 0;
}

bool is_constant(const VectorSet& s, BitVec y) {
    const long long sum = balance_sum(s, y);
    return sum == static_cast<long long>(s.size()) || -sum == static_cast<long long>(s.size());
}

Subspace constant_set(const VectorSet& s) {
    const BitVec origin = s.members().front();
    std::vector<BitVec> rows;
    rows.reserve(s.size());
    for (const BitVec& v : s.members()) rows.push_back(v + origin);
    return nullspace(Gf2Matrix(s.width(), rows));
}

BalanceStructure balancing_set(const VectorSet& s, const Limits& limits) {
    return detail::coset_sweep(s.width(), zero_translated_items(s), limits);
}

long long balancing_number(const VectorSet& s, const Limits& limits) {
    return balancing_set(s, limits).balancing_number;
}

bool is_fully_balanced(const VectorSet& s, const BalanceStructure& precomputed) {
    const bool law = precomputed.balancing_number == (1LL << precomputed.rank) - 1;
    const bool structural = is_affine(s);
    if (law != structural)
        throw std::logic_error("internal consistency failure: balancing count and affine "
                               "structure disagree on fully-balanced classification");
    return law;
}

bool is_fully_balanced(const VectorSet& s, const Limits& limits) {
    return is_fully_balanced(s, balancing_set(s, limits));
}

Subspace fixing_set(const VectorSet& s) {
    const BitVec origin = s.members().front();
    std::unordered_set<uint64_t> member_bits;
    member_bits.reserve(s.size() * 2);
    for (const BitVec& v : s.members()) member_bits.insert(v.bits() ^ origin.bits());

    // With zero a member, every fixer lies inside the set itself.
    std::vector<BitVec> fixers;
    for (uint64_t x : member_bits) {
        bool fixes = true;
        for (const BitVec& v : s.members()) {
            if (!member_bits.contains(x ^ v.bits() ^ origin.bits())) {
                fixes = false;
                break;
            }
        }
        if (fixes) fixers.emplace_back(s.width(), x);
    }

    Subspace f = Subspace::from_rows(s.width(), fixers);
    if (fixers.size() != (size_t{1} << f.dimension()))
        throw std::logic_error("internal consistency failure: fixing set is not a subspace");
    return f;
}

QuotientView quotient(const VectorSet& s) {
    Subspace fixing = fixing_set(s);

    std::vector<BitVec> reps;
    reps.reserve(s.size());
    for (const BitVec& v : s.members()) reps.push_back(canonical_rep(v, fixing));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    if (reps.size() << fixing.dimension() != s.size())
        throw std::logic_error("internal consistency failure: classes do not partition the set");

    Subspace h = nullspace(Gf2Matrix(s.width(), fixing.basis()));
    VectorSet representatives = VectorSet::from_members(s.width(), std::move(reps));
    return QuotientView{std::move(fixing), std::move(h), std::move(representatives)};
}

BalanceStructure balancing_via_quotient(const VectorSet& s, const Limits& limits) {
    const int n = s.width();
    const VectorSet s0 = translate(s, s.members().front());
    const QuotientView q = quotient(s0);
    const int f = q.fixing_space.dimension();
    if (f == 0) return balancing_set(s0, limits);

    Subspace constant_space = constant_set(s0);
    const int r = n - constant_space.dimension();
    if (r > limits.max_rank)
        throw GuardError("rank guard: rank " + std::to_string(r) + " exceeds limit " +
                         std::to_string(limits.max_rank) + " (raise with --max-rank)");

    // Balancing the class representatives, rank r - f sweep.
    std::vector<std::pair<uint64_t, long long>> rep_items;
    rep_items.reserve(q.representatives.size());
    for (const BitVec& v : q.representatives.members()) rep_items.emplace_back(v.bits(), 1);
    const BalanceStructure inner = detail::coset_sweep(n, rep_items, limits);

    std::vector<uint64_t> reps;

    // Each balancing piece of the representatives meets h_space in exactly
    // one coset of C(S). Solve for that member directly; the combined system
    // canonicalizes against C(S).
    std::vector<BitVec> rows = independent_subset(q.representatives);
    const size_t rep_rows = rows.size();
    rows.insert(rows.end(), q.fixing_space.basis().begin(), q.fixing_space.basis().end());
    Gf2Matrix combined(n, rows);
    for (const BitVec& z : inner.balancing_reps) {
        std::vector<uint8_t> rhs(rows.size(), 0);
        for (size_t j = 0; j < rep_rows; ++j) rhs[j] = static_cast<uint8_t>(dot(rows[j], z));
        reps.push_back(solve_affine(combined, rhs)->bits());
    }

    // Everything outside h_space balances S: walk the canonical coset
    // representatives (free coordinates of C(S)) and keep those with some
    // nonzero pairing against the fixing space.
    uint64_t pivot_bits = 0;
    for (const BitVec& row : constant_space.basis())
        pivot_bits |= uint64_t{1} << (std::bit_width(row.bits()) - 1);
    std::vector<int> free_bits;
    for (int p = n - 1; p >= 0; --p)
        if (!(pivot_bits >> p & 1)) free_bits.push_back(p);

    uint64_t z = 0;
    const uint64_t sweep = uint64_t{1} << r;
    for (uint64_t i = 1; i < sweep; ++i) {
        z ^= uint64_t{1} << free_bits[static_cast<size_t>(std::countr_zero(i))];
        bool inside_h = true;
        for (const BitVec& row : q.fixing_space.basis()) {
            if (std::popcount(z & row.bits()) & 1) {
                inside_h = false;
                break;
            }
        }
        if (!inside_h) reps.push_back(z);
    }

    std::sort(reps.begin(), reps.end());

    BalanceStructure out;
    out.constant_space = std::move(constant_space);
    out.balancing_reps.reserve(reps.size());
    for (uint64_t rep : reps) out.balancing_reps.emplace_back(n, rep);
    out.balancing_number = static_cast<long long>(reps.size());
    out.rank = r;
    out.method = BalanceMethod::coset;
    return out;
}

}  // namespace f2b
