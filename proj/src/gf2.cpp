#include "f2b/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "f2b/errors.hpp"

namespace f2b {

namespace {

int leading_bit(uint64_t v) { return std::bit_width(v) - 1; }

// Reduces v against rows with pairwise distinct leading bits, sorted by
// decreasing leading bit. One pass suffices: XOR with a row only touches
// bits at or below that row's leading bit.
uint64_t reduce(uint64_t v, const std::vector<uint64_t>& rows) {
    for (uint64_t row : rows) {
        if (v >> leading_bit(row) & 1) v ^= row;
    }
    return v;
}

// Incremental RREF over raw words. Keeps rows sorted by decreasing leading
// bit and fully reduced against each other.
struct Echelon {
    std::vector<uint64_t> rows;

    // Returns false when v was already in the span.
    bool insert(uint64_t v) {
        v = reduce(v, rows);
        if (v == 0) return false;
        const int p = leading_bit(v);
        for (uint64_t& row : rows) {
            if (row >> p & 1) row ^= v;
        }
        rows.insert(std::upper_bound(rows.begin(), rows.end(), v, std::greater<>()), v);
        return true;
    }
};

std::vector<BitVec> to_bitvecs(int width, const std::vector<uint64_t>& rows) {
    std::vector<BitVec> out;
    out.reserve(rows.size());
    for (uint64_t r : rows) out.emplace_back(width, r);
    return out;
}

void check_width(int width) {
    if (width < 1 || width > kMaxWidth)
        throw std::invalid_argument("width must be in [1, 64]");
}

}  // namespace

Gf2Matrix::Gf2Matrix(int width) : width_(width) { check_width(width); }

Gf2Matrix::Gf2Matrix(int width, std::vector<BitVec> rows) : width_(width), rows_(std::move(rows)) {
    check_width(width);
    for (const BitVec& r : rows_) {
        if (r.width() != width_) throw std::invalid_argument("Gf2Matrix: row width mismatch");
    }
}

void Gf2Matrix::append_row(BitVec row) {
    if (row.width() != width_) throw std::invalid_argument("Gf2Matrix: row width mismatch");
    rows_.push_back(row);
}

Subspace Subspace::zero(int width) {
    check_width(width);
    return Subspace(width, {});
}

Subspace Subspace::full(int width) {
    check_width(width);
    std::vector<BitVec> basis;
    basis.reserve(static_cast<size_t>(width));
    for (int p = width - 1; p >= 0; --p) basis.emplace_back(width, uint64_t{1} << p);
    return Subspace(width, std::move(basis));
}

Subspace Subspace::from_rows(int width, std::span<const BitVec> rows) {
    check_width(width);
    Echelon ech;
    for (const BitVec& r : rows) {
        if (r.width() != width) throw std::invalid_argument("Subspace: row width mismatch");
        if (!r.is_zero()) ech.insert(r.bits());
    }
    return Subspace(width, to_bitvecs(width, ech.rows));
}

bool Subspace::contains(BitVec v) const {
    return canonical_rep(v, *this).is_zero();
}

std::vector<BitVec> Subspace::enumerate(int guard) const {
    if (dimension() > guard)
        throw GuardError("enumeration guard: subspace dimension " + std::to_string(dimension()) +
                         " exceeds limit " + std::to_string(guard));
    std::vector<uint64_t> members{0};
    members.reserve(size_t{1} << dimension());
    // Doubling over basis rows in increasing value keeps the list sorted.
    for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
        const uint64_t row = it->bits();
        const size_t count = members.size();
        for (size_t i = 0; i < count; ++i) members.push_back(members[i] ^ row);
    }
    return to_bitvecs(width_, members);
}

RowEchelon rref(const Gf2Matrix& m) {
    Subspace space = Subspace::from_rows(m.width(), m.rows());
    const int rank = space.dimension();
    return RowEchelon{std::move(space), rank};
}

Subspace nullspace(const Gf2Matrix& m) {
    const int n = m.width();
    const Subspace row_space = rref(m).space;

    uint64_t pivot_bits = 0;
    for (const BitVec& row : row_space.basis()) pivot_bits |= uint64_t{1} << leading_bit(row.bits());

    std::vector<BitVec> kernel;
    for (int p = n - 1; p >= 0; --p) {
        if (pivot_bits >> p & 1) continue;
        // Free column p: one generator with a 1 there, corrected at pivots.
        uint64_t v = uint64_t{1} << p;
        for (const BitVec& row : row_space.basis()) {
            if (row.bits() >> p & 1) v |= uint64_t{1} << leading_bit(row.bits());
        }
        kernel.emplace_back(n, v);
    }
    return Subspace::from_rows(n, kernel);
}

std::optional<BitVec> solve_affine(const Gf2Matrix& m, std::span<const uint8_t> rhs) {
    if (rhs.size() != m.row_count())
        throw std::invalid_argument("solve_affine: rhs length must match row count");

    struct AugRow {
        uint64_t bits;
        uint8_t b;
    };
    std::vector<AugRow> ech;  // decreasing leading bit, mutually reduced

    for (size_t i = 0; i < m.row_count(); ++i) {
        AugRow cur{m.rows()[i].bits(), static_cast<uint8_t>(rhs[i] & 1)};
        for (const AugRow& row : ech) {
            if (cur.bits >> leading_bit(row.bits) & 1) {
                cur.bits ^= row.bits;
                cur.b ^= row.b;
            }
        }
        if (cur.bits == 0) {
            if (cur.b) return std::nullopt;  // 0 = 1
            continue;
        }
        const int p = leading_bit(cur.bits);
        for (AugRow& row : ech) {
            if (row.bits >> p & 1) {
                row.bits ^= cur.bits;
                row.b ^= cur.b;
            }
        }
        ech.insert(std::upper_bound(ech.begin(), ech.end(), cur,
                                    [](const AugRow& a, const AugRow& b) { return a.bits > b.bits; }),
                   cur);
    }

    // Particular solution: free coordinates zero, pivot coordinates = rhs.
    uint64_t z = 0;
    for (const AugRow& row : ech) {
        if (row.b) z |= uint64_t{1} << leading_bit(row.bits);
    }
    return canonical_rep(BitVec(m.width(), z), nullspace(m));
}

BitVec canonical_rep(BitVec v, const Subspace& s) {
    if (v.width() != s.width())
        throw std::invalid_argument("canonical_rep: width mismatch");
    uint64_t bits = v.bits();
    for (const BitVec& row : s.basis()) {
        if (bits >> leading_bit(row.bits()) & 1) bits ^= row.bits();
    }
    return BitVec(v.width(), bits);
}

AffineCoset make_coset(BitVec v, Subspace direction) {
    BitVec rep = canonical_rep(v, direction);
    return AffineCoset{rep, std::move(direction)};
}

}  // namespace f2b
