#pragma once

#include <optional>
#include <span>
#include <vector>

#include "f2b/bitvec.hpp"

namespace f2b {

/// Ordered rows over F_2^width. Rows may repeat, be zero, or be dependent;
/// the width is fixed at construction so an empty system still knows its
/// column count.
class Gf2Matrix {
public:
    explicit Gf2Matrix(int width);
    Gf2Matrix(int width, std::vector<BitVec> rows);

    int width() const noexcept { return width_; }
    const std::vector<BitVec>& rows() const noexcept { return rows_; }
    size_t row_count() const noexcept { return rows_.size(); }
    void append_row(BitVec row);

private:
    int width_;
    std::vector<BitVec> rows_;
};

/// A linear subspace of F_2^n held as a reduced-row-echelon basis: rows are
/// nonzero with strictly increasing pivot columns, and every pivot column is
/// zero in all other rows. The empty basis is the zero space. RREF bases are
/// unique, so equality of bases is equality of subspaces.
class Subspace {
public:
    static Subspace zero(int width);
    static Subspace full(int width);
    /// Runs elimination over the given rows (in order, leftmost pivot).
    static Subspace from_rows(int width, std::span<const BitVec> rows);

    int width() const noexcept { return width_; }
    int dimension() const noexcept { return static_cast<int>(basis_.size()); }
    const std::vector<BitVec>& basis() const noexcept { return basis_; }

    bool contains(BitVec v) const;

    /// All 2^dimension members, in increasing index order.
    std::vector<BitVec> enumerate(int guard = 24) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(int width, std::vector<BitVec> rref_basis)
        : width_(width), basis_(std::move(rref_basis)) {}

    int width_ = 0;
    std::vector<BitVec> basis_;  // sorted by decreasing leading bit
};

struct RowEchelon {
    Subspace space;
    int rank;
};

/// Row space of m in RREF form together with its rank.
RowEchelon rref(const Gf2Matrix& m);

/// {y : row . y = 0 for every row}, dimension = width - rank(m).
Subspace nullspace(const Gf2Matrix& m);

/// One solution of {row_j . y = rhs_j}, canonical against nullspace(m), or
/// nullopt when the system is inconsistent. The full solution set is the
/// returned vector plus nullspace(m).
std::optional<BitVec> solve_affine(const Gf2Matrix& m, std::span<const uint8_t> rhs);

/// The unique member of v + span(s) whose pivot coordinates (w.r.t. the
/// RREF basis of s) are all zero. Two vectors share a canonical
/// representative exactly when they lie in the same coset.
BitVec canonical_rep(BitVec v, const Subspace& s);

/// An affine piece rep + direction with a canonical representative.
struct AffineCoset {
    BitVec representative;
    Subspace direction;

    friend bool operator==(const AffineCoset&, const AffineCoset&) = default;
};

AffineCoset make_coset(BitVec v, Subspace direction);

}  // namespace f2b
