#pragma once

namespace f2b {

/// Exact binomial coefficient; zero outside 0 <= k <= n. The zero convention
/// lets summation bounds brush past the ends without special cases.
long long binomial(int n, int k);

/// b(S) for an r-dimensional subspace (or any affine space of rank r).
long long predict_subspace(int r);

struct IndependentPrediction {
    long long number;        // b(S)
    long long member_count;  // #B(S)
};

/// b(S) and #B(S) for S = {0} plus r independent vectors inside F_2^n.
/// Odd r gives binom(r, (r+1)/2) pieces; even r balances nothing.
IndependentPrediction predict_independent(int r, int n);

struct OneRelationParams {
    int r;  // rank; the set has r + 2 members, so r must be even
    int k;  // coefficient weight of the one dependent member, 2 <= k <= r
};

/// b(S) for S = {0, s_1, ..., s_r, s} with s the sum of k of the s_i.
long long predict_one_relation(const OneRelationParams& p);

/// The complement-of-H contribution 2^(r-f) * (2^f - 1) for a set fixed by
/// an f-dimensional subspace; when the class count is odd this is all of
/// b(S), otherwise the quotient's own balancing count adds on top.
long long predict_fixing(int r, int f);

}  // namespace f2b
