#include "f2b/closed_form.hpp"

#include <stdexcept>

namespace f2b {

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    // Prefix products are themselves binomials, so every division is exact.
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

long long predict_subspace(int r) {
    if (r < 0 || r > 62) throw std::invalid_argument("predict_subspace: r must be in [0, 62]");
    return (1LL << r) - 1;
}

IndependentPrediction predict_independent(int r, int n) {
    if (r < 0 || n < r || n > 62)
        throw std::invalid_argument("predict_independent: need 0 <= r <= n <= 62");
    if (r % 2 == 0) return {0, 0};
    const long long number = binomial(r, (r + 1) / 2);
    return {number, number << (n - r)};
}

namespace {

// (1 + (-1)^x) / 2: one on even x, zero on odd x.
long long parity_indicator(long long x) { return (x % 2 == 0) ? 1 : 0; }

}  // namespace

long long predict_one_relation(const OneRelationParams& p) {
    const int r = p.r;
    const int k = p.k;
    if (r < 2 || r % 2 != 0)
        throw std::invalid_argument("predict_one_relation: r must be even (the set has r + 2 members)");
    if (k < 1 || k > r)
        throw std::invalid_argument("predict_one_relation: k must be in [1, r]");

    const int half = r / 2;
    long long lo;
    long long hi;
    if (k < half) {
        lo = 0;
        hi = k;
    } else if (k == half) {
        lo = 1;
        hi = k;
    } else {
        lo = k - half + parity_indicator(k - half);
        hi = half + parity_indicator(half + 1);
    }
    if (lo > hi) return 0;

    long long total = 0;
    for (long long i = lo; i <= hi; ++i) {
        total += binomial(k, static_cast<int>(i)) *
                 binomial(r - k, static_cast<int>(half + parity_indicator(i) - i));
    }
    return total;
}

long long predict_fixing(int r, int f) {
    if (f < 0 || r < f || r > 62) throw std::invalid_argument("predict_fixing: need 0 <= f <= r <= 62");
    return (1LL << (r - f)) * ((1LL << f) - 1);
}

}  // namespace f2b
