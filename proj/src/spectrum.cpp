#include "f2b/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "f2b/errors.hpp"

namespace f2b {

namespace {

void check_spectrum_width(int n, const Limits& limits) {
    if (n > limits.max_spectrum_n)
        throw GuardError("spectrum guard: width " + std::to_string(n) + " exceeds limit " +
                         std::to_string(limits.max_spectrum_n) +
                         " (raise with --max-spectrum-n)");
}

SpectrumTable transform_counts(int n, std::vector<int64_t> counts) {
    wht_in_place(counts);
    return SpectrumTable{n, std::move(counts)};
}

BalanceStructure analyze_table(const SpectrumTable& table) {
    const int n = table.width;
    const long long total = table.total();
    const size_t len = table.sums.size();

    std::vector<BitVec> constant_members;
    for (size_t i = 0; i < len; ++i) {
        if (table.sums[i] == total || -table.sums[i] == total)
            constant_members.emplace_back(n, static_cast<uint64_t>(i));
    }
    Subspace constant_space = Subspace::from_rows(n, constant_members);

    std::vector<uint64_t> zeros;
    for (size_t i = 1; i < len; ++i) {
        if (table.sums[i] == 0) zeros.push_back(static_cast<uint64_t>(i));
    }

    std::vector<uint64_t> reps(zeros);
    for (uint64_t& z : reps) {
        for (const BitVec& row : constant_space.basis()) {
            if (z >> (std::bit_width(row.bits()) - 1) & 1) z ^= row.bits();
        }
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    if (zeros.size() != reps.size() << constant_space.dimension())
        throw std::logic_error("internal consistency failure: spectrum zeros do not fill "
                               "whole cosets of the constant space");

    BalanceStructure out;
    out.balancing_reps.reserve(reps.size());
    for (uint64_t rep : reps) out.balancing_reps.emplace_back(n, rep);
    out.balancing_number = static_cast<long long>(reps.size());
    out.rank = n - constant_space.dimension();
    out.constant_space = std::move(constant_space);
    out.method = BalanceMethod::spectrum;
    return out;
}

}  // namespace

void wht_in_place(std::span<int64_t> values) {
    const size_t len = values.size();
    if (len == 0 || (len & (len - 1)) != 0)
        throw std::invalid_argument("wht: length must be a power of two");
    for (size_t h = 1; h < len; h <<= 1) {
        for (size_t base = 0; base < len; base += h << 1) {
            for (size_t j = base; j < base + h; ++j) {
                const int64_t a = values[j];
                const int64_t b = values[j + h];
                values[j] = a + b;
                values[j + h] = a - b;
            }
        }
    }
}

std::vector<int64_t> wht(std::vector<int64_t> values) {
    wht_in_place(values);
    return values;
}

SpectrumTable spectrum_of(const VectorSet& s, const Limits& limits) {
    check_spectrum_width(s.width(), limits);
    std::vector<int64_t> counts(size_t{1} << s.width(), 0);
    for (const BitVec& v : s.members()) counts[v.bits()] = 1;
    return transform_counts(s.width(), std::move(counts));
}

SpectrumTable spectrum_of(const BoolMultiset& m, const Limits& limits) {
    check_spectrum_width(m.width(), limits);
    std::vector<int64_t> counts(size_t{1} << m.width(), 0);
    for (const auto& [key, count] : m.entries()) counts[key.bits()] = count;
    return transform_counts(m.width(), std::move(counts));
}

BalanceStructure spectrum_analysis(const VectorSet& s, const Limits& limits) {
    return analyze_table(spectrum_of(s, limits));
}

BalanceStructure spectrum_analysis(const BoolMultiset& m, const Limits& limits) {
    return analyze_table(spectrum_of(m, limits));
}

int hadamard_sign(uint64_t ix, uint64_t iy, int n) {
    if (n < 1 || n > kMaxWidth) throw std::invalid_argument("hadamard_sign: n must be in [1, 64]");
    if (n < 64 && ((ix >> n) != 0 || (iy >> n) != 0))
        throw std::out_of_range("hadamard_sign: index out of range for n");
    return (std::popcount(ix & iy) & 1) ? -1 : 1;
}

}  // namespace f2b
