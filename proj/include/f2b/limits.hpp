#pragma once

namespace f2b {

/// Guards for the exponential-cost paths. The coset method sweeps 2^rank
/// linear systems, the spectrum method materializes a 2^n table, and
/// subspace enumeration yields 2^dimension members; each is refused past
/// its limit instead of silently truncating.
struct Limits {
    int max_rank = 24;
    int max_spectrum_n = 24;
    int max_enumeration = 24;
};

}  // namespace f2b
