// char_sets.hpp
// The even sets behind the exact formula for c_s, all over [-2, 1100]:
//
//   U        sum_{i=2}^{11} (p_i^{k_i} - p_i) <= 1100
//   V_s      p_{i_1}+...+p_{i_l} - p_{j_1}-...-p_{j_l} <= 1100,
//            2 <= j_1 < ... < j_l <= s+1 < i_1 < ... < i_l   (l = 0 gives 0)
//   V_s(t)   one- and two-prime swaps whose offsets from the s+1 / s+2
//            boundary are at most t (0 is not a member)
//   H(s)     single swaps with j <= 185 and the pair family
//            p_u + p_v - p_s - p_{s+1}, s <= u <= 105, u < v <= 180
//   A        ([2, 1100] even) \ U
//
// Builders only read the prime table; size it first with reserve_for_sets.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sierpinski/even_set.hpp"
#include "sierpinski/exponent_assignment.hpp"
#include "sierpinski/primes.hpp"

namespace sierpinski {

inline constexpr std::size_t kDefaultExactCap = 182;
inline constexpr std::size_t kMaxExactCap = 200;
inline constexpr std::size_t kHLastS = 182;

struct USet {
    EvenSet set;
    std::map<std::int64_t, ExponentAssignment> witnesses;  // one per member
};

// Depth-first over k_2..k_11 in ascending exponent order, so the stored
// witness for each value is the lexicographically smallest one.
USet build_U(const PrimeTable& primes);

// Exact V_s for any s >= 2. With e = p_i - p_{s+1} and d = p_{s+1} - p_j
// every swap of l primes is a sum of l distinct e's and l distinct d's, so
// only primes within 1100 of p_{s+1} matter.
EvenSet build_V(std::size_t s, const PrimeTable& primes);

// build_V restricted to the configured exact-mode range. Throws
// PreconditionError if s < 2 or s > exact_cap.
EvenSet build_V_exact(std::size_t s, const PrimeTable& primes,
                      std::size_t exact_cap = kDefaultExactCap);

// V_s(t). Requires s >= 2 and 0 <= t <= s - 1.
EvenSet build_V_truncated(std::size_t s, std::size_t t, const PrimeTable& primes);

// H(s) for 2 <= s <= 182.
EvenSet build_H(std::size_t s, const PrimeTable& primes);

// ([2, 1100] even) \ U.
EvenSet build_A(const EvenSet& u);

// Grows the table so every builder and solver call for indices up to s_max
// (and truncation up to t = s_max - 1) finds its primes.
void reserve_for_sets(PrimeTable& primes, std::size_t s_max);

struct HCoverage {
    std::size_t s = 0;
    std::int64_t from = 0;  // smallest even >= p_{s+2}
    std::vector<std::int64_t> missing;
    bool endpoint_missing = false;  // the lower endpoint itself is absent
    bool passed() const { return missing.empty(); }
};

// Checks that every even in [p_{s+2}, 1100] lies in H(s).
HCoverage check_H_coverage(std::size_t s, const PrimeTable& primes);

}  // namespace sierpinski
