// repr.hpp
// Representations of even numbers as sums of (p_i^{t_i} - p_i), i >= 2.
//
// The witness tables W_4 ... W_12 certify every even number in [1102, 3858];
// larger even numbers are reduced into that window one square at a time.
// 1100 is the largest even number with no representation.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "sierpinski/exponent_assignment.hpp"
#include "sierpinski/primes.hpp"

namespace sierpinski {

inline constexpr u64 kReprWindowLo = 1102;
inline constexpr u64 kReprWindowHi = 3858;
inline constexpr u64 kLargestUnrepresentable = 1100;
inline constexpr std::size_t kFirstWitnessLevel = 4;
inline constexpr std::size_t kLastWitnessLevel = 12;

class WitnessTables {
public:
    // Builds W_4 from the three explicit power lists for 3, 5 and 7, then
    // W_i = W_{i-1} + {0, p_i^2 - p_i} for i = 5..12. Each value keeps its
    // lexicographically smallest witness.
    explicit WitnessTables(const PrimeTable& primes);

    const std::map<u64, ExponentAssignment>& level(std::size_t i) const;
    bool contains(std::size_t level, u64 value) const;
    const ExponentAssignment* witness(std::size_t level, u64 value) const;

private:
    std::array<std::map<u64, ExponentAssignment>, kLastWitnessLevel + 1> levels_;
};

// An assignment whose value is n, for even n >= 1102. Above 3858 each step
// peels off p_u^2 - p_u with p_u^2 - p_u <= n - 1102 < p_{u+1}^2 - p_{u+1}
// and checks that the remainder's witness leaves t_u = 1.
ExponentAssignment decompose_even(u64 n, const WitnessTables& tables, const PrimeTable& primes);

// Number of reduction steps decompose_even takes before reaching the table.
std::size_t decompose_depth(u64 n, const PrimeTable& primes);

struct Lemma2Report {
    bool passed = true;
    std::size_t covered_evens = 0;
    std::vector<u64> window_gaps;        // evens in [1102, 3858] missing from W_12
    bool excludes_1100 = false;           // 1100 not in W_12
    bool enumeration_avoids_1100 = false;  // bounded exponent search never hits 1100
    bool enumeration_matches_table = false;
    std::size_t enumerated_assignments = 0;
};

Lemma2Report verify_lemma2_window(const WitnessTables& tables, const PrimeTable& primes);

// Every value <= limit of sum_{i=2}^{11} (p_i^{t_i} - p_i) with the exponent
// caps forced by p_i^{t_i} - p_i <= limit, found by brute-force enumeration.
std::vector<u64> enumerate_bounded_assignments(const PrimeTable& primes, u64 limit,
                                               std::size_t* visited = nullptr);

}  // namespace sierpinski
