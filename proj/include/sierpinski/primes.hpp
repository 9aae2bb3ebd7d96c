// primes.hpp
// Consecutive-prime generation and the indexed prime table.
//
// Indices are 1-based throughout: nth_prime(1) == 2, nth_prime(2) == 3.
// The table grows on demand by doubling, up to a hard limit on the number
// of stored primes. Once sized, a const PrimeTable is safe to share across
// threads; only the growing calls mutate it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sierpinski {

using u64 = std::uint64_t;

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultPrimeHardLimit = std::size_t{1} << 25;

// Calls `sink` for every prime in [lo, hi] in ascending order. Memory use is
// bounded by the segment size plus the primes up to sqrt(hi).
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& sink,
                    std::size_t segment_size = kDefaultSegmentSize);

// All primes <= x, ascending.
std::vector<u64> primes_upto(u64 x, std::size_t segment_size = kDefaultSegmentSize);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

// True iff some prime p satisfies x < p <= sqrt(3/2) * x, decided with the
// exact test 2p^2 <= 3x^2. Requires x > 24.
bool has_prime_in_lemma1_interval(u64 x);

class PrimeTable {
public:
    explicit PrimeTable(std::size_t hard_limit = kDefaultPrimeHardLimit,
                        std::size_t segment_size = kDefaultSegmentSize);

    // Builds a table from an existing prime list (e.g. a cache). The list is
    // checked for being strictly increasing and starting 2, 3.
    static PrimeTable from_primes(std::vector<u64> primes,
                                  std::size_t hard_limit = kDefaultPrimeHardLimit,
                                  std::size_t segment_size = kDefaultSegmentSize);

    // p_i, growing the table if needed. Throws CapacityError past the hard limit.
    u64 nth_prime(std::size_t i);

    // p_i without growing. Throws CapacityError if i is not yet covered.
    u64 at(std::size_t i) const;

    // p_{i+1} - p_i.
    u64 gap_after(std::size_t i) const { return at(i + 1) - at(i); }

    // Makes indices 1..count available.
    void reserve_count(std::size_t count);

    // Makes every prime <= value available (plus the next one above it).
    void reserve_value(u64 value);

    // Index of p if p is a tabulated prime.
    std::optional<std::size_t> index_of(u64 p) const;

    // Largest index i with p_i <= value, or 0 if value < 2. Needs coverage.
    std::size_t count_upto(u64 value) const;

    // Smallest j <= j_limit with p_{j+1} - p_j > g.
    std::optional<std::size_t> first_gap_exceeding(u64 g, std::size_t j_limit);

    std::size_t size() const { return values_.size(); }
    std::size_t hard_limit() const { return hard_limit_; }
    std::span<const u64> values() const { return values_; }

private:
    void grow_to(std::size_t count);

    std::vector<u64> values_;
    std::size_t hard_limit_;
    std::size_t segment_size_;
};

// Flat prime cache: 8-byte magic "CPSMPRM1", little-endian u64 count, then
// `count` little-endian u64 primes.
inline constexpr char kPrimeCacheMagic[8] = {'C', 'P', 'S', 'M', 'P', 'R', 'M', '1'};

void write_prime_cache(const std::filesystem::path& file, std::span<const u64> primes);

// Returns the cached primes, or nullopt if the file is missing, truncated,
// carries the wrong magic or is not an increasing list starting 2, 3.
std::optional<std::vector<u64>> read_prime_cache(const std::filesystem::path& file);

// Loads `dir/primes.bin` if it covers `min_count` primes; otherwise builds a
// fresh table of that size and rewrites the cache.
PrimeTable load_or_build_table(const std::filesystem::path& dir, std::size_t min_count,
                               std::size_t hard_limit = kDefaultPrimeHardLimit);

}  // namespace sierpinski
