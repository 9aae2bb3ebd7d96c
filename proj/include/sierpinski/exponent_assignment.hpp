// exponent_assignment.hpp
// A finite exponent tuple (t_i) standing for the sum of (p_i^{t_i} - p_i).
// Indices without an entry have t_i = 1 and contribute nothing.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "sierpinski/primes.hpp"

namespace sierpinski {

class ExponentAssignment {
public:
    using Entries = std::map<std::size_t, unsigned>;

    ExponentAssignment() = default;

    // Sets t_index. t = 1 erases the entry; index must be >= 2 and t >= 1.
    void set(std::size_t index, unsigned exponent);

    // t_index, 1 when absent.
    unsigned exponent(std::size_t index) const;

    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // Sum of p_i^{t_i} - p_i. Throws CapacityError if an index is not in
    // the table and Error on 64-bit overflow.
    u64 value(const PrimeTable& primes) const;

    // Lexicographic order on the dense tuple (t_2, t_3, ...).
    std::strong_ordering operator<=>(const ExponentAssignment& other) const;
    bool operator==(const ExponentAssignment& other) const = default;

    // "(3^2 - 3) + (53^2 - 53)", or "0" when empty.
    std::string to_string(const PrimeTable& primes) const;

private:
    Entries entries_;
};

// p^t - p, saturating at UINT64_MAX.
u64 power_term(u64 p, unsigned t);

}  // namespace sierpinski
