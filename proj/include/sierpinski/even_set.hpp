// even_set.hpp
// Packed bit set over the even integers of a closed range [lo, hi].
//
// Slot k stands for the value lo + 2k. The default universe [-2, 1100]
// has 552 slots and holds every set the characterization needs.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sierpinski {

inline constexpr std::int64_t kUniverseLo = -2;
inline constexpr std::int64_t kUniverseHi = 1100;

class EvenSet {
public:
    EvenSet() : EvenSet(kUniverseLo, kUniverseHi) {}
    EvenSet(std::int64_t lo, std::int64_t hi);

    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    std::size_t slots() const { return slots_; }

    bool in_range(std::int64_t v) const { return v >= lo_ && v <= hi_ && (v & 1) == 0; }
    bool contains(std::int64_t v) const;

    // Values outside the universe or odd values are ignored; returns whether
    // the value was stored.
    bool insert(std::int64_t v);
    void erase(std::int64_t v);

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::optional<std::int64_t> max() const;
    std::optional<std::int64_t> min() const;
    std::vector<std::int64_t> members() const;

    EvenSet& operator|=(const EvenSet& other);
    EvenSet& operator&=(const EvenSet& other);
    EvenSet& operator-=(const EvenSet& other);  // set difference
    friend EvenSet operator|(EvenSet a, const EvenSet& b) { return a |= b; }
    friend EvenSet operator&(EvenSet a, const EvenSet& b) { return a &= b; }
    friend EvenSet operator-(EvenSet a, const EvenSet& b) { return a -= b; }

    bool operator==(const EvenSet& other) const = default;
    bool is_subset_of(const EvenSet& other) const;

    // Every even value in [from, to] clipped to the universe.
    static EvenSet interval(std::int64_t from, std::int64_t to,
                            std::int64_t lo = kUniverseLo, std::int64_t hi = kUniverseHi);

    // Members shifted by an even offset, dropping what leaves the universe.
    EvenSet shifted(std::int64_t offset) const;

private:
    void check_compatible(const EvenSet& other) const;
    void trim();

    std::int64_t lo_;
    std::int64_t hi_;
    std::size_t slots_;
    std::vector<std::uint64_t> words_;
};

// {x + y : x in X, y in Y, x + y <= cap}. Computed as a union of shifted
// copies of X, one per member of Y. Both sets must share a universe.
EvenSet sumset(const EvenSet& x, const EvenSet& y, std::int64_t cap = kUniverseHi);

}  // namespace sierpinski
