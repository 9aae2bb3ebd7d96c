// exponent_assignment.cpp

#include "sierpinski/exponent_assignment.hpp"

#include <limits>

#include "sierpinski/errors.hpp"

namespace sierpinski {

u64 power_term(u64 p, unsigned t) {
    constexpr u64 kMax = std::numeric_limits<u64>::max();
    u64 power = 1;
    for (unsigned k = 0; k < t; ++k) {
        if (power > kMax / p) return kMax;
        power *= p;
    }
    return power - p;
}

void ExponentAssignment::set(std::size_t index, unsigned exponent) {
    if (index < 2) throw PreconditionError("exponent indices start at 2 (p_2 = 3)");
    if (exponent == 0) throw PreconditionError("exponents are positive");
    if (exponent == 1)
        entries_.erase(index);
    else
        entries_[index] = exponent;
}

unsigned ExponentAssignment::exponent(std::size_t index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? 1u : it->second;
}

u64 ExponentAssignment::value(const PrimeTable& primes) const {
    constexpr u64 kMax = std::numeric_limits<u64>::max();
    u64 total = 0;
    for (auto [i, t] : entries_) {
        const u64 term = power_term(primes.at(i), t);
        if (term == kMax || total > kMax - term) throw Error("assignment value overflows 64 bits");
        total += term;
    }
    return total;
}

std::strong_ordering ExponentAssignment::operator<=>(const ExponentAssignment& other) const {
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        // The first index present in only one map: the other side has t = 1 there.
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first))
            return std::strong_ordering::greater;
        if (a == entries_.end() || b->first < a->first) return std::strong_ordering::less;
        if (a->second != b->second) return a->second <=> b->second;
        ++a;
        ++b;
    }
    return std::strong_ordering::equal;
}

std::string ExponentAssignment::to_string(const PrimeTable& primes) const {
    if (entries_.empty()) return "0";
    std::string out;
    for (auto [i, t] : entries_) {
        if (!out.empty()) out += " + ";
        const auto p = std::to_string(primes.at(i));
        out += "(" + p + "^" + std::to_string(t) + " - " + p + ")";
    }
    return out;
}

}  // namespace sierpinski
