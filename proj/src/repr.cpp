// repr.cpp

#include "sierpinski/repr.hpp"

#include <algorithm>
#include <string>

#include "sierpinski/errors.hpp"

namespace sierpinski {

namespace {

// Exponent ranges of the three explicit lists that seed W_4.
struct SeedRange {
    std::size_t index;
    unsigned max_exponent;
};
constexpr std::array<SeedRange, 3> kSeed = {{{2, 7}, {3, 4}, {4, 3}}};

void keep_smaller(std::map<u64, ExponentAssignment>& level, u64 value, ExponentAssignment w) {
    auto [it, inserted] = level.try_emplace(value, w);
    if (!inserted && w < it->second) it->second = std::move(w);
}

u64 square_term(const PrimeTable& primes, std::size_t i) {
    const u64 p = primes.at(i);
    return p * p - p;
}

// Largest u with p_u^2 - p_u <= bound.
std::size_t largest_square_index(u64 bound, const PrimeTable& primes) {
    const auto values = primes.values();
    const u64 last = values.back();
    if (last * last - last <= bound)
        throw CapacityError("prime table too short to reduce " + std::to_string(bound));
    auto it = std::partition_point(values.begin(), values.end(),
                                   [bound](u64 p) { return p * p - p <= bound; });
    return static_cast<std::size_t>(it - values.begin());
}

}  // namespace

WitnessTables::WitnessTables(const PrimeTable& primes) {
    auto& w4 = levels_[kFirstWitnessLevel];
    for (unsigned a = 1; a <= kSeed[0].max_exponent; ++a)
        for (unsigned b = 1; b <= kSeed[1].max_exponent; ++b)
            for (unsigned c = 1; c <= kSeed[2].max_exponent; ++c) {
                ExponentAssignment w;
                w.set(kSeed[0].index, a);
                w.set(kSeed[1].index, b);
                w.set(kSeed[2].index, c);
                const u64 value = w.value(primes);
                keep_smaller(w4, value, std::move(w));
            }

    for (std::size_t i = kFirstWitnessLevel + 1; i <= kLastWitnessLevel; ++i) {
        const u64 step = square_term(primes, i);
        auto next = levels_[i - 1];
        for (const auto& [value, w] : levels_[i - 1]) {
            ExponentAssignment lifted = w;
            lifted.set(i, 2);
            keep_smaller(next, value + step, std::move(lifted));
        }
        levels_[i] = std::move(next);
    }
}

const std::map<u64, ExponentAssignment>& WitnessTables::level(std::size_t i) const {
    if (i < kFirstWitnessLevel || i > kLastWitnessLevel)
        throw PreconditionError("witness levels run from 4 to 12, got " + std::to_string(i));
    return levels_[i];
}

bool WitnessTables::contains(std::size_t lvl, u64 value) const {
    return level(lvl).contains(value);
}

const ExponentAssignment* WitnessTables::witness(std::size_t lvl, u64 value) const {
    const auto& l = level(lvl);
    auto it = l.find(value);
    return it == l.end() ? nullptr : &it->second;
}

ExponentAssignment decompose_even(u64 n, const WitnessTables& tables, const PrimeTable& primes) {
    if (n % 2 != 0 || n < kReprWindowLo)
        throw PreconditionError("decompose_even needs an even n >= 1102, got " + std::to_string(n));

    std::vector<std::size_t> peeled;
    u64 rest = n;
    while (rest > kReprWindowHi) {
        const auto u = largest_square_index(rest - kReprWindowLo, primes);
        peeled.push_back(u);
        rest -= square_term(primes, u);
    }

    const auto* base = tables.witness(kLastWitnessLevel, rest);
    if (base == nullptr)
        throw InvariantError("W_12 has no witness for " + std::to_string(rest));
    ExponentAssignment out = *base;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        if (out.exponent(*it) != 1)
            throw InvariantError("reduction reused index " + std::to_string(*it) + " while decomposing " +
                                 std::to_string(n));
        out.set(*it, 2);
    }
    return out;
}

std::size_t decompose_depth(u64 n, const PrimeTable& primes) {
    if (n % 2 != 0 || n < kReprWindowLo)
        throw PreconditionError("decompose_depth needs an even n >= 1102, got " + std::to_string(n));
    std::size_t depth = 0;
    while (n > kReprWindowHi) {
        n -= square_term(primes, largest_square_index(n - kReprWindowLo, primes));
        ++depth;
    }
    return depth;
}

std::vector<u64> enumerate_bounded_assignments(const PrimeTable& primes, u64 limit,
                                               std::size_t* visited) {
    // Indices whose square term fits under the limit; all others have t = 1.
    std::vector<std::vector<u64>> options;
    for (std::size_t i = 2; square_term(primes, i) <= limit; ++i) {
        std::vector<u64> terms{0};
        for (unsigned t = 2;; ++t) {
            const u64 term = power_term(primes.at(i), t);
            if (term > limit) break;
            terms.push_back(term);
        }
        options.push_back(std::move(terms));
    }

    std::vector<u64> sums{0};
    std::size_t count = 1;
    for (const auto& terms : options) {
        std::vector<u64> next;
        next.reserve(sums.size() * terms.size());
        for (u64 s : sums)
            for (u64 term : terms) next.push_back(s + term);
        sums = std::move(next);
        count = sums.size();
    }
    if (visited) *visited = count;

    std::vector<u64> out;
    for (u64 s : sums)
        if (s <= limit) out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Lemma2Report verify_lemma2_window(const WitnessTables& tables, const PrimeTable& primes) {
    Lemma2Report report;
    for (u64 n = kReprWindowLo; n <= kReprWindowHi; n += 2) {
        if (tables.contains(kLastWitnessLevel, n))
            ++report.covered_evens;
        else
            report.window_gaps.push_back(n);
    }
    report.excludes_1100 = !tables.contains(kLastWitnessLevel, kLargestUnrepresentable);

    const auto enumerated =
        enumerate_bounded_assignments(primes, kLargestUnrepresentable, &report.enumerated_assignments);
    report.enumeration_avoids_1100 =
        !std::binary_search(enumerated.begin(), enumerated.end(), kLargestUnrepresentable);

    std::vector<u64> table_part;
    for (const auto& [value, w] : tables.level(kLastWitnessLevel)) {
        if (value > kLargestUnrepresentable) break;
        table_part.push_back(value);
    }
    report.enumeration_matches_table = table_part == enumerated;

    report.passed = report.window_gaps.empty() && report.excludes_1100 &&
                    report.enumeration_avoids_1100 && report.enumeration_matches_table;
    return report;
}

}  // namespace sierpinski
