// oracles.hpp
// Reference computations shared by the tests. They follow the definitions
// directly and avoid the library's set algebra.

#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <tuple>
#include <vector>

#include "sierpinski/even_set.hpp"
#include "sierpinski/primes.hpp"

namespace oracles {

inline bool trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// First `count` primes by trial division.
inline std::vector<std::int64_t> first_primes(std::size_t count) {
    std::vector<std::int64_t> out;
    for (std::uint64_t n = 2; out.size() < count; ++n)
        if (trial_division(n)) out.push_back(static_cast<std::int64_t>(n));
    return out;
}

inline std::vector<std::int64_t> appendix_listing() {
    std::ifstream in(std::string(SIERPINSKI_DATA_DIR) + "/appendix_U.txt");
    std::vector<std::int64_t> out;
    for (std::int64_t v; in >> v;) out.push_back(v);
    return out;
}

// V_s by walking the sorted pairing (j_1 < ... < j_l) against
// (i_1 < ... < i_l). Each step either skips the next subtrahend, skips the
// next addend, or pairs them; every paired term is positive, so partial sums
// never exceed the final value, and no paired prime can sit more than 1100
// away from p_{s+1}. States (j, i, sum) are visited once. p(i) is the i-th
// prime, 1-based.
template <class PrimeAt>
sierpinski::EvenSet v_exact_by_pairing(std::size_t s, PrimeAt p) {
    const std::int64_t limit = 1100;
    std::size_t i_end = s + 2;
    while (p(i_end) <= p(s + 1) + limit) ++i_end;

    std::size_t j_begin = s + 1;
    while (j_begin > 2 && p(s + 1) - p(j_begin - 1) <= limit) --j_begin;

    const std::size_t nj = s + 3 - j_begin, ni = i_end - s - 1, nsum = limit / 2 + 1;
    std::vector<bool> seen(nj * ni * nsum);
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> stack{{j_begin, s + 2, 0}};
    sierpinski::EvenSet out;
    while (!stack.empty()) {
        const auto [j, i, sum] = stack.back();
        stack.pop_back();
        const std::size_t key = ((j - j_begin) * ni + (i - s - 2)) * nsum + static_cast<std::size_t>(sum / 2);
        if (seen[key]) continue;
        seen[key] = true;
        out.insert(sum);
        if (j > s + 1 || i >= i_end) continue;
        stack.emplace_back(j + 1, i, sum);
        stack.emplace_back(j, i + 1, sum);
        const auto next = sum + p(i) - p(j);
        if (next <= limit) stack.emplace_back(j + 1, i + 1, next);
    }
    return out;
}

// c_s straight from the definition: the largest even 2n <= min(1100, p_{s+2})
// with no u in the listing and v in V_s summing to it; -2 if none.
template <class PrimeAt>
std::int64_t c_by_definition(std::size_t s, PrimeAt p) {
    const auto u = appendix_listing();
    const auto v = v_exact_by_pairing(s, p).members();
    const std::int64_t cap = std::min<std::int64_t>(1100, p(s + 2));
    for (std::int64_t x = cap - (cap & 1); x >= 0; x -= 2) {
        bool covered = false;
        for (auto a : u) {
            if (a > x) break;
            for (auto b : v) {
                if (a + b > x) break;
                if (a + b == x) {
                    covered = true;
                    break;
                }
            }
            if (covered) break;
        }
        if (!covered) return x;
    }
    return -2;
}

}  // namespace oracles
