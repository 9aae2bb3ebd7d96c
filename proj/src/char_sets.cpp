// char_sets.cpp

#include "sierpinski/char_sets.hpp"

#include <algorithm>
#include <string>

#include "sierpinski/errors.hpp"

namespace sierpinski {

namespace {

constexpr std::size_t kULastIndex = 11;
constexpr std::size_t kHSingleLastIndex = 185;
constexpr std::size_t kHPairLastU = 105;
constexpr std::size_t kHPairLastV = 180;

// sums[l] = sums of l distinct offsets, clipped to [0, 1100]; stops at the
// first l with nothing left.
std::vector<EvenSet> count_sums(const std::vector<std::int64_t>& offsets) {
    std::vector<EvenSet> sums(1);
    sums[0].insert(0);
    for (auto d : offsets) {
        if (sums.back().min() && *sums.back().min() + d <= kUniverseHi) sums.emplace_back();
        for (std::size_t l = sums.size() - 1; l >= 1; --l) sums[l] |= sums[l - 1].shifted(d);
    }
    return sums;
}

void require_range(std::size_t s, std::size_t lo, std::size_t hi, const char* what) {
    if (s < lo || s > hi)
        throw PreconditionError(std::string(what) + " needs " + std::to_string(lo) + " <= s <= " +
                                std::to_string(hi) + ", got s = " + std::to_string(s));
}

std::int64_t as_signed(u64 v) { return static_cast<std::int64_t>(v); }

}  // namespace

USet build_U(const PrimeTable& primes) {
    const auto limit = static_cast<u64>(kUniverseHi);
    // terms[i - 2] lists p_i^k - p_i for k = 1, 2, ... while <= limit.
    std::vector<std::vector<u64>> terms;
    for (std::size_t i = 2; i <= kULastIndex; ++i) {
        std::vector<u64> row;
        for (unsigned k = 1;; ++k) {
            const u64 term = power_term(primes.at(i), k);
            if (term > limit) break;
            row.push_back(term);
        }
        terms.push_back(std::move(row));
    }

    USet out;
    std::vector<unsigned> exps(terms.size(), 1);
    auto dfs = [&](auto&& self, std::size_t pos, u64 sum) -> void {
        if (pos == terms.size()) {
            const auto v = as_signed(sum);
            if (out.set.insert(v) && !out.witnesses.contains(v)) {
                ExponentAssignment w;
                for (std::size_t k = 0; k < exps.size(); ++k) w.set(k + 2, exps[k]);
                out.witnesses.emplace(v, std::move(w));
            }
            return;
        }
        for (std::size_t k = 0; k < terms[pos].size(); ++k) {
            if (sum + terms[pos][k] > limit) break;
            exps[pos] = static_cast<unsigned>(k + 1);
            self(self, pos + 1, sum + terms[pos][k]);
        }
        exps[pos] = 1;
    };
    dfs(dfs, 0, 0);
    return out;
}

EvenSet build_V_exact(std::size_t s, const PrimeTable& primes, std::size_t exact_cap) {
    if (exact_cap > kMaxExactCap)
        throw PreconditionError("exact-V cap may not exceed " + std::to_string(kMaxExactCap));
    if (s > exact_cap && s >= 2)
        throw PreconditionError("s = " + std::to_string(s) + " is above the exact-V cap " +
                                std::to_string(exact_cap) + "; use build_V_truncated");
    require_range(s, 2, exact_cap, "build_V_exact");

    return build_V(s, primes);
}

EvenSet build_V(std::size_t s, const PrimeTable& primes) {
    if (s < 2) throw PreconditionError("build_V needs s >= 2");
    const std::int64_t boundary = as_signed(primes.at(s + 1));

    // Writing each addend as p_{s+1} + e and each subtrahend as p_{s+1} - d
    // (e > 0, d >= 0) turns a swap of l primes into e_1 + ... + e_l +
    // d_1 + ... + d_l. Offsets above 1100 can never take part.
    std::vector<std::int64_t> up, down;
    for (std::size_t i = s + 2;; ++i) {
        const auto e = as_signed(primes.at(i)) - boundary;
        if (e > kUniverseHi) break;
        up.push_back(e);
    }
    for (std::size_t j = s + 1; j >= 2; --j) {
        const auto d = boundary - as_signed(primes.at(j));
        if (d > kUniverseHi) break;
        down.push_back(d);
    }

    const auto up_sums = count_sums(up);
    const auto down_sums = count_sums(down);
    EvenSet out;
    for (std::size_t l = 0; l < up_sums.size() && l < down_sums.size(); ++l)
        out |= sumset(up_sums[l], down_sums[l]);
    return out;
}

EvenSet build_V_truncated(std::size_t s, std::size_t t, const PrimeTable& primes) {
    if (s < 2) throw PreconditionError("build_V_truncated needs s >= 2");
    if (t >= s)
        throw PreconditionError("truncation level t = " + std::to_string(t) + " must be below s = " +
                                std::to_string(s));
    const std::int64_t boundary = as_signed(primes.at(s + 1));

    // Same offsets as build_V: e_i = p_{s+2+i} - p_{s+1}, d_j = p_{s+1} - p_{s+1-j}.
    EvenSet up, down, up_pairs, down_pairs;
    std::vector<std::int64_t> e, d;
    for (std::size_t i = 0; i <= t; ++i) {
        const auto v = as_signed(primes.at(s + 2 + i)) - boundary;
        if (v > kUniverseHi) break;
        e.push_back(v);
    }
    for (std::size_t j = 0; j <= t; ++j) {
        const auto v = boundary - as_signed(primes.at(s + 1 - j));
        if (v > kUniverseHi) break;
        d.push_back(v);
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
        up.insert(e[a]);
        for (std::size_t b = a + 1; b < e.size() && e[a] + e[b] <= kUniverseHi; ++b) up_pairs.insert(e[a] + e[b]);
    }
    for (std::size_t a = 0; a < d.size(); ++a) {
        down.insert(d[a]);
        for (std::size_t b = a + 1; b < d.size() && d[a] + d[b] <= kUniverseHi; ++b)
            down_pairs.insert(d[a] + d[b]);
    }
    return sumset(up, down) | sumset(up_pairs, down_pairs);
}

EvenSet build_H(std::size_t s, const PrimeTable& primes) {
    require_range(s, 2, kHLastS, "build_H");
    EvenSet out;
    for (std::size_t i = 2; i <= s + 1; ++i)
        for (std::size_t j = s + 2; j <= kHSingleLastIndex; ++j)
            out.insert(as_signed(primes.at(j)) - as_signed(primes.at(i)));
    const auto base = as_signed(primes.at(s)) + as_signed(primes.at(s + 1));
    for (std::size_t u = s; u <= kHPairLastU; ++u)
        for (std::size_t v = u + 1; v <= kHPairLastV; ++v)
            out.insert(as_signed(primes.at(u)) + as_signed(primes.at(v)) - base);
    return out;
}

EvenSet build_A(const EvenSet& u) {
    return EvenSet::interval(2, kUniverseHi) - u;
}

void reserve_for_sets(PrimeTable& primes, std::size_t s_max) {
    primes.reserve_count(std::max<std::size_t>(2 * s_max + 3, kHSingleLastIndex + 1));
    primes.reserve_value(primes.at(s_max + 1) + static_cast<u64>(kUniverseHi));
}

HCoverage check_H_coverage(std::size_t s, const PrimeTable& primes) {
    HCoverage cov;
    cov.s = s;
    const auto h = build_H(s, primes);
    const auto start = as_signed(primes.at(s + 2));
    cov.from = start + (start & 1);
    for (auto v = cov.from; v <= kUniverseHi; v += 2)
        if (!h.contains(v)) cov.missing.push_back(v);
    cov.endpoint_missing = !cov.missing.empty() && cov.missing.front() == cov.from;
    return cov;
}

}  // namespace sierpinski
