// primes.cpp
// Segmented sieve, primality test and the indexed prime table.

#include "sierpinski/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sierpinski/errors.hpp"

namespace sierpinski {

namespace {

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<u64> small_primes(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& sink,
                    std::size_t segment_size) {
    if (hi < 2 || lo > hi) return;
    if (segment_size == 0) throw PreconditionError("segment size must be positive");
    lo = std::max<u64>(lo, 2);

    const auto base = small_primes(isqrt(hi));
    std::vector<char> sieve(segment_size);

    for (u64 low = lo; low <= hi;) {
        const u64 high = std::min<u64>(hi, low + segment_size - 1);
        std::fill(sieve.begin(), sieve.begin() + static_cast<std::ptrdiff_t>(high - low + 1), 1);
        for (u64 p : base) {
            if (p * p > high) break;
            u64 start = std::max(p * p, (low + p - 1) / p * p);
            for (u64 j = start; j <= high; j += p) sieve[j - low] = 0;
        }
        for (u64 n = low; n <= high; ++n)
            if (sieve[n - low]) sink(n);
        if (high == hi) break;
        low = high + 1;
    }
}

std::vector<u64> primes_upto(u64 x, std::size_t segment_size) {
    std::vector<u64> out;
    for_each_prime(2, x, [&](u64 p) { out.push_back(p); }, segment_size);
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool has_prime_in_lemma1_interval(u64 x) {
    if (x <= 24) throw PreconditionError("the interval (x, sqrt(3/2) x] is only checked for x > 24, got " + std::to_string(x));
    using u128 = unsigned __int128;
    const u128 bound = u128{3} * x * x;
    for (u64 p = x + 1;; ++p) {
        if (u128{2} * p * p > bound) return false;
        if (is_prime(p)) return true;
    }
}

PrimeTable::PrimeTable(std::size_t hard_limit, std::size_t segment_size)
    : hard_limit_(hard_limit), segment_size_(segment_size) {
    if (hard_limit_ < 2) throw PreconditionError("prime hard limit must be at least 2");
    grow_to(std::min<std::size_t>(64, hard_limit_));
}

PrimeTable PrimeTable::from_primes(std::vector<u64> primes, std::size_t hard_limit,
                                   std::size_t segment_size) {
    if (primes.size() < 2 || primes[0] != 2 || primes[1] != 3)
        throw PreconditionError("prime list must start 2, 3");
    if (!std::is_sorted(primes.begin(), primes.end(), std::less_equal<>{}))
        throw PreconditionError("prime list must be strictly increasing");
    PrimeTable table(std::max(hard_limit, primes.size()), segment_size);
    if (primes.size() > table.values_.size()) table.values_ = std::move(primes);
    return table;
}

void PrimeTable::grow_to(std::size_t count) {
    if (count <= values_.size()) return;
    if (count > hard_limit_)
        throw CapacityError("prime index " + std::to_string(count) + " exceeds hard limit " +
                            std::to_string(hard_limit_));
    std::size_t target = std::max<std::size_t>(count, values_.size() * 2);
    target = std::min(target, hard_limit_);

    // p_n < n (ln n + ln ln n) for n >= 6.
    const double n = std::max<double>(static_cast<double>(target), 6.0);
    u64 bound = static_cast<u64>(n * (std::log(n) + std::log(std::log(n)))) + 16;
    std::vector<u64> fresh;
    fresh.reserve(target);
    for_each_prime(2, bound, [&](u64 p) {
        if (fresh.size() < target) fresh.push_back(p);
    }, segment_size_);
    if (fresh.size() < target) throw InvariantError("prime upper bound too small");
    values_ = std::move(fresh);
}

u64 PrimeTable::nth_prime(std::size_t i) {
    if (i == 0) throw PreconditionError("prime indices start at 1");
    grow_to(i);
    return values_[i - 1];
}

u64 PrimeTable::at(std::size_t i) const {
    if (i == 0) throw PreconditionError("prime indices start at 1");
    if (i > values_.size())
        throw CapacityError("prime index " + std::to_string(i) + " not covered (table holds " +
                            std::to_string(values_.size()) + ")");
    return values_[i - 1];
}

void PrimeTable::reserve_count(std::size_t count) { grow_to(count); }

void PrimeTable::reserve_value(u64 value) {
    while (values_.back() <= value) {
        if (values_.size() == hard_limit_)
            throw CapacityError("primes up to " + std::to_string(value) + " exceed hard limit " +
                                std::to_string(hard_limit_));
        grow_to(std::min(values_.size() * 2, hard_limit_));
    }
}

std::optional<std::size_t> PrimeTable::index_of(u64 p) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), p);
    if (it == values_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - values_.begin()) + 1;
}

std::size_t PrimeTable::count_upto(u64 value) const {
    if (values_.back() <= value)
        throw CapacityError("prime table does not cover " + std::to_string(value));
    return static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), value) -
                                    values_.begin());
}

std::optional<std::size_t> PrimeTable::first_gap_exceeding(u64 g, std::size_t j_limit) {
    grow_to(j_limit + 1);
    for (std::size_t j = 1; j <= j_limit; ++j)
        if (values_[j] - values_[j - 1] > g) return j;
    return std::nullopt;
}

}  // namespace sierpinski
