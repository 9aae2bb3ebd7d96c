#include <doctest.h>

#include <random>
#include <set>

#include "sierpinski/errors.hpp"
#include "sierpinski/repr.hpp"

using namespace sierpinski;

namespace {

struct Fixture {
    PrimeTable primes;
    WitnessTables tables;
};

const Fixture& fixture() {
    static const Fixture f = [] {
        PrimeTable primes;
        primes.reserve_count(5000);  // p_5000 = 48611, enough for n up to 10^9
        WitnessTables tables(primes);
        return Fixture{std::move(primes), std::move(tables)};
    }();
    return f;
}

}  // namespace

TEST_CASE("exponent assignment normalizes t = 1 away") {
    ExponentAssignment w;
    w.set(3, 2);
    w.set(5, 1);
    CHECK(w.entries().size() == 1);
    CHECK(w.exponent(5) == 1);
    w.set(3, 1);
    CHECK(w.empty());
    CHECK_THROWS_AS(w.set(1, 2), PreconditionError);
    CHECK_THROWS_AS(w.set(4, 0), PreconditionError);
}

TEST_CASE("exponent assignment order is lexicographic on (t_2, t_3, ...)") {
    ExponentAssignment a, b;
    a.set(2, 2);  // (2, 1, 1, ...)
    b.set(3, 5);  // (1, 5, 1, ...)
    CHECK(b < a);
    ExponentAssignment c;
    c.set(2, 2);
    c.set(7, 2);
    CHECK(a < c);
    CHECK(ExponentAssignment{} < b);
    const auto& p = fixture().primes;
    CHECK(c.value(p) == 6 + 272);
}

TEST_CASE("W_4 is the three-way sumset of the seed lists") {
    const std::vector<u64> threes = {0, 6, 24, 78, 240, 726, 2184};
    const std::vector<u64> fives = {0, 20, 120, 620};
    const std::vector<u64> sevens = {0, 42, 336};
    std::set<u64> expected;
    for (auto a : threes)
        for (auto b : fives)
            for (auto c : sevens) expected.insert(a + b + c);
    std::set<u64> got;
    for (const auto& [v, w] : fixture().tables.level(4)) got.insert(v);
    CHECK(got == expected);
    CHECK(fixture().tables.contains(4, 0));
}

TEST_CASE("witness tables are monotone and witnesses evaluate to their value") {
    const auto& f = fixture();
    for (std::size_t i = 4; i < 12; ++i)
        for (const auto& [v, w] : f.tables.level(i)) REQUIRE(f.tables.contains(i + 1, v));
    for (std::size_t i = 4; i <= 12; ++i)
        for (const auto& [v, w] : f.tables.level(i)) REQUIRE(w.value(f.primes) == v);
    CHECK_THROWS_AS(f.tables.level(3), PreconditionError);
    CHECK_THROWS_AS(f.tables.level(13), PreconditionError);
}

TEST_CASE("W_12 keeps the lexicographically smallest witness") {
    // Brute force over every tuple the recursion can reach.
    const auto& f = fixture();
    std::map<u64, ExponentAssignment> best;
    for (unsigned a = 1; a <= 7; ++a)
        for (unsigned b = 1; b <= 4; ++b)
            for (unsigned c = 1; c <= 3; ++c)
                for (unsigned mask = 0; mask < (1u << 8); ++mask) {
                    ExponentAssignment w;
                    w.set(2, a);
                    w.set(3, b);
                    w.set(4, c);
                    for (unsigned k = 0; k < 8; ++k)
                        if (mask & (1u << k)) w.set(5 + k, 2);
                    const u64 v = w.value(f.primes);
                    auto it = best.find(v);
                    if (it == best.end() || w < it->second) best[v] = w;
                }
    CHECK(best.size() == f.tables.level(12).size());
    for (const auto& [v, w] : best) {
        const auto* stored = f.tables.witness(12, v);
        REQUIRE(stored != nullptr);
        REQUIRE(*stored == w);
    }
}

TEST_CASE("membership of the window endpoints") {
    const auto& t = fixture().tables;
    CHECK(t.contains(12, 1102));
    CHECK(t.contains(12, 3858));
    CHECK_FALSE(t.contains(12, 1100));
}

TEST_CASE("decompose_even preconditions") {
    const auto& f = fixture();
    CHECK_THROWS_AS(decompose_even(1100, f.tables, f.primes), PreconditionError);
    CHECK_THROWS_AS(decompose_even(1103, f.tables, f.primes), PreconditionError);
    CHECK_THROWS_AS(decompose_even(0, f.tables, f.primes), PreconditionError);
}

TEST_CASE("decompose_even inside the window returns the stored witness") {
    const auto& f = fixture();
    const auto w = decompose_even(1102, f.tables, f.primes);
    CHECK(w == *f.tables.witness(12, 1102));
    CHECK(w.value(f.primes) == 1102);
}

TEST_CASE("decompose_even(4000) peels 53^2 - 53 and looks up 1244") {
    const auto& f = fixture();
    CHECK(53 * 53 - 53 == 2756);
    CHECK(59 * 59 - 59 == 3422);
    const auto w = decompose_even(4000, f.tables, f.primes);
    REQUIRE(f.primes.index_of(53) == 16);
    CHECK(w.exponent(16) == 2);
    ExponentAssignment expected = *f.tables.witness(12, 1244);
    expected.set(16, 2);
    CHECK(w == expected);
    CHECK(w.value(f.primes) == 4000);
    CHECK(decompose_depth(4000, f.primes) == 1);
}

TEST_CASE("decompose_even round trip on random evens up to 10^6") {
    const auto& f = fixture();
    std::mt19937_64 rng(7);
    for (int k = 0; k < 10'000; ++k) {
        const u64 n = 1102 + 2 * (rng() % ((1'000'000 - 1102) / 2 + 1));
        const auto w = decompose_even(n, f.tables, f.primes);
        REQUIRE(w.value(f.primes) == n);
        for (auto [i, t] : w.entries()) {
            const u64 p = f.primes.at(i);
            REQUIRE(p * p - p <= n);
            REQUIRE(t >= 2);
        }
    }
}

TEST_CASE("reduction depth stays small up to 10^9") {
    const auto& f = fixture();
    std::mt19937_64 rng(11);
    std::size_t deepest = 0;
    for (int k = 0; k < 2000; ++k) {
        const u64 n = 1102 + 2 * (rng() % 500'000'000);
        deepest = std::max(deepest, decompose_depth(n, f.primes));
        const auto w = decompose_even(n, f.tables, f.primes);
        REQUIRE(w.value(f.primes) == n);
    }
    CHECK(deepest <= 60);
    CHECK(decompose_depth(1'000'000'000, f.primes) <= 60);
}

TEST_CASE("decompose_even reports a short prime table as a capacity error") {
    PrimeTable small(64);
    const WitnessTables tables(small);
    CHECK_THROWS_AS(decompose_even(1'000'000, tables, small), CapacityError);
}

TEST_CASE("representation window report") {
    const auto& f = fixture();
    const auto r = verify_lemma2_window(f.tables, f.primes);
    CHECK(r.passed);
    CHECK(r.covered_evens == (3858 - 1102) / 2 + 1);
    CHECK(r.covered_evens == 1379);
    CHECK(r.window_gaps.empty());
    CHECK(r.excludes_1100);
    CHECK(r.enumeration_avoids_1100);
    CHECK(r.enumeration_matches_table);
    // t_2 <= 6, t_3 <= 4, t_4 <= 3, t_i <= 2 for 5 <= i <= 11.
    CHECK(r.enumerated_assignments == 6 * 4 * 3 * 128);
}

TEST_CASE("bounded enumeration never produces 1100") {
    const auto& f = fixture();
    const auto values = enumerate_bounded_assignments(f.primes, 1100);
    CHECK(std::find(values.begin(), values.end(), 1100) == values.end());
    CHECK(values.front() == 0);
    CHECK(values.back() == 1098);
}
