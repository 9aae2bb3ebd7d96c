// acceptance.cpp
// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// A criterion fails if its check fails or if it exceeds its time limit.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "sierpinski/char_sets.hpp"
#include "sierpinski/cli.hpp"
#include "sierpinski/mu_solver.hpp"
#include "sierpinski/oracle.hpp"
#include "sierpinski/repr.hpp"

using namespace sierpinski;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> check;
};

std::vector<std::int64_t> appendix_listing() {
    std::ifstream in(std::string(SIERPINSKI_DATA_DIR) + "/appendix_U.txt");
    std::vector<std::int64_t> out;
    for (std::int64_t v; in >> v;) out.push_back(v);
    return out;
}

constexpr std::size_t kScanTo = 5000;
constexpr std::size_t kStabilityTo = 10'000;

PrimeTable& table() {
    static PrimeTable t = [] {
        PrimeTable p;
        reserve_for_sets(p, kStabilityTo);
        return p;
    }();
    return t;
}

Outcome appendix_fidelity() {
    const auto u = build_U(table()).set;
    const auto expected = appendix_listing();
    const bool ok = u.members() == expected && u.min() == 0 && u.max() == 1098 && expected.size() == 426;
    return {ok, std::to_string(u.size()) + " members, min " + std::to_string(*u.min()) + ", max " +
                    std::to_string(*u.max())};
}

Outcome published_constants() {
    const MuSolver solver(table());
    const std::vector<std::pair<std::size_t, std::int64_t>> expected = {
        {2, -2}, {500, 16}, {900, 14}, {1000, 8}, {2000, 22}};
    bool ok = true;
    std::string detail;
    for (auto [s, c] : expected) {
        const auto got = solver.compute_c(s).c;
        ok = ok && got == c;
        detail += "c_" + std::to_string(s) + "=" + std::to_string(got) + " ";
    }
    return {ok, detail};
}

Outcome representation_window() {
    const WitnessTables tables(table());
    const auto r = verify_lemma2_window(tables, table());
    return {r.passed && r.covered_evens == 1379,
            std::to_string(r.covered_evens) + " evens covered, 1100 " + (r.excludes_1100 ? "excluded" : "PRESENT") +
                ", enumeration of " + std::to_string(r.enumerated_assignments) + " assignments " +
                (r.enumeration_avoids_1100 ? "avoids" : "REACHES") + " 1100"};
}

Outcome h_coverage() {
    std::size_t failing = 0, endpoint = 0;
    for (std::size_t s = 2; s <= kHLastS; ++s) {
        const auto cov = check_H_coverage(s, table());
        if (!cov.passed()) ++failing;
        if (cov.endpoint_missing) ++endpoint;
    }
    return {failing == 0, "s = 2..182, " + std::to_string(failing) + " failing, " + std::to_string(endpoint) +
                              " endpoint discrepancies"};
}

Outcome prime_interval() {
    std::uint64_t bad = 0, first_bad = 0;
    for (std::uint64_t x = 25; x <= 1'000'000; ++x)
        if (!has_prime_in_lemma1_interval(x) && bad++ == 0) first_bad = x;
    return {bad == 0, bad == 0 ? "x = 25..10^6" : std::to_string(bad) + " failures, first x = " + std::to_string(first_bad)};
}

Outcome decomposition() {
    PrimeTable primes;
    primes.reserve_value(1100);
    const WitnessTables tables(primes);
    std::uint64_t count = 0, bad = 0;
    std::string note;
    for (std::uint64_t n = 1102; n <= 1'000'000; n += 2) {
        ++count;
        try {
            if (decompose_even(n, tables, primes).value(primes) != n) ++bad;
        } catch (const InvariantError& e) {
            if (bad++ == 0) note = std::string(", ") + e.what();
        }
    }
    return {bad == 0, std::to_string(count) + " evens, " + std::to_string(bad) + " failures" + note};
}

Outcome oracle_windows() {
    PrimeTable primes;
    reserve_for_sets(primes, 10);
    const MuSolver solver(primes);
    const std::vector<std::tuple<std::size_t, std::uint64_t, std::string>> cases = {
        {2, 100, "6"}, {3, 100, "17"}, {4, 60, "30"}};
    bool ok = true;
    std::string detail;
    for (const auto& [s, window, boundary] : cases) {
        const auto r = verify_mu_window(solver, s, window);
        ok = ok && r.passed && r.mu == boundary && r.mu == solver.compute_mu(s);
        detail += "s=" + std::to_string(s) + " mu=" + r.mu + " window " + std::to_string(window) +
                  (r.passed ? " ok; " : " FAILED; ");
    }
    return {ok, detail};
}

Outcome method_agreement() {
    const MuSolver exact(table());
    const MuSolver truncated(table(), SolverOptions{.exact_cap = 2, .exact_fallback = false});
    std::size_t compared = 0, disagreements = 0;
    for (std::size_t s = 3; s <= 60; ++s) {
        try {
            const auto cert = truncated.compute_c(s);
            ++compared;
            if (cert.c != exact.compute_c(s).c) ++disagreements;
        } catch (const UnresolvedError&) {
            // Truncated path not valid for this s; outside the criterion.
        }
    }
    return {compared > 0 && disagreements == 0,
            std::to_string(compared) + " of 58 s certified by truncation, " + std::to_string(disagreements) +
                " disagreements"};
}

Outcome truncation_stability() {
    const MuSolver solver(table());
    std::mt19937_64 rng(20'240'101);
    std::uniform_int_distribution<std::size_t> pick(183, kStabilityTo);
    std::size_t both_valid = 0, differ = 0;
    for (int k = 0; k < 100; ++k) {
        const auto s = pick(rng);
        const auto a5 = solver.a_value(s, 5), a8 = solver.a_value(s, 8);
        if (!a5.valid() || !a8.valid()) continue;
        ++both_valid;
        if (a5.value != a8.value) ++differ;
    }
    return {differ == 0, std::to_string(both_valid) + " of 100 samples valid at t = 5 and 8, " +
                             std::to_string(differ) + " differ"};
}

Outcome scan_determinism() {
    auto scan = [](const char* jobs) {
        std::ostringstream out, err;
        const int code = cli::run({"--jobs", jobs, "scan", "--from", "2", "--to", std::to_string(kScanTo)}, out, err);
        return std::make_pair(code, out.str());
    };
    const auto one = scan("1");
    const auto eight = scan("8");
    const auto lines = std::count(one.second.begin(), one.second.end(), '\n');
    const bool ok = one.first == 0 && eight.first == 0 && one.second == eight.second &&
                    lines == static_cast<long>(kScanTo - 1);
    return {ok, std::to_string(lines) + " lines, " + std::to_string(one.second.size()) + " bytes, " +
                    (one.second == eight.second ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Appendix fidelity", 1, appendix_fidelity},
        {2, "Published constants", 5, published_constants},
        {3, "Representation window [1102, 3858]", 10, representation_window},
        {4, "H(s) coverage", 30, h_coverage},
        {5, "Prime in (x, sqrt(3/2) x]", 30, prime_interval},
        {6, "Decomposition round trip", 120, decomposition},
        {7, "Oracle cross-validation", 120, oracle_windows},
        {8, "Method agreement", 60, method_agreement},
        {9, "Truncation stability", 60, truncation_stability},
        {10, "Scan determinism", 60, scan_determinism},
    };

    table();  // shared prime table, built outside the timed sections
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.limit_seconds;
        const bool pass = outcome.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s  %2d  %-36s %8.3f s (limit %g s)%s  %s\n", pass ? "PASS" : "FAIL", c.number, c.name, seconds,
                    c.limit_seconds, in_time ? "" : " TOO SLOW", outcome.detail.c_str());
        std::fflush(stdout);
    }

    // Desk-scale stand-in for the statements that cannot be reproduced: no
    // prime gap above 1100 among the first 10^6 primes.
    const auto start = std::chrono::steady_clock::now();
    PrimeTable gaps;
    gaps.reserve_count(1'000'001);
    const auto j = gaps.first_gap_exceeding(1100, 1'000'000);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("INFO  --  %-36s %8.3f s  %s\n", "Gap scan (g = 1100, j <= 10^6)", seconds,
                j ? ("first at j = " + std::to_string(*j)).c_str() : "none found");

    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
