// oracle.hpp
// Brute-force ground truth for mu_s: is l a sum of exactly s pairwise
// coprime integers > 1? Shares nothing with the set-based solver beyond the
// prime table used to locate the window.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sierpinski/mu_solver.hpp"

namespace sierpinski {

struct OracleBudget {
    std::uint64_t max_ell = 10'000;
    std::size_t max_parts = 8;
    std::uint64_t max_nodes = 200'000'000;
};

enum class PartMode { Coprime, PrimePower };

struct CoprimeWitness {
    std::uint64_t target = 0;
    std::vector<std::uint64_t> parts;  // strictly increasing
    std::vector<std::uint64_t> bases;  // prime bases, prime-power mode only
};

struct SearchResult {
    std::optional<CoprimeWitness> witness;
    std::uint64_t nodes = 0;
};

// Exhaustive depth-first search over increasing parts. Throws BudgetError if
// the input or the node count exceeds the budget; never reports "absent" for
// an unfinished search.
SearchResult find_coprime_representation(std::uint64_t ell, std::size_t s,
                                         const OracleBudget& budget = {});

// Same search with every part a prime power and the base primes distinct.
SearchResult find_prime_power_representation(std::uint64_t ell, std::size_t s,
                                             const OracleBudget& budget = {});

SearchResult find_representation(std::uint64_t ell, std::size_t s, PartMode mode,
                                 const OracleBudget& budget = {});

// Independent re-check of a witness: count, sum, parts > 1, pairwise gcd 1,
// strictly increasing; in prime-power mode also part == base^k with
// distinct prime bases.
bool validate_witness(const CoprimeWitness& w, std::size_t s, PartMode mode);

// Base prime if n = p^k (k >= 1).
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

struct MuWindowReport {
    std::size_t s = 0;
    std::uint64_t window = 0;
    std::string mu;
    std::int64_t c = 0;
    bool boundary_unrepresentable = false;
    std::vector<std::uint64_t> window_failures;  // l in (mu, mu + window] without witness
    std::vector<CoprimeWitness> witnesses;       // one per l in the window
    std::optional<std::int64_t> largest_failing_even_offset;  // h_s over [-2, 1100]
    bool h_matches_c = false;
    std::vector<std::uint64_t> parity_violations;  // l = s mod 2 with an even part
    std::uint64_t nodes = 0;
    bool passed = false;
};

struct MuWindowLimits {
    std::size_t max_s = 4;
    std::uint64_t max_window = 300;
};

// Recomputes mu_s with the solver and checks it against exhaustive search:
// mu_s itself has no representation, every l in (mu_s, mu_s + window] has
// one, and the largest even offset 2n <= 1100 without one equals c_s.
MuWindowReport verify_mu_window(const MuSolver& solver, std::size_t s, std::uint64_t window,
                                const OracleBudget& budget = {}, const MuWindowLimits& limits = {});

}  // namespace sierpinski
