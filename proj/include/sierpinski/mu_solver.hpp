// mu_solver.hpp
// Exact evaluation of c_s and mu_s = p_2 + ... + p_{s+1} + c_s.
//
// c_s is the largest even 2n <= min{1100, p_{s+2}} outside U + V_s (and -2
// when every such 2n >= 0 is covered). Up to the exact cap V_s is built in
// full. Above it, the truncated sets V_s(t) give a(s, t) = max(A \ (U + V_s(t))),
// which equals c_s once a(s, t) is below all three margins
//
//   p_{s+2+t} - p_{s+1},   p_{s+2} - p_{s+1-t},   p_{s+3} + p_{s+2} - p_{s+1} - p_s.
//
// Every element of V_s missing from V_s(t) is at least one of those, so no
// candidate below them can be covered by the part the truncation drops.
//
// The pair margin does not depend on t, so for some s no level certifies a
// value; those s fall back to the full V_s (method "exact").

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sierpinski/char_sets.hpp"
#include "sierpinski/errors.hpp"
#include "sierpinski/primes.hpp"

namespace sierpinski {

inline constexpr std::size_t kDefaultTruncationStart = 5;

enum class Method { Exact, Truncated };

const char* method_name(Method m);

struct ValidityMargins {
    std::int64_t above = 0;  // p_{s+2+t} - p_{s+1} - a
    std::int64_t below = 0;  // p_{s+2} - p_{s+1-t} - a
    std::int64_t pair = 0;   // p_{s+3} + p_{s+2} - p_{s+1} - p_s - a
    bool all_positive() const { return above > 0 && below > 0 && pair > 0; }
};

struct CsCertificate {
    std::size_t s = 0;
    std::int64_t c = 0;
    Method method = Method::Exact;
    std::optional<std::size_t> t;               // truncation level, truncated only
    std::optional<ValidityMargins> margins;     // truncated only
    std::string mu;                             // decimal
};

struct AValue {
    // max(A \ (U + V_s(t))) restricted to values <= cap; nullopt when that
    // set is empty.
    std::optional<std::int64_t> value;
    // Margins against `value`, or against -2 when it is empty.
    ValidityMargins margins;
    bool valid() const { return margins.all_positive(); }
};

struct TruncationAttempt {
    std::size_t t;
    std::optional<std::int64_t> a;
    ValidityMargins margins;
};

class UnresolvedError : public Error {
public:
    UnresolvedError(std::size_t s, std::vector<TruncationAttempt> trace);
    std::size_t s() const { return s_; }
    const std::vector<TruncationAttempt>& trace() const { return trace_; }

private:
    std::size_t s_;
    std::vector<TruncationAttempt> trace_;
};

struct SolverOptions {
    std::size_t exact_cap = kDefaultExactCap;
    std::size_t truncation_start = kDefaultTruncationStart;
    // When no truncation level certifies a value, settle c_s with the full
    // V_s instead of throwing UnresolvedError.
    bool exact_fallback = true;
};

struct ScanRecord {
    CsCertificate cert;
    bool problem1_hit = false;  // c_s = 1100
    bool gap_hit = false;       // p_{s+2} - p_{s+1} > 1100
};

// Holds U and A once; every query is const and safe to call concurrently.
// The table must already cover the requested indices (reserve_for_sets).
class MuSolver {
public:
    explicit MuSolver(const PrimeTable& primes, SolverOptions options = {});

    CsCertificate compute_c(std::size_t s) const;

    // Truncated evaluation only. cap defaults to 1100, i.e. A is not cut at
    // p_{s+2}; that is the intended use for s >= 183.
    AValue a_value(std::size_t s, std::size_t t, std::int64_t cap = kUniverseHi) const;

    // c_s with V_s built in full, for any s >= 2 (ignores the exact cap).
    std::int64_t c_exact(std::size_t s) const;

    // Highest truncation level worth trying: beyond it neither V_s(t) inside
    // [-2, 1100] nor the validity verdict can change.
    std::size_t last_useful_level(std::size_t s) const;

    std::string compute_mu(std::size_t s) const;

    // Certificates for s_from..s_to in order. Work is split into contiguous
    // blocks over `jobs` threads; emission order never depends on jobs.
    void scan(std::size_t s_from, std::size_t s_to, std::size_t jobs,
              const std::function<void(const ScanRecord&)>& sink) const;

    ScanRecord scan_one(std::size_t s) const;

    const USet& u() const { return u_; }
    const EvenSet& a_set() const { return a_; }
    const PrimeTable& primes() const { return primes_; }
    const SolverOptions& options() const { return options_; }

private:
    std::int64_t cap_for(std::size_t s) const;

    const PrimeTable& primes_;
    SolverOptions options_;
    USet u_;
    EvenSet a_;
};

// p_2 + ... + p_{s+1} + c as a decimal string.
std::string mu_from_c(std::size_t s, std::int64_t c, const PrimeTable& primes);

}  // namespace sierpinski
