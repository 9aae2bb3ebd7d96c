// mu_solver.cpp

#include "sierpinski/mu_solver.hpp"

#include <algorithm>
#include <thread>

namespace sierpinski {

namespace {

using i64 = std::int64_t;

i64 prime(const PrimeTable& primes, std::size_t i) { return static_cast<i64>(primes.at(i)); }

ValidityMargins margins_for(std::size_t s, std::size_t t, i64 a, const PrimeTable& primes) {
    ValidityMargins m;
    m.above = prime(primes, s + 2 + t) - prime(primes, s + 1) - a;
    m.below = prime(primes, s + 2) - prime(primes, s + 1 - t) - a;
    m.pair = prime(primes, s + 3) + prime(primes, s + 2) - prime(primes, s + 1) - prime(primes, s) - a;
    return m;
}

// Largest even <= cap missing from `covered`; -2 is never covered.
i64 largest_uncovered(const EvenSet& covered, i64 cap) {
    for (i64 v = cap - (cap & 1); v > kUniverseLo; v -= 2)
        if (!covered.contains(v)) return v;
    return kUniverseLo;
}

std::string to_decimal(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

const char* method_name(Method m) { return m == Method::Exact ? "exact" : "truncated"; }

UnresolvedError::UnresolvedError(std::size_t s, std::vector<TruncationAttempt> trace)
    : Error("c_s unresolved for s = " + std::to_string(s) + " after " + std::to_string(trace.size()) +
            " truncation levels"),
      s_(s),
      trace_(std::move(trace)) {}

MuSolver::MuSolver(const PrimeTable& primes, SolverOptions options)
    : primes_(primes), options_(options), u_(build_U(primes)), a_(build_A(u_.set)) {
    if (options_.exact_cap > kMaxExactCap)
        throw PreconditionError("exact-V cap may not exceed " + std::to_string(kMaxExactCap));
}

i64 MuSolver::cap_for(std::size_t s) const {
    return std::min<i64>(kUniverseHi, prime(primes_, s + 2));
}

std::int64_t MuSolver::c_exact(std::size_t s) const {
    const auto v = build_V(s, primes_);
    const auto cap = cap_for(s);
    return largest_uncovered(sumset(u_.set, v, cap), cap);
}

AValue MuSolver::a_value(std::size_t s, std::size_t t, std::int64_t cap) const {
    const auto vt = build_V_truncated(s, t, primes_);
    auto candidates = a_ - sumset(u_.set, vt);
    if (cap < kUniverseHi) candidates -= EvenSet::interval(cap + 1, kUniverseHi);
    AValue out;
    out.value = candidates.max();
    out.margins = margins_for(s, t, out.value.value_or(kUniverseLo), primes_);
    return out;
}

CsCertificate MuSolver::compute_c(std::size_t s) const {
    if (s < 2) throw PreconditionError("c_s is defined for s >= 2");
    CsCertificate cert;
    cert.s = s;
    if (s <= options_.exact_cap) {
        cert.method = Method::Exact;
        cert.c = c_exact(s);
        cert.mu = mu_from_c(s, cert.c, primes_);
        return cert;
    }

    const auto cap = cap_for(s);
    const auto last_t = last_useful_level(s);
    std::vector<TruncationAttempt> trace;
    for (std::size_t t = std::min(options_.truncation_start, s - 1); t <= last_t; ++t) {
        const auto a = a_value(s, t, cap);
        trace.push_back({t, a.value, a.margins});
        // An empty candidate set is final without margins: V_s(t) is part of
        // V_s, so nothing positive is left uncovered and c_s = -2.
        if (!a.value || a.valid()) {
            cert.method = Method::Truncated;
            cert.c = a.value.value_or(kUniverseLo);
            cert.t = t;
            cert.margins = a.margins;
            cert.mu = mu_from_c(s, cert.c, primes_);
            return cert;
        }
    }
    if (!options_.exact_fallback) throw UnresolvedError(s, std::move(trace));
    cert.method = Method::Exact;
    cert.c = largest_uncovered(sumset(u_.set, build_V(s, primes_), cap), cap);
    cert.mu = mu_from_c(s, cert.c, primes_);
    return cert;
}

std::size_t MuSolver::last_useful_level(std::size_t s) const {
    // Past the first t whose new offsets both exceed 1100, V_s(t) stops
    // changing inside the universe, the single-swap margins are already
    // positive, and the pair margin does not depend on t.
    const auto boundary = prime(primes_, s + 1);
    for (std::size_t t = 0; t < s - 1; ++t)
        if (prime(primes_, s + 2 + t) - boundary > kUniverseHi &&
            boundary - prime(primes_, s + 1 - t) > kUniverseHi)
            return t;
    return s - 1;
}

std::string MuSolver::compute_mu(std::size_t s) const { return compute_c(s).mu; }

ScanRecord MuSolver::scan_one(std::size_t s) const {
    ScanRecord rec;
    rec.cert = compute_c(s);
    rec.problem1_hit = rec.cert.c == kUniverseHi;
    rec.gap_hit = primes_.gap_after(s + 1) > static_cast<u64>(kUniverseHi);
    return rec;
}

void MuSolver::scan(std::size_t s_from, std::size_t s_to, std::size_t jobs,
                    const std::function<void(const ScanRecord&)>& sink) const {
    if (s_from < 2 || s_from > s_to) throw PreconditionError("scan needs 2 <= from <= to");
    jobs = std::max<std::size_t>(jobs, 1);
    constexpr std::size_t kBatchPerJob = 256;
    const std::size_t batch = kBatchPerJob * jobs;

    for (std::size_t lo = s_from; lo <= s_to; lo += batch) {
        const std::size_t hi = std::min(s_to, lo + batch - 1);
        std::vector<ScanRecord> out(hi - lo + 1);
        if (jobs == 1) {
            for (std::size_t s = lo; s <= hi; ++s) out[s - lo] = scan_one(s);
        } else {
            const std::size_t n = out.size();
            const std::size_t block = (n + jobs - 1) / jobs;
            std::vector<std::exception_ptr> errors(jobs);
            {
                std::vector<std::jthread> workers;
                for (std::size_t w = 0; w < jobs; ++w) {
                    const std::size_t b = w * block, e = std::min(n, b + block);
                    if (b >= e) break;
                    workers.emplace_back([&, w, b, e] {
                        try {
                            for (std::size_t k = b; k < e; ++k) out[k] = scan_one(lo + k);
                        } catch (...) {
                            errors[w] = std::current_exception();
                        }
                    });
                }
            }
            for (auto& err : errors)
                if (err) std::rethrow_exception(err);
        }
        for (const auto& rec : out) sink(rec);
    }
}

std::string mu_from_c(std::size_t s, std::int64_t c, const PrimeTable& primes) {
    unsigned __int128 total = 0;
    for (std::size_t i = 2; i <= s + 1; ++i) total += primes.at(i);
    // The prime sum is at least 8 for s >= 2, so adding c >= -2 stays positive.
    if (c < 0)
        total -= static_cast<unsigned __int128>(-c);
    else
        total += static_cast<unsigned __int128>(c);
    return to_decimal(total);
}

}  // namespace sierpinski
