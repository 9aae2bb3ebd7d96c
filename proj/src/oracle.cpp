// oracle.cpp

#include "sierpinski/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sierpinski {

namespace {

using u64v = std::uint64_t;

class Search {
public:
    Search(std::size_t s, PartMode mode, const OracleBudget& budget)
        : s_(s), mode_(mode), budget_(budget) {}

    std::optional<CoprimeWitness> run(u64v ell) {
        parts_.clear();
        bases_.clear();
        if (descend(ell, s_, 2, false)) {
            CoprimeWitness w;
            w.target = ell;
            w.parts = parts_;
            if (mode_ == PartMode::PrimePower) w.bases = bases_;
            return w;
        }
        return std::nullopt;
    }

    u64v nodes() const { return nodes_; }

private:
    // Accepts m as the next part, pushing its base in prime-power mode.
    bool admit(u64v m) {
        for (u64v p : parts_)
            if (std::gcd(p, m) != 1) return false;
        if (mode_ == PartMode::PrimePower) {
            // Coprime prime powers automatically have distinct bases.
            const auto base = prime_power_base(m);
            if (!base) return false;
            bases_.push_back(*base);
        }
        parts_.push_back(m);
        return true;
    }

    void retract() {
        parts_.pop_back();
        if (mode_ == PartMode::PrimePower) bases_.pop_back();
    }

    bool descend(u64v rem, std::size_t k, u64v min_part, bool has_even) {
        if (++nodes_ > budget_.max_nodes)
            throw BudgetError("oracle search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
        if (k == 1) {
            if (rem < min_part || !admit(rem)) return false;
            return true;
        }
        // The k remaining parts are at least m, m+1, ..., m+k-1.
        const u64v tail = static_cast<u64v>(k) * (k - 1) / 2;
        for (u64v m = min_part; m * k + tail <= rem; ++m) {
            const bool even_now = has_even || (m % 2 == 0);
            // At most one part is even; once it is placed the rest are odd.
            if (even_now && (rem - m) % 2 != (k - 1) % 2) continue;
            if (!admit(m)) continue;
            if (descend(rem - m, k - 1, m + 1, even_now)) return true;
            retract();
        }
        return false;
    }

    std::size_t s_;
    PartMode mode_;
    OracleBudget budget_;
    std::vector<u64v> parts_;
    std::vector<u64v> bases_;
    u64v nodes_ = 0;
};

void check_budget(u64v ell, std::size_t s, const OracleBudget& budget) {
    if (s < 1) throw PreconditionError("part count must be positive");
    if (ell > budget.max_ell)
        throw BudgetError("l = " + std::to_string(ell) + " exceeds oracle budget " +
                          std::to_string(budget.max_ell));
    if (s > budget.max_parts)
        throw BudgetError("s = " + std::to_string(s) + " exceeds oracle budget " +
                          std::to_string(budget.max_parts));
}

}  // namespace

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? std::optional<std::uint64_t>(p) : std::nullopt;
    }
    return n;
}

SearchResult find_representation(std::uint64_t ell, std::size_t s, PartMode mode,
                                  const OracleBudget& budget) {
    check_budget(ell, s, budget);
    Search search(s, mode, budget);
    SearchResult out;
    out.witness = search.run(ell);
    out.nodes = search.nodes();
    return out;
}

SearchResult find_coprime_representation(std::uint64_t ell, std::size_t s,
                                         const OracleBudget& budget) {
    return find_representation(ell, s, PartMode::Coprime, budget);
}

SearchResult find_prime_power_representation(std::uint64_t ell, std::size_t s,
                                             const OracleBudget& budget) {
    return find_representation(ell, s, PartMode::PrimePower, budget);
}

bool validate_witness(const CoprimeWitness& w, std::size_t s, PartMode mode) {
    if (w.parts.size() != s) return false;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        if (w.parts[i] <= 1) return false;
        if (i > 0 && w.parts[i] <= w.parts[i - 1]) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (std::gcd(w.parts[i], w.parts[j]) != 1) return false;
        sum += w.parts[i];
    }
    if (sum != w.target) return false;
    if (mode == PartMode::PrimePower) {
        if (w.bases.size() != s) return false;
        for (std::size_t i = 0; i < s; ++i) {
            if (!is_prime(w.bases[i])) return false;
            std::uint64_t v = w.parts[i];
            while (v % w.bases[i] == 0) v /= w.bases[i];
            if (v != 1) return false;
        }
        auto bases = w.bases;
        std::sort(bases.begin(), bases.end());
        if (std::adjacent_find(bases.begin(), bases.end()) != bases.end()) return false;
    }
    return true;
}

MuWindowReport verify_mu_window(const MuSolver& solver, std::size_t s, std::uint64_t window,
                                const OracleBudget& budget, const MuWindowLimits& limits) {
    if (s < 2) throw PreconditionError("verify_mu_window needs s >= 2");
    if (window == 0) throw PreconditionError("window must be positive");
    if (s > limits.max_s || window > limits.max_window)
        throw BudgetError("verify_mu_window is limited to s <= " + std::to_string(limits.max_s) +
                          " and window <= " + std::to_string(limits.max_window));

    MuWindowReport report;
    report.s = s;
    report.window = window;
    const auto cert = solver.compute_c(s);
    report.c = cert.c;
    report.mu = cert.mu;
    const std::uint64_t mu = std::stoull(cert.mu);

    auto probe = [&](std::uint64_t ell) {
        auto r = find_coprime_representation(ell, s, budget);
        report.nodes += r.nodes;
        if (r.witness) {
            if (!validate_witness(*r.witness, s, PartMode::Coprime))
                throw InvariantError("oracle produced an invalid witness for " + std::to_string(ell));
            if (ell % 2 == s % 2 &&
                std::any_of(r.witness->parts.begin(), r.witness->parts.end(),
                            [](auto m) { return m % 2 == 0; }))
                report.parity_violations.push_back(ell);
        }
        return r.witness;
    };

    report.boundary_unrepresentable = !probe(mu).has_value();
    for (std::uint64_t ell = mu + 1; ell <= mu + window; ++ell) {
        if (auto w = probe(ell))
            report.witnesses.push_back(std::move(*w));
        else
            report.window_failures.push_back(ell);
    }

    std::uint64_t base = 0;
    for (std::size_t i = 2; i <= s + 1; ++i) base += solver.primes().at(i);
    for (std::int64_t offset = kUniverseHi; offset >= kUniverseLo; offset -= 2) {
        const auto ell = static_cast<std::uint64_t>(static_cast<std::int64_t>(base) + offset);
        if (!probe(ell)) {
            report.largest_failing_even_offset = offset;
            break;
        }
    }
    report.h_matches_c = report.largest_failing_even_offset == report.c;

    report.passed = report.boundary_unrepresentable && report.window_failures.empty() &&
                    report.h_matches_c && report.parity_violations.empty();
    return report;
}

}  // namespace sierpinski
