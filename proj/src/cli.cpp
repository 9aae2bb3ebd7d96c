// cli.cpp
// Subcommand wiring for cpsm.

#include "sierpinski/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sierpinski/char_sets.hpp"
#include "sierpinski/errors.hpp"
#include "sierpinski/mu_solver.hpp"
#include "sierpinski/oracle.hpp"
#include "sierpinski/repr.hpp"

namespace sierpinski::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

SolverOptions solver_options(const RunConfig& config) {
    return {.exact_cap = config.exact_cap,
            .truncation_start = config.truncation_start,
            .exact_fallback = config.exact_fallback};
}

// Per-subcommand parameters, filled by CLI11.
struct Params {
    std::size_t s = 0;
    std::size_t from = 2;
    std::size_t to = 0;
    std::optional<std::size_t> t;
    std::uint64_t ell = 0;
    std::uint64_t n = 0;
    std::uint64_t window = 100;
    std::uint64_t g = 1100;
    std::size_t limit = 1'000'000;
    std::string set_name;
    std::string mode = "coprime";
    std::string fixture;
    std::string format_name;
    std::string cache_dir;
};

class Context {
public:
    explicit Context(const RunConfig& config) : config_(config) {}

    PrimeTable& primes(std::size_t s_max, std::size_t extra_count = 0) {
        if (!table_) {
            const std::size_t want = std::max<std::size_t>(2 * s_max + 3, 186) + extra_count;
            if (config_.cache_dir)
                table_ = load_or_build_table(*config_.cache_dir, want, config_.prime_hard_limit);
            else
                table_.emplace(config_.prime_hard_limit);
        }
        reserve_for_sets(*table_, s_max);
        if (extra_count) table_->reserve_count(extra_count);
        return *table_;
    }

    MuSolver solver(std::size_t s_max) {
        auto& table = primes(s_max);
        return MuSolver(table, solver_options(config_));
    }

    const RunConfig& config() const { return config_; }

private:
    const RunConfig& config_;
    std::optional<PrimeTable> table_;
};

ordered_json margins_json(const std::optional<ValidityMargins>& m) {
    if (!m) return nullptr;
    return ordered_json{{"above", m->above}, {"below", m->below}, {"pair", m->pair}};
}

ordered_json certificate_json(const CsCertificate& c) {
    ordered_json j;
    j["s"] = c.s;
    j["c"] = c.c;
    j["method"] = method_name(c.method);
    j["t"] = c.t ? ordered_json(*c.t) : ordered_json(nullptr);
    j["margins"] = margins_json(c.margins);
    j["mu"] = c.mu;
    return j;
}

ordered_json scan_json(const ScanRecord& r) {
    ordered_json j;
    j["s"] = r.cert.s;
    j["c"] = r.cert.c;
    j["method"] = method_name(r.cert.method);
    j["t"] = r.cert.t ? ordered_json(*r.cert.t) : ordered_json(nullptr);
    j["mu"] = r.cert.mu;
    j["problem1_hit"] = r.problem1_hit;
    j["gap_hit"] = r.gap_hit;
    return j;
}

std::string scan_csv(const ScanRecord& r) {
    std::ostringstream line;
    line << r.cert.s << ',' << r.cert.c << ',' << method_name(r.cert.method) << ','
         << (r.cert.t ? std::to_string(*r.cert.t) : std::string()) << ',' << r.cert.mu << ','
         << (r.problem1_hit ? "true" : "false") << ',' << (r.gap_hit ? "true" : "false");
    return line.str();
}

std::string certificate_text(const CsCertificate& c) {
    std::ostringstream o;
    o << "s=" << c.s << " c=" << c.c << " method=" << method_name(c.method);
    if (c.t) o << " t=" << *c.t;
    if (c.margins) o << " margins=(" << c.margins->above << ", " << c.margins->below << ", " << c.margins->pair << ")";
    o << " mu=" << c.mu;
    return o.str();
}

ordered_json witness_json(const CoprimeWitness& w) {
    ordered_json j;
    j["ell"] = w.target;
    j["parts"] = w.parts;
    if (!w.bases.empty()) j["bases"] = w.bases;
    return j;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep = " ") {
    std::string out;
    for (auto x : v) {
        if (!out.empty()) out += sep;
        out += std::to_string(x);
    }
    return out;
}

Format format_or(const RunConfig& config, Format fallback) { return config.format.value_or(fallback); }

// ---------------------------------------------------------------- commands

int cmd_c(Context& ctx, const Params& p, std::ostream& out) {
    const auto cert = ctx.solver(p.s).compute_c(p.s);
    if (format_or(ctx.config(), Format::Text) == Format::Text)
        out << certificate_text(cert) << '\n';
    else
        out << certificate_json(cert).dump() << '\n';
    return kOk;
}

int cmd_mu(Context& ctx, const Params& p, std::ostream& out) {
    const auto cert = ctx.solver(p.s).compute_c(p.s);
    if (format_or(ctx.config(), Format::Text) == Format::Text)
        out << cert.mu << '\n';
    else
        out << ordered_json{{"s", cert.s}, {"c", cert.c}, {"mu", cert.mu}}.dump() << '\n';
    return kOk;
}

int cmd_scan(Context& ctx, const Params& p, std::ostream& out) {
    if (p.to < p.from) throw PreconditionError("scan needs --from <= --to");
    auto config = ctx.config();
    if (p.t) config.truncation_start = *p.t;
    auto& table = ctx.primes(p.to);
    table.reserve_count(p.to + 3);
    MuSolver solver(table, solver_options(config));

    const auto format = format_or(config, Format::Jsonl);
    bool first = true;
    if (format == Format::Csv) out << "s,c,method,t,mu,problem1_hit,gap_hit\n";
    if (format == Format::Json) out << '[';
    solver.scan(p.from, p.to, config.jobs, [&](const ScanRecord& r) {
        switch (format) {
            case Format::Jsonl: out << scan_json(r).dump() << '\n'; break;
            case Format::Json: out << (first ? "" : ",") << scan_json(r).dump(); break;
            case Format::Csv: out << scan_csv(r) << '\n'; break;
            case Format::Text:
                out << certificate_text(r.cert) << (r.problem1_hit ? " PROBLEM1" : "")
                    << (r.gap_hit ? " GAP" : "") << '\n';
                break;
        }
        first = false;
    });
    if (format == Format::Json) out << "]\n";
    return kOk;
}

int cmd_sets(Context& ctx, const Params& p, std::ostream& out) {
    std::string name = p.set_name;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
    const std::size_t s_max = std::max<std::size_t>(p.s, 2);
    auto& table = ctx.primes(s_max);
    EvenSet set;
    if (name == "U") {
        set = build_U(table).set;
    } else if (name == "A") {
        set = build_A(build_U(table).set);
    } else if (name == "V") {
        set = build_V_exact(p.s, table, ctx.config().exact_cap);
    } else if (name == "VT" || name == "V_T" || name == "V(T)") {
        if (!p.t) throw PreconditionError("sets --set Vt needs --t");
        set = build_V_truncated(p.s, *p.t, table);
    } else if (name == "H") {
        set = build_H(p.s, table);
    } else {
        throw PreconditionError("unknown set '" + p.set_name + "' (use U, V, Vt, H or A)");
    }
    out << ordered_json(set.members()).dump() << '\n';
    return kOk;
}

int cmd_decompose(Context& ctx, const Params& p, std::ostream& out) {
    auto& table = ctx.primes(2);
    // p_u^2 - p_u <= n needs primes up to about sqrt(n).
    u64 root = 2;
    while (root * root <= p.n) root *= 2;
    table.reserve_value(root);
    const WitnessTables tables(table);
    const auto w = decompose_even(p.n, tables, table);

    if (format_or(ctx.config(), Format::Json) == Format::Text) {
        out << p.n << " = " << w.to_string(table) << '\n';
        return kOk;
    }
    ordered_json terms = ordered_json::array();
    for (auto [i, t] : w.entries()) terms.push_back({{"i", i}, {"p", table.at(i)}, {"t", t}});
    out << ordered_json{{"n", p.n}, {"terms", terms}}.dump() << '\n';
    return kOk;
}

int cmd_oracle(Context& ctx, const Params& p, std::ostream& out) {
    PartMode mode;
    if (p.mode == "coprime")
        mode = PartMode::Coprime;
    else if (p.mode == "prime-power")
        mode = PartMode::PrimePower;
    else
        throw PreconditionError("unknown oracle mode '" + p.mode + "'");
    const auto r = find_representation(p.ell, p.s, mode, ctx.config().budget);

    if (format_or(ctx.config(), Format::Text) == Format::Text) {
        if (r.witness) {
            out << join(r.witness->parts);
            if (!r.witness->bases.empty()) out << " bases " << join(r.witness->bases);
            out << '\n';
        } else {
            out << "none\n";
        }
        out << "nodes " << r.nodes << '\n';
        return kOk;
    }
    ordered_json j;
    j["ell"] = p.ell;
    j["s"] = p.s;
    j["mode"] = p.mode;
    j["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
    j["nodes"] = r.nodes;
    out << j.dump() << '\n';
    return kOk;
}

std::vector<std::int64_t> read_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open fixture " + path.string());
    std::vector<std::int64_t> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        values.push_back(std::stoll(line));
    }
    return values;
}

int cmd_verify_appendix(Context& ctx, const Params& p, std::ostream& out) {
    const auto path = p.fixture.empty() ? default_fixture_path() : std::filesystem::path(p.fixture);
    const auto expected = read_fixture(path);
    const auto u = build_U(ctx.primes(2)).set;
    const auto actual = u.members();

    std::vector<std::int64_t> missing, extra;
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                        std::back_inserter(missing));
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                        std::back_inserter(extra));
    const bool ok = missing.empty() && extra.empty() && std::is_sorted(expected.begin(), expected.end());

    if (format_or(ctx.config(), Format::Text) == Format::Text) {
        if (ok) {
            out << u.slots() << "-slot universe, U matches fixture (" << actual.size() << " members, min "
                << *u.min() << ", max " << *u.max() << ")\n";
        } else {
            out << "U differs from fixture " << path.string() << '\n';
            for (auto v : missing) out << "  missing " << v << '\n';
            for (auto v : extra) out << "  extra " << v << '\n';
        }
    } else {
        out << ordered_json{{"passed", ok}, {"slots", u.slots()}, {"members", actual.size()},
                            {"missing", missing}, {"extra", extra}}
                   .dump()
            << '\n';
    }
    return ok ? kOk : kFailed;
}

int cmd_verify_h(Context& ctx, const Params& p, std::ostream& out) {
    const std::size_t from = p.from, to = p.to ? p.to : kHLastS;
    if (from < 2 || to > kHLastS || from > to) throw PreconditionError("verify-h covers 2 <= s <= 182");
    auto& table = ctx.primes(to);
    bool ok = true;
    ordered_json failures = ordered_json::array();
    for (std::size_t s = from; s <= to; ++s) {
        const auto cov = check_H_coverage(s, table);
        if (cov.passed()) continue;
        ok = false;
        failures.push_back({{"s", s}, {"missing", cov.missing}, {"endpoint_missing", cov.endpoint_missing}});
    }
    if (format_or(ctx.config(), Format::Text) == Format::Text) {
        if (ok) {
            out << "H(s) covers [p_{s+2}, 1100] for s = " << from << ".." << to << '\n';
        } else {
            for (const auto& f : failures) out << "s=" << f["s"] << " missing " << f["missing"].dump() << '\n';
        }
    } else {
        out << ordered_json{{"passed", ok}, {"from", from}, {"to", to}, {"failures", failures}}.dump() << '\n';
    }
    return ok ? kOk : kFailed;
}

int cmd_verify_lemma2(Context& ctx, const Params&, std::ostream& out) {
    auto& table = ctx.primes(2);
    const WitnessTables tables(table);
    const auto r = verify_lemma2_window(tables, table);
    if (format_or(ctx.config(), Format::Text) == Format::Text) {
        out << "W_12 covers " << r.covered_evens << " evens in [1102, 3858]"
            << (r.window_gaps.empty() ? "" : ", gaps: " + join(r.window_gaps)) << '\n';
        out << "1100 " << (r.excludes_1100 ? "excluded" : "PRESENT") << " in W_12\n";
        out << "bounded enumeration (" << r.enumerated_assignments << " assignments) "
            << (r.enumeration_avoids_1100 ? "never reaches 1100" : "REACHES 1100") << ", "
            << (r.enumeration_matches_table ? "agrees" : "DISAGREES") << " with W_12 below 1100\n";
    } else {
        out << ordered_json{{"passed", r.passed},
                            {"covered_evens", r.covered_evens},
                            {"window_gaps", r.window_gaps},
                            {"excludes_1100", r.excludes_1100},
                            {"enumeration_avoids_1100", r.enumeration_avoids_1100},
                            {"enumeration_matches_table", r.enumeration_matches_table},
                            {"enumerated_assignments", r.enumerated_assignments}}
                   .dump()
            << '\n';
    }
    return r.passed ? kOk : kFailed;
}

int cmd_verify_mu(Context& ctx, const Params& p, std::ostream& out) {
    const auto solver = ctx.solver(p.s);
    const auto r = verify_mu_window(solver, p.s, p.window, ctx.config().budget);
    if (format_or(ctx.config(), Format::Text) == Format::Text) {
        out << "s=" << r.s << " mu=" << r.mu << " c=" << r.c << '\n';
        out << "boundary " << r.mu << (r.boundary_unrepresentable ? " has no representation" : " IS representable")
            << '\n';
        out << "window (" << r.mu << ", " << r.mu << " + " << r.window << "]: "
            << (r.window_failures.empty() ? "all representable" : "failures " + join(r.window_failures)) << '\n';
        out << "largest failing even offset "
            << (r.largest_failing_even_offset ? std::to_string(*r.largest_failing_even_offset) : "none")
            << (r.h_matches_c ? " equals c_s" : " DIFFERS from c_s") << '\n';
        if (!r.parity_violations.empty()) out << "parity violations " << join(r.parity_violations) << '\n';
        out << (r.passed ? "pass" : "FAIL") << '\n';
    } else {
        ordered_json witnesses = ordered_json::array();
        for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
        out << ordered_json{{"passed", r.passed},
                            {"s", r.s},
                            {"mu", r.mu},
                            {"c", r.c},
                            {"boundary_unrepresentable", r.boundary_unrepresentable},
                            {"window", r.window},
                            {"window_failures", r.window_failures},
                            {"largest_failing_even_offset", r.largest_failing_even_offset
                                                                ? ordered_json(*r.largest_failing_even_offset)
                                                                : ordered_json(nullptr)},
                            {"witnesses", witnesses},
                            {"nodes", r.nodes}}
                   .dump()
            << '\n';
    }
    return r.passed ? kOk : kFailed;
}

int cmd_gap(Context& ctx, const Params& p, std::ostream& out) {
    auto& table = ctx.primes(2, p.limit + 1);
    const auto j = table.first_gap_exceeding(p.g, p.limit);
    if (format_or(ctx.config(), Format::Text) == Format::Text) {
        if (j)
            out << "j=" << *j << " p_j=" << table.at(*j) << " p_{j+1}=" << table.at(*j + 1) << '\n';
        else
            out << "none up to j=" << p.limit << '\n';
    } else {
        ordered_json r{{"g", p.g}, {"limit", p.limit}, {"j", j ? ordered_json(*j) : ordered_json(nullptr)}};
        if (j) {
            r["p_j"] = table.at(*j);
            r["p_next"] = table.at(*j + 1);
        }
        out << r.dump() << '\n';
    }
    return kOk;
}

}  // namespace

void RunConfig::validate() const {
    if (prime_hard_limit == 0 || exact_cap == 0 || jobs == 0 || budget.max_ell == 0 ||
        budget.max_parts == 0 || budget.max_nodes == 0)
        throw PreconditionError("numeric limits must be positive");
    if (exact_cap > kMaxExactCap)
        throw PreconditionError("exact-V cap may not exceed " + std::to_string(kMaxExactCap));
}

std::optional<Format> parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "jsonl") return Format::Jsonl;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    return std::nullopt;
}

std::filesystem::path default_fixture_path() {
    return std::filesystem::path(SIERPINSKI_DATA_DIR) / "appendix_U.txt";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Sierpinski constants c_s and mu_s, with brute-force cross-checks", "cpsm"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    Params p;
    app.add_option("--format", p.format_name, "json | jsonl | csv | text");
    app.add_option("--jobs", config.jobs, "worker threads for scans")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", p.cache_dir, "directory for the prime cache (or $CPSM_CACHE_DIR)");
    app.add_option("--budget", config.budget.max_nodes, "oracle node budget")->check(CLI::PositiveNumber);
    app.add_option("--max-ell", config.budget.max_ell, "largest l the oracle accepts");
    app.add_option("--prime-limit", config.prime_hard_limit, "hard cap on the number of tabulated primes");
    app.add_option("--exact-cap", config.exact_cap, "largest s solved with exact V_s (<= 200)");
    app.add_flag("!--no-fallback", config.exact_fallback,
                 "report s that no truncation level certifies as unresolved instead of using the full V_s");

    struct Sub {
        CLI::App* app;
        int (*fn)(Context&, const Params&, std::ostream&);
    };
    std::vector<Sub> subs;
    auto add = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        subs.push_back({sub, fn});
        return sub;
    };

    auto* c = add("c", "compute c_s with its certificate", cmd_c);
    c->add_option("--s", p.s, "s >= 2")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
    c->add_option("--t", config.truncation_start, "first truncation level");

    auto* mu = add("mu", "compute mu_s", cmd_mu);
    mu->add_option("--s", p.s, "s >= 2")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
    mu->add_option("--t", config.truncation_start, "first truncation level");

    auto* scan = add("scan", "certificates for a range of s", cmd_scan);
    scan->add_option("--from", p.from, "first s")->required();
    scan->add_option("--to", p.to, "last s")->required();
    scan->add_option("--t", p.t, "first truncation level");

    auto* sets = add("sets", "dump U, A, V_s, V_s(t) or H(s) as a JSON array", cmd_sets);
    sets->add_option("--set", p.set_name, "U | A | V | Vt | H")->required();
    sets->add_option("--s", p.s, "s");
    sets->add_option("--t", p.t, "truncation level for Vt");

    auto* dec = add("decompose", "write an even n >= 1102 as a sum of p_i^t_i - p_i", cmd_decompose);
    dec->add_option("--n", p.n, "even n >= 1102")->required();

    auto* oracle = add("oracle", "exhaustive search for s pairwise coprime parts summing to l", cmd_oracle);
    oracle->add_option("--ell", p.ell, "target l")->required();
    oracle->add_option("--s", p.s, "number of parts")->required();
    oracle->add_option("--mode", p.mode, "coprime | prime-power");

    auto* va = add("verify-appendix", "compare U with the bundled Appendix listing", cmd_verify_appendix);
    va->add_option("--fixture", p.fixture, "fixture file, one integer per line");

    auto* vh = add("verify-h", "check [p_{s+2}, 1100] is inside H(s)", cmd_verify_h);
    vh->add_option("--from", p.from, "first s (default 2)");
    vh->add_option("--to", p.to, "last s (default 182)");

    add("verify-lemma2", "check the W_12 window and the exclusion of 1100", cmd_verify_lemma2);

    auto* vm = add("verify-mu", "check mu_s against exhaustive search", cmd_verify_mu);
    vm->add_option("--s", p.s, "s")->required();
    vm->add_option("--window", p.window, "window size above mu_s")->check(CLI::PositiveNumber);

    auto* gap = add("gap", "first j with p_{j+1} - p_j > g", cmd_gap);
    gap->add_option("--g", p.g, "gap threshold");
    gap->add_option("--limit", p.limit, "largest j to inspect");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (!p.format_name.empty()) {
            config.format = parse_format(p.format_name);
            if (!config.format) throw PreconditionError("unknown format '" + p.format_name + "'");
        }
        if (!p.cache_dir.empty()) {
            config.cache_dir = p.cache_dir;
        } else if (const char* env = std::getenv(kCacheDirEnv); env && *env) {
            config.cache_dir = env;
        }
        config.validate();

        Context ctx(config);
        for (const auto& sub : subs)
            if (sub.app->parsed()) return sub.fn(ctx, p, out);
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const BudgetError& e) {
        err << "budget: " << e.what() << '\n';
        return kCapacity;
    } catch (const UnresolvedError& e) {
        err << "unresolved: " << e.what() << '\n';
        for (const auto& a : e.trace())
            err << "  t=" << a.t << " a=" << (a.a ? std::to_string(*a.a) : "none") << " margins=("
                << a.margins.above << ", " << a.margins.below << ", " << a.margins.pair << ")\n";
        return kFailed;
    } catch (const Error& e) {
        err << "failed: " << e.what() << '\n';
        return kFailed;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace sierpinski::cli
