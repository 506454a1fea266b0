#include "anticode/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "anticode/bounds.hpp"
#include "anticode/constructions.hpp"
#include "anticode/errors.hpp"
#include "anticode/io.hpp"
#include "anticode/partition.hpp"
#include "anticode/reproduce.hpp"
#include "anticode/search.hpp"

namespace anticode {

namespace {

struct CodeSource {
    std::string spec;
    std::string builder;
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t n = 0;
};

void add_code_options(CLI::App* sub, CodeSource& s) {
    sub->add_option("--spec", s.spec, "code-spec JSON file");
    sub->add_option("--builder", s.builder, "simplex | identity-pair | grs | extended-grs")
        ->check(CLI::IsMember({"simplex", "identity-pair", "grs", "extended-grs"}));
    sub->add_option("--q", s.q, "field order");
    sub->add_option("--k", s.k, "dimension");
    sub->add_option("--m", s.m, "identity-pair block size");
    sub->add_option("--n", s.n, "length");
}

bool has_code(const CodeSource& s) { return !s.spec.empty() || !s.builder.empty(); }

LinearCode build_code(const CodeSource& s) {
    if (!s.spec.empty() && !s.builder.empty()) throw InputError("give either --spec or --builder, not both");
    if (!s.spec.empty()) return load_spec_file(s.spec);
    if (s.builder.empty()) throw InputError("give --spec or --builder");
    if (s.q == 0) throw InputError("--builder needs --q");
    const Field f = gf::make_field_of_order(s.q);
    auto need = [&](std::size_t v, const char* flag) {
        if (v == 0) throw InputError("--builder " + s.builder + " needs " + flag);
    };
    if (s.builder == "simplex") {
        need(s.k, "--k");
        return simplex(f, s.k);
    }
    if (s.builder == "identity-pair") {
        need(s.m, "--m");
        return identity_pair(s.m, f);
    }
    need(s.n, "--n");
    need(s.k, "--k");
    if (s.builder == "grs") return grs(f, s.n, s.k);
    // --n is the total length, one more than the number of evaluation points.
    if (s.n < 2) throw InputError("extended-grs needs --n >= 2");
    return extended_grs(f, s.n - 1, s.k);
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

// Exact values with huge numerators are only shown by --json.
std::string exact_note(const Rational& r) {
    const std::string s = to_string(r);
    return s.size() <= 40 ? "  (exact " + s + ")" : std::string{};
}

std::string vec_string(const std::vector<Elem>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

void print_metrics(std::ostream& out, const LinearCode& code, const CodeMetrics& m) {
    if (!code.name.empty()) out << "code: " << code.name << '\n';
    out << "field: " << code.field().describe() << '\n';
    out << "[n,k,d] = [" << m.n << ',' << m.k << ',' << m.d << "]_" << m.q << '\n';
    out << "n = " << m.n << '\n' << "k = " << m.k << '\n' << "d = " << m.d << '\n' << "delta = " << m.delta << '\n';
    out << "dual distance: " << m.dual_distance.to_string() << '\n';
    out << "source: " << (m.structural ? "structural formula" : "enumeration") << '\n';
    if (m.weight_distribution) {
        out << "weight distribution:";
        for (const auto& [w, c] : *m.weight_distribution) out << ' ' << w << ':' << c;
        out << '\n';
    }
}

void print_reports(std::ostream& out, const std::vector<BoundReport>& reports) {
    std::size_t name_w = 5, lhs_w = 3, rhs_w = 3;
    for (const auto& r : reports) {
        name_w = std::max(name_w, r.bound_name.size());
        lhs_w = std::max(lhs_w, to_string(r.lhs).size());
        rhs_w = std::max(rhs_w, to_string(r.rhs).size());
    }
    out << std::left << std::setw(name_w) << "bound" << "  " << std::right << std::setw(lhs_w) << "lhs" << "  "
        << std::setw(rhs_w) << "rhs" << "  holds  tight  hypotheses\n";
    for (const auto& r : reports) {
        out << std::left << std::setw(name_w) << r.bound_name << "  " << std::right << std::setw(lhs_w)
            << to_string(r.lhs) << "  " << std::setw(rhs_w) << to_string(r.rhs) << "  " << std::left << std::setw(5)
            << (r.holds ? "yes" : "no") << "  " << std::setw(5) << (r.tight ? "yes" : "no") << "  "
            << (r.hypotheses_met ? "met" : "not met");
        for (const auto& reason : r.reasons) out << "; " << reason;
        out << std::right << '\n';
    }
}

int cmd_analyze(const CodeSource& src, std::uint64_t limit, bool json, std::ostream& out) {
    const LinearCode code = build_code(src);
    const CodeMetrics m = metrics(code, MetricsOptions{.enumeration_limit = limit});
    if (json) {
        Json j = to_json(m);
        if (!code.name.empty()) j["name"] = code.name;
        out << j.dump(2) << '\n';
    } else {
        print_metrics(out, code, m);
    }
    return kExitOk;
}

struct ParamArgs {
    std::optional<std::uint64_t> n, k, q, delta, d, w;
};

int cmd_bounds(const CodeSource& src, const ParamArgs& p, std::uint64_t limit, bool json, std::ostream& out) {
    if (has_code(src)) {
        const LinearCode code = build_code(src);
        const CodeMetrics m = metrics(code, MetricsOptions{.enumeration_limit = limit});
        const auto reports = verify_all(code, m);
        if (json) {
            out << Json{{"metrics", to_json(m)}, {"reports", to_json(reports)}}.dump(2) << '\n';
        } else {
            out << "[n,k,d] = [" << m.n << ',' << m.k << ',' << m.d << "]_" << m.q << ", delta = " << m.delta << '\n';
            print_reports(out, reports);
        }
        return kExitOk;
    }
    if (!src.spec.empty() || !p.n || !p.k || !p.q) throw InputError("bounds needs --n, --k and --q, or a code");
    const std::uint64_t n = *p.n, k = *p.k, q = *p.q;
    if (q < 2 || !gf::prime_power(q)) throw InputError("q = " + std::to_string(q) + " is not a prime power");
    if (k < 1 || k > n) throw InputError("need 1 <= k <= n");

    const Rational fresh = diameter_lower_bound_exact(n, k, q);
    const Rational old = old_diameter_bound(n, q);
    Json values = {{"diameter_lower_bound", to_string(ceil(fresh))},
                   {"diameter_lower_bound_exact", to_string(fresh)},
                   {"old_diameter_bound", to_string(ceil(old))},
                   {"old_diameter_bound_exact", to_string(old)}};
    if (q == 2) values["farrell_bound"] = to_string(farrell_bound(n, k));

    std::vector<BoundReport> reports;
    if (p.delta) {
        ParamTuple t;
        t.q = q;
        t.n = n;
        t.k = k;
        t.delta = *p.delta;
        t.d = p.d;
        t.w = p.w;
        reports = evaluate_parameters(t);
    }
    if (json) {
        Json params = {{"n", n}, {"k", k}, {"q", q}};
        if (p.delta) params["delta"] = *p.delta;
        if (p.d) params["d"] = *p.d;
        if (p.w) params["w"] = *p.w;
        out << Json{{"parameters", params}, {"values", values}, {"reports", to_json(reports)}}.dump(2) << '\n';
        return kExitOk;
    }
    out << "n = " << n << ", k = " << k << ", q = " << q << '\n';
    out << "diameter lower bound ceil(n q^(k-1)(q-1)/(q^k-1)) = " << to_string(ceil(fresh)) << exact_note(fresh)
        << '\n';
    out << "old diameter bound ceil((1-1/q) n) = " << to_string(ceil(old)) << exact_note(old) << '\n';
    if (q == 2) out << "Farrell bound 2^(k-1) n/(2^k-1) = " << to_string(farrell_bound(n, k)) << '\n';
    if (!reports.empty()) print_reports(out, reports);
    return kExitOk;
}

int cmd_partition(const CodeSource& src, std::optional<std::uint64_t> seed, bool json, std::ostream& out) {
    const LinearCode code = build_code(src);
    PartitionOptions opts;
    opts.random_tie_break_seed = seed;
    const PartitionTrace trace = greedy_partition(code, opts);

    const bool independence = check_independence(trace, code);
    const bool partition = check_partition(trace, code);
    const bool halving = check_halving(trace);
    std::vector<PencilCheck> pencils;
    for (auto i : pencil_steps(trace)) pencils.push_back(averaging_identity(code, trace, i));
    const bool averaging = std::all_of(pencils.begin(), pencils.end(), [](const PencilCheck& c) { return c.holds(); });
    const bool all = independence && partition && halving && averaging;

    if (json) {
        Json j = to_json(trace);
        Json pj = Json::array();
        for (const auto& c : pencils)
            pj.push_back({{"i", c.i}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"per_column_ok", c.per_column_ok}});
        j["checks"] = {{"independence", independence},
                       {"partition", partition},
                       {"halving", halving},
                       {"averaging_identity", averaging},
                       {"pencils", pj}};
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    const auto pass = [](bool b) { return b ? "pass" : "FAIL"; };
    for (std::size_t i = 0; i < trace.functionals.size(); ++i) {
        out << "a_" << i + 1 << " = " << (trace.functionals[i] ? vec_string(*trace.functionals[i]) : "-")
            << "  |S_" << i + 1 << "| = " << trace.sets[i].size() << '\n';
    }
    out << "independence: " << pass(independence) << '\n';
    out << "partition: " << pass(partition) << '\n';
    out << "halving: " << pass(halving) << '\n';
    out << "averaging identity: " << pass(averaging);
    for (const auto& c : pencils) out << "  [i=" << c.i << ": " << c.lhs << " vs " << c.rhs << ']';
    out << '\n';
    out << join_sizes(trace.set_sizes()) << " | " << (all ? "all checks pass" : "check failure") << '\n';
    return kExitOk;
}

int cmd_reproduce(bool json, std::ostream& out) {
    const auto rows = reproduce_examples();
    const bool ok = all_match(rows);
    if (json) {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back({{"example", r.example},
                           {"quantity", r.quantity},
                           {"published", r.published},
                           {"computed", r.computed},
                           {"source", r.source},
                           {"match", r.match}});
        out << Json{{"rows", arr}, {"all_match", ok}}.dump(2) << '\n';
    } else {
        std::size_t ew = 7, qw = 8, pw = 8, cw = 8;
        for (const auto& r : rows) {
            ew = std::max(ew, r.example.size());
            qw = std::max(qw, r.quantity.size());
            pw = std::max(pw, r.published.size());
            cw = std::max(cw, r.computed.size());
        }
        out << std::left << std::setw(ew) << "example" << "  " << std::setw(qw) << "quantity" << "  " << std::setw(pw)
            << "expected" << "  " << std::setw(cw) << "computed" << "  source     match\n";
        for (const auto& r : rows) {
            out << std::setw(ew) << r.example << "  " << std::setw(qw) << r.quantity << "  " << std::setw(pw)
                << r.published << "  " << std::setw(cw) << r.computed << "  " << std::setw(9) << r.source << "  "
                << (r.match ? "yes" : "NO") << '\n';
        }
        out << std::right << (ok ? "all rows match" : "MISMATCH") << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_search(SearchConfig cfg, const std::string& mode, std::ostream& out) {
    cfg.mode = mode == "nonzero" ? ColumnMode::Nonzero : ColumnMode::Projective;
    const auto rows = run_search(cfg);
    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path);
        if (!file) throw InputError("cannot write " + *cfg.output_path);
        write_csv(file, rows);
        std::size_t truncated = 0;
        for (const auto& r : rows) truncated += r.truncated;
        out << rows.size() << " rows written to " << *cfg.output_path;
        if (truncated) out << " (" << truncated << " truncated)";
        out << '\n';
    } else {
        write_csv(out, rows);
    }
    return kExitOk;
}

}  // namespace

std::uint64_t enumeration_limit_from_env() {
    const char* raw = std::getenv(kEnumerationLimitVariable);
    if (!raw || !*raw) return kDefaultEnumerationLimit;
    std::uint64_t v = 0;
    const char* end = raw + std::char_traits<char>::length(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, v);
    if (ec != std::errc{} || ptr != end || v == 0)
        throw InputError(std::string(kEnumerationLimitVariable) + " must be a positive integer, got '" + raw + "'");
    return v;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of linear codes and anticodes over finite fields", "anticode"};
    app.require_subcommand(1);

    CodeSource src;
    std::optional<std::uint64_t> limit;
    bool json = false;

    auto* analyze = app.add_subcommand("analyze", "n, k, d, delta, dual distance and weight distribution");
    add_code_options(analyze, src);
    analyze->add_option("--limit", limit, "max messages to enumerate");
    analyze->add_flag("--json", json, "emit JSON");

    ParamArgs params;
    auto* bounds = app.add_subcommand("bounds", "bound table for a code or for (n, k, q[, delta, d, w])");
    bounds->add_option("--spec", src.spec, "code-spec JSON file");
    bounds->add_option("--builder", src.builder, "simplex | identity-pair | grs | extended-grs")
        ->check(CLI::IsMember({"simplex", "identity-pair", "grs", "extended-grs"}));
    bounds->add_option("--q", params.q, "field order");
    bounds->add_option("--k", params.k, "dimension");
    bounds->add_option("--m", src.m, "identity-pair block size");
    bounds->add_option("--n", params.n, "length");
    bounds->add_option("--delta", params.delta, "diameter");
    bounds->add_option("--d", params.d, "minimum distance");
    bounds->add_option("--w", params.w, "a nonzero codeword weight");
    bounds->add_option("--limit", limit, "max messages to enumerate");
    bounds->add_flag("--json", json, "emit JSON");

    std::optional<std::uint64_t> seed;
    auto* partition = app.add_subcommand("partition", "greedy functional partition and its checks");
    add_code_options(partition, src);
    partition->add_option("--seed", seed, "break ties at random with this seed");
    partition->add_flag("--json", json, "emit the full trace as JSON");

    auto* reproduce = app.add_subcommand("reproduce", "recompute the worked examples; exit 3 on mismatch");
    reproduce->add_flag("--json", json, "emit JSON");

    SearchConfig cfg;
    cfg.qs = {2};
    std::string mode = "projective";
    std::string out_path;
    auto* search = app.add_subcommand("search", "exhaustive tightness survey, CSV catalog");
    search->add_option("--q", cfg.qs, "field orders")->delimiter(',');
    search->add_option("--k-min", cfg.k_min);
    search->add_option("--k-max", cfg.k_max);
    search->add_option("--n-min", cfg.n_min);
    search->add_option("--n-max", cfg.n_max);
    search->add_option("--mode", mode, "projective | nonzero")->check(CLI::IsMember({"projective", "nonzero"}));
    search->add_option("--budget", cfg.budget, "max multisets per (q, k, n)");
    search->add_option("--limit", limit, "max q^k per (q, k, n)");
    search->add_option("--out", out_path, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        const std::uint64_t enum_limit = limit ? *limit : enumeration_limit_from_env();
        if (*analyze) return cmd_analyze(src, enum_limit, json, out);
        if (*bounds) {
            if (!src.builder.empty()) {
                src.q = params.q.value_or(0);
                src.k = params.k.value_or(0);
                src.n = params.n.value_or(0);
            }
            return cmd_bounds(src, params, enum_limit, json, out);
        }
        if (*partition) return cmd_partition(src, seed, json, out);
        if (*reproduce) return cmd_reproduce(json, out);
        if (*search) {
            if (!out_path.empty()) cfg.output_path = out_path;
            if (limit) cfg.enumeration_limit = *limit;
            return cmd_search(cfg, mode, out);
        }
    } catch (const InfeasibleEnumeration& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const HypothesisViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace anticode
