// Acceptance suite. Prints one PASS/FAIL line per criterion, followed by
// indented detail lines. Usage: acceptance [criterion ...]; no arguments
// runs all eight. Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "anticode/bounds.hpp"
#include "anticode/cli.hpp"
#include "anticode/constructions.hpp"
#include "anticode/partition.hpp"
#include "anticode/reproduce.hpp"

using namespace anticode;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { details.push_back("     " + what); }
};

std::string str(const BigInt& v) { return to_string(v); }

// Random corpus shared by criteria 2, 3 and 5: q in {2,3,4,5}, k <= 5,
// n <= 12, no zero column, full rank.
struct CorpusCode {
    LinearCode code;
    CodeMetrics m;
};

const std::vector<CorpusCode>& corpus() {
    static const std::vector<CorpusCode> codes = [] {
        std::vector<CorpusCode> out;
        std::mt19937_64 rng(20240601);
        const std::uint64_t qs[] = {2, 3, 4, 5};
        while (out.size() < 1000) {
            const std::uint64_t q = qs[rng() % 4];
            const Field f = gf::make_field_of_order(q);
            const std::size_t k = 1 + rng() % 5;
            const std::size_t n = k + rng() % (12 - k + 1);
            std::vector<Elem> e(k * n);
            for (std::size_t j = 0; j < n; ++j) {
                bool nonzero = false;
                while (!nonzero) {
                    for (std::size_t r = 0; r < k; ++r) {
                        e[r * n + j] = static_cast<Elem>(rng() % q);
                        nonzero |= e[r * n + j] != 0;
                    }
                }
            }
            Matrix g(f, k, n, e);
            if (rank(g) != k) continue;
            LinearCode c(std::move(g));
            MetricsOptions opts;
            opts.dual_max_t = 2;
            CodeMetrics m = metrics(c, opts);
            out.push_back({std::move(c), std::move(m)});
        }
        return out;
    }();
    return codes;
}

Outcome criterion1() {
    Outcome o;
    auto timed = [&](const std::string& label, const std::function<bool()>& body) {
        const auto t0 = Clock::now();
        const bool ok = body();
        const double s = seconds_since(t0);
        std::ostringstream msg;
        msg << label << " (" << s << " s)";
        o.require(ok && s < 1.0, msg.str());
    };
    timed("diameter_lower_bound(256,100,256) = 256, ceil((1-1/256) 256) = 255", [] {
        return diameter_lower_bound(256, 100, 256) == 256 && ceil(old_diameter_bound(256, 256)) == 255;
    });
    timed("[512,480,17] from direct_sum of extended GRS; 511 vs 510", [] {
        const LinearCode e = extended_grs(gf::make_field(2, 8), 255, 240);
        MetricsOptions opts;
        opts.dual_max_t = 2;
        const CodeMetrics m = metrics(direct_sum(e, e), opts);
        return m.n == 512 && m.k == 480 && m.d == 17 && diameter_lower_bound(m.n, m.k, 256) == 511 &&
               ceil(old_diameter_bound(m.n, 256)) == 510;
    });
    timed("identity_pair(10,2) enumerates to [20,10,2], delta 20; 11 vs 10", [] {
        const CodeMetrics m = metrics(identity_pair(10, gf::make_field(2, 1)));
        return !m.structural && m.n == 20 && m.k == 10 && m.d == 2 && m.delta == 20 &&
               diameter_lower_bound(20, 10, 2) == 11 && ceil(old_diameter_bound(20, 2)) == 10;
    });
    timed("length_upper_bound(2, 2^(k-2)) = 2^(k-1)-1 for k = 3,4,5; length_upper_bound(q, 2q) = 2q+2", [] {
        bool ok = true;
        for (std::uint64_t k : {3, 4, 5})
            ok &= length_upper_bound(2, std::uint64_t{1} << (k - 2)) == (std::uint64_t{1} << (k - 1)) - 1;
        for (std::uint64_t q : {4, 5, 7, 8, 9}) ok &= length_upper_bound(q, 2 * q) == 2 * q + 2;
        return ok;
    });
    timed("dimension_lower_bound((q^k-1)/(q-1), q, q^(k-1)) = k for q, k in {2,3,4}", [] {
        bool ok = true;
        for (std::uint64_t q : {2, 3, 4})
            for (std::uint64_t k : {2, 3, 4}) {
                const auto n = static_cast<std::uint64_t>((ipow(q, k) - 1) / (q - 1));
                ok &= dimension_lower_bound(n, q, static_cast<std::uint64_t>(ipow(q, k - 1))) == k;
            }
        return ok;
    });
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t bound_fail = 0, indep = 0, part = 0, halve = 0, avg = 0, pencils = 0;
    for (const auto& [c, m] : corpus()) {
        if (BigInt(m.n) > anti_griesmer_rhs(m.q, m.k, m.delta)) ++bound_fail;
        const PartitionTrace t = greedy_partition(c);
        indep += !check_independence(t, c);
        part += !check_partition(t, c);
        halve += !check_halving(t);
        for (auto i : pencil_steps(t)) {
            ++pencils;
            avg += !averaging_identity(c, t, i).holds();
        }
    }
    const double s = seconds_since(t0);
    o.require(corpus().size() == 1000, "corpus of " + std::to_string(corpus().size()) + " codes");
    o.require(bound_fail == 0, "n <= anti_griesmer_rhs(q,k,delta): " + std::to_string(bound_fail) + " violations");
    o.require(indep == 0, "check_independence: " + std::to_string(indep) + " failures");
    o.require(part == 0, "check_partition: " + std::to_string(part) + " failures");
    o.require(halve == 0, "check_halving: " + std::to_string(halve) + " failures");
    o.require(avg == 0, "averaging_identity over " + std::to_string(pencils) + " steps: " + std::to_string(avg) +
                            " failures");
    o.require(s < 60.0, "runtime " + std::to_string(s) + " s (< 60 s, corpus build included in first use)");
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t checked = 0, fail = 0;
    for (const auto& [c, m] : corpus()) {
        if (m.k <= 1) continue;
        ++checked;
        const BigInt n = m.n;
        if (griesmer_lhs(m.q, m.k, m.d) > n || n > anti_griesmer_rhs(m.q, m.k, m.delta)) ++fail;
    }
    o.require(fail == 0, "griesmer_lhs <= n <= anti_griesmer_rhs on " + std::to_string(checked) + " codes with k > 1: " +
                             std::to_string(fail) + " violations");
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t cases = 0, fail = 0;
    MetricsOptions opts;
    opts.enumeration_limit = std::numeric_limits<std::uint64_t>::max();
    opts.dual_max_t = 2;
    for (std::uint64_t q : {4, 5, 7, 8}) {
        const Field f = gf::make_field_of_order(q);
        for (std::size_t n = 1; n <= q; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                const CodeMetrics g = metrics(grs(f, n, k), opts);
                const CodeMetrics e = metrics(extended_grs(f, n, k), opts);
                cases += 2;
                if (g.structural || g.d != n - k + 1) ++fail;
                if (e.structural || e.d != n - k + 2) ++fail;
            }
        }
    }
    const double s = seconds_since(t0);
    o.require(fail == 0, "enumerated d = n-k+1 (GRS) and n-k+2 (extended) on " + std::to_string(cases) + " codes: " +
                             std::to_string(fail) + " violations");
    o.require(s < 30.0, "runtime " + std::to_string(s) + " s (< 30 s)");
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::size_t pairs = 0, bound_fail = 0, length_fail = 0, dim_fail = 0, delta_fail = 0, dual_fail = 0;
    std::size_t at_d = 0, at_d_dim_fail = 0;
    std::string first_counterexample;
    for (const auto& [c, m] : corpus()) {
        if (!dual_distance_at_least(c, 2)) continue;
        for (const auto& [w, x] : m.witnesses) {
            if (w == 0) continue;
            ++pairs;
            if (BigInt(m.n) > weighted_length_bound(m.q, m.k, m.delta, w)) ++bound_fail;
            const auto word = encode(c, x);
            std::optional<LinearCode> res;
            try {
                res = residual(c, word);
            } catch (const InputError&) {
                // Puncturing left nothing: length 0 or the zero code.
            }
            const std::size_t len = res ? res->length() : m.n - w;
            const std::size_t dim = res ? res->dimension() : 0;
            if (len != m.n - w) ++length_fail;
            const bool dim_ok = dim == m.k - 1;
            if (!dim_ok) {
                ++dim_fail;
                if (first_counterexample.empty()) {
                    std::ostringstream msg;
                    msg << "first counterexample: [" << m.n << ',' << m.k << ',' << m.d << "]_" << m.q
                        << " delta=" << m.delta << " w=" << w << " -> dim Res = " << dim;
                    first_counterexample = msg.str();
                }
            }
            if (w == m.d) {
                ++at_d;
                at_d_dim_fail += !dim_ok;
            }
            if (res) {
                MetricsOptions opts;
                opts.dual_max_t = 2;
                const CodeMetrics rm = metrics(*res, opts);
                if (rm.delta > m.delta) ++delta_fail;
                if (!dual_distance_at_least(*res, 2)) ++dual_fail;
            }
        }
    }
    const auto n = [](std::size_t v) { return std::to_string(v); };
    o.require(bound_fail == 0, "n <= weighted_length_bound(q,k,delta,w) on " + n(pairs) + " (code, w) pairs: " +
                                   n(bound_fail) + " violations");
    o.require(length_fail == 0, "Res(C,c) has length n-w: " + n(length_fail) + " violations");
    o.require(delta_fail == 0, "delta(Res) <= delta: " + n(delta_fail) + " violations");
    o.require(dual_fail == 0, "d(Res^perp) >= 2: " + n(dual_fail) + " violations");
    o.require(at_d_dim_fail == 0, "dim Res = k-1 when w = d (" + n(at_d) + " pairs): " + n(at_d_dim_fail) + " violations");
    o.require(dim_fail == 0, "dim Res = k-1 for every nonzero weight w: " + n(dim_fail) + " of " + n(pairs) +
                                 " pairs violate it");
    if (!first_counterexample.empty()) o.note(first_counterexample);
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t cases = 0, strict_fail = 0, ceil_fail = 0, identity_fail = 0;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 256}) {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            for (std::uint64_t k = 1; k <= 10; ++k) {
                ++cases;
                const Rational old = old_diameter_bound(n, q);
                const Rational fresh = diameter_lower_bound_exact(n, k, q);
                const BigInt qk = ipow(q, k);
                if (fresh != Rational(qk, qk - 1) * old) ++identity_fail;
                if (!(fresh > old)) ++strict_fail;
                if (diameter_lower_bound(n, k, q) < ceil(old)) ++ceil_fail;
            }
        }
    }
    o.require(identity_fail == 0, "bound equals q^k/(q^k-1) (1-1/q) n on " + std::to_string(cases) + " points");
    o.require(strict_fail == 0, "strict rational dominance: " + std::to_string(strict_fail) + " violations");
    o.require(ceil_fail == 0, "ceiling dominance: " + std::to_string(ceil_fail) + " violations");
    const Rational big = diameter_lower_bound_exact(256, 100, 256);
    o.require(big > old_diameter_bound(256, 256) && ceil(big) == 256,
              "q = 256, k = 100 in big integers: " + str(ceil(big)) + " > " + str(ceil(old_diameter_bound(256, 256))) +
                  " (q^k has " + std::to_string(str(ipow(256, 100)).size()) + " digits)");
    o.require(diameter_lower_bound_exact(512, 480, 256) > old_diameter_bound(512, 256), "q = 256, k = 480, n = 512");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const Field a = gf::make_field(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    const Field b = gf::make_field(2, 4, std::vector<std::uint32_t>{1, 0, 0, 1, 1});
    const auto phi = gf::isomorphism(a, b);

    std::mt19937_64 rng(16);
    std::vector<LinearCode> codes{grs(a, 7, 3), extended_grs(a, 9, 4), simplex(a, 2)};
    std::vector<Elem> e(3 * 8);
    for (auto& v : e) v = static_cast<Elem>(1 + rng() % 15);
    codes.emplace_back(Matrix(a, 3, 8, e));

    for (const auto& ca : codes) {
        std::vector<Elem> mapped(ca.generator().entries().size());
        for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = phi[ca.generator().entries()[i]];
        const LinearCode cb(Matrix(b, ca.dimension(), ca.length(), mapped));
        const CodeMetrics ma = metrics(ca), mb = metrics(cb);
        const bool same_metrics = ma.n == mb.n && ma.k == mb.k && ma.d == mb.d && ma.delta == mb.delta &&
                                  ma.weight_distribution == mb.weight_distribution &&
                                  ma.dual_distance.kind == mb.dual_distance.kind &&
                                  ma.dual_distance.value == mb.dual_distance.value;
        // Witness messages are representation-dependent; their images must
        // still achieve the same weight.
        bool witnesses_ok = true;
        for (const auto& [w, x] : ma.witnesses) {
            std::vector<Elem> xb(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) xb[i] = phi[x[i]];
            witnesses_ok &= weight(encode(cb, xb)) == w;
        }
        const auto ra = verify_all(ca, ma), rb = verify_all(cb, mb);
        bool same_reports = ra.size() == rb.size();
        for (std::size_t i = 0; same_reports && i < ra.size(); ++i) {
            same_reports = ra[i].bound_name == rb[i].bound_name && ra[i].lhs == rb[i].lhs && ra[i].rhs == rb[i].rhs &&
                           ra[i].holds == rb[i].holds && ra[i].tight == rb[i].tight &&
                           ra[i].hypotheses_met == rb[i].hypotheses_met && ra[i].reasons == rb[i].reasons;
        }
        std::ostringstream label;
        label << "[" << ma.n << ',' << ma.k << ',' << ma.d << "]_16 delta=" << ma.delta << ": metrics "
              << (same_metrics ? "identical" : "differ") << ", " << ra.size() << " bound reports "
              << (same_reports ? "identical" : "differ");
        o.require(same_metrics && same_reports && witnesses_ok, label.str());
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const char* argv[] = {"anticode", "reproduce"};
    std::ostringstream out, err;
    const int code = run_cli(2, argv, out, err);
    const auto rows = reproduce_examples();
    std::size_t matched = 0;
    for (const auto& r : rows) matched += r.match;
    o.require(code == 0, "reproduce exit code " + std::to_string(code));
    o.require(matched == rows.size(), std::to_string(matched) + " of " + std::to_string(rows.size()) + " rows match");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "worked example reproduction", criterion1},
    {2, "antiGriesmer bound and partition checks on 1000 random codes", criterion2},
    {3, "Griesmer sandwich on the random corpus", criterion3},
    {4, "GRS and extended GRS are MDS by enumeration", criterion4},
    {5, "weighted length bound and residual codes", criterion5},
    {6, "dominance over the earlier diameter bound", criterion6},
    {7, "representation independence over GF(2^4)", criterion7},
    {8, "reproduce command exits 0 with every row matching", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int id = std::atoi(argv[i]);
        if (id < 1 || id > 8) {
            std::cerr << "unknown criterion '" << argv[i] << "'\n";
            return 2;
        }
        selected.push_back(id);
    }
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8};

    bool all = true;
    for (int id : selected) {
        const Criterion& c = kCriteria[id - 1];
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        all &= out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << "  C" << c.id << "  " << c.title << "  (" << seconds_since(t0)
                  << " s)\n";
        for (const auto& d : out.details) std::cout << "        " << d << '\n';
    }
    return all ? 0 : 1;
}
