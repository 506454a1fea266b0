#include "anticode/codes.hpp"

#include <algorithm>
#include <thread>

namespace anticode {

namespace {

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t t) {
    if (t > n) return 0;
    t = std::min(t, n - t);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= t; ++i) {
        r = r * (n - t + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

// Encoding step s_v with enc(v) + s_v == enc(v + 1 mod q).
std::vector<Elem> step_scalars(const Field& f) {
    const std::uint64_t q = f.order();
    std::vector<Elem> s(q);
    for (std::uint64_t v = 0; v < q; ++v) {
        const Elem next = static_cast<Elem>((v + 1) % q);
        s[v] = f.sub(next, static_cast<Elem>(v));
    }
    return s;
}

struct RangeResult {
    std::vector<std::uint64_t> counts;
    std::vector<std::vector<Elem>> witness;  // empty vector = none seen
};

// Enumerates messages whose leading digit lies in [lead_lo, lead_hi), in
// lexicographic order with x[0] most significant. Consecutive messages
// differ by one odometer step, so each codeword is updated from the
// previous one by adding scalar multiples of the changed rows.
RangeResult enumerate_range(const LinearCode& code, std::uint64_t lead_lo, std::uint64_t lead_hi) {
    const Field& f = code.field();
    const Matrix& g = code.generator();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::uint64_t q = f.order();
    const auto steps = step_scalars(f);

    // Row j stepped from value v: steps[v] * row_j. Cached when small.
    const bool cache = std::uint64_t{k} * q * n <= (std::uint64_t{1} << 22);
    std::vector<Elem> table;
    if (cache) {
        table.resize(k * q * n);
        for (std::size_t j = 0; j < k; ++j)
            for (std::uint64_t v = 0; v < q; ++v)
                for (std::size_t c = 0; c < n; ++c) table[(j * q + v) * n + c] = f.mul(steps[v], g(j, c));
    }

    RangeResult out;
    out.counts.assign(n + 1, 0);
    out.witness.assign(n + 1, {});

    std::vector<Elem> x(k, 0);
    x[0] = static_cast<Elem>(lead_lo);
    std::vector<Elem> cw = vec_mat(x, g);
    std::size_t w = weight(cw);

    auto apply_step = [&](std::size_t j, Elem from) {
        if (cache) {
            const Elem* delta = table.data() + (j * q + from) * n;
            for (std::size_t c = 0; c < n; ++c) {
                if (delta[c] == 0) continue;
                const Elem old = cw[c];
                const Elem nw = f.add(old, delta[c]);
                w = w + (nw != 0) - (old != 0);
                cw[c] = nw;
            }
        } else {
            const Elem s = steps[from];
            auto row = g.row(j);
            for (std::size_t c = 0; c < n; ++c) {
                if (row[c] == 0) continue;
                const Elem old = cw[c];
                const Elem nw = f.add(old, f.mul(s, row[c]));
                w = w + (nw != 0) - (old != 0);
                cw[c] = nw;
            }
        }
    };

    for (;;) {
        if (out.counts[w]++ == 0) out.witness[w] = x;
        std::size_t j = k;
        bool done = false;
        while (true) {
            --j;
            const Elem from = x[j];
            if (j == 0) {
                if (std::uint64_t{from} + 1 >= lead_hi) {
                    done = true;
                    break;
                }
                apply_step(0, from);
                x[0] = from + 1;
                break;
            }
            apply_step(j, from);
            if (std::uint64_t{from} + 1 == q) {
                x[j] = 0;  // wrapped; carry into j - 1
                continue;
            }
            x[j] = from + 1;
            break;
        }
        if (done) break;
    }
    return out;
}

CodeMetrics metrics_from_counts(const LinearCode& code, const RangeResult& r) {
    CodeMetrics m;
    m.q = code.field().order();
    m.n = code.length();
    m.k = code.dimension();
    std::map<std::size_t, std::uint64_t> dist;
    for (std::size_t w = 0; w <= m.n; ++w) {
        if (r.counts[w] == 0) continue;
        dist[w] = r.counts[w];
        m.witnesses[w] = r.witness[w];
    }
    m.d = 0;
    for (const auto& [w, c] : dist) {
        if (w > 0) {
            m.d = w;
            break;
        }
    }
    m.delta = dist.rbegin()->first;
    m.weight_distribution = std::move(dist);
    return m;
}

CodeMetrics enumerate_metrics(const LinearCode& code, unsigned threads) {
    const std::uint64_t q = code.field().order();
    const std::uint64_t total = *message_count(code);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, q));
    if (total < (std::uint64_t{1} << 15)) threads = 1;

    if (threads == 1) return metrics_from_counts(code, enumerate_range(code, 0, q));

    std::vector<RangeResult> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = q * t / threads;
        const std::uint64_t hi = q * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] { parts[t] = enumerate_range(code, lo, hi); });
    }
    for (auto& th : pool) th.join();

    // Chunks cover consecutive leading digits, so merging in chunk order
    // reproduces the sequential witnesses.
    RangeResult merged;
    merged.counts.assign(code.length() + 1, 0);
    merged.witness.assign(code.length() + 1, {});
    for (const auto& part : parts) {
        for (std::size_t w = 0; w <= code.length(); ++w) {
            if (part.counts[w] && merged.counts[w] == 0) merged.witness[w] = part.witness[w];
            merged.counts[w] += part.counts[w];
        }
    }
    return metrics_from_counts(code, merged);
}

std::optional<CodeMetrics> structural_metrics(const LinearCode& code, const MetricsOptions& options);

CodeMetrics metrics_impl(const LinearCode& code, const MetricsOptions& options, bool want_dual) {
    const auto total = message_count(code);
    CodeMetrics m;
    if (total && *total <= options.enumeration_limit) {
        m = enumerate_metrics(code, options.threads);
    } else if (auto s = structural_metrics(code, options)) {
        m = std::move(*s);
    } else {
        throw InfeasibleEnumeration("infeasible enumeration: q^k = " + std::to_string(code.field().order()) + "^" +
                                    std::to_string(code.dimension()) + " messages exceeds the limit of " +
                                    std::to_string(options.enumeration_limit) + " and no structural shortcut applies");
    }
    if (want_dual) m.dual_distance = dual_distance_exact(code, options.dual_max_t, options.subset_budget);
    return m;
}

std::optional<CodeMetrics> structural_metrics(const LinearCode& code, const MetricsOptions& options) {
    if (!code.structure()) return std::nullopt;
    CodeMetrics m;
    m.q = code.field().order();
    m.n = code.length();
    m.k = code.dimension();
    m.structural = true;
    const auto& s = *code.structure();

    if (const auto* grs = std::get_if<GrsStructure>(&s)) {
        // MDS: d = n - k + 1 for both GRS and extended GRS.
        m.d = m.n - m.k + 1;
        if (!grs->extended) {
            // A nonzero constant polynomial vanishes nowhere.
            m.delta = m.n;
        } else {
            // A degree k-1 polynomial without roots on the evaluation set
            // gives full weight: a constant for k = 1, (x - b)^(k-1) for b
            // outside the set when some b is missing, an irreducible of
            // degree k-1 >= 2 otherwise. Only k = 2 with all of GF(q) used
            // forces a root, and then a constant gives weight n - 1.
            const bool full = grs->k == 1 || grs->evaluation_points < m.q || grs->k >= 3;
            m.delta = full ? m.n : m.n - 1;
        }
        return m;
    }
    if (std::get_if<SimplexStructure>(&s)) {
        std::uint64_t w = 1;
        for (std::size_t i = 0; i + 1 < m.k; ++i) w *= m.q;
        m.d = m.delta = static_cast<std::size_t>(w);
        std::uint64_t total = w * m.q;
        m.weight_distribution = std::map<std::size_t, std::uint64_t>{{0, 1}, {m.d, total - 1}};
        return m;
    }
    if (const auto* sum = std::get_if<DirectSumStructure>(&s)) {
        const CodeMetrics a = metrics_impl(*sum->left, options, false);
        const CodeMetrics b = metrics_impl(*sum->right, options, false);
        m.d = std::min(a.d, b.d);
        m.delta = a.delta + b.delta;
        m.structural = a.structural || b.structural;
        if (a.weight_distribution && b.weight_distribution) {
            std::map<std::size_t, std::uint64_t> conv;
            bool overflow = false;
            for (const auto& [wa, ca] : *a.weight_distribution)
                for (const auto& [wb, cb] : *b.weight_distribution) {
                    unsigned __int128 prod = static_cast<unsigned __int128>(ca) * cb;
                    prod += conv[wa + wb];
                    if (prod > UINT64_MAX) overflow = true;
                    conv[wa + wb] = static_cast<std::uint64_t>(prod);
                }
            if (!overflow) m.weight_distribution = std::move(conv);
        }
        return m;
    }
    return std::nullopt;
}

}  // namespace

LinearCode::LinearCode(Matrix generator, std::optional<CodeStructure> structure)
    : generator_(std::move(generator)), structure_(std::move(structure)) {
    if (generator_.cols() < 1) throw InputError("linear code: length must be >= 1");
    if (generator_.rows() < 1) throw InputError("linear code: dimension must be >= 1");
    const std::size_t r = rank(generator_);
    if (r != generator_.rows()) {
        throw InputError("linear code: generator is rank deficient (rank " + std::to_string(r) + " < " +
                         std::to_string(generator_.rows()) + " rows)");
    }
}

LinearCode::LinearCode(Matrix generator, RankKnown, std::optional<CodeStructure> structure)
    : generator_(std::move(generator)), structure_(std::move(structure)) {
    if (generator_.cols() < 1 || generator_.rows() < 1) throw InputError("linear code: empty generator");
}

std::string DualDistance::to_string() const {
    switch (kind) {
        case Kind::Exact: return std::to_string(value);
        case Kind::AtLeast: return ">=" + std::to_string(value);
        case Kind::ZeroDual: return "zero-dual";
    }
    return "?";
}

std::size_t weight(std::span<const Elem> c) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Elem e) { return e != 0; }));
}

std::vector<std::size_t> support(std::span<const Elem> c) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s.push_back(i);
    return s;
}

std::vector<Elem> encode(const LinearCode& code, std::span<const Elem> message) {
    return vec_mat(message, code.generator());
}

std::optional<std::uint64_t> message_count(const LinearCode& code) {
    const std::uint64_t q = code.field().order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        if (total > UINT64_MAX / q) return std::nullopt;
        total *= q;
    }
    return total;
}

CodeMetrics metrics(const LinearCode& code, const MetricsOptions& options) { return metrics_impl(code, options, true); }

CodeMetrics metrics(const LinearCode& code, std::uint64_t enumeration_limit) {
    MetricsOptions o;
    o.enumeration_limit = enumeration_limit;
    return metrics(code, o);
}

DualCode dual_code(const LinearCode& code) {
    DualCode out;
    out.length = code.length();
    if (code.dimension() == code.length()) return out;
    out.code.emplace(null_space(code.generator()), LinearCode::RankKnown{});
    return out;
}

std::optional<std::size_t> first_zero_column(const LinearCode& code) {
    const Matrix& g = code.generator();
    for (std::size_t c = 0; c < g.cols(); ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < g.rows() && zero; ++r) zero = g(r, c) == 0;
        if (zero) return c;
    }
    return std::nullopt;
}

namespace {

// Column scaled so its first nonzero entry is 1; empty for a zero column.
std::vector<Elem> projective_normal(const Matrix& g, std::size_t c) {
    const Field& f = g.field();
    std::vector<Elem> col = g.column(c);
    auto it = std::find_if(col.begin(), col.end(), [](Elem e) { return e != 0; });
    if (it == col.end()) return {};
    const Elem s = f.inv(*it);
    for (auto& e : col) e = f.mul(e, s);
    return col;
}

bool has_proportional_pair(const LinearCode& code) {
    std::map<std::vector<Elem>, std::size_t> seen;
    for (std::size_t c = 0; c < code.length(); ++c) {
        auto key = projective_normal(code.generator(), c);
        if (!seen.emplace(std::move(key), c).second) return true;
    }
    return false;
}

}  // namespace

bool dual_distance_at_least(const LinearCode& code, std::size_t t) {
    if (t != 2 && t != 3) throw InputError("dual_distance_at_least: t must be 2 or 3");
    if (first_zero_column(code)) return false;
    if (t == 2) return true;
    return !has_proportional_pair(code);
}

DualDistance dual_distance_exact(const LinearCode& code, std::size_t max_t, std::uint64_t subset_budget) {
    using Kind = DualDistance::Kind;
    if (max_t < 1) throw InputError("dual_distance_exact: max_t must be >= 1");
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    if (k == n) return {Kind::ZeroDual, 0};
    if (first_zero_column(code)) return {Kind::Exact, 1};
    if (max_t < 2) return {Kind::AtLeast, 2};
    if (has_proportional_pair(code)) return {Kind::Exact, 2};

    const Matrix& g = code.generator();
    for (std::size_t t = 3; t <= max_t; ++t) {
        // Any k + 1 columns are dependent.
        if (t == k + 1) return {Kind::Exact, t};
        if (saturating_binomial(n, t) > subset_budget) return {Kind::AtLeast, t};
        std::vector<std::size_t> idx(t);
        for (std::size_t i = 0; i < t; ++i) idx[i] = i;
        for (;;) {
            if (rank(g.select_columns(idx)) < t) return {Kind::Exact, t};
            std::size_t i = t;
            while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {Kind::AtLeast, max_t + 1};
}

LinearCode puncture(const LinearCode& code, std::span<const std::size_t> positions) {
    std::vector<bool> drop(code.length(), false);
    for (auto p : positions) {
        if (p >= code.length()) throw InputError("puncture: position " + std::to_string(p) + " out of range");
        drop[p] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < code.length(); ++c)
        if (!drop[c]) keep.push_back(c);
    if (keep.empty()) throw InputError("puncture: every coordinate removed, result is the zero code");
    const Matrix reduced = row_space_basis(code.generator().select_columns(keep));
    if (reduced.rows() == 0) throw InputError("puncture: result is the zero code");
    return LinearCode(reduced, LinearCode::RankKnown{});
}

bool contains(const LinearCode& code, std::span<const Elem> word) {
    if (word.size() != code.length()) return false;
    const Matrix& g = code.generator();
    std::vector<Elem> entries = g.entries();
    for (auto e : word) {
        if (!code.field().contains(e)) return false;
        entries.push_back(e);
    }
    return rank(Matrix(code.field(), g.rows() + 1, g.cols(), std::move(entries))) == code.dimension();
}

LinearCode residual(const LinearCode& code, std::span<const Elem> codeword) {
    if (codeword.size() != code.length()) throw InputError("residual: codeword has the wrong length");
    if (weight(codeword) == 0) throw InputError("residual: codeword is zero");
    if (!contains(code, codeword)) throw InputError("residual: word is not a codeword");
    const auto s = support(codeword);
    return puncture(code, s);
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    if (a.field() != b.field()) {
        throw FieldMismatch("direct_sum: " + a.field().describe() + " vs " + b.field().describe());
    }
    const std::size_t n = a.length() + b.length();
    const std::size_t k = a.dimension() + b.dimension();
    Matrix g(a.field(), k, n);
    for (std::size_t r = 0; r < a.dimension(); ++r)
        for (std::size_t c = 0; c < a.length(); ++c) g(r, c) = a.generator()(r, c);
    for (std::size_t r = 0; r < b.dimension(); ++r)
        for (std::size_t c = 0; c < b.length(); ++c) g(a.dimension() + r, a.length() + c) = b.generator()(r, c);
    DirectSumStructure s{std::make_shared<const LinearCode>(a), std::make_shared<const LinearCode>(b)};
    return LinearCode(std::move(g), LinearCode::RankKnown{}, CodeStructure{std::move(s)});
}

}  // namespace anticode
