#include "anticode/partition.hpp"

#include <algorithm>
#include <random>

#include "anticode/constructions.hpp"

namespace anticode {

namespace {

std::uint64_t projective_count(std::uint64_t q, std::size_t k) {
    // (q^k - 1) / (q - 1), saturating.
    unsigned __int128 total = 0, power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total += power;
        power *= q;
        if (total > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(total);
}

std::size_t support_count(const Field& f, const std::vector<Elem>& a, const std::vector<std::vector<Elem>>& columns,
                          const std::vector<std::size_t>& indices) {
    std::size_t count = 0;
    for (auto j : indices)
        if (functional_apply(f, a, columns[j]) != 0) ++count;
    return count;
}

std::vector<std::vector<Elem>> columns_of(const LinearCode& code) {
    std::vector<std::vector<Elem>> cols(code.length());
    for (std::size_t j = 0; j < code.length(); ++j) cols[j] = code.generator().column(j);
    return cols;
}

}  // namespace

std::vector<std::size_t> PartitionTrace::set_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.size());
    return out;
}

PartitionTrace greedy_partition(const LinearCode& code, const PartitionOptions& options) {
    if (auto z = first_zero_column(code)) {
        throw HypothesisViolation("generator column " + std::to_string(*z) + " is zero, so d(C^perp) = 1");
    }
    const Field& f = code.field();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::uint64_t candidates = projective_count(f.order(), k);
    if (candidates > options.functional_budget) {
        throw InfeasibleEnumeration("greedy_partition: " + std::to_string(candidates) +
                                    " projective functionals exceed the budget of " +
                                    std::to_string(options.functional_budget));
    }
    // Support sets are invariant under scaling a, so projective
    // representatives (first nonzero coordinate 1) cover every choice.
    const auto functionals = projective_points(f, k);
    const auto cols = columns_of(code);

    std::optional<std::mt19937_64> rng;
    if (options.random_tie_break_seed) rng.emplace(*options.random_tie_break_seed);

    PartitionTrace trace;
    trace.q = f.order();
    trace.n = n;
    trace.k = k;
    std::vector<std::size_t> remaining(n);
    for (std::size_t j = 0; j < n; ++j) remaining[j] = j;
    trace.remainders.push_back(remaining);

    for (std::size_t step = 0; step < k; ++step) {
        if (remaining.empty()) {
            trace.functionals.emplace_back(std::nullopt);
            trace.sets.emplace_back();
            trace.remainders.push_back(remaining);
            continue;
        }
        std::size_t best = 0;
        std::vector<std::size_t> best_idx;
        for (std::size_t c = 0; c < functionals.size(); ++c) {
            const std::size_t cnt = support_count(f, functionals[c], cols, remaining);
            if (cnt > best || best_idx.empty()) {
                best = cnt;
                best_idx.assign(1, c);
            } else if (cnt == best) {
                best_idx.push_back(c);
            }
        }
        std::size_t chosen = best_idx.front();
        if (rng) {
            std::uniform_int_distribution<std::size_t> pick(0, best_idx.size() - 1);
            chosen = best_idx[pick(*rng)];
        }
        const auto& a = functionals[chosen];
        std::vector<std::size_t> s, r;
        for (auto j : remaining) (functional_apply(f, a, cols[j]) != 0 ? s : r).push_back(j);
        trace.functionals.emplace_back(a);
        trace.sets.push_back(std::move(s));
        remaining = std::move(r);
        trace.remainders.push_back(remaining);
    }
    return trace;
}

bool check_independence(const PartitionTrace& trace, const LinearCode& code) {
    const Field& f = code.field();
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < trace.functionals.size(); ++i) {
        if (trace.remainders.size() <= i || trace.remainders[i].empty()) break;
        const auto& a = trace.functionals[i];
        if (!a || a->size() != code.dimension()) return false;
        rows.push_back(*a);
        if (rank(Matrix::from_rows(f, rows)) != rows.size()) return false;
    }
    return true;
}

bool check_partition(const PartitionTrace& trace, const LinearCode& code) {
    std::vector<int> seen(code.length(), 0);
    for (const auto& s : trace.sets) {
        for (auto j : s) {
            if (j >= code.length() || seen[j]++) return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; });
}

bool check_halving(const PartitionTrace& trace) {
    for (std::size_t i = 1; i < trace.sets.size(); ++i) {
        if (trace.sets[i].size() > trace.sets[i - 1].size() / trace.q) return false;
    }
    return true;
}

bool check_maximality(const PartitionTrace& trace, const LinearCode& code) {
    const Field& f = code.field();
    const auto functionals = projective_points(f, code.dimension());
    const auto cols = columns_of(code);
    for (std::size_t i = 0; i < trace.sets.size(); ++i) {
        const auto& r = trace.remainders[i];
        if (r.empty()) continue;
        for (const auto& a : functionals) {
            if (support_count(f, a, cols, r) > trace.sets[i].size()) return false;
        }
    }
    return true;
}

bool check_trace_consistency(const PartitionTrace& trace, const LinearCode& code) {
    const Field& f = code.field();
    const std::size_t k = code.dimension();
    if (trace.functionals.size() != k || trace.sets.size() != k || trace.remainders.size() != k + 1) return false;
    std::vector<std::size_t> all(code.length());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    if (trace.remainders[0] != all) return false;
    const auto cols = columns_of(code);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& prev = trace.remainders[i];
        std::vector<std::size_t> s, r;
        if (prev.empty()) {
            if (trace.functionals[i]) return false;
        } else {
            const auto& a = trace.functionals[i];
            if (!a) return false;
            if (std::all_of(a->begin(), a->end(), [](Elem e) { return e == 0; })) return false;
            for (auto j : prev) (functional_apply(f, *a, cols[j]) != 0 ? s : r).push_back(j);
        }
        if (trace.sets[i] != s || trace.remainders[i + 1] != r) return false;
    }
    return true;
}

std::vector<std::size_t> pencil_steps(const PartitionTrace& trace) {
    std::vector<std::size_t> out;
    for (std::size_t i = 2; i <= trace.functionals.size(); ++i) {
        if (trace.functionals[i - 2] && trace.functionals[i - 1]) out.push_back(i);
    }
    return out;
}

PencilCheck averaging_identity(const LinearCode& code, const PartitionTrace& trace, std::size_t i) {
    if (i < 2 || i > trace.functionals.size()) throw InputError("averaging_identity: step must satisfy 2 <= i <= k");
    const auto& prev = trace.functionals[i - 2];
    const auto& cur = trace.functionals[i - 1];
    if (!prev || !cur) throw InputError("averaging_identity: step " + std::to_string(i) + " lacks a functional");
    const Field& f = code.field();
    const std::uint64_t q = f.order();
    const std::size_t k = code.dimension();

    // Pencil b_t for t in GF(q), then b_inf = a_i.
    std::vector<std::vector<Elem>> pencil;
    pencil.reserve(q + 1);
    for (std::uint64_t t = 0; t < q; ++t) {
        std::vector<Elem> b(k);
        for (std::size_t r = 0; r < k; ++r) b[r] = f.add((*prev)[r], f.mul(static_cast<Elem>(t), (*cur)[r]));
        pencil.push_back(std::move(b));
    }
    pencil.push_back(*cur);

    PencilCheck out;
    out.i = i;
    out.per_column_ok = true;
    for (auto j : trace.remainders[i - 2]) {
        const auto g = code.generator().column(j);
        std::uint64_t inner = 0;
        for (const auto& b : pencil) inner += functional_apply(f, b, g) != 0 ? 1 : 0;
        out.lhs += inner;
        const bool both_zero = functional_apply(f, *prev, g) == 0 && functional_apply(f, *cur, g) == 0;
        if (inner != (both_zero ? 0 : q)) out.per_column_ok = false;
    }
    out.rhs = q * (trace.sets[i - 2].size() + trace.sets[i - 1].size());
    return out;
}

}  // namespace anticode
