#include "anticode/search.hpp"

#include <algorithm>
#include <ostream>

#include "anticode/bounds.hpp"
#include "anticode/constructions.hpp"

namespace anticode {

namespace {

std::vector<std::vector<Elem>> candidate_columns(const Field& f, std::size_t k, ColumnMode mode) {
    if (mode == ColumnMode::Projective) return projective_points(f, k);
    std::vector<std::vector<Elem>> out;
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    for (std::uint64_t v = 1; v < total; ++v) {
        std::vector<Elem> col(k);
        std::uint64_t rest = v;
        for (std::size_t i = k; i-- > 0;) {
            col[i] = static_cast<Elem>(rest % q);
            rest /= q;
        }
        out.push_back(std::move(col));
    }
    return out;
}

SearchRow survey_point(const Field& f, std::size_t k, std::size_t n, const SearchConfig& cfg) {
    SearchRow row;
    row.q = f.order();
    row.k = k;
    row.n = n;
    row.diameter_bound = static_cast<std::uint64_t>(diameter_lower_bound(n, k, row.q));

    std::uint64_t messages = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (messages > cfg.enumeration_limit) break;
        messages *= row.q;
    }
    if (messages > cfg.enumeration_limit) {
        row.truncated = true;
        return row;
    }

    const auto cols = candidate_columns(f, k, cfg.mode);
    const std::size_t m = cols.size();
    // hit[x * m + c]: message x is nonzero on candidate column c.
    std::vector<std::uint8_t> hit(messages * m, 0);
    std::vector<Elem> x(k, 0);
    for (std::uint64_t xi = 0; xi < messages; ++xi) {
        std::uint64_t rest = xi;
        for (std::size_t i = k; i-- > 0;) {
            x[i] = static_cast<Elem>(rest % row.q);
            rest /= row.q;
        }
        for (std::size_t c = 0; c < m; ++c) hit[xi * m + c] = functional_apply(f, x, cols[c]) != 0;
    }

    std::vector<std::size_t> idx(n, 0);
    const BigInt n_big = n;
    for (;;) {
        if (row.multisets == cfg.budget) {
            row.truncated = true;
            break;
        }
        ++row.multisets;

        Matrix g(f, k, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < k; ++r) g(r, j) = cols[idx[j]][r];
        if (rank(g) == k) {
            ++row.full_rank;
            std::size_t delta = 0;
            for (std::uint64_t xi = 1; xi < messages; ++xi) {
                std::size_t w = 0;
                for (auto c : idx) w += hit[xi * m + c];
                delta = std::max(delta, w);
            }
            row.min_delta = std::min(row.min_delta.value_or(delta), delta);
            row.max_delta = std::max(row.max_delta.value_or(delta), delta);
            if (delta == row.diameter_bound) row.diameter_bound_attained = true;
            const BigInt rhs = anti_griesmer_rhs(row.q, k, delta);
            if (n_big == rhs) row.anti_griesmer_attained = true;
            if (n_big > rhs) ++row.anti_griesmer_violations;
        }

        // Next nondecreasing index sequence.
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == m - 1) --i;
        if (i == 0) break;
        const std::size_t v = idx[i - 1] + 1;
        for (std::size_t j = i - 1; j < n; ++j) idx[j] = v;
    }
    return row;
}

}  // namespace

std::vector<SearchRow> run_search(const SearchConfig& config) {
    std::vector<SearchRow> rows;
    auto qs = config.qs;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (auto q : qs) {
        const Field f = gf::make_field_of_order(q);
        for (std::size_t k = std::max<std::size_t>(config.k_min, 1); k <= config.k_max; ++k)
            for (std::size_t n = std::max(config.n_min, k); n <= config.n_max; ++n) rows.push_back(survey_point(f, k, n, config));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SearchRow>& rows) {
    out << "q,k,n,multisets,full_rank,min_delta,max_delta,diameter_bound,diameter_bound_attained,"
           "anti_griesmer_attained,anti_griesmer_violations,truncated\n";
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string{}; };
    for (const auto& r : rows) {
        out << r.q << ',' << r.k << ',' << r.n << ',' << r.multisets << ',' << r.full_rank << ',' << opt(r.min_delta)
            << ',' << opt(r.max_delta) << ',' << r.diameter_bound << ',' << r.diameter_bound_attained << ','
            << r.anti_griesmer_attained << ',' << r.anti_griesmer_violations << ',' << r.truncated << '\n';
    }
}

}  // namespace anticode
