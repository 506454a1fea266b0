#include "anticode/reproduce.hpp"

#include <algorithm>

#include "anticode/bounds.hpp"
#include "anticode/constructions.hpp"

namespace anticode {

namespace {

void add(std::vector<ReproRow>& rows, std::string example, std::string quantity, const std::string& published,
         const std::string& computed, std::string source = "published") {
    rows.push_back({std::move(example), std::move(quantity), published, computed, std::move(source),
                    published == computed});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void diameter_rows(std::vector<ReproRow>& rows, const std::string& ex, std::uint64_t n, std::uint64_t k,
                   std::uint64_t q, const std::string& new_value, const std::string& old_value) {
    const BigInt fresh = diameter_lower_bound(n, k, q);
    const BigInt old = ceil(old_diameter_bound(n, q));
    add(rows, ex, "ceil(n q^(k-1)(q-1)/(q^k-1))", new_value, to_string(fresh));
    add(rows, ex, "ceil((1-1/q) n)", old_value, to_string(old));
    add(rows, ex, "new bound > old bound", "true", yes_no(fresh > old));
}

}  // namespace

std::vector<ReproRow> reproduce_examples() {
    std::vector<ReproRow> rows;
    const Field f256 = gf::make_field(2, 8);

    {
        const std::string ex = "GRS [256,100,157] over GF(2^8)";
        const LinearCode c = grs(f256, 256, 100);
        const CodeMetrics m = metrics(c, MetricsOptions{.enumeration_limit = kDefaultEnumerationLimit, .dual_max_t = 2});
        add(rows, ex, "n", "256", std::to_string(m.n));
        add(rows, ex, "k", "100", std::to_string(m.k));
        add(rows, ex, "d", "157", std::to_string(m.d));
        add(rows, ex, "n < q^(k-1)", "true", yes_no(BigInt(m.n) < ipow(256, m.k - 1)));
        add(rows, ex, "d(C^perp) >= 3", "true", yes_no(dual_distance_at_least(c, 3)));
        diameter_rows(rows, ex, m.n, m.k, 256, "256", "255");
    }
    {
        const std::string ex = "extended GRS [256,240,17] and its direct sum";
        const LinearCode c = extended_grs(f256, 255, 240);
        const MetricsOptions opts{.enumeration_limit = kDefaultEnumerationLimit, .dual_max_t = 2};
        const CodeMetrics m = metrics(c, opts);
        add(rows, ex, "[n,k,d] of extended GRS", "[256,240,17]",
            "[" + std::to_string(m.n) + "," + std::to_string(m.k) + "," + std::to_string(m.d) + "]");
        const LinearCode sum = direct_sum(c, c);
        const CodeMetrics ms = metrics(sum, opts);
        add(rows, ex, "[n,k,d] of C + C", "[512,480,17]",
            "[" + std::to_string(ms.n) + "," + std::to_string(ms.k) + "," + std::to_string(ms.d) + "]");
        add(rows, ex, "n < q^(k-1)", "true", yes_no(BigInt(ms.n) < ipow(256, ms.k - 1)));
        add(rows, ex, "d((C + C)^perp) >= 3", "true", yes_no(dual_distance_at_least(sum, 3)));
        diameter_rows(rows, ex, ms.n, ms.k, 256, "511", "510");
    }
    {
        const std::string ex = "(I_10 | I_10) over GF(2)";
        const LinearCode c = identity_pair(10, gf::make_field(2, 1));
        const CodeMetrics m = metrics(c, kDefaultEnumerationLimit);
        add(rows, ex, "[n,k,d]", "[20,10,2]",
            "[" + std::to_string(m.n) + "," + std::to_string(m.k) + "," + std::to_string(m.d) + "]");
        add(rows, ex, "delta", "20", std::to_string(m.delta), "derived");
        diameter_rows(rows, ex, m.n, m.k, 2, "11", "10");
    }
    {
        const Field f2 = gf::make_field(2, 1);
        for (std::uint64_t k = 3; k <= 5; ++k) {
            const std::string ex = "binary simplex [2^" + std::to_string(k - 1) + "-1," + std::to_string(k - 1) + ",2^" +
                                   std::to_string(k - 2) + "]";
            const std::uint64_t delta = std::uint64_t{1} << (k - 2);
            const std::uint64_t n = (std::uint64_t{1} << (k - 1)) - 1;
            add(rows, ex, "length_upper_bound(2, delta) = n", std::to_string(n),
                to_string(length_upper_bound(2, delta)));
            const CodeMetrics m = metrics(simplex(f2, k - 1), kDefaultEnumerationLimit);
            add(rows, ex, "enumerated (n, delta)", "(" + std::to_string(n) + ", " + std::to_string(delta) + ")",
                "(" + std::to_string(m.n) + ", " + std::to_string(m.delta) + ")", "derived");
        }
    }
    for (std::uint64_t q : {4, 5, 7, 8, 9}) {
        const std::string ex = "[2q+2,4,q]_q, q = " + std::to_string(q);
        add(rows, ex, "length_upper_bound(q, 2q) = 2q+2", std::to_string(2 * q + 2), to_string(length_upper_bound(q, 2 * q)));
    }
    for (std::uint64_t q : {2, 3, 4}) {
        for (std::uint64_t k : {2, 3, 4}) {
            const std::string ex = "[(q^k-1)/(q-1), k, q^(k-1)-1]_q, q = " + std::to_string(q) + ", k = " + std::to_string(k);
            const std::uint64_t n = static_cast<std::uint64_t>((ipow(q, k) - 1) / (q - 1));
            const std::uint64_t delta = static_cast<std::uint64_t>(ipow(q, k - 1));
            add(rows, ex, "dimension_lower_bound = k", std::to_string(k),
                std::to_string(dimension_lower_bound(n, q, delta)));
        }
    }
    return rows;
}

bool all_match(const std::vector<ReproRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.match; });
}

}  // namespace anticode
