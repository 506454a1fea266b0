#include "anticode/constructions.hpp"

#include <algorithm>
#include <string>

namespace anticode {

namespace {

Matrix grs_rows(const Field& field, std::span<const Elem> alphas, std::span<const Elem> vs, std::size_t k,
                std::size_t extra_cols) {
    const std::size_t n = alphas.size();
    if (vs.size() != n) throw InputError("grs: alphas and multipliers differ in length");
    if (n < 1 || n > field.order()) throw InputError("grs: need 1 <= n <= q");
    if (k < 1 || k > n) throw InputError("grs: need 1 <= k <= n (k = " + std::to_string(k) + ")");
    std::vector<Elem> sorted(alphas.begin(), alphas.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("grs: repeated evaluation point");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!field.contains(alphas[j]) || !field.contains(vs[j])) throw InputError("grs: element not in field");
        if (vs[j] == 0) throw InputError("grs: multiplier v_" + std::to_string(j) + " is zero");
    }
    Matrix g(field, k, n + extra_cols);
    for (std::size_t j = 0; j < n; ++j) {
        Elem power = 1;
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = field.mul(vs[j], power);
            power = field.mul(power, alphas[j]);
        }
    }
    return g;
}

std::vector<Elem> first_elements(const Field& field, std::size_t n) {
    if (n > field.order()) throw InputError("grs: n exceeds the field order");
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

}  // namespace

LinearCode grs(const Field& field, std::span<const Elem> alphas, std::span<const Elem> vs, std::size_t k) {
    Matrix g = grs_rows(field, alphas, vs, k, 0);
    // Vandermonde rows on distinct points are independent.
    LinearCode code(std::move(g), LinearCode::RankKnown{}, GrsStructure{alphas.size(), k, false});
    code.name = "grs";
    return code;
}

LinearCode extended_grs(const Field& field, std::span<const Elem> alphas, std::span<const Elem> vs, std::size_t k) {
    Matrix g = grs_rows(field, alphas, vs, k, 1);
    g(k - 1, alphas.size()) = 1;
    LinearCode code(std::move(g), LinearCode::RankKnown{}, GrsStructure{alphas.size(), k, true});
    code.name = "extended-grs";
    return code;
}

LinearCode grs(const Field& field, std::size_t n, std::size_t k) {
    const auto alphas = first_elements(field, n);
    const std::vector<Elem> ones(n, 1);
    return grs(field, alphas, ones, k);
}

LinearCode extended_grs(const Field& field, std::size_t n, std::size_t k) {
    const auto alphas = first_elements(field, n);
    const std::vector<Elem> ones(n, 1);
    return extended_grs(field, alphas, ones, k);
}

std::vector<std::vector<Elem>> projective_points(const Field& field, std::size_t k) {
    const std::uint64_t q = field.order();
    std::vector<std::vector<Elem>> points;
    // Lexicographic order, first coordinate most significant: vectors with
    // more leading zeros come first; after the leading 1 every tail appears
    // in order.
    for (std::size_t lead = k; lead-- > 0;) {
        const std::size_t tail_len = k - 1 - lead;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < tail_len; ++i) count *= q;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<Elem> v(k, 0);
            v[lead] = 1;
            std::uint64_t rest = t;
            for (std::size_t i = k; i-- > lead + 1;) {
                v[i] = static_cast<Elem>(rest % q);
                rest /= q;
            }
            points.push_back(std::move(v));
        }
    }
    return points;
}

LinearCode simplex(const Field& field, std::size_t k) {
    if (k < 2) throw InputError("simplex: k must be >= 2");
    const auto points = projective_points(field, k);
    Matrix g(field, k, points.size());
    for (std::size_t c = 0; c < points.size(); ++c)
        for (std::size_t r = 0; r < k; ++r) g(r, c) = points[c][r];
    // Contains every unit vector, hence full rank.
    LinearCode code(std::move(g), LinearCode::RankKnown{}, SimplexStructure{k});
    code.name = "simplex";
    return code;
}

LinearCode identity_pair(std::size_t m, const Field& field) {
    if (m < 1) throw InputError("identity_pair: m must be >= 1");
    Matrix g(field, m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        g(i, i) = 1;
        g(i, m + i) = 1;
    }
    LinearCode code(std::move(g), LinearCode::RankKnown{});
    code.name = "identity-pair";
    return code;
}

}  // namespace anticode
