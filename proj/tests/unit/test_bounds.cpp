#include "doctest.h"

#include "anticode/bounds.hpp"
#include "anticode/constructions.hpp"
#include "oracles.hpp"

using namespace anticode;

namespace {

const BoundReport& find(const std::vector<BoundReport>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.bound_name == name) return r;
    FAIL("missing report " << name);
    throw;
}

bool has(const std::vector<BoundReport>& rs, const std::string& name) {
    return std::any_of(rs.begin(), rs.end(), [&](const BoundReport& r) { return r.bound_name == name; });
}

}  // namespace

TEST_CASE("frozen bound values") {
    CHECK(anti_griesmer_rhs(2, 10, 20) == 38);
    CHECK(griesmer_lhs(2, 10, 2) == 11);
    CHECK(to_string(farrell_bound(20, 10)) == "10240/1023");
    CHECK(weighted_length_bound(2, 10, 20, 2) == 40);
    CHECK(weighted_length_bound(2, 3, 4, 4) == 10);
    CHECK(erdos_kleitman_rhs(7, 4) == 29);
    CHECK(erdos_kleitman_rhs(4, 4) == 11);
    CHECK(diameter_lower_bound(20, 10, 2) == 11);
    CHECK(ceil(old_diameter_bound(20, 2)) == 10);
    CHECK(diameter_lower_bound(256, 100, 256) == 256);
    CHECK(ceil(old_diameter_bound(256, 256)) == 255);
    CHECK(diameter_lower_bound(512, 480, 256) == 511);
    CHECK(ceil(old_diameter_bound(512, 256)) == 510);
    CHECK(to_string(diameter_lower_bound_exact(3, 2, 2)) == "2");
    CHECK(length_upper_bound(2, 4) == 7);
    CHECK(length_upper_bound(4, 8) == 10);
    CHECK(dimension_lower_bound(13, 3, 9) == 3);
}

TEST_CASE("integer bounds agree with machine-word oracles") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
        for (std::uint64_t k = 1; k <= 6; ++k) {
            for (std::uint64_t v = 1; v <= 60; ++v) {
                CHECK(anti_griesmer_rhs(q, k, v) == oracle::anti_griesmer(q, k, v));
                CHECK(griesmer_lhs(q, k, v) == oracle::griesmer(q, k, v));
                CHECK(diameter_lower_bound(v, k, q) == oracle::diameter_bound(v, k, q));
                CHECK(anti_griesmer_rational_floor(q, k, v) >= anti_griesmer_rhs(q, k, v));
                if (k >= 2) {
                    CHECK(Rational(weighted_length_bound(q, k, v, 1)) <= weighted_length_bound_ceiling_free(q, k, v, 1));
                }
            }
        }
        for (std::uint64_t delta = 1; delta <= 80; ++delta) CHECK(length_upper_bound(q, delta) == oracle::length_upper(q, delta));
    }
}

TEST_CASE("dimension lower bound is the least admissible k") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        for (std::uint64_t n = 1; n <= 30; ++n) {
            for (std::uint64_t delta = 1; delta <= n; ++delta) {
                const bool defined = delta * q > n * (q - 1);
                if (!defined) {
                    CHECK_THROWS_AS(dimension_lower_bound(n, q, delta), BoundUndefined);
                    continue;
                }
                std::uint64_t k = 0;
                while (oracle::ipow(q, k) * (delta * q - n * (q - 1)) < delta * q) ++k;
                CHECK(dimension_lower_bound(n, q, delta) == k);
            }
        }
    }
}

TEST_CASE("the q-ary simplex parameters meet the dimension bound") {
    for (std::uint64_t q : {2, 3, 4})
        for (std::uint64_t k : {2, 3, 4})
            CHECK(dimension_lower_bound((oracle::ipow(q, k) - 1) / (q - 1), q, oracle::ipow(q, k - 1)) == k);
}

TEST_CASE("rational helpers") {
    CHECK(ceil_div(7, 2) == 4);
    CHECK(floor_div(7, 2) == 3);
    CHECK(ceil_div(6, 3) == 2);
    CHECK(ceil(Rational(7, 3)) == 3);
    CHECK(floor(Rational(7, 3)) == 2);
    CHECK(ceil(Rational(6)) == 6);
    for (const char* s : {"0", "7", "10240/1023", "-3/4"}) CHECK(to_string(parse_rational(s)) == s);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK(ipow(256, 100) > ipow(2, 799));
}

TEST_CASE("dominance over the earlier diameter bound is strict in exact rationals") {
    for (std::uint64_t q : {2, 3, 256})
        for (std::uint64_t k = 1; k <= 12; ++k)
            for (std::uint64_t n = 1; n <= 12; ++n) {
                CHECK(diameter_lower_bound_exact(n, k, q) > old_diameter_bound(n, q));
                CHECK(diameter_lower_bound(n, k, q) >= ceil(old_diameter_bound(n, q)));
            }
}

TEST_CASE("parameter reports") {
    ParamTuple t;
    t.q = 2;
    t.n = 7;
    t.k = 3;
    t.delta = 4;
    t.d = 4;
    t.w = 4;
    t.dual_distance_lb = 3;
    const auto rs = evaluate_parameters(t);
    const auto& ag = find(rs, "anti_griesmer");
    CHECK(ag.holds);
    CHECK(ag.tight);
    CHECK(find(rs, "griesmer").tight);
    CHECK(find(rs, "diameter_lower").tight);
    CHECK(find(rs, "farrell").hypotheses_met);
    CHECK(find(rs, "length_upper").tight);
    CHECK(find(rs, "dimension_lower").tight);
    CHECK(find(rs, "weighted_length").lhs == 7);
    CHECK(find(rs, "weighted_length").rhs == 10);
    CHECK(has(rs, "min_weight_length"));
    CHECK_FALSE(find(rs, "old_diameter").hypotheses_met);

    t.q = 3;
    CHECK_FALSE(has(evaluate_parameters(t), "farrell"));

    ParamTuple bad = t;
    bad.delta = 9;
    CHECK_THROWS_AS(evaluate_parameters(bad), InputError);
    bad = t;
    bad.q = 6;
    CHECK_THROWS_AS(evaluate_parameters(bad), InputError);
    bad = t;
    bad.k = 8;
    CHECK_THROWS_AS(evaluate_parameters(bad), InputError);
}

TEST_CASE("a parameter tuple beyond the bound is reported as violated") {
    ParamTuple t;
    t.q = 2;
    t.n = 8;
    t.k = 3;
    t.delta = 4;
    const auto rs = evaluate_parameters(t);
    CHECK(find(rs, "anti_griesmer").violated());
    CHECK_FALSE(feasible(rs));
    t.dual_distance_lb = 1;
    const auto vacuous = evaluate_parameters(t);
    CHECK_FALSE(find(vacuous, "anti_griesmer").violated());
    CHECK_FALSE(find(vacuous, "anti_griesmer").hypotheses_met);
}

TEST_CASE("undefined dimension bound is reported, not thrown") {
    ParamTuple t;
    t.q = 2;
    t.n = 10;
    t.k = 5;
    t.delta = 5;
    const auto& r = find(evaluate_parameters(t), "dimension_lower");
    CHECK_FALSE(r.hypotheses_met);
    CHECK_FALSE(r.reasons.empty());
}

TEST_CASE("small diameter clauses") {
    ParamTuple t;
    t.q = 4;
    t.n = 5;
    t.k = 2;
    t.delta = 4;
    const auto rs = small_diameter_check(t);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].hypotheses_met);
    CHECK(rs[0].holds);
    CHECK(rs[1].hypotheses_met);
    CHECK(rs[1].tight);
    t.n = 6;
    CHECK_FALSE(feasible(small_diameter_check(t)));
}

TEST_CASE("verify_all on concrete codes") {
    const Field f2 = gf::make_field(2, 1);
    const auto rs = verify_all(simplex(f2, 3));
    CHECK(find(rs, "anti_griesmer").tight);
    CHECK(has(rs, "weighted_length[w=4]"));
    CHECK(find(rs, "erdos_kleitman").rhs == 29);
    for (const auto& r : rs) CHECK_FALSE(r.violated());

    // A zero column keeps the report but marks its hypotheses unmet.
    const LinearCode z(Matrix::from_rows(f2, {{1, 0, 1}, {0, 0, 1}}));
    const auto& ag = find(verify_all(z), "anti_griesmer");
    CHECK_FALSE(ag.hypotheses_met);

    const auto four = verify_all(grs(gf::make_field(2, 2), 4, 2));
    CHECK_FALSE(has(four, "erdos_kleitman"));
    for (const auto& r : four) CHECK_FALSE(r.violated());
}

TEST_CASE("code-anticode bound") {
    const Field f2 = gf::make_field(2, 1);
    const CodeMetrics code = metrics(simplex(f2, 3));
    const CodeMetrics anti = metrics(LinearCode(Matrix::from_rows(f2, {{1, 1, 1, 0, 0, 0, 0}})));
    const BoundReport r = code_anticode_check(code, anti, 7);
    CHECK(r.hypotheses_met);
    CHECK(r.lhs == 16);
    CHECK(r.rhs == 128);
    CHECK(r.holds);
    const BoundReport bad = code_anticode_check(code, metrics(simplex(f2, 3)), 7);
    CHECK_FALSE(bad.hypotheses_met);
}
