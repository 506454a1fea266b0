#pragma once

// Exact evaluation of length/diameter/dimension bounds for linear codes
// and anticodes. Every comparison is done in arbitrary-precision integers
// or rationals.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "anticode/codes.hpp"

namespace anticode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(std::uint64_t base, std::uint64_t exp);
// Ceiling and floor of a / b for a >= 0, b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil(const Rational& r);
BigInt floor(const Rational& r);
// "7" or "10240/1023".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);
// Inverse of to_string(Rational); throws InputError.
Rational parse_rational(const std::string& s);

// One bound instance, always phrased as lhs <= rhs.
struct BoundReport {
    std::string bound_name;
    std::string statement;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    bool tight = false;
    bool hypotheses_met = true;
    std::vector<std::string> reasons;

    // Hypotheses hold but the inequality fails.
    bool violated() const { return hypotheses_met && !holds; }
};

BoundReport make_report(std::string name, std::string statement, Rational lhs, Rational rhs, bool hypotheses_met,
                        std::vector<std::string> reasons = {});

struct ParamTuple {
    std::uint64_t q = 2;
    std::uint64_t n = 1;
    std::uint64_t k = 1;
    std::uint64_t delta = 1;
    std::optional<std::uint64_t> d;
    std::optional<std::uint64_t> w;
    // Known lower bound on d(C^perp); parameter mode assumes 2.
    std::uint64_t dual_distance_lb = 2;

    // Throws InputError when an invariant fails.
    void validate() const;
};

// sum_{i=0}^{k-1} floor(delta / q^i)
BigInt anti_griesmer_rhs(std::uint64_t q, std::uint64_t k, std::uint64_t delta);
// sum_{i=0}^{k-1} ceil(d / q^i)
BigInt griesmer_lhs(std::uint64_t q, std::uint64_t k, std::uint64_t d);
// floor(sum_{i=0}^{k-1} delta / q^i) as a single rational floor.
BigInt anti_griesmer_rational_floor(std::uint64_t q, std::uint64_t k, std::uint64_t delta);

// n q^{k-1} (q-1) / (q^k - 1), exactly, and its ceiling.
Rational diameter_lower_bound_exact(std::uint64_t n, std::uint64_t k, std::uint64_t q);
BigInt diameter_lower_bound(std::uint64_t n, std::uint64_t k, std::uint64_t q);

// (1 - 1/q) n.
Rational old_diameter_bound(std::uint64_t n, std::uint64_t q);

// 2^{k-1} n / (2^k - 1).
Rational farrell_bound(std::uint64_t n, std::uint64_t k);

// Both small-diameter clauses: (1) delta < n implies delta >= q;
// (2) delta <= q implies n <= q + 1.
std::vector<BoundReport> small_diameter_check(const ParamTuple& t);
bool feasible(const std::vector<BoundReport>& reports);

// q delta/(q-1) - 1 when (q-1) | delta, floor(q delta/(q-1)) otherwise.
BigInt length_upper_bound(std::uint64_t q, std::uint64_t delta);

// Least k >= 0 with q^k (delta q - n(q-1)) >= delta q. Throws BoundUndefined
// when delta q <= n(q-1).
std::uint64_t dimension_lower_bound(std::uint64_t n, std::uint64_t q, std::uint64_t delta);

// w + sum_{i=0}^{k-2} floor(delta / q^i).
BigInt weighted_length_bound(std::uint64_t q, std::uint64_t k, std::uint64_t delta, std::uint64_t w);
// w + q (1 - q^{-(k-1)}) delta / (q - 1).
Rational weighted_length_bound_ceiling_free(std::uint64_t q, std::uint64_t k, std::uint64_t delta, std::uint64_t w);

// sum_{i=0}^{floor(delta/2)} C(n, i).
BigInt erdos_kleitman_rhs(std::uint64_t n, std::uint64_t delta);

// |C| |A| <= q^n, asserted when d(C) >= delta(A) + 1 and both live in
// GF(q)^n. `code` supplies d, `anticode` supplies delta; sizes are q^k.
BoundReport code_anticode_check(const CodeMetrics& code, const CodeMetrics& anticode, std::uint64_t n);

// Every parameter-level bound for the tuple.
std::vector<BoundReport> evaluate_parameters(const ParamTuple& t);

struct VerifyOptions {
    MetricsOptions metrics;
};

// Parameter-level bounds for the code's actual (n, k, d, delta, d(C^perp))
// plus one weighted-length report per nonzero weight and the
// Erdos-Kleitman bound for binary codes.
std::vector<BoundReport> verify_all(const LinearCode& code, const VerifyOptions& options = {});
std::vector<BoundReport> verify_all(const LinearCode& code, std::uint64_t enumeration_limit);
std::vector<BoundReport> verify_all(const LinearCode& code, const CodeMetrics& m);

}  // namespace anticode
