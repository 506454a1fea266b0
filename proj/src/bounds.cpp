#include "anticode/bounds.hpp"

#include <regex>

namespace anticode {

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }
BigInt floor_div(const BigInt& a, const BigInt& b) { return a / b; }

BigInt floor(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt qt = num / den;
    if (num < 0 && qt * den != num) qt -= 1;
    return qt;
}

BigInt ceil(const Rational& r) {
    const BigInt f = floor(r);
    return Rational(f) == r ? f : f + 1;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    static const std::regex re(R"(^(-?[0-9]+)(?:/([0-9]+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InputError("not an exact rational: '" + s + "'");
    BigInt num(m[1].str());
    BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

BoundReport make_report(std::string name, std::string statement, Rational lhs, Rational rhs, bool hypotheses_met,
                        std::vector<std::string> reasons) {
    BoundReport r;
    r.bound_name = std::move(name);
    r.statement = std::move(statement);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.holds = r.lhs <= r.rhs;
    r.tight = r.lhs == r.rhs;
    r.hypotheses_met = hypotheses_met;
    r.reasons = std::move(reasons);
    return r;
}

void ParamTuple::validate() const {
    if (q < 2 || !gf::prime_power(q)) throw InputError("q = " + std::to_string(q) + " is not a prime power");
    if (k < 1 || k > n) throw InputError("need 1 <= k <= n");
    if (delta < 1 || delta > n) throw InputError("need 1 <= delta <= n");
    if (d && (*d < 1 || *d > delta)) throw InputError("need 1 <= d <= delta");
    if (w && (*w < 1 || *w > n)) throw InputError("need 1 <= w <= n");
}

BigInt anti_griesmer_rhs(std::uint64_t q, std::uint64_t k, std::uint64_t delta) {
    BigInt sum = 0, power = 1;
    const BigInt d = delta;
    for (std::uint64_t i = 0; i < k; ++i) {
        const BigInt term = floor_div(d, power);
        if (term == 0) break;
        sum += term;
        power *= q;
    }
    return sum;
}

BigInt griesmer_lhs(std::uint64_t q, std::uint64_t k, std::uint64_t d) {
    BigInt sum = 0, power = 1;
    const BigInt dd = d;
    for (std::uint64_t i = 0; i < k; ++i) {
        const BigInt term = ceil_div(dd, power);
        sum += term;
        if (term == 1 && power > dd) {
            // every remaining term is 1
            sum += k - 1 - i;
            break;
        }
        power *= q;
    }
    return sum;
}

BigInt anti_griesmer_rational_floor(std::uint64_t q, std::uint64_t k, std::uint64_t delta) {
    Rational sum = 0;
    BigInt power = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        sum += Rational(BigInt(delta), power);
        power *= q;
    }
    return floor(sum);
}

Rational diameter_lower_bound_exact(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    const BigInt qk1 = ipow(q, k - 1);
    return Rational(BigInt(n) * qk1 * (q - 1), qk1 * q - 1);
}

BigInt diameter_lower_bound(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    const BigInt qk1 = ipow(q, k - 1);
    return ceil_div(BigInt(n) * qk1 * (q - 1), qk1 * q - 1);
}

Rational old_diameter_bound(std::uint64_t n, std::uint64_t q) { return Rational(BigInt(n) * (q - 1), BigInt(q)); }

Rational farrell_bound(std::uint64_t n, std::uint64_t k) {
    const BigInt p = ipow(2, k - 1);
    return Rational(p * n, 2 * p - 1);
}

namespace {

std::string dual_reason(std::uint64_t lb, std::uint64_t need) {
    return "requires d(C^perp) >= " + std::to_string(need) + ", known d(C^perp) >= " + std::to_string(lb);
}

}  // namespace

std::vector<BoundReport> small_diameter_check(const ParamTuple& t) {
    const bool dual_ok = t.dual_distance_lb >= 2;
    std::vector<BoundReport> out;
    {
        std::vector<std::string> why;
        if (!dual_ok) why.push_back(dual_reason(t.dual_distance_lb, 2));
        const bool premise = t.delta < t.n;
        if (!premise) why.push_back("premise delta < n not met; clause vacuous");
        out.push_back(make_report("small_diameter_1", "delta < n  =>  q <= delta", Rational(t.q), Rational(t.delta),
                                  dual_ok && premise, std::move(why)));
    }
    {
        std::vector<std::string> why;
        if (!dual_ok) why.push_back(dual_reason(t.dual_distance_lb, 2));
        const bool premise = t.delta <= t.q;
        if (!premise) why.push_back("premise delta <= q not met; clause vacuous");
        out.push_back(make_report("small_diameter_2", "delta <= q  =>  n <= q + 1", Rational(t.n), Rational(t.q + 1),
                                  dual_ok && premise, std::move(why)));
    }
    return out;
}

bool feasible(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports)
        if (r.violated()) return false;
    return true;
}

BigInt length_upper_bound(std::uint64_t q, std::uint64_t delta) {
    const BigInt num = BigInt(q) * delta;
    if (delta % (q - 1) == 0) return num / (q - 1) - 1;
    return num / (q - 1);
}

std::uint64_t dimension_lower_bound(std::uint64_t n, std::uint64_t q, std::uint64_t delta) {
    const BigInt dq = BigInt(delta) * q;
    const BigInt gap = dq - BigInt(n) * (q - 1);
    if (gap <= 0) {
        throw BoundUndefined("dimension bound undefined: delta*q = " + dq.str() + " <= n(q-1) = " +
                             (BigInt(n) * (q - 1)).str() + " (bound hypotheses violated)");
    }
    std::uint64_t k = 0;
    BigInt lhs = gap;
    while (lhs < dq) {
        lhs *= q;
        ++k;
    }
    return k;
}

BigInt weighted_length_bound(std::uint64_t q, std::uint64_t k, std::uint64_t delta, std::uint64_t w) {
    if (k < 1) throw InputError("weighted_length_bound: k must be >= 1");
    return BigInt(w) + anti_griesmer_rhs(q, k - 1, delta);
}

Rational weighted_length_bound_ceiling_free(std::uint64_t q, std::uint64_t k, std::uint64_t delta, std::uint64_t w) {
    if (k < 1) throw InputError("weighted_length_bound: k must be >= 1");
    Rational sum = Rational(BigInt(w));
    BigInt power = 1;
    for (std::uint64_t i = 0; i + 1 < k; ++i) {
        sum += Rational(BigInt(delta), power);
        power *= q;
    }
    return sum;
}

BigInt erdos_kleitman_rhs(std::uint64_t n, std::uint64_t delta) {
    BigInt sum = 0, binom = 1;
    for (std::uint64_t i = 0; i <= delta / 2 && i <= n; ++i) {
        if (i > 0) binom = binom * (n - i + 1) / i;
        sum += binom;
    }
    return sum;
}

BoundReport code_anticode_check(const CodeMetrics& code, const CodeMetrics& anticode, std::uint64_t n) {
    std::vector<std::string> why;
    bool ok = true;
    if (code.q != anticode.q) {
        ok = false;
        why.push_back("code and anticode over different fields");
    }
    if (code.n != n || anticode.n != n) {
        ok = false;
        why.push_back("code and anticode must both have length " + std::to_string(n));
    }
    if (code.d < anticode.delta + 1) {
        ok = false;
        why.push_back("requires d(C) >= delta(A) + 1, have d = " + std::to_string(code.d) +
                      ", delta = " + std::to_string(anticode.delta));
    }
    const BigInt size_c = ipow(code.q, code.k);
    const BigInt size_a = ipow(anticode.q, anticode.k);
    return make_report("code_anticode", "|C| |A| <= q^n", Rational(size_c * size_a), Rational(ipow(code.q, n)), ok,
                       std::move(why));
}

std::vector<BoundReport> evaluate_parameters(const ParamTuple& t) {
    t.validate();
    std::vector<BoundReport> out;
    const bool dual2 = t.dual_distance_lb >= 2;
    const bool dual3 = t.dual_distance_lb >= 3;
    auto need = [&](bool ok, std::uint64_t level) {
        return ok ? std::vector<std::string>{} : std::vector<std::string>{dual_reason(t.dual_distance_lb, level)};
    };

    out.push_back(make_report("anti_griesmer", "n <= sum_{i<k} floor(delta/q^i)", Rational(t.n),
                              Rational(anti_griesmer_rhs(t.q, t.k, t.delta)), dual2, need(dual2, 2)));
    if (t.d) {
        out.push_back(make_report("griesmer", "sum_{i<k} ceil(d/q^i) <= n", Rational(griesmer_lhs(t.q, t.k, *t.d)),
                                  Rational(t.n), true));
    }
    out.push_back(make_report("diameter_lower", "ceil(n q^(k-1) (q-1) / (q^k - 1)) <= delta",
                              Rational(diameter_lower_bound(t.n, t.k, t.q)), Rational(t.delta), dual2, need(dual2, 2)));
    {
        // The earlier projective bound needs n < q^(k-1) and d(C^perp) >= 3.
        std::vector<std::string> why = need(dual3, 3);
        const bool short_enough = BigInt(t.n) < ipow(t.q, t.k - 1);
        if (!short_enough) why.push_back("requires n < q^(k-1)");
        out.push_back(make_report("old_diameter", "(1 - 1/q) n <= delta", old_diameter_bound(t.n, t.q),
                                  Rational(t.delta), dual3 && short_enough, std::move(why)));
    }
    if (t.q == 2) {
        out.push_back(make_report("farrell", "2^(k-1) n / (2^k - 1) <= delta", farrell_bound(t.n, t.k),
                                  Rational(t.delta), dual3, need(dual3, 3)));
    }
    for (auto& r : small_diameter_check(t)) out.push_back(std::move(r));
    out.push_back(make_report("length_upper", "n <= q delta/(q-1) - [ (q-1) | delta ]", Rational(t.n),
                              Rational(length_upper_bound(t.q, t.delta)), dual2, need(dual2, 2)));
    try {
        const std::uint64_t kmin = dimension_lower_bound(t.n, t.q, t.delta);
        out.push_back(make_report("dimension_lower", "least k' with q^k' (delta q - n(q-1)) >= delta q  <=  k",
                                  Rational(kmin), Rational(t.k), dual2, need(dual2, 2)));
    } catch (const BoundUndefined& e) {
        auto why = need(dual2, 2);
        why.push_back(e.what());
        BoundReport r = make_report("dimension_lower", "least k' with q^k' (delta q - n(q-1)) >= delta q  <=  k",
                                    Rational(0), Rational(t.k), false, std::move(why));
        r.holds = false;
        r.tight = false;
        out.push_back(std::move(r));
    }
    if (t.w) {
        out.push_back(make_report("weighted_length", "n <= w + sum_{i<k-1} floor(delta/q^i)  (w = " +
                                                         std::to_string(*t.w) + ")",
                                  Rational(t.n), Rational(weighted_length_bound(t.q, t.k, t.delta, *t.w)), dual2,
                                  need(dual2, 2)));
    }
    if (t.d) {
        out.push_back(make_report("min_weight_length", "n <= d + sum_{i<k-1} floor(delta/q^i)", Rational(t.n),
                                  Rational(weighted_length_bound(t.q, t.k, t.delta, *t.d)), dual2, need(dual2, 2)));
    }
    return out;
}

std::vector<BoundReport> verify_all(const LinearCode& code, const CodeMetrics& m) {
    ParamTuple t;
    t.q = m.q;
    t.n = m.n;
    t.k = m.k;
    t.delta = m.delta;
    t.d = m.d;
    t.dual_distance_lb = dual_distance_at_least(code, 3) ? 3 : dual_distance_at_least(code, 2) ? 2 : 1;
    auto out = evaluate_parameters(t);

    if (m.weight_distribution) {
        const bool dual2 = t.dual_distance_lb >= 2;
        for (const auto& [w, count] : *m.weight_distribution) {
            if (w == 0) continue;
            std::vector<std::string> why;
            if (!dual2) why.push_back(dual_reason(t.dual_distance_lb, 2));
            out.push_back(make_report("weighted_length[w=" + std::to_string(w) + "]",
                                      "n <= w + sum_{i<k-1} floor(delta/q^i)", Rational(t.n),
                                      Rational(weighted_length_bound(t.q, t.k, t.delta, w)), dual2, std::move(why)));
        }
    }
    if (m.q == 2) {
        out.push_back(make_report("erdos_kleitman", "|C| <= sum_{i <= floor(delta/2)} C(n, i)",
                                  Rational(ipow(2, m.k)), Rational(erdos_kleitman_rhs(m.n, m.delta)), true));
    }
    return out;
}

std::vector<BoundReport> verify_all(const LinearCode& code, const VerifyOptions& options) {
    return verify_all(code, metrics(code, options.metrics));
}

std::vector<BoundReport> verify_all(const LinearCode& code, std::uint64_t enumeration_limit) {
    VerifyOptions o;
    o.metrics.enumeration_limit = enumeration_limit;
    return verify_all(code, o);
}

}  // namespace anticode
