#include "anticode/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace anticode::gf {

namespace {

using Poly = std::vector<std::uint64_t>;  // little-endian, trimmed

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo f (f nonzero, any leading coefficient).
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = invmod(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^i) mod f computed by repeated p-th powering.
Poly frobenius_step(const Poly& h, const Poly& f, std::uint64_t p) {
    Poly result{1};
    Poly base = h;
    std::uint64_t e = p;
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint32_t> digits_of(Elem a, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> d(m, 0);
    for (std::uint32_t i = 0; i < m && a; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return static_cast<Elem>(v);
}

// Shipped defining polynomials, little-endian. Each is checked by
// make_field like any caller-supplied modulus.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& default_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        // x^2+x+1
        {{2, 2}, {1, 1, 1}},
        // x^3+x+1
        {{2, 3}, {1, 1, 0, 1}},
        // x^4+x+1
        {{2, 4}, {1, 1, 0, 0, 1}},
        // x^5+x^2+1
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        // x^6+x+1
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        // x^7+x+1
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        // x^8+x^4+x^3+x^2+1 (0x11d)
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        // x^9+x^4+1
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        // x^10+x^3+1
        {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        // x^11+x^2+1
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        // x^12+x^6+x^4+x+1
        {{2, 12}, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
        // x^16+x^12+x^3+x+1
        {{2, 16}, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        // x^2+2x+2
        {{3, 2}, {2, 2, 1}},
        // x^3+2x+1
        {{3, 3}, {1, 2, 0, 1}},
        // x^4+2x^3+2
        {{3, 4}, {2, 0, 0, 2, 1}},
        // x^5+2x+1
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        // x^2+4x+2
        {{5, 2}, {2, 4, 1}},
        // x^3+3x+3
        {{5, 3}, {3, 3, 0, 1}},
        // x^2+6x+3
        {{7, 2}, {3, 6, 1}},
        // x^3+6x^2+4
        {{7, 3}, {4, 0, 6, 1}},
    };
    return table;
}

std::string poly_string(const std::vector<std::uint32_t>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (c[i] != 1 || i == 0) os << c[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

namespace detail {

Elem FieldData::add_digits(Elem a, Elem b) const {
    std::uint64_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::uint64_t s = (a % p + b % p) % p;
        r += s * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return static_cast<Elem>(r);
}

Elem FieldData::mul_poly(Elem a, Elem b) const {
    const auto da = digits_of(a, p, m);
    const auto db = digits_of(b, p, m);
    Poly pa(da.begin(), da.end()), pb(db.begin(), db.end());
    trim(pa);
    trim(pb);
    Poly f(modulus.begin(), modulus.end());
    Poly r = poly_mod(poly_mul(pa, pb, p), f, p);
    std::vector<std::uint32_t> out(m, 0);
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i]);
    return from_digits(out, p);
}

}  // namespace detail

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2 || q > kMaxFieldOrder) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(q), 1};
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    if (!is_prime(p)) throw InputError("is_irreducible: " + std::to_string(p) + " is not prime");
    if (poly.empty()) throw InputError("is_irreducible: empty coefficient list");
    if (poly.back() == 0) throw InputError("is_irreducible: leading coefficient is zero");
    for (auto c : poly) {
        if (c >= p) throw InputError("is_irreducible: coefficient " + std::to_string(c) + " not in GF(" + std::to_string(p) + ")");
    }
    const std::size_t deg = poly.size() - 1;
    if (deg == 0) return false;  // nonzero constants are units
    if (deg == 1) return true;

    // Ben-Or: f is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= deg/2.
    Poly f(poly.begin(), poly.end());
    const std::uint64_t lead_inv = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, lead_inv, p);

    Poly h = poly_mod(Poly{0, 1}, f, p);
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        h = frobenius_step(h, f, p);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;  // x^(p^i) == x mod f: f splits into small factors
        const Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return std::vector<std::uint32_t>{0, 1};
    const auto& table = default_table();
    auto it = table.find({p, m});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Field make_field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw InputError("make_field: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw InputError("make_field: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw InputError("make_field: field order exceeds 2^32");
    }
    if (!modulus) {
        modulus = default_modulus(p, m);
        if (!modulus) {
            throw InputError("make_field: no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                             "); supply one");
        }
    }
    if (modulus->size() != std::size_t{m} + 1) {
        throw InputError("make_field: modulus must have degree " + std::to_string(m) + " (got " +
                         std::to_string(modulus->size()) + " coefficients)");
    }
    if (modulus->back() != 1) throw InputError("make_field: modulus must be monic");
    if (!is_irreducible(*modulus, p)) {
        throw InputError("make_field: modulus " + poly_string(*modulus) + " is reducible over GF(" + std::to_string(p) + ")");
    }

    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->m = m;
    data->q = q;
    data->modulus = std::move(*modulus);

    if (p != 2 && m > 1 && q <= kAddTableThreshold) {
        data->add_.resize(q * q);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                data->add_[a * q + b] = data->add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
    }

    if (q <= kTableThreshold) {
        auto slow_mul = [&](Elem a, Elem b) -> Elem {
            if (a == 0 || b == 0) return 0;
            if (m == 1) return static_cast<Elem>(mulmod(a, b, p));
            return data->mul_poly(a, b);
        };
        auto slow_pow = [&](Elem a, std::uint64_t e) {
            Elem r = 1;
            while (e) {
                if (e & 1) r = slow_mul(r, a);
                a = slow_mul(a, a);
                e >>= 1;
            }
            return r;
        };
        const std::uint64_t order = q - 1;
        const auto factors = prime_factors(order);
        Elem g = 1;
        for (Elem cand = (q == 2 ? 1 : 2); cand < q; ++cand) {
            bool primitive = true;
            for (auto r : factors) {
                if (slow_pow(cand, order / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = cand;
                break;
            }
        }
        data->log_.assign(q, 0);
        data->exp_.assign(2 * order, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            data->exp_[i] = x;
            data->exp_[i + order] = x;
            data->log_[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, g);
        }
    }
    return Field(std::move(data));
}

Field make_field_of_order(std::uint64_t q) {
    auto pm = prime_power(q);
    if (!pm) throw InputError("field order " + std::to_string(q) + " is not a prime power");
    return make_field(pm->first, pm->second);
}

Elem Field::neg(Elem a) const {
    const auto& d = *data_;
    if (d.p == 2 || a == 0) return a;
    if (d.m == 1) return d.p - a;
    auto digits = digits_of(a, d.p, d.m);
    for (auto& c : digits) c = (d.p - c) % d.p;
    return from_digits(digits, d.p);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw ArithmeticError("inverse of zero in " + describe());
    const auto& d = *data_;
    if (!d.exp_.empty()) return d.exp_[(d.q - 1) - d.log_[a]];
    return pow(a, d.q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    e %= (data_->q - 1);
    if (e == 0) return 1;
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << data_->p;
    if (data_->m > 1) os << "^" << data_->m;
    os << ")";
    if (data_->m > 1) os << " modulus " << poly_string(data_->modulus);
    return os.str();
}

bool operator==(const Field& a, const Field& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->p == b.data_->p && a.data_->m == b.data_->m && a.data_->modulus == b.data_->modulus;
}

std::vector<Elem> enumerate_elements(const Field& field) {
    std::vector<Elem> out(field.order());
    for (std::uint64_t i = 0; i < field.order(); ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::vector<Elem> isomorphism(const Field& from, const Field& to) {
    if (from.characteristic() != to.characteristic() || from.degree() != to.degree()) {
        throw FieldMismatch("isomorphism: " + from.describe() + " and " + to.describe() + " have different orders");
    }
    const std::uint32_t p = from.characteristic();
    const std::uint32_t m = from.degree();
    const auto& f = from.modulus();
    // Prime-subfield elements encode as themselves, so the coefficients of
    // `from`'s modulus can be evaluated directly in `to`.
    auto eval = [&](Elem r) {
        Elem acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = to.add(to.mul(acc, r), f[i]);
        return acc;
    };
    std::optional<Elem> root;
    for (std::uint64_t r = 0; r < to.order(); ++r) {
        if (eval(static_cast<Elem>(r)) == 0) {
            root = static_cast<Elem>(r);
            break;
        }
    }
    if (!root) throw Error("isomorphism: no root found (modulus not irreducible?)");
    std::vector<Elem> powers(m);
    powers[0] = 1;
    for (std::uint32_t i = 1; i < m; ++i) powers[i] = to.mul(powers[i - 1], *root);

    std::vector<Elem> image(from.order());
    for (std::uint64_t a = 0; a < from.order(); ++a) {
        const auto digits = digits_of(static_cast<Elem>(a), p, m);
        Elem acc = 0;
        for (std::uint32_t i = 0; i < m; ++i) acc = to.add(acc, to.mul(digits[i], powers[i]));
        image[a] = acc;
    }
    return image;
}

FieldElement::FieldElement(Field field, std::uint64_t value) : field_(std::move(field)), value_(0) {
    if (!field_.contains(value)) {
        throw InputError("element " + std::to_string(value) + " is not in " + field_.describe());
    }
    value_ = static_cast<Elem>(value);
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldMismatch("operands from " + field_.describe() + " and " + o.field_.describe());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.div(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

}  // namespace anticode::gf
