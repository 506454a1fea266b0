#pragma once

// Exact arithmetic in GF(p^m).
//
// Elements are encoded as integers in [0, q): the polynomial
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} over GF(p) is stored as
// c_0 + c_1 p + ... + c_{m-1} p^{m-1}. With this encoding 0 and 1 are the
// additive and multiplicative identities, and for p = 2 addition is XOR.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "anticode/errors.hpp"

namespace anticode::gf {

using Elem = std::uint32_t;

// Largest field order accepted by make_field.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;
// Fields up to this order use log/antilog tables; larger ones multiply
// polynomials on the fly.
inline constexpr std::uint64_t kTableThreshold = std::uint64_t{1} << 16;
// Odd-characteristic extension fields up to this order get a full
// addition table.
inline constexpr std::uint64_t kAddTableThreshold = 256;

namespace detail {

struct FieldData {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::uint64_t q = 2;
    std::vector<std::uint32_t> modulus;

    // log_[a] for a != 0; exp_ has length 2(q-1) so exp_[log a + log b]
    // needs no reduction. Empty when q > kTableThreshold.
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    // q*q addition table for small odd extension fields, otherwise empty.
    std::vector<Elem> add_;

    Elem add_digits(Elem a, Elem b) const;
    Elem mul_poly(Elem a, Elem b) const;
};

}  // namespace detail

class Field {
public:
    std::uint32_t characteristic() const { return data_->p; }
    std::uint32_t degree() const { return data_->m; }
    std::uint64_t order() const { return data_->q; }
    // Little-endian coefficients of the monic defining polynomial.
    const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

    bool contains(std::uint64_t value) const { return value < data_->q; }

    Elem add(Elem a, Elem b) const {
        const auto& d = *data_;
        if (d.p == 2) return a ^ b;
        if (d.m == 1) return static_cast<Elem>((std::uint64_t{a} + b) % d.p);
        if (!d.add_.empty()) return d.add_[std::size_t{a} * d.q + b];
        return d.add_digits(a, b);
    }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        const auto& d = *data_;
        if (!d.exp_.empty()) return d.exp_[std::size_t{d.log_[a]} + d.log_[b]];
        if (d.m == 1) return static_cast<Elem>((std::uint64_t{a} * b) % d.p);
        return d.mul_poly(a, b);
    }

    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    // Throws ArithmeticError on a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // "GF(2^8) modulus [1,0,1,1,1,0,0,0,1]"
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    friend Field make_field(std::uint32_t, std::uint32_t, std::optional<std::vector<std::uint32_t>>);

    std::shared_ptr<const detail::FieldData> data_;
};

// Validates p (prime), m >= 1 and the modulus (monic, degree m, irreducible).
// Without a modulus a shipped default is used; (p, m) pairs without a
// default must supply one. Throws InputError.
Field make_field(std::uint32_t p, std::uint32_t m,
                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

// Field of order q with the default modulus. q must be a prime power.
Field make_field_of_order(std::uint64_t q);

// Default modulus shipped for (p, m), if any.
std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t m);

bool is_prime(std::uint64_t n);

// Splits q = p^m; nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

// True iff poly (little-endian coefficients over GF(p)) has no nontrivial
// factorization. Throws InputError on an empty list, a zero leading
// coefficient, coefficients >= p or a non-prime p.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

// All q elements in ascending encoding order.
std::vector<Elem> enumerate_elements(const Field& field);

// Isomorphism from `from` onto `to` (same order, possibly different
// moduli): image of every element of `from`, indexed by encoding.
std::vector<Elem> isomorphism(const Field& from, const Field& to);

// An element bundled with its field. Mixing fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, std::uint64_t value);

    const Field& field() const { return field_; }
    Elem value() const { return value_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const { return field_ == o.field_ && value_ == o.value_; }

private:
    void check_same(const FieldElement& o) const;

    Field field_;
    Elem value_;
};

}  // namespace anticode::gf
