#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "nilpair/errors.hpp"

namespace nilpair {

enum class FieldKind { Rationals, PrimeField };

/// Designates the field all scalars of a computation live in: the
/// rationals, or GF(p) for a prime p ≤ 2^31. Immutable value type.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

    // Verifies primality by trial division; throws Error otherwise.
    static FieldSpec prime_field(std::uint64_t p);

    // Accepts "Q" or "GF(p)" with p decimal.
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const FieldSpec& other) const = default;

    std::string str() const;

private:
    FieldSpec(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_; // 0 for the rationals
};

/// One exact field element. Rationals are arbitrary-precision and kept
/// in lowest terms with positive denominator (GMP maintains this);
/// GF(p) values are residues in [0, p). Every scalar carries its
/// FieldSpec and refuses to combine with scalars of a different one.
class Scalar {
public:
    static Scalar zero(const FieldSpec& spec);
    static Scalar one(const FieldSpec& spec);
    static Scalar of_int(long v, const FieldSpec& spec);
    static Scalar of_fraction(long num, long den, const FieldSpec& spec);
    static Scalar of_rational(mpq_class q); // over Q, canonicalized

    // Text syntax: rationals "a" or "a/b" with optional leading '-';
    // GF(p) elements as decimal integers, reduced mod p on parse.
    static Scalar parse(std::string_view text, const FieldSpec& spec);

    const FieldSpec& field() const { return spec_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const; // throws DivisionByZeroError
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    Scalar inverse() const; // throws DivisionByZeroError on zero

    // Scalars over different fields are never equal.
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Canonical text form; parse(str(), field()) == *this.
    std::string str() const;

    // Residue value for PrimeField scalars.
    std::uint64_t residue() const;

    const mpq_class& rational() const;

private:
    explicit Scalar(const FieldSpec& spec, mpq_class q) : spec_(spec), value_(std::move(q)) {}
    explicit Scalar(const FieldSpec& spec, std::uint64_t r) : spec_(spec), value_(r) {}

    void require_same_field(const Scalar& rhs) const;

    FieldSpec spec_;
    std::variant<mpq_class, std::uint64_t> value_;
};

} // namespace nilpair
