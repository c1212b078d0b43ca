#include "nilpair/field.hpp"

#include <cctype>

namespace nilpair {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Residue arithmetic; p ≤ 2^31 so products fit in 64 bits.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DivisionByZeroError("no inverse mod " + std::to_string(p));
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 31))
        throw Error("prime field modulus too large (must be <= 2^31): " + std::to_string(p));
    if (!is_prime(p))
        throw Error("prime field modulus is not prime: " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() >= 5 && text.substr(0, 3) == "GF(" && text.back() == ')') {
        std::string_view digits = text.substr(3, text.size() - 4);
        if (!all_digits(digits))
            throw ParseError("malformed field designator: " + std::string(text));
        mpz_class p(std::string(digits), 10);
        if (!p.fits_ulong_p())
            throw Error("prime field modulus too large (must be <= 2^31): " + std::string(digits));
        return prime_field(p.get_ui());
    }
    throw ParseError("malformed field designator (expected \"Q\" or \"GF(p)\"): " + std::string(text));
}

std::string FieldSpec::str() const {
    if (kind_ == FieldKind::Rationals) return "Q";
    return "GF(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::zero(const FieldSpec& spec) {
    if (spec.is_rationals()) return Scalar(spec, mpq_class(0));
    return Scalar(spec, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& spec) {
    if (spec.is_rationals()) return Scalar(spec, mpq_class(1));
    return Scalar(spec, std::uint64_t{1});
}

Scalar Scalar::of_int(long v, const FieldSpec& spec) {
    if (spec.is_rationals()) return Scalar(spec, mpq_class(v));
    std::int64_t p = static_cast<std::int64_t>(spec.modulus());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Scalar(spec, static_cast<std::uint64_t>(r));
}

Scalar Scalar::of_fraction(long num, long den, const FieldSpec& spec) {
    if (den == 0) throw DivisionByZeroError("fraction with zero denominator");
    if (spec.is_rationals()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(spec, std::move(q));
    }
    return of_int(num, spec) / of_int(den, spec);
}

Scalar Scalar::of_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(FieldSpec::rationals(), std::move(q));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& spec) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    if (spec.is_rationals()) {
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        if (!all_digits(num))
            throw ParseError("malformed rational: " + std::string(text));
        mpz_class n(std::string(num), 10);
        mpz_class d(1);
        if (slash != std::string_view::npos) {
            std::string_view den = body.substr(slash + 1);
            if (!all_digits(den))
                throw ParseError("malformed rational: " + std::string(text));
            d = mpz_class(std::string(den), 10);
            if (d == 0) throw DivisionByZeroError("rational with zero denominator: " + std::string(text));
        }
        if (negative) n = -n;
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar(spec, std::move(q));
    }
    if (!all_digits(body))
        throw ParseError("malformed GF(p) element: " + std::string(text));
    // out-of-range residues are accepted and reduced
    mpz_class v(std::string(body), 10);
    mpz_class p(static_cast<unsigned long>(spec.modulus()));
    mpz_class r = v % p;
    if (negative && r != 0) r = p - r;
    return Scalar(spec, static_cast<std::uint64_t>(r.get_ui()));
}

bool Scalar::is_zero() const {
    if (spec_.is_rationals()) return std::get<mpq_class>(value_) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (spec_.is_rationals()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (spec_ != rhs.spec_)
        throw FieldMismatchError("scalars over " + spec_.str() + " and " + rhs.spec_.str() +
                                 " cannot be combined");
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    if (spec_.is_rationals())
        return Scalar(spec_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(rhs.value_)));
    std::uint64_t p = spec_.modulus();
    return Scalar(spec_, (std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_)) % p);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_field(rhs);
    if (spec_.is_rationals())
        return Scalar(spec_, mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(rhs.value_)));
    std::uint64_t p = spec_.modulus();
    return Scalar(spec_, (std::get<std::uint64_t>(value_) + p - std::get<std::uint64_t>(rhs.value_)) % p);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    if (spec_.is_rationals())
        return Scalar(spec_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(rhs.value_)));
    std::uint64_t p = spec_.modulus();
    return Scalar(spec_, (std::get<std::uint64_t>(value_) * std::get<std::uint64_t>(rhs.value_)) % p);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    if (spec_.is_rationals()) return Scalar(spec_, mpq_class(-std::get<mpq_class>(value_)));
    std::uint64_t p = spec_.modulus();
    std::uint64_t v = std::get<std::uint64_t>(value_);
    return Scalar(spec_, v == 0 ? 0 : p - v);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("division by zero in " + spec_.str());
    if (spec_.is_rationals())
        return Scalar(spec_, mpq_class(1 / std::get<mpq_class>(value_)));
    return Scalar(spec_, mod_inverse(std::get<std::uint64_t>(value_), spec_.modulus()));
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (spec_ != rhs.spec_) return false;
    if (spec_.is_rationals()) return std::get<mpq_class>(value_) == std::get<mpq_class>(rhs.value_);
    return std::get<std::uint64_t>(value_) == std::get<std::uint64_t>(rhs.value_);
}

std::string Scalar::str() const {
    if (spec_.is_rationals()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

std::uint64_t Scalar::residue() const {
    if (spec_.is_rationals()) throw FieldMismatchError("residue() called on a rational scalar");
    return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
    if (!spec_.is_rationals()) throw FieldMismatchError("rational() called on a GF(p) scalar");
    return std::get<mpq_class>(value_);
}

} // namespace nilpair
