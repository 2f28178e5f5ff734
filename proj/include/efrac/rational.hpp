#pragma once

/*
 * Exact rationals over arbitrary-precision integers.
 *
 * Values are kept in canonical form at all times: denominator > 0,
 * gcd(|num|, den) = 1, and zero is 0/1. Equality is therefore structural.
 * Storage is a GMP mpq; all operations allocate as needed and never
 * overflow.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace efrac {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT: implicit by design of a number type
    Rational(const BigInt& value) : q_(value) {}  // NOLINT
    /// Throws DomainError when `den` is zero.
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q", "-p/q" or "p". Throws ParseError.
    static Rational parse(std::string_view text);

    const BigInt& numerator() const { return q_.get_num(); }
    const BigInt& denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational abs() const;
    /// Exact reciprocal; throws DomainError on zero.
    Rational reciprocal() const;
    /// Smallest integer >= *this.
    BigInt ceil() const;
    /// Largest integer <= *this.
    BigInt floor() const;

    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^exp for exp >= 0 (exp < 0 gives the reciprocal power).
Rational pow(const Rational& base, long exp);
BigInt pow(long base, unsigned long exp);

/// True iff the denominator of `r` has no prime factor other than `prime`.
bool denominator_is_power_of(const Rational& r, unsigned long prime);

/// Renders `r` as a decimal: exact when the denominator has only the
/// factors 2 and 5, otherwise rounded half-up to `significant` digits.
std::string to_decimal(const Rational& r, int significant = 12);

}  // namespace efrac
