#include "efrac/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "efrac/errors.hpp"

namespace efrac {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

namespace {

// Reads a run of decimal digits starting at `pos`; returns the end offset.
std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    return pos;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t end = scan_digits(text, pos);
    if (end == pos) {
        throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
    }
    BigInt num(std::string(text.substr(pos, end - pos)));
    BigInt den(1);
    pos = end;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        end = scan_digits(text, pos);
        if (end == pos) {
            throw ParseError("expected denominator in rational '" + std::string(text) + "'", pos);
        }
        den = BigInt(std::string(text.substr(pos, end - pos)));
        if (den == 0) {
            throw ParseError("zero denominator in rational '" + std::string(text) + "'", pos);
        }
        pos = end;
    }
    if (pos != text.size()) {
        throw ParseError("unexpected character in rational '" + std::string(text) + "'", pos);
    }
    return Rational(negative ? BigInt(-num) : num, den);
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw DomainError("reciprocal of zero");
    }
    return Rational(denominator(), numerator());
}

BigInt Rational::ceil() const {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return out;
}

BigInt Rational::floor() const {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return out;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator().get_str();
    }
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt pow(long base, unsigned long exp) {
    BigInt out;
    if (base >= 0) {
        mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
    } else {
        mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(-base), exp);
        if (exp % 2 == 1) {
            out = -out;
        }
    }
    return out;
}

Rational pow(const Rational& base, long exp) {
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    Rational r(num, den);
    return exp < 0 ? r.reciprocal() : r;
}

bool denominator_is_power_of(const Rational& r, unsigned long prime) {
    BigInt d = r.denominator();
    while (d > 1 && mpz_divisible_ui_p(d.get_mpz_t(), prime) != 0) {
        d /= prime;
    }
    return d == 1;
}

namespace {

// Inserts a decimal point `scale` places from the right of |digits|.
std::string place_point(const BigInt& magnitude, long scale, bool negative) {
    std::string s = magnitude.get_str();
    if (scale > 0) {
        if (static_cast<long>(s.size()) <= scale) {
            s.insert(0, static_cast<std::size_t>(scale) - s.size() + 1, '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(scale), 1, '.');
        while (s.back() == '0') {
            s.pop_back();
        }
        if (s.back() == '.') {
            s.pop_back();
        }
    } else if (scale < 0) {
        s.append(static_cast<std::size_t>(-scale), '0');
    }
    return negative && s != "0" ? "-" + s : s;
}

}  // namespace

std::string to_decimal(const Rational& r, int significant) {
    if (r.is_zero()) {
        return "0";
    }
    const bool negative = r.sign() < 0;
    const Rational a = r.abs();

    BigInt d = a.denominator();
    long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2) != 0) { d /= 2; ++twos; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5) != 0) { d /= 5; ++fives; }
    if (d == 1) {
        long scale = std::max(twos, fives);
        BigInt scaled = a.numerator() * pow(10, static_cast<unsigned long>(scale)) / a.denominator();
        return place_point(scaled, scale, negative);
    }

    // 10^e <= a < 10^(e+1)
    long e = static_cast<long>(a.floor().get_str().size()) - 1;
    if (a < Rational(1)) {
        e = -1;
        while (a < pow(Rational(10), e)) {
            --e;
        }
    }
    long scale = significant - 1 - e;
    Rational shifted = a * pow(Rational(10), scale) + Rational(1, 2);
    return place_point(shifted.floor(), scale, negative);
}

}  // namespace efrac
