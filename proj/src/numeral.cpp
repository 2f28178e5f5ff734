#include "efrac/numeral.hpp"

#include <algorithm>
#include <initializer_list>

#include "efrac/errors.hpp"

namespace efrac {

std::vector<Digit> int_to_balanced_ternary(const BigInt& n) {
    std::vector<Digit> out;
    BigInt rest = n;
    while (rest != 0) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), rest.get_mpz_t(), 3);  // r in {0, 1, 2}
        const Digit d = r == 2 ? Digit(-1) : static_cast<Digit>(r.get_si());
        out.push_back(d);
        rest = (rest - d) / 3;
    }
    return out;
}

BigInt balanced_ternary_to_int(std::span<const Digit> digits_lsb_first) {
    BigInt value = 0;
    for (std::size_t i = digits_lsb_first.size(); i-- > 0;) {
        const Digit d = digits_lsb_first[i];
        if (d < -1 || d > 1) {
            throw ParseError("balanced ternary digit out of range", i);
        }
        value = value * 3 + d;
    }
    return value;
}

template <int Base>
Rational frac_value(const DigitVec<Base>& v) {
    // Horner from the last digit: v_1/B + v_2/B^2 + ... = (v_1 + (v_2 + ...)/B)/B
    BigInt num = 0;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        num = num * Base + v[j];
    }
    return Rational(num, pow(Base, v.size()));
}

template Rational frac_value<2>(const DigitVec2&);
template Rational frac_value<3>(const DigitVec3&);

namespace {

// Exponent k with den == base^k, or -1 when den is not a power of base.
long power_exponent(BigInt den, unsigned long base) {
    long k = 0;
    while (den > 1) {
        if (mpz_divisible_ui_p(den.get_mpz_t(), base) == 0) {
            return -1;
        }
        den /= base;
        ++k;
    }
    return k;
}

template <int Base>
void check_domain(const Rational& x, bool closed_top) {
    if constexpr (Base == 2) {
        if (x.sign() < 0 || (closed_top ? x > Rational(1) : x >= Rational(1))) {
            throw DomainError("binary fractional value must lie in [0, 1" + std::string(closed_top ? "]" : ")") +
                              ", got " + x.to_string());
        }
    } else {
        if (x.abs() > Rational(1, 2)) {
            throw DomainError("balanced ternary fractional value must lie in [-1/2, 1/2], got " + x.to_string());
        }
    }
}

}  // namespace

template <int Base>
DigitVec<Base> value_to_digits(const Rational& x, std::size_t max_len) {
    check_domain<Base>(x, false);
    const long k = power_exponent(x.denominator(), Base);
    if (k < 0 || (Base == 3 && x.abs() == Rational(1, 2))) {
        throw NotRepresentableError(x.to_string() + " has no finite expansion in base " + std::to_string(Base));
    }
    if (static_cast<std::size_t>(k) > max_len) {
        throw NotRepresentableError(x.to_string() + " needs " + std::to_string(k) + " digits, limit is " +
                                    std::to_string(max_len));
    }
    std::vector<Digit> digits;
    digits.reserve(static_cast<std::size_t>(k));
    Rational rest = x;
    for (long j = 0; j < k; ++j) {
        rest *= Rational(Base);
        // floor for base 2; nearest integer for balanced base 3
        const BigInt d = Base == 2 ? rest.floor() : (rest + Rational(1, 2)).floor();
        digits.push_back(static_cast<Digit>(d.get_si()));
        rest -= Rational(d);
    }
    return DigitVec<Base>(std::move(digits));
}

template DigitVec2 value_to_digits<2>(const Rational&, std::size_t);
template DigitVec3 value_to_digits<3>(const Rational&, std::size_t);

template <int Base>
Rational Expansion<Base>::value() const {
    Rational v;
    for (std::size_t j = prefix.size(); j-- > 0;) {
        v = (v + Rational(prefix[j])) / Rational(Base);
    }
    if (tail != 0) {
        // tail * sum_{k > L} Base^-k = tail * Base^-L / (Base - 1)
        v += Rational(tail) * pow(Rational(Base), -static_cast<long>(prefix.size())) / Rational(Base - 1);
    }
    return v;
}

template <int Base>
std::string Expansion<Base>::to_string(std::size_t tail_len) const {
    auto glyph = [](int d) { return d == -1 ? 'T' : static_cast<char>('0' + d); };
    std::string s = "[0";
    if (!prefix.empty() || tail != 0) {
        s += '.';
    }
    for (Digit d : prefix) {
        s += glyph(d);
    }
    if (tail != 0) {
        s.append(tail_len, glyph(tail));
        s += "...";
    }
    return s + "]_" + std::to_string(Base);
}

template struct Expansion<2>;
template struct Expansion<3>;

template <int Base>
std::vector<Expansion<Base>> dual_representations(const Rational& x) {
    check_domain<Base>(x, true);
    std::vector<Expansion<Base>> out;

    const bool finite = power_exponent(x.denominator(), Base) >= 0 &&
                        (Base == 2 ? x < Rational(1) : x.abs() < Rational(1, 2));
    if (finite) {
        const auto v = value_to_digits<Base>(x, static_cast<std::size_t>(-1));
        out.push_back({std::vector<Digit>(v.digits().begin(), v.digits().end()), 0});
    }

    // A tail of t's starting after position L adds t * Base^-L / (Base-1).
    // Such a tail is possible only when that quantity shares the
    // denominator of x, which pins L.
    long tail_start = -1;
    if constexpr (Base == 2) {
        tail_start = x.sign() > 0 ? power_exponent(x.denominator(), 2) : -1;
    } else {
        if (mpz_even_p(x.denominator().get_mpz_t()) != 0) {
            tail_start = power_exponent(x.denominator() / 2, 3);
        }
    }
    if (tail_start < 0) {
        return out;
    }

    const std::vector<int> tails = Base == 2 ? std::vector<int>{1} : std::vector<int>{-1, 1};
    const auto L = static_cast<std::size_t>(tail_start);
    for (int t : tails) {
        const Rational tail_value = Rational(t) * pow(Rational(Base), -tail_start) / Rational(Base - 1);
        const Rational head = x - tail_value;
        DigitVec<Base> head_digits;
        try {
            head_digits = value_to_digits<Base>(head, L);
        } catch (const DomainError&) {
            continue;  // head falls outside the range the prefix can reach
        }
        Expansion<Base> e{std::vector<Digit>(head_digits.digits().begin(), head_digits.digits().end()), t};
        e.prefix.resize(L, 0);
        while (!e.prefix.empty() && e.prefix.back() == t) {
            e.prefix.pop_back();
        }
        out.push_back(std::move(e));
    }
    return out;
}

template std::vector<Expansion<2>> dual_representations<2>(const Rational&);
template std::vector<Expansion<3>> dual_representations<3>(const Rational&);

Rational NumeralString::value() const {
    BigInt whole = 0;
    for (Digit d : integer_digits) {
        whole = whole * base + d;
    }
    BigInt frac = 0;
    for (Digit d : fraction_digits) {
        frac = frac * base + d;
    }
    return Rational(whole) + Rational(frac, pow(base, fraction_digits.size()));
}

NumeralString parse_numeral(std::string_view text) {
    std::size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c) {
            throw ParseError(std::string("expected '") + c + "' in numeral", pos);
        }
        ++pos;
    };
    // Digits are validated against the base once the suffix is read.
    std::vector<std::size_t> t_positions;
    auto read_digits = [&](std::vector<Digit>& out) {
        const std::size_t start = pos;
        while (pos < text.size() && (text[pos] == '0' || text[pos] == '1' || text[pos] == 'T')) {
            if (text[pos] == 'T') {
                t_positions.push_back(pos);
            }
            out.push_back(text[pos] == 'T' ? Digit(-1) : static_cast<Digit>(text[pos] - '0'));
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected digit in numeral", pos);
        }
    };

    NumeralString n;
    expect('[');
    read_digits(n.integer_digits);
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        n.has_point = true;
        read_digits(n.fraction_digits);
    }
    expect(']');
    expect('_');
    if (pos >= text.size() || (text[pos] != '2' && text[pos] != '3')) {
        throw ParseError("numeral base must be 2 or 3", pos);
    }
    n.base = text[pos] - '0';
    ++pos;
    if (pos != text.size()) {
        throw ParseError("trailing characters after numeral", pos);
    }
    if (n.base == 2 && !t_positions.empty()) {
        throw ParseError("digit T is only valid in base 3", t_positions.front());
    }
    return n;
}

std::string format_numeral(const NumeralString& n) {
    auto glyph = [](Digit d) { return d == -1 ? 'T' : static_cast<char>('0' + d); };
    std::string s = "[";
    for (Digit d : n.integer_digits) {
        s += glyph(d);
    }
    if (n.has_point) {
        s += '.';
        for (Digit d : n.fraction_digits) {
            s += glyph(d);
        }
    }
    return s + "]_" + std::to_string(n.base);
}

NumeralString balanced_ternary_numeral(const BigInt& n) {
    NumeralString out;
    out.base = 3;
    auto digits = int_to_balanced_ternary(n);
    if (digits.empty()) {
        digits.push_back(0);
    }
    out.integer_digits.assign(digits.rbegin(), digits.rend());
    return out;
}

template <int Base>
NumeralString fraction_numeral(const DigitVec<Base>& v) {
    NumeralString out;
    out.base = Base;
    out.integer_digits = {0};
    out.fraction_digits.assign(v.digits().begin(), v.digits().end());
    out.has_point = !v.empty();
    return out;
}

template NumeralString fraction_numeral<2>(const DigitVec2&);
template NumeralString fraction_numeral<3>(const DigitVec3&);

}  // namespace efrac
