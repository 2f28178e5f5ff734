#pragma once

/*
 * Positional numerals in base 2 and balanced base 3.
 *
 * A fractional digit vector v stands for sum_j v_j * base^-j. Finite
 * expansions are unique; a value may additionally have expansions whose
 * digits are eventually constant (1/2 = [0.0111...]_2, 1/6 = [0.1TTT...]_3).
 * Those are kept symbolically as a finite prefix plus a repeating digit.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "efrac/digitvec.hpp"
#include "efrac/rational.hpp"

namespace efrac {

/// Balanced-ternary digits of an integer, least significant first, no
/// trailing zero. 0 maps to the empty sequence.
std::vector<Digit> int_to_balanced_ternary(const BigInt& n);

/// Inverse of int_to_balanced_ternary. Throws ParseError (position = digit
/// index) on a digit outside {-1, 0, 1}.
BigInt balanced_ternary_to_int(std::span<const Digit> digits_lsb_first);

/// sum_j v_j * Base^-j.
template <int Base>
Rational frac_value(const DigitVec<Base>& v);

/// The finite fractional expansion of `x` using at most `max_len` digits.
/// Domain: [0, 1) for base 2, [-1/2, 1/2] for balanced base 3 (DomainError
/// outside). Throws NotRepresentableError when no finite expansion of that
/// length exists.
template <int Base>
DigitVec<Base> value_to_digits(const Rational& x, std::size_t max_len);

/// Expansion with an eventually constant tail: the digits of `prefix`
/// (positions 1..prefix.size(), trailing zeros allowed) followed by `tail`
/// repeated forever. tail == 0 is an ordinary finite expansion.
template <int Base>
struct Expansion {
    std::vector<Digit> prefix;
    int tail = 0;

    /// Digit at 1-based position j.
    int digit(std::size_t j) const { return j <= prefix.size() ? prefix[j - 1] : tail; }

    /// Exact value, summing the tail as a geometric series.
    Rational value() const;

    /// "[0.0111...]_2": the prefix, then `tail_len` copies of the tail
    /// digit followed by "..." when the tail is nonzero.
    std::string to_string(std::size_t tail_len = 4) const;

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// Every expansion of `x` whose digits are eventually constant: the finite
/// one (if any) first, then the tail -1 form, then the tail +1 form.
/// Base 2 accepts x in [0, 1]; base 3 accepts x in [-1/2, 1/2]
/// (DomainError outside). Values with no such expansion give an empty list.
template <int Base>
std::vector<Expansion<Base>> dual_representations(const Rational& x);

template <int Base>
std::vector<Expansion<Base>> dual_representations(const DigitVec<Base>& v) {
    return dual_representations<Base>(frac_value(v));
}

/// "[a_k..a_0.a_-1 a_-2..]_m" with m = 2 or balanced 3.
struct NumeralString {
    int base = 2;
    std::vector<Digit> integer_digits;   ///< most significant first, as written
    std::vector<Digit> fraction_digits;  ///< index 1 = first place after the point
    bool has_point = false;

    Rational value() const;

    friend bool operator==(const NumeralString&, const NumeralString&) = default;
};

/// Grammar: '[' digits ('.' digits)? ']' '_' ('2' | '3'). Base-3 digit T
/// is -1. Throws ParseError with the offending position.
NumeralString parse_numeral(std::string_view text);
std::string format_numeral(const NumeralString& n);

/// Balanced-ternary numeral of an integer ("[10T]_3" for 8).
NumeralString balanced_ternary_numeral(const BigInt& n);

/// Numeral "[0.v]_Base" for a fractional digit vector.
template <int Base>
NumeralString fraction_numeral(const DigitVec<Base>& v);

}  // namespace efrac
