#pragma once

/*
 * Finite-support digit vectors over Z2 = {0,1} and Z3 = {-1,0,1}.
 *
 * Index j runs from 1. Digit j is read two ways elsewhere in the library:
 * as the coefficient of 1/(j+1) in an Egyptian fraction, and as the weight
 * base^-j of a fractional expansion. Addition is componentwise modulo the
 * base (balanced for Z3); there is no carry between indices.
 *
 * Storage is trimmed: the last stored digit is nonzero, so two vectors are
 * equal iff their stored digits are equal.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "efrac/errors.hpp"

namespace efrac {

using Digit = std::int8_t;

template <int Base>
class DigitVec {
    static_assert(Base == 2 || Base == 3, "only Z2 and balanced Z3 are supported");

public:
    static constexpr int base = Base;

    DigitVec() = default;

    /// Digits in index order (element 0 is j = 1). Throws DomainError on a
    /// digit outside the alphabet.
    explicit DigitVec(std::vector<Digit> digits) : digits_(std::move(digits)) {
        for (Digit d : digits_) {
            if (!valid_digit(d)) {
                throw DomainError("digit " + std::to_string(int(d)) + " not in alphabet of Z" +
                                  std::to_string(Base));
            }
        }
        trim();
    }

    DigitVec(std::initializer_list<int> digits)
        : DigitVec(std::vector<Digit>(digits.begin(), digits.end())) {}

    static constexpr bool valid_digit(int d) {
        return Base == 2 ? (d == 0 || d == 1) : (d >= -1 && d <= 1);
    }

    /// Textual form, index 1 leftmost: "101" over Z2, "10T" over Z3 (T = -1).
    static DigitVec parse(std::string_view text) {
        if (text.empty()) {
            throw ParseError("empty digit string", 0);
        }
        std::vector<Digit> digits;
        digits.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c == '0') {
                digits.push_back(0);
            } else if (c == '1') {
                digits.push_back(1);
            } else if (Base == 3 && c == 'T') {
                digits.push_back(-1);
            } else {
                throw ParseError(std::string("invalid Z") + std::to_string(Base) + " digit '" + c + "'", i);
            }
        }
        return DigitVec(std::move(digits));
    }

    /// Builds the vector whose first `length` digits are given by `code`
    /// read as a base-`Base` counter, index 1 most significant. For Z3 the
    /// counter digit 2 stands for -1. Enumerating code = 0, 1, ... visits
    /// vectors in lexicographic order of their digit strings (0 < 1 < T).
    static DigitVec from_code(std::uint64_t code, std::size_t length) {
        std::vector<Digit> digits(length, 0);
        for (std::size_t i = length; i-- > 0;) {
            const auto r = static_cast<int>(code % Base);
            code /= Base;
            digits[i] = static_cast<Digit>(r == 2 ? -1 : r);
        }
        return DigitVec(std::move(digits));
    }

    /// Number of stored digits = largest index with a nonzero digit.
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// Digit at 1-based index j; zero outside the support.
    int operator[](std::size_t j) const {
        return (j >= 1 && j <= digits_.size()) ? digits_[j - 1] : 0;
    }

    std::span<const Digit> digits() const { return digits_; }

    /// Digit string; the empty vector prints as "0".
    std::string to_string() const {
        if (digits_.empty()) {
            return "0";
        }
        std::string s;
        s.reserve(digits_.size());
        for (Digit d : digits_) {
            s.push_back(d == -1 ? 'T' : static_cast<char>('0' + d));
        }
        return s;
    }

    /// Tuple form used in reports: "(1,0,-1)", "()" for the empty vector.
    std::string to_tuple_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            if (i != 0) {
                s.push_back(',');
            }
            s += std::to_string(int(digits_[i]));
        }
        return s + ")";
    }

    friend bool operator==(const DigitVec&, const DigitVec&) = default;
    friend auto operator<=>(const DigitVec&, const DigitVec&) = default;

    /// Componentwise sum mod 2, or balanced mod 3.
    friend DigitVec operator+(const DigitVec& x, const DigitVec& y) {
        std::vector<Digit> out(std::max(x.size(), y.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = reduce(x[i + 1] + y[i + 1]);
        }
        return DigitVec(std::move(out));
    }

    /// Componentwise scalar multiple; `c` must be a digit of the alphabet.
    friend DigitVec scale(int c, const DigitVec& x) {
        if (!valid_digit(c)) {
            throw DomainError("scalar " + std::to_string(c) + " not in Z" + std::to_string(Base));
        }
        std::vector<Digit> out(x.digits_.begin(), x.digits_.end());
        for (Digit& d : out) {
            d = static_cast<Digit>(c * d);
        }
        return DigitVec(std::move(out));
    }

    friend DigitVec operator-(const DigitVec& x) { return scale(Base == 2 ? 1 : -1, x); }
    friend DigitVec operator-(const DigitVec& x, const DigitVec& y) { return x + (-y); }

    /// Reduces an integer into the alphabet: mod 2, or balanced mod 3.
    static constexpr Digit reduce(int v) {
        int r = ((v % Base) + Base) % Base;
        if (Base == 3 && r == 2) {
            r = -1;
        }
        return static_cast<Digit>(r);
    }

private:
    void trim() {
        while (!digits_.empty() && digits_.back() == 0) {
            digits_.pop_back();
        }
    }

    std::vector<Digit> digits_;
};

using DigitVec2 = DigitVec<2>;
using DigitVec3 = DigitVec<3>;

/// z(x, y): 1 where both digits are 1, -1 where both are -1, else 0.
/// Over Z2 the entries are 0/1 only; the result is always carried as a Z3
/// vector so both alphabets share one type.
using AgreementVector = DigitVec3;

template <int Base>
AgreementVector agreement(const DigitVec<Base>& x, const DigitVec<Base>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    std::vector<Digit> z(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        if (x[j] == y[j] && x[j] != 0) {
            z[j - 1] = static_cast<Digit>(x[j]);
        }
    }
    return AgreementVector(std::move(z));
}

/// True iff x_j * y_j = 0 for every j.
template <int Base>
bool is_disjoint(const DigitVec<Base>& x, const DigitVec<Base>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t j = 1; j <= n; ++j) {
        if (x[j] * y[j] != 0) {
            return false;
        }
    }
    return true;
}

/// Embeds a Z2 vector into Z3 (digits unchanged).
inline DigitVec3 widen(const DigitVec2& x) {
    return DigitVec3(std::vector<Digit>(x.digits().begin(), x.digits().end()));
}

/// Every vector with size() <= length, in lexicographic order.
template <int Base>
std::vector<DigitVec<Base>> enumerate_digit_vectors(std::size_t length) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < length; ++i) {
        count *= Base;
    }
    std::vector<DigitVec<Base>> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        out.push_back(DigitVec<Base>::from_code(code, length));
    }
    return out;
}

}  // namespace efrac
