#pragma once

/*
 * Egyptian fractions: finite sets of distinct unit fractions, optionally
 * signed. A term is keyed by its denominator n >= 2; the digit-vector index
 * of that term is j = n - 1, so the map h from digit vectors sends digit j
 * to the coefficient of 1/(j+1).
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "efrac/digitvec.hpp"
#include "efrac/rational.hpp"

namespace efrac {

/// Upper bound on rewrite steps for duplicate resolution and disjointify.
inline constexpr std::size_t kMaxRewriteSteps = 10'000;

class EgyptianFraction {
public:
    /// Denominator -> coefficient (+1 or -1), ascending denominator.
    using Terms = std::map<BigInt, int>;

    /// The empty (standard) fraction.
    EgyptianFraction() = default;

    /// Throws DomainError on a denominator < 2, a coefficient outside
    /// {-1, 1}, or a -1 coefficient when `allow_signed` is false.
    EgyptianFraction(Terms terms, bool allow_signed);

    /// Standard fraction from a list of distinct denominators.
    static EgyptianFraction of(std::initializer_list<long> denominators);

    /// "1/5+1/20-1/30" (whitespace ignored, "0" is the empty fraction).
    /// Numerators must be 1 and denominators distinct and >= 2. The result
    /// is signed iff some term is negative. Throws ParseError.
    static EgyptianFraction parse(std::string_view text);

    bool is_signed() const { return signed_; }
    bool has_negative_terms() const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Coefficient of 1/n (0 when absent).
    int coefficient(const BigInt& denominator) const;

    /// Digit readback (inverse of from_digits). Empty when some
    /// denominator does not fit the requested alphabet or index range.
    std::optional<DigitVec2> to_digits2() const;
    std::optional<DigitVec3> to_digits3() const;

    /// "1/5 + 1/20 - 1/30"; the empty fraction prints as "0".
    std::string to_string() const;

    /// Term sets compare equal regardless of the signed flag.
    friend bool operator==(const EgyptianFraction& a, const EgyptianFraction& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
    bool signed_ = false;
};

/// h: digit j becomes the coefficient of 1/(j+1).
EgyptianFraction from_digits(const DigitVec2& v);
EgyptianFraction from_digits(const DigitVec3& v);

/// Exact sum of the terms.
Rational sigma(const EgyptianFraction& e);

/// Sigma of h(v) computed straight from the digits.
template <int Base>
Rational sigma_h(const DigitVec<Base>& v);

/// 2/(2k+1) = 1/(k+1) + 1/((k+1)(2k+1)). Throws DomainError for k < 1.
EgyptianFraction fib_split(const BigInt& k);

/// Greedy expansion of 0 < p/q < 1: repeatedly take the largest unit
/// fraction not exceeding the remainder. Throws DomainError otherwise.
EgyptianFraction greedy_expand(const Rational& value);

/// X ∪ Y and X ∪ (-Y). Throw PreconditionError on overlapping support.
EgyptianFraction add_disjoint(const EgyptianFraction& x, const EgyptianFraction& y);
EgyptianFraction sub_disjoint(const EgyptianFraction& x, const EgyptianFraction& y);

/// Sum of two standard fractions as a standard fraction. Colliding terms
/// become 2/n, which is rewritten as 1/(n/2) for even n > 2 and by the
/// 2/(2k+1) identity for odd n; remaining duplicates are split with
/// 1/n = 1/(n+1) + 1/(n(n+1)), smallest denominator first.
/// Throws DomainError when an input has a negative term, ResourceError
/// after kMaxRewriteSteps splits.
EgyptianFraction add_general(const EgyptianFraction& x, const EgyptianFraction& y);

/// x - y as a signed fraction. Equal denominators of opposite sign cancel;
/// same-sign collisions are resolved as in add_general (with sign).
EgyptianFraction sub_general(const EgyptianFraction& x, const EgyptianFraction& y);

bool is_equivalent(const EgyptianFraction& x, const EgyptianFraction& y);

/// Returns (x, y') with sigma(y') = sigma(y) and y' disjoint from x, by
/// splitting the smallest colliding term of y until no collision is left.
/// Throws DomainError on signed input, ResourceError (with the partial
/// state in the message) after kMaxRewriteSteps splits.
std::pair<EgyptianFraction, EgyptianFraction> disjointify(const EgyptianFraction& x,
                                                          const EgyptianFraction& y);

struct LinearityReport {
    Rational lhs;  ///< sigma h(x) + sigma h(y)
    Rational rhs;  ///< sigma h(x + y)
    AgreementVector z;
    Rational sigma_z;  ///< sigma h(z)
    bool linear = false;
};

LinearityReport check_linear_z2(const DigitVec2& x, const DigitVec2& y);
LinearityReport check_linear_z3(const DigitVec3& x, const DigitVec3& y);

}  // namespace efrac
