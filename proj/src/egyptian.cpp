#include "efrac/egyptian.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <vector>

#include "efrac/errors.hpp"

namespace efrac {

EgyptianFraction::EgyptianFraction(Terms terms, bool allow_signed)
    : terms_(std::move(terms)), signed_(allow_signed) {
    for (const auto& [den, coeff] : terms_) {
        if (den < 2) {
            throw DomainError("unit fraction denominator must be >= 2, got " + den.get_str());
        }
        if (coeff != 1 && coeff != -1) {
            throw DomainError("Egyptian fraction coefficient must be +1 or -1");
        }
        if (coeff == -1 && !allow_signed) {
            throw DomainError("negative term 1/" + den.get_str() + " in a standard Egyptian fraction");
        }
    }
}

EgyptianFraction EgyptianFraction::of(std::initializer_list<long> denominators) {
    Terms terms;
    for (long d : denominators) {
        if (!terms.emplace(BigInt(d), 1).second) {
            throw DomainError("repeated unit fraction 1/" + std::to_string(d));
        }
    }
    return EgyptianFraction(std::move(terms), false);
}

EgyptianFraction EgyptianFraction::parse(std::string_view text) {
    std::string s;
    std::vector<std::size_t> origin;  // offset in `text` of each kept char
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
            origin.push_back(i);
        }
    }
    auto at = [&](std::size_t i) { return i < origin.size() ? origin[i] : text.size(); };
    if (s.empty()) {
        throw ParseError("empty Egyptian fraction", 0);
    }
    if (s == "0") {
        return {};
    }

    Terms terms;
    bool any_negative = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' between terms", at(pos));
        }
        if (pos >= s.size() || s[pos] != '1') {
            throw ParseError("expected unit fraction '1/n'", at(pos));
        }
        ++pos;
        if (pos >= s.size() || s[pos] != '/') {
            throw ParseError("expected '/' after numerator 1", at(pos));
        }
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected denominator", at(start));
        }
        BigInt den(s.substr(start, pos - start));
        if (den < 2) {
            throw ParseError("denominator must be >= 2", at(start));
        }
        if (!terms.emplace(den, sign).second) {
            throw ParseError("repeated denominator " + den.get_str(), at(start));
        }
        any_negative = any_negative || sign < 0;
    }
    return EgyptianFraction(std::move(terms), any_negative);
}

bool EgyptianFraction::has_negative_terms() const {
    for (const auto& [den, coeff] : terms_) {
        if (coeff < 0) {
            return true;
        }
    }
    return false;
}

int EgyptianFraction::coefficient(const BigInt& denominator) const {
    auto it = terms_.find(denominator);
    return it == terms_.end() ? 0 : it->second;
}

namespace {

// Digit readback stops at this index; larger supports are not vectors we
// ever enumerate.
constexpr unsigned long kMaxReadbackIndex = 1u << 16;

template <int Base>
std::optional<DigitVec<Base>> readback(const EgyptianFraction::Terms& terms) {
    std::vector<Digit> digits;
    for (const auto& [den, coeff] : terms) {
        if (den - 1 > kMaxReadbackIndex || !DigitVec<Base>::valid_digit(coeff)) {
            return std::nullopt;
        }
        const auto j = den.get_ui() - 1;
        if (digits.size() < j) {
            digits.resize(j, 0);
        }
        digits[j - 1] = static_cast<Digit>(coeff);
    }
    return DigitVec<Base>(std::move(digits));
}

}  // namespace

std::optional<DigitVec2> EgyptianFraction::to_digits2() const { return readback<2>(terms_); }
std::optional<DigitVec3> EgyptianFraction::to_digits3() const { return readback<3>(terms_); }

std::string EgyptianFraction::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [den, coeff] : terms_) {
        if (first) {
            out += coeff < 0 ? "-" : "";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += "1/" + den.get_str();
        first = false;
    }
    return out;
}

template <int Base>
static EgyptianFraction from_digits_impl(const DigitVec<Base>& v, bool allow_signed) {
    EgyptianFraction::Terms terms;
    for (std::size_t j = 1; j <= v.size(); ++j) {
        if (v[j] != 0) {
            terms.emplace_hint(terms.end(), BigInt(static_cast<unsigned long>(j + 1)), v[j]);
        }
    }
    return EgyptianFraction(std::move(terms), allow_signed);
}

EgyptianFraction from_digits(const DigitVec2& v) { return from_digits_impl(v, false); }
EgyptianFraction from_digits(const DigitVec3& v) { return from_digits_impl(v, true); }

Rational sigma(const EgyptianFraction& e) {
    Rational sum;
    for (const auto& [den, coeff] : e.terms()) {
        sum += Rational(BigInt(coeff), den);
    }
    return sum;
}

namespace {

// lcm(2, ..., n+1) for n = 0..kFastLen; beyond that the int64 fast path in
// sigma_h is not safe and the general rational sum is used instead.
constexpr std::size_t kFastLen = 38;

const std::array<std::int64_t, kFastLen + 1>& lcm_table() {
    static const auto table = [] {
        std::array<std::int64_t, kFastLen + 1> t{};
        t[0] = 1;
        for (std::size_t n = 1; n <= kFastLen; ++n) {
            t[n] = std::lcm(t[n - 1], static_cast<std::int64_t>(n + 1));
        }
        return t;
    }();
    return table;
}

}  // namespace

template <int Base>
Rational sigma_h(const DigitVec<Base>& v) {
    const std::size_t n = v.size();
    if (n <= kFastLen) {
        const std::int64_t l = lcm_table()[n];
        std::int64_t num = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            num += v[j] * (l / static_cast<std::int64_t>(j + 1));
        }
        return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(l)));
    }
    Rational sum;
    for (std::size_t j = 1; j <= n; ++j) {
        if (v[j] != 0) {
            sum += Rational(v[j], static_cast<long>(j + 1));
        }
    }
    return sum;
}

template Rational sigma_h<2>(const DigitVec2&);
template Rational sigma_h<3>(const DigitVec3&);

EgyptianFraction fib_split(const BigInt& k) {
    if (k < 1) {
        throw DomainError("fib_split requires k >= 1, got " + k.get_str());
    }
    BigInt a = k + 1;
    BigInt b = a * (2 * k + 1);
    return EgyptianFraction({{a, 1}, {b, 1}}, false);
}

EgyptianFraction greedy_expand(const Rational& value) {
    if (value.sign() <= 0 || value >= Rational(1)) {
        throw DomainError("greedy expansion needs 0 < p/q < 1, got " + value.to_string());
    }
    EgyptianFraction::Terms terms;
    Rational rest = value;
    while (!rest.is_zero()) {
        BigInt n = rest.reciprocal().ceil();
        rest -= Rational(BigInt(1), n);
        terms.emplace(std::move(n), 1);
    }
    return EgyptianFraction(std::move(terms), false);
}

namespace {

void require_disjoint(const EgyptianFraction& x, const EgyptianFraction& y) {
    for (const auto& [den, coeff] : y.terms()) {
        if (x.terms().contains(den)) {
            throw PreconditionError("Egyptian fractions overlap at 1/" + den.get_str());
        }
    }
}

// Signed multiset of unit fractions with an index of the denominators whose
// multiplicity has absolute value >= 2.
class TermCounts {
public:
    void add(const BigInt& den, int delta) {
        int& c = counts_[den];
        c += delta;
        if (c == 0) {
            counts_.erase(den);
            dups_.erase(den);
        } else if (c >= 2 || c <= -2) {
            dups_.insert(den);
        } else {
            dups_.erase(den);
        }
    }

    int count(const BigInt& den) const {
        auto it = counts_.find(den);
        return it == counts_.end() ? 0 : it->second;
    }

    bool has_duplicates() const { return !dups_.empty(); }
    const BigInt& smallest_duplicate() const { return *dups_.begin(); }
    std::vector<BigInt> duplicates() const { return {dups_.begin(), dups_.end()}; }

    // 2/n with sign s: 1/(n/2) for even n > 2, the 2/(2k+1) identity for odd
    // n; 2/2 = 1 is not a unit fraction with n >= 2, so one copy of 1/2 is
    // split instead.
    void rewrite_pair(const BigInt& n, int s) {
        add(n, -2 * s);
        if (n == 2) {
            add(n, s);
            split_into(n, s);
        } else if (mpz_even_p(n.get_mpz_t()) != 0) {
            add(BigInt(n / 2), s);
        } else {
            add(BigInt((n + 1) / 2), s);
            add(BigInt(n * (n + 1) / 2), s);
        }
    }

    // One copy of s/n becomes s/(n+1) + s/(n(n+1)).
    void split(const BigInt& n, int s) {
        add(n, -s);
        split_into(n, s);
    }

    EgyptianFraction to_fraction(bool allow_signed) const {
        return EgyptianFraction(EgyptianFraction::Terms(counts_.begin(), counts_.end()), allow_signed);
    }

    std::string describe() const {
        std::string s;
        for (const auto& [den, c] : counts_) {
            s += (s.empty() ? "" : " ") + std::to_string(c) + "x1/" + den.get_str();
        }
        return s.empty() ? "0" : s;
    }

private:
    void split_into(const BigInt& n, int s) {
        add(BigInt(n + 1), s);
        add(BigInt(n * (n + 1)), s);
    }

    std::map<BigInt, int> counts_;
    std::set<BigInt> dups_;
};

int sign_of(int c) { return c > 0 ? 1 : -1; }

EgyptianFraction resolve(TermCounts counts, bool allow_signed) {
    for (const BigInt& n : counts.duplicates()) {
        const int c = counts.count(n);
        if (c >= 2 || c <= -2) {
            counts.rewrite_pair(n, sign_of(c));
        }
    }
    std::size_t steps = 0;
    while (counts.has_duplicates()) {
        if (++steps > kMaxRewriteSteps) {
            throw ResourceError("duplicate resolution exceeded " + std::to_string(kMaxRewriteSteps) +
                                " splitting steps");
        }
        const BigInt n = counts.smallest_duplicate();
        counts.split(n, sign_of(counts.count(n)));
    }
    return counts.to_fraction(allow_signed);
}

}  // namespace

EgyptianFraction add_disjoint(const EgyptianFraction& x, const EgyptianFraction& y) {
    require_disjoint(x, y);
    EgyptianFraction::Terms terms = x.terms();
    terms.insert(y.terms().begin(), y.terms().end());
    return EgyptianFraction(std::move(terms), x.is_signed() || y.is_signed());
}

EgyptianFraction sub_disjoint(const EgyptianFraction& x, const EgyptianFraction& y) {
    require_disjoint(x, y);
    EgyptianFraction::Terms terms = x.terms();
    for (const auto& [den, coeff] : y.terms()) {
        terms.emplace(den, -coeff);
    }
    return EgyptianFraction(std::move(terms), true);
}

EgyptianFraction add_general(const EgyptianFraction& x, const EgyptianFraction& y) {
    if (x.has_negative_terms() || y.has_negative_terms()) {
        throw DomainError("add_general takes standard fractions; use sub_general for signed terms");
    }
    TermCounts counts;
    for (const auto& [den, c] : x.terms()) counts.add(den, c);
    for (const auto& [den, c] : y.terms()) counts.add(den, c);
    return resolve(std::move(counts), false);
}

EgyptianFraction sub_general(const EgyptianFraction& x, const EgyptianFraction& y) {
    TermCounts counts;
    for (const auto& [den, c] : x.terms()) counts.add(den, c);
    for (const auto& [den, c] : y.terms()) counts.add(den, -c);
    return resolve(std::move(counts), true);
}

bool is_equivalent(const EgyptianFraction& x, const EgyptianFraction& y) {
    return sigma(x) == sigma(y);
}

std::pair<EgyptianFraction, EgyptianFraction> disjointify(const EgyptianFraction& x,
                                                          const EgyptianFraction& y) {
    if (x.has_negative_terms() || y.has_negative_terms()) {
        throw DomainError("disjointify takes standard fractions");
    }
    TermCounts counts;
    for (const auto& [den, c] : y.terms()) counts.add(den, c);

    // Smallest denominator of y' that is repeated or also used by x.
    auto first_collision = [&]() -> std::optional<BigInt> {
        std::optional<BigInt> best;
        if (counts.has_duplicates()) {
            best = counts.smallest_duplicate();
        }
        for (const auto& [den, c] : x.terms()) {
            if (best && den >= *best) {
                break;
            }
            if (counts.count(den) != 0) {
                best = den;
                break;
            }
        }
        return best;
    };

    std::size_t steps = 0;
    while (auto n = first_collision()) {
        if (++steps > kMaxRewriteSteps) {
            throw ResourceError("disjointify exceeded " + std::to_string(kMaxRewriteSteps) +
                                " splitting steps; partial second operand: " + counts.describe());
        }
        counts.split(*n, 1);
    }
    return {x, counts.to_fraction(false)};
}

template <int Base>
static LinearityReport check_linear(const DigitVec<Base>& x, const DigitVec<Base>& y) {
    LinearityReport r;
    r.lhs = sigma_h(x) + sigma_h(y);
    r.rhs = sigma_h(x + y);
    r.z = agreement(x, y);
    r.sigma_z = sigma_h(r.z);
    r.linear = r.lhs == r.rhs;
    return r;
}

LinearityReport check_linear_z2(const DigitVec2& x, const DigitVec2& y) { return check_linear(x, y); }
LinearityReport check_linear_z3(const DigitVec3& x, const DigitVec3& y) { return check_linear(x, y); }

}  // namespace efrac
