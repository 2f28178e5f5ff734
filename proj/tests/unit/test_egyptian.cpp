#include <doctest.h>

#include "efrac/egyptian.hpp"
#include "efrac/errors.hpp"
#include "../oracles.hpp"

using efrac::DigitVec2;
using efrac::DigitVec3;
using efrac::EgyptianFraction;
using efrac::Rational;

namespace {

mpq_class as_mpq(const Rational& r) { return mpq_class(r.numerator(), r.denominator()); }

std::vector<long> dens(const EgyptianFraction& e) {
    std::vector<long> out;
    for (const auto& [n, c] : e.terms()) {
        out.push_back(c * n.get_si());
    }
    return out;
}

}  // namespace

TEST_CASE("egyptian parse and print") {
    const auto e = EgyptianFraction::parse("1/5 + 1/20 - 1/30");
    CHECK(e.is_signed());
    CHECK(e.to_string() == "1/5 + 1/20 - 1/30");
    CHECK(EgyptianFraction::parse("1/3+1/2").to_string() == "1/2 + 1/3");
    CHECK(EgyptianFraction::parse("-1/3+1/2").to_string() == "1/2 - 1/3");
    CHECK(EgyptianFraction::parse("-1/2").to_string() == "-1/2");
    CHECK(EgyptianFraction::parse("0").empty());
    CHECK(EgyptianFraction().to_string() == "0");
    CHECK_FALSE(EgyptianFraction::parse("1/2").is_signed());
    for (const char* bad : {"", "1/2+", "2/3", "1/2+1/2", "1/1", "1/0", "1/x", "+"}) {
        CAPTURE(bad);
        CHECK_THROWS(EgyptianFraction::parse(bad));
    }
    CHECK_THROWS_AS(EgyptianFraction(EgyptianFraction::Terms{{efrac::BigInt(3), -1}}, false), efrac::DomainError);
    CHECK_THROWS_AS(EgyptianFraction(EgyptianFraction::Terms{{efrac::BigInt(3), 2}}, true), efrac::DomainError);
}

TEST_CASE("h and its readback") {
    const auto e = efrac::from_digits(DigitVec2::parse("101"));
    CHECK(e == EgyptianFraction::of({2, 4}));
    CHECK(efrac::from_digits(DigitVec3::parse("T1")).to_string() == "-1/2 + 1/3");
    CHECK(*e.to_digits2() == DigitVec2::parse("101"));
    CHECK_FALSE(EgyptianFraction::parse("1/2-1/3").to_digits2());
    CHECK(EgyptianFraction::parse("1/2-1/3").to_digits3() == DigitVec3::parse("1T"));
    CHECK(efrac::from_digits(DigitVec2()).empty());
}

TEST_CASE("h is a bijection onto fractions with small denominators") {
    for (std::size_t len = 0; len <= 8; ++len) {
        for (const auto& v : efrac::enumerate_digit_vectors<2>(len)) {
            const auto e = efrac::from_digits(v);
            REQUIRE(e.to_digits2() == v);
        }
    }
    for (const auto& v : efrac::enumerate_digit_vectors<3>(6)) {
        REQUIRE(efrac::from_digits(v).to_digits3() == v);
    }
}

TEST_CASE("sigma of h matches the reference sum") {
    for (const auto& v : efrac::enumerate_digit_vectors<2>(10)) {
        REQUIRE(as_mpq(efrac::sigma_h(v)) == oracle::sigma_h(v.digits()));
    }
    for (const auto& v : efrac::enumerate_digit_vectors<3>(6)) {
        REQUIRE(as_mpq(efrac::sigma_h(v)) == oracle::sigma_h(v.digits()));
        REQUIRE(efrac::sigma(efrac::from_digits(v)) == efrac::sigma_h(v));
    }
    std::vector<efrac::Digit> long_digits(60, 1);
    const DigitVec2 v(long_digits);
    CHECK(as_mpq(efrac::sigma_h(v)) == oracle::sigma_h(v.digits()));
}

TEST_CASE("greedy expansion") {
    CHECK(dens(efrac::greedy_expand(Rational(3, 7))) == std::vector<long>{3, 11, 231});
    CHECK(efrac::greedy_expand(Rational(2, 5)).to_string() == "1/3 + 1/15");
    CHECK(efrac::greedy_expand(Rational(1, 7)).to_string() == "1/7");
    CHECK_THROWS_AS(efrac::greedy_expand(Rational(0)), efrac::DomainError);
    CHECK_THROWS_AS(efrac::greedy_expand(Rational(1)), efrac::DomainError);
    CHECK_THROWS_AS(efrac::greedy_expand(Rational(-1, 3)), efrac::DomainError);
    for (long q = 2; q <= 40; ++q) {
        for (long p = 1; p < q; ++p) {
            const Rational x(p, q);
            const auto e = efrac::greedy_expand(x);
            REQUIRE(efrac::sigma(e) == x);
            std::vector<efrac::BigInt> got;
            for (const auto& [n, c] : e.terms()) got.push_back(n);
            REQUIRE(got == oracle::greedy(mpq_class(p, q)));
        }
    }
}

TEST_CASE("two over odd split") {
    CHECK(efrac::fib_split(1).to_string() == "1/2 + 1/6");
    CHECK(efrac::fib_split(2).to_string() == "1/3 + 1/15");
    CHECK_THROWS_AS(efrac::fib_split(0), efrac::DomainError);
    for (long k = 1; k <= 50; ++k) {
        REQUIRE(efrac::sigma(efrac::fib_split(k)) == Rational(2, 2 * k + 1));
    }
}

TEST_CASE("disjoint sum and difference") {
    const auto x = EgyptianFraction::of({5, 10, 20});
    const auto y = EgyptianFraction::of({10, 30});
    CHECK_THROWS_AS(efrac::add_disjoint(x, y), efrac::PreconditionError);
    CHECK_THROWS_AS(efrac::sub_disjoint(x, y), efrac::PreconditionError);
    CHECK(efrac::add_disjoint(EgyptianFraction::of({2}), EgyptianFraction::of({3})).to_string() == "1/2 + 1/3");
    const auto d = efrac::sub_disjoint(EgyptianFraction::of({5, 20}), EgyptianFraction::of({30}));
    CHECK(d.to_string() == "1/5 + 1/20 - 1/30");
    CHECK(d.is_signed());
}

TEST_CASE("general difference cancels shared terms") {
    const auto d = efrac::sub_general(EgyptianFraction::of({5, 10, 20}), EgyptianFraction::of({10, 30}));
    CHECK(d.to_string() == "1/5 + 1/20 - 1/30");
    CHECK(efrac::sub_general(EgyptianFraction::of({2}), EgyptianFraction::of({2})).empty());
    CHECK(efrac::sigma(efrac::sub_general(EgyptianFraction::of({3}), EgyptianFraction::of({2, 3}))) ==
          Rational(-1, 2));
}

TEST_CASE("general sum rewrites collisions") {
    CHECK(efrac::add_general(EgyptianFraction::of({4}), EgyptianFraction::of({4})).to_string() == "1/2");
    CHECK(efrac::add_general(EgyptianFraction::of({3}), EgyptianFraction::of({3})).to_string() == "1/2 + 1/6");
    const auto half = efrac::add_general(EgyptianFraction::of({2}), EgyptianFraction::of({2}));
    CHECK(efrac::sigma(half) == Rational(1));
    CHECK_FALSE(half.is_signed());
    CHECK_THROWS_AS(efrac::add_general(EgyptianFraction::parse("-1/3"), EgyptianFraction::of({2})),
                    efrac::DomainError);
}

TEST_CASE("general sum and difference preserve sigma") {
    const auto vecs = efrac::enumerate_digit_vectors<2>(5);
    for (const auto& a : vecs) {
        for (const auto& b : vecs) {
            const auto x = efrac::from_digits(a);
            const auto y = efrac::from_digits(b);
            const auto s = efrac::add_general(x, y);
            REQUIRE_FALSE(s.has_negative_terms());
            REQUIRE(efrac::sigma(s) == efrac::sigma(x) + efrac::sigma(y));
            REQUIRE(efrac::sigma(efrac::sub_general(x, y)) == efrac::sigma(x) - efrac::sigma(y));
        }
    }
}

TEST_CASE("disjointify") {
    const auto [x, y] = efrac::disjointify(EgyptianFraction::of({2}), EgyptianFraction::of({2, 3}));
    CHECK(x == EgyptianFraction::of({2}));
    CHECK(dens(y) == std::vector<long>{3, 4, 6, 12});
    CHECK(efrac::sigma(y) == Rational(5, 6));
    CHECK_THROWS_AS(efrac::disjointify(EgyptianFraction::parse("1/2-1/3"), EgyptianFraction::of({2})),
                    efrac::DomainError);
    const auto vecs = efrac::enumerate_digit_vectors<2>(4);
    for (const auto& a : vecs) {
        for (const auto& b : vecs) {
            const auto [xa, yb] = efrac::disjointify(efrac::from_digits(a), efrac::from_digits(b));
            REQUIRE(efrac::sigma(yb) == efrac::sigma_h(b));
            for (const auto& [n, c] : yb.terms()) {
                REQUIRE(xa.coefficient(n) == 0);
            }
        }
    }
}

TEST_CASE("equivalence compares sums") {
    CHECK(efrac::is_equivalent(EgyptianFraction::of({2}), EgyptianFraction::of({3, 6})));
    CHECK_FALSE(efrac::is_equivalent(EgyptianFraction::of({2}), EgyptianFraction::of({3})));
}

TEST_CASE("linearity report") {
    const auto r = efrac::check_linear_z2(DigitVec2::parse("11"), DigitVec2::parse("101"));
    CHECK(r.lhs == Rational(19, 12));
    CHECK(r.rhs == Rational(7, 12));
    CHECK(r.z == DigitVec3::parse("1"));
    CHECK_FALSE(r.linear);
    const auto ok = efrac::check_linear_z2(DigitVec2::parse("1"), DigitVec2::parse("01"));
    CHECK(ok.linear);
    CHECK(ok.z.empty());
    const auto t = efrac::check_linear_z3(DigitVec3::parse("1"), DigitVec3::parse("T"));
    CHECK(t.linear);
    CHECK(t.lhs == Rational(0));
}

TEST_CASE("the linearity gap is a multiple of sigma h(z)") {
    const auto v2 = efrac::enumerate_digit_vectors<2>(6);
    for (const auto& x : v2) {
        for (const auto& y : v2) {
            const auto r = efrac::check_linear_z2(x, y);
            REQUIRE(r.lhs - r.rhs == Rational(2) * r.sigma_z);
            REQUIRE(r.linear == r.z.empty());
        }
    }
    const auto v3 = efrac::enumerate_digit_vectors<3>(4);
    for (const auto& x : v3) {
        for (const auto& y : v3) {
            const auto r = efrac::check_linear_z3(x, y);
            REQUIRE(r.lhs - r.rhs == Rational(3) * r.sigma_z);
            REQUIRE(r.linear == r.sigma_z.is_zero());
        }
    }
}
