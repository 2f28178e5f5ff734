// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>

#include "efrac/egyptian.hpp"
#include "efrac/fractal.hpp"
#include "efrac/numeral.hpp"
#include "efrac/render.hpp"
#include "efrac/verify.hpp"
#include "../oracles.hpp"

using namespace efrac;

namespace {

constexpr double kSum2BudgetMs = 60'000;
constexpr double kSum3BudgetMs = 120'000;

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Outcome {
    bool pass;
    std::string detail;
};

std::string counts_text(const VerificationReport& r) {
    std::string s = "checked=" + std::to_string(r.checked) + " violations=" + std::to_string(r.violation_count);
    for (const auto& [k, v] : r.counts) {
        s += " " + k + "=" + std::to_string(v);
    }
    return s + " ms=" + std::to_string(static_cast<long long>(r.elapsed_ms));
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Outcome criterion1() {
    const auto r = verify_prop_sum2(10, jobs());
    const bool ok = r.pass() && r.checked == ipow(2, 20) && r.counts.at("linear_pairs") == ipow(3, 10) &&
                    r.elapsed_ms < kSum2BudgetMs;
    return {ok, counts_text(r)};
}

Outcome criterion2() {
    const auto r = verify_prop_sum3(6, jobs());
    const bool ok = r.pass() && r.checked == ipow(3, 12) && r.counts.at("z_empty_pairs") == ipow(7, 6) &&
                    r.elapsed_ms < kSum3BudgetMs;
    return {ok, counts_text(r)};
}

Outcome criterion3() {
    const auto r = verify_theorem_main(8, 2, jobs());
    return {r.pass() && r.counts.at("linear_points") == ipow(3, 8), counts_text(r)};
}

Outcome criterion4() {
    const auto r = verify_theorem_snowflake(5, 1, jobs());
    return {r.pass() && r.counts.at("z_empty_points") == ipow(7, 5), counts_text(r)};
}

Outcome criterion5() {
    const auto r = verify_lemma_oracles(8, 5, jobs());
    const Point half{Rational(1, 2), Rational(1, 2)};
    const Point three_eighths{Rational(3, 8), Rational(3, 8)};
    const bool half_ok = digit_member_sierpinski(half) && sierpinski_member(half, 8).member &&
                         digit_member_sierpinski(DigitVec2::parse("1"), DigitVec2::parse("1"), true);
    const bool te_ok = !digit_member_sierpinski(three_eighths) && !sierpinski_member(three_eighths, 3).member &&
                       !digit_member_sierpinski(DigitVec2::parse("011"), DigitVec2::parse("011"), true);
    return {r.pass() && r.checked == ipow(2, 16) + ipow(3, 10) && half_ok && te_ok,
            counts_text(r) + " (1/2,1/2)=" + (half_ok ? "member" : "WRONG") +
                " (3/8,3/8)=" + (te_ok ? "outside" : "WRONG")};
}

Outcome criterion6() {
    const long limit = static_cast<long>(ipow(3, 8));
    long round_trip_failures = 0;
    for (long n = -limit; n <= limit; ++n) {
        const auto d = int_to_balanced_ternary(n);
        if (balanced_ternary_to_int(d) != n || std::vector<int>(d.begin(), d.end()) != oracle::balanced_ternary(n)) {
            ++round_trip_failures;
        }
    }
    const std::string eight = format_numeral(balanced_ternary_numeral(8));

    long uniqueness_failures = 0;
    auto unique = [&](auto tag) {
        constexpr int B = decltype(tag)::value;
        std::map<mpq_class, std::size_t> seen;
        const auto vecs = enumerate_digit_vectors<B>(8);
        for (const auto& v : vecs) {
            const Rational x = frac_value(v);
            const mpq_class q(x.numerator(), x.denominator());
            if (q != oracle::frac_value(v.digits(), B) || !seen.emplace(q, 0).second ||
                value_to_digits<B>(x, 8) != v) {
                ++uniqueness_failures;
            }
        }
        return vecs.size();
    };
    const auto n2 = unique(std::integral_constant<int, 2>{});
    const auto n3 = unique(std::integral_constant<int, 3>{});
    const bool ok = round_trip_failures == 0 && eight == "[10T]_3" && uniqueness_failures == 0;
    return {ok, "round_trip_failures=" + std::to_string(round_trip_failures) + " 8->" + eight +
                    " uniqueness_failures=" + std::to_string(uniqueness_failures) + " vectors=" +
                    std::to_string(n2) + "+" + std::to_string(n3)};
}

Outcome criterion7() {
    long greedy_mismatch = 0;
    for (long k = 1; k <= 1000; ++k) {
        if (greedy_expand(Rational(2, 2 * k + 1)) != fib_split(k)) {
            ++greedy_mismatch;
        }
    }
    long sigma_failures = 0;
    std::uint64_t pairs = 0;
    const auto vecs = enumerate_digit_vectors<2>(8);
    std::vector<EgyptianFraction> fracs;
    std::vector<Rational> sums;
    for (const auto& v : vecs) {
        fracs.push_back(from_digits(v));
        sums.push_back(sigma_h(v));
    }
    for (std::size_t i = 0; i < fracs.size(); ++i) {
        for (std::size_t k = 0; k < fracs.size(); ++k) {
            ++pairs;
            const auto s = add_general(fracs[i], fracs[k]);
            if (s.has_negative_terms() || sigma(s) != sums[i] + sums[k]) {
                ++sigma_failures;
            }
        }
    }
    const std::string diff =
        sub_general(EgyptianFraction::of({5, 10, 20}), EgyptianFraction::of({10, 30})).to_string();
    const bool ok = greedy_mismatch == 0 && sigma_failures == 0 && diff == "1/5 + 1/20 - 1/30";
    return {ok, "greedy_mismatch=" + std::to_string(greedy_mismatch) + " sum_pairs=" + std::to_string(pairs) +
                    " sigma_failures=" + std::to_string(sigma_failures) + " difference=\"" + diff + "\""};
}

std::size_t polygons(const std::string& svg) {
    std::size_t n = 0;
    for (auto pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) {
        ++n;
    }
    return n;
}

RenderJob make_job(FractalKind kind, int depth, ImageFormat format, int width, int workers) {
    RenderJob j;
    j.spec = {kind, depth};
    j.format = format;
    j.width = width;
    j.viewport = Viewport::natural(kind);
    j.jobs = workers;
    return j;
}

Outcome criterion8() {
    long count_failures = 0, raster_failures = 0, repeat_failures = 0;
    for (int n = 0; n <= 7; ++n) {
        const auto job = make_job(FractalKind::sierpinski, n, ImageFormat::svg, 512, 1);
        const auto a = emit_svg(job);
        count_failures += polygons(a) != ipow(3, n);
        repeat_failures += a != emit_svg(job);
    }
    for (int n = 0; n <= 5; ++n) {
        const auto job = make_job(FractalKind::snowflake, n, ImageFormat::svg, 512, 1);
        const auto a = emit_svg(job);
        count_failures += polygons(a) != ipow(7, n);
        repeat_failures += a != emit_svg(job);
    }
    for (int n = 0; n <= 8; ++n) {
        const int w = 1 << n;
        const auto img = rasterize(make_job(FractalKind::sierpinski, n, ImageFormat::pgm, w, 1));
        raster_failures += img.pixels != oracle::sweep(false, n, w);
        repeat_failures += img.encode_pgm() != rasterize_pgm(make_job(FractalKind::sierpinski, n, ImageFormat::pgm,
                                                                      w, jobs()));
    }
    for (int n = 0; n <= 5; ++n) {
        const int w = 1 << n;
        const auto img = rasterize(make_job(FractalKind::snowflake, n, ImageFormat::pgm, w, 1));
        raster_failures += img.pixels != oracle::sweep(true, n, w);
        repeat_failures += img.encode_pgm() != rasterize_pgm(make_job(FractalKind::snowflake, n, ImageFormat::pgm,
                                                                      w, jobs()));
    }
    return {count_failures == 0 && raster_failures == 0 && repeat_failures == 0,
            "count_failures=" + std::to_string(count_failures) + " raster_failures=" +
                std::to_string(raster_failures) + " repeat_failures=" + std::to_string(repeat_failures)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"binary linearity, N=10", criterion1},
        {"ternary linearity, N=6", criterion2},
        {"Sierpinski points of linear pairs, N=8, depth 10", criterion3},
        {"snowflake points of z-empty pairs, N=5, depth 6", criterion4},
        {"digit and geometric membership agree, lengths 8 and 5", criterion5},
        {"numeral codecs", criterion6},
        {"Egyptian fraction algebra", criterion7},
        {"rendering", criterion8},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed;
}
