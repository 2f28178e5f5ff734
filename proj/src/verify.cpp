#include "efrac/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "efrac/digitvec.hpp"
#include "efrac/egyptian.hpp"
#include "efrac/errors.hpp"
#include "efrac/fractal.hpp"
#include "efrac/numeral.hpp"

namespace efrac {

void VerificationReport::absorb(const VerificationReport& other) {
    checked += other.checked;
    violation_count += other.violation_count;
    for (const auto& v : other.violations) {
        if (violations.size() >= kMaxListedViolations) {
            break;
        }
        violations.push_back(v);
    }
    for (const auto& [key, value] : other.counts) {
        counts[key] += value;
    }
}

void VerificationReport::add_violation(std::string description) {
    ++violation_count;
    if (violations.size() < kMaxListedViolations) {
        violations.push_back(std::move(description));
    }
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "property: " << property << "\n";
    out << "space: " << space << "\n";
    out << "checked: " << checked << "\n";
    out << "violations: " << violation_count << "\n";
    for (const auto& [key, value] : counts) {
        out << key << ": " << value << "\n";
    }
    out << "elapsed_ms: " << static_cast<long long>(elapsed_ms) << "\n";
    for (const auto& v : violations) {
        out << "counterexample: " << v << "\n";
    }
    out << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["property"] = property;
    j["space"] = space;
    j["checked"] = checked;
    j["violations"] = violation_count;
    j["millis"] = static_cast<long long>(elapsed_ms);
    j["pass"] = pass();
    j["counts"] = nlohmann::ordered_json(counts);
    j["counterexamples"] = violations;
    return j.dump();
}

void require_len(const char* what, int value, int limit) {
    if (value < 0) {
        throw DomainError(std::string(what) + " must be >= 0");
    }
    if (value > limit) {
        throw ResourceError(std::string(what) + " " + std::to_string(value) + " exceeds the limit of " +
                            std::to_string(limit));
    }
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs `block(begin, end)` over contiguous slices of [0, outer) and merges
// the partial reports in slice order.
template <class Block>
VerificationReport run_blocks(VerificationReport head, std::size_t outer, int jobs, Block&& block) {
    const auto start = Clock::now();
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                        std::max<std::size_t>(outer, 1));
    std::vector<VerificationReport> parts(workers);
    if (workers == 1) {
        parts[0] = block(0, outer);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] { parts[w] = block(outer * w / workers, outer * (w + 1) / workers); });
        }
    }
    for (const auto& part : parts) {
        head.absorb(part);
    }
    head.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return head;
}

template <int Base>
struct Space {
    std::vector<DigitVec<Base>> vecs;
    std::vector<Rational> values;

    explicit Space(int len) : vecs(enumerate_digit_vectors<Base>(static_cast<std::size_t>(len))) {
        values.reserve(vecs.size());
        for (const auto& v : vecs) {
            values.push_back(frac_value(v));
        }
    }
};

template <int Base>
std::string pair_label(const DigitVec<Base>& x, const DigitVec<Base>& y) {
    return "x=" + x.to_string() + " y=" + y.to_string();
}

std::string space_text(int base, int len) {
    return "all pairs of Z" + std::to_string(base) + " digit vectors of length <= " + std::to_string(len);
}

}  // namespace

VerificationReport verify_prop_sum2(int max_len, int jobs) {
    require_len("sum2 length", max_len, kMaxSum2Len);
    const Space<2> space(max_len);
    VerificationReport head{"linearity-z2", space_text(2, max_len)};
    head.counts["linear_pairs"] = 0;
    return run_blocks(std::move(head), space.vecs.size(), jobs, [&](std::size_t begin, std::size_t end) {
        VerificationReport part;
        std::uint64_t linear = 0;
        for (std::size_t i = begin; i < end; ++i) {
            for (const auto& y : space.vecs) {
                const auto& x = space.vecs[i];
                const auto r = check_linear_z2(x, y);
                ++part.checked;
                linear += r.linear ? 1 : 0;
                if (r.linear != r.z.empty()) {
                    part.add_violation(pair_label(x, y) + " lhs=" + r.lhs.to_string() + " rhs=" + r.rhs.to_string() +
                                       " z=" + r.z.to_tuple_string());
                }
            }
        }
        part.counts["linear_pairs"] = linear;
        return part;
    });
}

VerificationReport verify_prop_sum3(int max_len, int jobs) {
    require_len("sum3 length", max_len, kMaxSum3Len);
    const Space<3> space(max_len);
    VerificationReport head{"linearity-z3", space_text(3, max_len)};
    for (const char* key : {"z_empty_pairs", "linear_pairs", "converse_probe_linear", "converse_probe_nonlinear"}) {
        head.counts[key] = 0;
    }
    return run_blocks(std::move(head), space.vecs.size(), jobs, [&](std::size_t begin, std::size_t end) {
        VerificationReport part;
        std::uint64_t z_empty = 0, linear = 0, probe_linear = 0, probe_nonlinear = 0;
        for (std::size_t i = begin; i < end; ++i) {
            for (const auto& y : space.vecs) {
                const auto& x = space.vecs[i];
                const auto r = check_linear_z3(x, y);
                ++part.checked;
                z_empty += r.z.empty() ? 1 : 0;
                linear += r.linear ? 1 : 0;
                if (r.z.empty() && !r.linear) {
                    part.add_violation("(a) " + pair_label(x, y) + " z empty but lhs=" + r.lhs.to_string() +
                                       " rhs=" + r.rhs.to_string());
                }
                if (r.linear && !r.sigma_z.is_zero()) {
                    part.add_violation("(b) " + pair_label(x, y) + " linear but sigma h(z)=" + r.sigma_z.to_string());
                }
                if (!r.z.empty() && r.sigma_z.is_zero()) {
                    (r.linear ? probe_linear : probe_nonlinear) += 1;
                }
            }
        }
        part.counts["z_empty_pairs"] = z_empty;
        part.counts["linear_pairs"] = linear;
        part.counts["converse_probe_linear"] = probe_linear;
        part.counts["converse_probe_nonlinear"] = probe_nonlinear;
        return part;
    });
}

VerificationReport verify_theorem_main(int max_len, int extra_depth, int jobs) {
    require_len("theorem length", max_len, kMaxTheoremMainLen);
    require_len("extra depth", extra_depth, 16);
    const Space<2> space(max_len);
    const int depth = max_len + extra_depth;
    VerificationReport head{"sierpinski-linear-points",
                            space_text(2, max_len) + ", geometric depth " + std::to_string(depth)};
    head.counts["linear_points"] = 0;
    head.counts["nonlinear_pairs"] = 0;
    return run_blocks(std::move(head), space.vecs.size(), jobs, [&](std::size_t begin, std::size_t end) {
        VerificationReport part;
        std::uint64_t points = 0, nonlinear = 0;
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t k = 0; k < space.vecs.size(); ++k) {
                const auto& x = space.vecs[i];
                const auto& y = space.vecs[k];
                ++part.checked;
                if (check_linear_z2(x, y).linear) {
                    ++points;
                    const Point p{space.values[i], space.values[k]};
                    if (!sierpinski_member(p, depth).member) {
                        part.add_violation(pair_label(x, y) + " point " + p.to_string() + " not in S_" +
                                           std::to_string(depth));
                    }
                } else {
                    ++nonlinear;
                    if (digit_member_sierpinski(x, y, false)) {
                        part.add_violation(pair_label(x, y) + " nonlinear but satisfies x_j*y_j=0");
                    }
                }
            }
        }
        part.counts["linear_points"] = points;
        part.counts["nonlinear_pairs"] = nonlinear;
        return part;
    });
}

VerificationReport verify_theorem_snowflake(int max_len, int extra_depth, int jobs) {
    require_len("theorem length", max_len, kMaxTheoremSnowflakeLen);
    require_len("extra depth", extra_depth, 8);
    const Space<3> space(max_len);
    const int depth = max_len + extra_depth;
    VerificationReport head{"snowflake-linear-points",
                            space_text(3, max_len) + " with empty z, geometric depth " + std::to_string(depth)};
    head.counts["z_empty_points"] = 0;
    return run_blocks(std::move(head), space.vecs.size(), jobs, [&](std::size_t begin, std::size_t end) {
        VerificationReport part;
        std::uint64_t points = 0;
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t k = 0; k < space.vecs.size(); ++k) {
                const auto& x = space.vecs[i];
                const auto& y = space.vecs[k];
                const auto r = check_linear_z3(x, y);
                if (!r.z.empty()) {
                    continue;  // outside the hypothesis
                }
                ++part.checked;
                ++points;
                if (!r.linear) {
                    part.add_violation(pair_label(x, y) + " z empty but not linear");
                }
                const Point p{space.values[i], space.values[k]};
                if (!snowflake_member(p, depth).member) {
                    part.add_violation(pair_label(x, y) + " point " + p.to_string() + " not in G_" +
                                       std::to_string(depth));
                }
            }
        }
        part.counts["z_empty_points"] = points;
        return part;
    });
}

namespace {

template <int Base, class DigitTest, class GeoTest>
VerificationReport oracle_block(const Space<Base>& space, std::size_t begin, std::size_t end, const char* tag,
                                DigitTest digit_test, GeoTest geo_test) {
    VerificationReport part;
    std::uint64_t members = 0;
    for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t k = 0; k < space.vecs.size(); ++k) {
            const auto& x = space.vecs[i];
            const auto& y = space.vecs[k];
            const Point p{space.values[i], space.values[k]};
            const bool by_digits = digit_test(x, y);
            const bool by_geometry = geo_test(p);
            ++part.checked;
            members += by_geometry ? 1 : 0;
            if (by_digits != by_geometry) {
                part.add_violation(std::string(tag) + " " + pair_label(x, y) + " point " + p.to_string() +
                                   " digits=" + (by_digits ? "in" : "out") + " geometry=" + (by_geometry ? "in" : "out"));
            }
        }
    }
    part.counts[std::string(tag) + "_members"] = members;
    part.counts[std::string(tag) + "_pairs"] = part.checked;
    return part;
}

}  // namespace

VerificationReport verify_lemma_oracles(int len2, int len3, int jobs) {
    require_len("sierpinski oracle length", len2, kMaxLemmaLen2);
    require_len("snowflake oracle length", len3, kMaxLemmaLen3);
    const auto start = Clock::now();

    const Space<2> space2(len2);
    VerificationReport tri = run_blocks(VerificationReport{}, space2.vecs.size(), jobs,
                                        [&](std::size_t begin, std::size_t end) {
                                            return oracle_block(
                                                space2, begin, end, "sierpinski",
                                                [](const DigitVec2& x, const DigitVec2& y) {
                                                    return digit_member_sierpinski(x, y, true);
                                                },
                                                [&](const Point& p) { return sierpinski_member(p, len2).member; });
                                        });

    const Space<3> space3(len3);
    VerificationReport hex = run_blocks(VerificationReport{}, space3.vecs.size(), jobs,
                                        [&](std::size_t begin, std::size_t end) {
                                            return oracle_block(
                                                space3, begin, end, "snowflake",
                                                [](const DigitVec3& x, const DigitVec3& y) {
                                                    return digit_member_snowflake(x, y, true);
                                                },
                                                [&](const Point& p) { return snowflake_member(p, len3).member; });
                                        });

    VerificationReport out{"digit-geometry-oracles", space_text(2, len2) + " (depth " + std::to_string(len2) +
                                                         "); " + space_text(3, len3) + " (depth " +
                                                         std::to_string(len3) + ")"};
    out.absorb(tri);
    out.absorb(hex);
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
}

}  // namespace efrac
