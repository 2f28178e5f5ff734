#pragma once

/*
 * Exhaustive checks of the linearity criteria, the fractal theorems and
 * the digit/geometry oracle equivalence over every digit vector pair up to
 * a length bound.
 *
 * Pairs are enumerated lexicographically (outer vector slowest). With
 * jobs > 1 the outer range is cut into contiguous blocks, one per worker,
 * and the partial reports are merged in block order, so counts and the
 * counterexample list are independent of scheduling.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace efrac {

struct VerificationReport {
    std::string property;
    std::string space;
    std::uint64_t checked = 0;
    std::uint64_t violation_count = 0;
    /// First kMaxListedViolations counterexamples, in enumeration order.
    std::vector<std::string> violations;
    /// Named tallies (e.g. "linear_pairs").
    std::map<std::string, std::uint64_t> counts;
    double elapsed_ms = 0;

    static constexpr std::size_t kMaxListedViolations = 50;

    bool pass() const { return violation_count == 0; }

    /// Merges another partial report of the same property.
    void absorb(const VerificationReport& other);
    void add_violation(std::string description);

    /// "key: value" lines.
    std::string to_text() const;
    /// {"property", "space", "checked", "violations", "millis", "pass", "counts"}
    std::string to_json() const;
};

inline constexpr int kMaxSum2Len = 12;
inline constexpr int kMaxSum3Len = 8;
inline constexpr int kMaxTheoremMainLen = 10;
inline constexpr int kMaxTheoremSnowflakeLen = 6;
inline constexpr int kMaxLemmaLen2 = 8;
inline constexpr int kMaxLemmaLen3 = 5;
inline constexpr int kDefaultExtraDepth = 2;

/// Z2: linear <=> z empty, over all 2^N x 2^N pairs. Reports linear_pairs.
VerificationReport verify_prop_sum2(int max_len, int jobs = 1);

/// Z3: z empty => linear, and linear => sigma h(z) = 0, over all 3^N x 3^N
/// pairs. Reports z_empty_pairs, linear_pairs, and the converse probe
/// (z nonempty with sigma h(z) = 0: how many of those are linear, how
/// many are not). The probe is recorded, never asserted.
VerificationReport verify_prop_sum3(int max_len, int jobs = 1);

/// Every linear Z2 pair gives a point of S_{N+d}; every nonlinear pair
/// fails the finite digit condition.
VerificationReport verify_theorem_main(int max_len, int extra_depth = kDefaultExtraDepth, int jobs = 1);

/// Every Z3 pair with empty z is linear and gives a point of G_{N+d}.
VerificationReport verify_theorem_snowflake(int max_len, int extra_depth = kDefaultExtraDepth, int jobs = 1);

/// Digit membership with dual expansions agrees with geometric membership
/// at depth L on every pair of length <= L, for both fractals (len2 for
/// Sierpinski, len3 for the snowflake).
VerificationReport verify_lemma_oracles(int len2, int len3, int jobs = 1);

/// Throws ResourceError when `value` is outside [0, limit].
void require_len(const char* what, int value, int limit);

}  // namespace efrac
