#pragma once

/*
 * The egyptfrac command line.
 *
 *   egyptfrac efrac expand|sum|sub|check|encode ...
 *   egyptfrac fractal member|render|cloud ...
 *   egyptfrac verify --prop sum2|sum3|thm1|thm2|lemmas ...
 *
 * Exit codes: 0 ok / property holds, 1 violation / not a member / not
 * linear, 2 usage, parse or domain error, 3 resource guard.
 */

#include <ostream>

namespace efrac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace efrac::cli
