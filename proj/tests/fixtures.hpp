#pragma once

// Hand-checked ten-job fixture: 10 jobs, 10 tools, magazine capacity 4.
// The loading plan below was traced by hand, position by position, under
// the identity sequence; the decoder must reproduce it cell for cell.

namespace fixtures {

inline constexpr const char* kTenJobInstance =
    "10 10 4\n"
    "0 1 0 0 0 0 0 0 0 0\n"
    "1 0 0 0 1 1 1 0 0 0\n"
    "0 1 0 0 1 1 0 0 0 0\n"
    "0 0 1 1 0 0 1 0 1 0\n"
    "0 0 0 0 1 1 0 0 0 0\n"
    "1 0 0 0 0 0 0 1 0 0\n"
    "0 0 1 0 1 0 0 0 0 1\n"
    "0 0 0 1 0 0 0 1 0 1\n"
    "0 1 0 0 0 1 1 1 1 0\n"
    "0 0 0 0 0 0 0 0 1 0\n";

// format_plan output for the identity sequence: '1' loaded and required,
// '+' kept beyond the requirement, '0' absent.
inline constexpr const char* kTenJobPlan =
    "0 1 0 0 0 0 0 0 0 0\n"
    "1 + + 0 1 1 1 0 0 0\n"
    "0 1 + + 1 1 0 0 0 0\n"
    "0 0 1 1 0 0 1 + 1 0\n"
    "0 0 0 0 1 1 + 0 0 0\n"
    "1 0 0 0 0 0 0 1 0 0\n"
    "0 0 1 + 1 0 0 0 0 1\n"
    "0 0 0 1 0 0 0 1 + 1\n"
    "0 1 0 0 0 1 1 1 1 +\n"
    "0 0 0 0 0 0 0 0 1 +\n";

// 1 -> 0 transitions summed over the plan's rows.
inline constexpr int kTenJobSwitches = 12;

// Interior zero runs of the plan: sizes 1 (tool 2), 2 (tool 4), 6 (tool 6),
// 4 (tool 7), 3 (tool 8), 3 (tool 9); sum of square roots.
inline constexpr double kTenJobTieBreak = 10.327804920294028;

// True optimum over all 10! sequences, computed by the exhaustive oracle and
// frozen here as a regression pin. One witness: 3 4 10 8 1 7 9 2 6 5.
inline constexpr int kTenJobOptimalSwitches = 7;

// A two-job instance whose three tools all fit the magazine: zero switches
// under either order.
inline constexpr const char* kAllFitInstance =
    "2 3 3\n"
    "1 0\n"
    "1 1\n"
    "0 1\n";

inline constexpr const char* kSingleJobInstance =
    "1 2 1\n"
    "1\n"
    "0\n";

}  // namespace fixtures
