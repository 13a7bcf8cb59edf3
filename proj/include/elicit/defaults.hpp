#pragma once

#include <cstddef>

namespace elicit::defaults {

// Experiment parameters used throughout the library and CLI.
inline constexpr double kWindowHalfWidth = 0.02;           // 2 percentage points
inline constexpr double kBonus = 10.0;                     // HKD
inline constexpr double kInterventionShare = 0.17;         // x-hat
inline constexpr double kInterventionSampleSize = 1234.0;  // n
inline constexpr std::size_t kDrawCount = 100000;          // Monte Carlo R
inline constexpr double kParticipationCost = 0.165;
inline constexpr double kSignalHalfWidth = 0.10;  // +/- 10 percentage points

}  // namespace elicit::defaults
