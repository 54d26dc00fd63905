#pragma once

#include <string_view>

namespace lsm {

inline constexpr std::string_view kVersion = "0.1.0";

/// Convention identifiers recorded in output metadata so every result file
/// declares how it was produced.
inline constexpr std::string_view kLinkCountingId = "type-min-multiplicity";
inline constexpr std::string_view kMedianDifferenceId = "absolute";
inline constexpr std::string_view kThresholdId = "strict-mean";

}  // namespace lsm
