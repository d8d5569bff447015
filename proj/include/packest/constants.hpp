#pragma once

namespace packest {

// Faraday constant [C/mol]
inline constexpr double kFaraday = 96487.0;
// Universal gas constant [J/(mol K)]
inline constexpr double kGasConstant = 8.31;

}  // namespace packest
