#pragma once

#include <string>

namespace savi {

// Shortest-to-read exact representation: 17 significant digits, '.' decimal
// separator regardless of locale.
[[nodiscard]] std::string format_real(double value);

}  // namespace savi
