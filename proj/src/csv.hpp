#pragma once

#include <string>

namespace dcpso {

// Shortest decimal string that round-trips the exact double.
std::string format_real(double value);

}  // namespace dcpso
