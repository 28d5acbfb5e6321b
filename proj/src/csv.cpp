#include "csv.hpp"

#include <charconv>

namespace dcpso {

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, ptr);
}

}  // namespace dcpso
