#include "rfwsn/format.hpp"

#include <array>
#include <charconv>

namespace rfwsn {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace rfwsn
