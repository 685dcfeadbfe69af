#include "rfwsn/types.hpp"

#include <cmath>
#include <stdexcept>

namespace rfwsn {

SimTime SimTime::from_seconds(double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("time must be finite");
  return SimTime(std::llround(s * 1e9));
}

}  // namespace rfwsn
