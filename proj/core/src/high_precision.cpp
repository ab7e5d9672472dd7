#include "ineqcert/high_precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace ineqcert {

HighReal hp_pi() { return boost::math::constants::pi<HighReal>(); }
HighReal hp_e() { return boost::math::constants::e<HighReal>(); }

std::string to_string(const HighReal& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace ineqcert
