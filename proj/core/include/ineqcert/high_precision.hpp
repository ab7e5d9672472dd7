#pragma once

#include <boost/multiprecision/float128.hpp>

#include <string>

namespace ineqcert {

/// Quad-precision real (113-bit significand) for point evaluation, scans and
/// root refinement. Never used to justify a certificate.
using HighReal = boost::multiprecision::float128;

HighReal hp_pi();
HighReal hp_e();
std::string to_string(const HighReal& x, int digits = 20);
inline double to_double(const HighReal& x) { return x.convert_to<double>(); }

}  // namespace ineqcert
