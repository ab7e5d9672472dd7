#pragma once

#include <optional>
#include <string_view>

#include "ineqcert/high_precision.hpp"
#include "ineqcert/interval.hpp"

namespace ineqcert {

/// Pole-free analytic functions; all extended to x = 0 by their limit.
///   sinc(x) = sin x / x           sinhc(x) = sinh x / x
///   xcot(x) = x cot x             xcoth(x) = x coth x
///   inv_sinc2(x) = x^2 / sin^2 x  inv_sinhc2(x) = x^2 / sinh^2 x
///   dsinc = sinc'                 dsinhc = sinhc'
///   d2sinc = sinc''               d2sinhc = sinhc''
enum class Primitive { kSinc, kXcot, kSinhc, kXcoth, kInvSinc2, kInvSinhc2, kDsinc, kDsinhc, kD2sinc, kD2sinhc };

std::string_view name(Primitive p);
std::optional<Primitive> primitive_from_name(std::string_view s);

struct PrimitiveOptions {
  /// |x| at or below this uses the series branch.
  double crossover = 0.7;
  int terms = 30;
};

const PrimitiveOptions& default_primitive_options();

/// Rigorous enclosure of fn over a. xcot and inv_sinc2 require a inside (-pi, pi);
/// everything else accepts any finite interval.
Interval primitive(Primitive fn, const Interval& a);
Interval primitive(Primitive fn, const Interval& a, const PrimitiveOptions& opts);

/// Series partial sum with tail bound; a must lie inside the series radius.
Interval primitive_series_branch(Primitive fn, const Interval& a, const PrimitiveOptions& opts);
/// Closed-form quotient; a must not contain 0.
Interval primitive_quotient_branch(Primitive fn, const Interval& a);

/// Quad-precision point value.
HighReal primitive_point(Primitive fn, const HighReal& x);

}  // namespace ineqcert
