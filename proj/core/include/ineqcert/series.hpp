#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqcert/interval.hpp"
#include "ineqcert/rational.hpp"

namespace ineqcert {

inline constexpr int kDefaultBernoulliMaxIndex = 64;
inline constexpr int kDefaultSeriesTerms = 30;

/// B_{2n} exactly, for 1 <= n <= max_index. Thread-safe, cached.
Rational bernoulli_even(int n, int max_index = kDefaultBernoulliMaxIndex);

/// Coefficient bound used to control the truncation error of a series.
struct TailRule {
  enum class Kind {
    /// |c_n| <= K (a n + b) / pi^(2n); converges for |x| < pi.
    kGeometric,
    /// |c_n| <= K / (2n)!; entire.
    kFactorial,
  };
  Kind kind = Kind::kGeometric;
  Rational K{1};
  int linear_a = 0;
  int linear_b = 1;

  std::string describe() const;
};

/// f(x) = constant_term + sum_{n=1}^{N} coeffs[n-1] x^(2n), analytic and even on |x| < radius.
struct EvenSeries {
  std::string name;
  Rational constant_term;
  std::vector<Rational> coeffs;
  double radius = 0;  // pi (rounded down) or +inf
  TailRule tail;
  std::vector<Interval> coeff_enclosures;  // tight double enclosures of coeffs
  Interval constant_enclosure;
  Interval tail_K_enclosure;
  std::vector<Interval> even_factorials;  // (2m)! for m = 0..N+1, factorial rule only

  int terms() const { return static_cast<int>(coeffs.size()); }
};

/// Names accepted by series(): the six analytic forms plus three auxiliaries
/// used by the primitive evaluators.
const std::vector<std::string>& series_names();
const std::vector<std::string>& public_series_names();

/// Builds the named series with N coefficients. Throws DomainError for an unknown name or N < 1.
EvenSeries series(std::string_view name, int N);

/// Upper bound on |f(x) - partial sum with N terms| for |x| <= r.
/// Throws DomainError unless 0 <= r < radius and N <= terms available in the rule.
double tail_bound(const EvenSeries& s, int N, double r);

/// Enclosure of f over x using N terms (default: all) plus the tail bound.
Interval eval_series(const EvenSeries& s, const Interval& x, std::optional<int> N = std::nullopt);

/// Smallest N <= max_terms whose approximate tail at r is below 2^-64 (max_terms if none is).
/// Only a work estimate: eval_series still adds the rigorous tail for the N it uses.
int suggested_terms(const EvenSeries& s, double r, int max_terms);

enum class Monotonicity { kIncreasing, kDecreasing, kNeither };

std::string_view to_string(Monotonicity m);

struct RatioMonotoneResult {
  Monotonicity kind = Monotonicity::kNeither;
  /// 1-based n at which d_{n+1} first breaks the trend set by d_2 vs d_1.
  std::optional<std::size_t> first_violation;
  std::vector<Rational> ratios;  // d_n = a_n / c_n, n = 1..N
};

/// Classifies a_n/c_n for n = 1..N by exact comparison. Requires c_n > 0
/// (HypothesisError otherwise, carrying the 1-based index).
RatioMonotoneResult ratio_monotone(const std::vector<Rational>& a, const std::vector<Rational>& c, std::size_t N,
                                   bool strict = true);

/// Termwise a + s*b of two coefficient lists (lengths must match).
std::vector<Rational> combine(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& s);

}  // namespace ineqcert
