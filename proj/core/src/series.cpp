#include "ineqcert/series.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ineqcert/errors.hpp"

namespace ineqcert {

namespace {

// Akiyama-Tanigawa table, extended on demand. Produces B_m with B_1 = +1/2;
// only even indices are exposed.
class BernoulliCache {
 public:
  Rational get(int m) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= m) extend();
    return values_[static_cast<std::size_t>(m)];
  }

 private:
  void extend() {
    const long m = static_cast<long>(values_.size());
    row_.emplace_back(1, m + 1);
    for (long j = m; j >= 1; --j) {
      auto idx = static_cast<std::size_t>(j);
      row_[idx - 1] = Rational(j) * (row_[idx - 1] - row_[idx]);
    }
    values_.push_back(row_[0]);
  }

  std::mutex mutex_;
  std::vector<Rational> row_;
  std::vector<Rational> values_;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

Interval enclose(const Rational& q) { return Interval(q.lower_double(), q.upper_double()); }

Interval enclose(const mpz_class& z) { return enclose(Rational(z, mpz_class(1))); }

// 2^{2n} |B_{2n}| / (2n)!
Rational base_coefficient(int n, int max_index) {
  const auto un = static_cast<unsigned>(n);
  const Rational b = bernoulli_even(n, max_index).abs();
  return Rational(mpz_class(1) << (2 * un), factorial(2 * un)) * b;
}

}  // namespace

Rational bernoulli_even(int n, int max_index) {
  if (n < 1 || n > max_index) {
    throw DomainError("bernoulli_even: index " + std::to_string(n) + " outside [1, " + std::to_string(max_index) +
                      "]");
  }
  return cache().get(2 * n);
}

std::string TailRule::describe() const {
  std::ostringstream os;
  if (kind == Kind::kGeometric) {
    os << "geometric: |c_n| <= " << K << " * (" << linear_a << "n + " << linear_b << ") / pi^(2n)";
  } else {
    os << "factorial: |c_n| <= " << K << " / (2n)!";
  }
  return os.str();
}

const std::vector<std::string>& public_series_names() {
  static const std::vector<std::string> names = {"xcot", "cot_aux", "xcoth_aux", "inv_sin2", "inv_sinh2", "xcsc"};
  return names;
}

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {"xcot",      "cot_aux",   "xcoth_aux", "inv_sin2",  "inv_sinh2",
                                                 "xcsc",      "sinhc",     "dsinc_aux", "dsinhc_aux", "d2sinc_aux", "d2sinhc_aux"};
  return names;
}

EvenSeries series(std::string_view name, int N) {
  if (N < 1) throw DomainError("series: term count must be >= 1");
  EvenSeries s;
  s.name = std::string(name);
  s.coeffs.reserve(static_cast<std::size_t>(N));
  const int bmax = std::max(N, kDefaultBernoulliMaxIndex);
  // |c_n| <= 2 zeta(2) / pi^{2n} = (pi^2/3) / pi^{2n} for every Bernoulli-based series; 10/3 > pi^2/3.
  const TailRule bernoulli_rule{TailRule::Kind::kGeometric, Rational(10, 3), 0, 1};
  const TailRule bernoulli_linear_rule{TailRule::Kind::kGeometric, Rational(10, 3), 2, -1};
  const TailRule factorial_rule{TailRule::Kind::kFactorial, Rational(1), 0, 1};

  auto sign = [](int n) { return (n % 2 == 0) ? 1L : -1L; };  // (-1)^n

  if (name == "xcot" || name == "cot_aux") {
    s.constant_term = 1;
    for (int n = 1; n <= N; ++n) s.coeffs.push_back(-base_coefficient(n, bmax));
    s.radius = constants::kPiLo;
    s.tail = bernoulli_rule;
  } else if (name == "xcoth_aux") {
    s.constant_term = 1;
    for (int n = 1; n <= N; ++n) s.coeffs.push_back(Rational(-sign(n)) * base_coefficient(n, bmax));
    s.radius = constants::kPiLo;
    s.tail = bernoulli_rule;
  } else if (name == "inv_sin2") {
    s.constant_term = 1;
    for (int n = 1; n <= N; ++n) s.coeffs.push_back(Rational(2L * n - 1) * base_coefficient(n, bmax));
    s.radius = constants::kPiLo;
    s.tail = bernoulli_linear_rule;
  } else if (name == "inv_sinh2") {
    s.constant_term = 1;
    for (int n = 1; n <= N; ++n) s.coeffs.push_back(Rational(sign(n) * (2L * n - 1)) * base_coefficient(n, bmax));
    s.radius = constants::kPiLo;
    s.tail = bernoulli_linear_rule;
  } else if (name == "xcsc") {
    s.constant_term = 1;
    for (int n = 1; n <= N; ++n) {
      const auto un = static_cast<unsigned>(n);
      const mpz_class weight = (mpz_class(1) << (2 * un)) - 2;
      s.coeffs.push_back(Rational(weight, factorial(2 * un)) * bernoulli_even(n, bmax).abs());
    }
    s.radius = constants::kPiLo;
    s.tail = bernoulli_rule;
  } else if (name == "sinhc") {
    s.constant_term = 1;
    for (int n = 1; n <= N; ++n) s.coeffs.emplace_back(mpz_class(1), factorial(2u * static_cast<unsigned>(n) + 1));
    s.radius = HUGE_VAL;
    s.tail = factorial_rule;
  } else if (name == "dsinc_aux" || name == "dsinhc_aux") {
    // (d/dx)(sin x / x) = x * sum_{n>=0} (-1)^{n+1} 2(n+1)/(2n+3)! x^{2n}; hyperbolic: all signs +.
    const bool circular = (name == "dsinc_aux");
    auto coeff = [&](int n) {
      const Rational mag(mpz_class(2L * (n + 1)), factorial(2u * static_cast<unsigned>(n) + 3));
      return circular ? Rational(-sign(n)) * mag : mag;
    };
    s.constant_term = coeff(0);
    for (int n = 1; n <= N; ++n) s.coeffs.push_back(coeff(n));
    s.radius = HUGE_VAL;
    s.tail = factorial_rule;
  } else if (name == "d2sinc_aux" || name == "d2sinhc_aux") {
    // (d/dx)^2 (sin x / x) = sum_{n>=0} (-1)^{n+1} (2n+2)(2n+1)/(2n+3)! x^{2n}; hyperbolic: all signs +.
    const bool circular = (name == "d2sinc_aux");
    auto coeff = [&](int n) {
      const Rational mag(mpz_class((2L * n + 2) * (2L * n + 1)), factorial(2u * static_cast<unsigned>(n) + 3));
      return circular ? Rational(-sign(n)) * mag : mag;
    };
    s.constant_term = coeff(0);
    for (int n = 1; n <= N; ++n) s.coeffs.push_back(coeff(n));
    s.radius = HUGE_VAL;
    s.tail = factorial_rule;
  } else {
    throw DomainError("unknown series '" + std::string(name) + "'");
  }

  s.coeff_enclosures.reserve(s.coeffs.size());
  for (const auto& c : s.coeffs) s.coeff_enclosures.push_back(enclose(c));
  s.constant_enclosure = enclose(s.constant_term);
  s.tail_K_enclosure = enclose(s.tail.K);
  if (s.tail.kind == TailRule::Kind::kFactorial) {
    for (unsigned m = 0; m <= static_cast<unsigned>(N) + 1; ++m) s.even_factorials.push_back(enclose(factorial(2 * m)));
  }
  return s;
}

double tail_bound(const EvenSeries& s, int N, double r) {
  if (!(r >= 0) || !(r < s.radius)) {
    throw DomainError("tail_bound: r = " + std::to_string(r) + " not inside radius of " + s.name);
  }
  if (N < 0) throw DomainError("tail_bound: negative term count");
  if (r == 0) return 0.0;
  const Interval K = s.tail_K_enclosure;
  const Interval rr(r);
  const auto m = static_cast<unsigned>(N + 1);

  if (s.tail.kind == TailRule::Kind::kGeometric) {
    const Interval q = sqr(rr / constants::kPi);
    const Interval one_minus_q = Interval(1.0) - q;
    if (!one_minus_q.certainly_positive()) throw DomainError("tail_bound: r too close to the radius");
    const Interval qm = pow_int(q, static_cast<int>(m));
    const Interval s0 = qm / one_minus_q;
    const Interval s1 = qm * (Interval(static_cast<double>(m)) - Interval(static_cast<double>(m - 1)) * q) /
                        sqr(one_minus_q);
    const Interval t = K * (Interval(static_cast<double>(s.tail.linear_a)) * s1 +
                            Interval(static_cast<double>(s.tail.linear_b)) * s0);
    return std::fmax(t.hi(), 0.0);
  }
  // sum_{n>N} r^{2n}/(2n)! <= r^{2N+2}/(2N+2)! * cosh(r)
  const Interval fact = m < s.even_factorials.size() ? s.even_factorials[m] : enclose(factorial(2 * m));
  const Interval t = K * pow_int(rr, static_cast<int>(2 * m)) / fact * cosh(rr);
  return std::fmax(t.hi(), 0.0);
}

Interval eval_series(const EvenSeries& s, const Interval& x, std::optional<int> N) {
  const int n_terms = N.value_or(s.terms());
  if (n_terms < 0 || n_terms > s.terms()) throw DomainError("eval_series: term count out of range");
  const Interval t = sqr(x);
  Interval acc(0.0);
  for (int n = n_terms; n >= 1; --n) acc = acc * t + s.coeff_enclosures[static_cast<std::size_t>(n - 1)];
  acc = s.constant_enclosure + acc * t;
  const double tail = tail_bound(s, n_terms, x.mag());
  if (tail == 0) return acc;
  return acc + Interval(-tail, tail);
}

int suggested_terms(const EvenSeries& s, double r, int max_terms) {
  constexpr double kTarget = 0x1p-64;
  const double K = s.tail.K.to_double();
  if (r == 0) return std::min(1, max_terms);
  if (s.tail.kind == TailRule::Kind::kGeometric) {
    const double q = (r / M_PI) * (r / M_PI);
    if (q >= 1) return max_terms;
    double qm = q;
    for (int n = 1; n <= max_terms; ++n) {
      qm *= q;  // q^(n+1)
      const double lin = std::fabs(s.tail.linear_a) * (n + 1) + std::fabs(s.tail.linear_b) + 1;
      if (K * lin * qm / ((1 - q) * (1 - q)) < kTarget) return n;
    }
    return max_terms;
  }
  double term = r * r / 2;  // r^{2m}/(2m)! at m = 1
  const double c = std::cosh(r);
  for (int n = 1; n <= max_terms; ++n) {
    term *= r * r / ((2.0 * n + 1) * (2.0 * n + 2));  // m = n + 1
    if (K * term * c < kTarget) return n;
  }
  return max_terms;
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::kIncreasing: return "increasing";
    case Monotonicity::kDecreasing: return "decreasing";
    case Monotonicity::kNeither: return "neither";
  }
  return "neither";
}

RatioMonotoneResult ratio_monotone(const std::vector<Rational>& a, const std::vector<Rational>& c, std::size_t N,
                                   bool strict) {
  if (a.size() < N || c.size() < N) throw DomainError("ratio_monotone: coefficient lists shorter than N");
  RatioMonotoneResult result;
  result.ratios.reserve(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (c[i].sign() <= 0) {
      throw HypothesisError("ratio_monotone: c_" + std::to_string(i + 1) + " = " + c[i].str() + " is not positive",
                            i + 1);
    }
    result.ratios.push_back(a[i] / c[i]);
  }
  if (N < 2) {
    result.kind = Monotonicity::kIncreasing;
    return result;
  }
  const auto& d = result.ratios;
  auto fits = [&](std::size_t i, bool increasing) {
    const auto cmp = d[i + 1] <=> d[i];
    if (cmp == 0) return !strict;
    return increasing ? (cmp > 0) : (cmp < 0);
  };
  const bool try_increasing = fits(0, true);
  const bool try_decreasing = fits(0, false);
  if (!try_increasing && !try_decreasing) {
    result.first_violation = 1;
    return result;
  }
  // Non-strict mode with d_2 == d_1 keeps both trends alive until one breaks.
  bool inc = try_increasing;
  bool dec = try_decreasing;
  for (std::size_t i = 1; i + 1 < N; ++i) {
    const bool was_alive = inc || dec;
    if (inc && !fits(i, true)) inc = false;
    if (dec && !fits(i, false)) dec = false;
    if (was_alive && !inc && !dec) {
      result.first_violation = i + 1;
      return result;
    }
  }
  result.kind = inc ? Monotonicity::kIncreasing : Monotonicity::kDecreasing;
  return result;
}

std::vector<Rational> combine(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& s) {
  if (a.size() != b.size()) throw DomainError("combine: length mismatch");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + s * b[i]);
  return out;
}

}  // namespace ineqcert
