#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace thresh {

inline constexpr double kLogSqrt2Pi = 0.9189385332046727417803297;  // log(sqrt(2*pi))
inline constexpr double kEulerGamma = 0.5772156649015328606065121;
inline constexpr double kPiSqOver6 = 1.6449340668482264364724152;

/// Raised when a computation cannot produce a finite, trustworthy result
/// (divergent integral, non-finite likelihood, singular Hessian, ...).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed or inconsistent input data (CSV parsing, range
/// violations, dimension mismatches).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double normal_cdf(double x);
double normal_pdf(double x);
double normal_log_pdf(double x);

/// Inverse standard normal cdf, accurate to full double precision
/// (Wichura's AS 241 rational approximations). Throws std::domain_error
/// for p outside (0,1).
double normal_quantile(double p);

/// log(sum_i exp(v_i)) with the usual max shift; -inf entries are allowed
/// and contribute nothing. Returns -inf for an all(-inf) or empty input.
double log_sum_exp(std::span<const double> values);

/// Regularized lower incomplete gamma P(a,x).
double lower_incomplete_gamma(double a, double x);

/// Chi-squared cdf with df > 0 degrees of freedom.
double chi_squared_cdf(double x, double df);

/// Shortest decimal string that round-trips the value (shared by the JSON
/// and CSV writers so the same number always prints identically).
std::string format_double(double v);

/// Deterministic random stream: 53-bit uniforms in the open interval (0,1),
/// normals by inverse transform. Reproducible for a fixed seed regardless
/// of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

  double normal() { return normal_quantile(uniform()); }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace thresh
