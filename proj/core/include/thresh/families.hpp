#pragma once

#include <string>
#include <string_view>

namespace thresh {

/// The fixed response function F. All three are standardized (no location or
/// scale parameters; the model supplies those through alpha and the
/// difficulty function):
///   Normal    F(y) = Phi(y)
///   Gumbel    F(y) = exp(-exp(-y))        (maximum-value distribution)
///   Gompertz  F(y) = 1 - exp(-exp(y))     (minimum-value distribution)
enum class Family { Normal, Gumbel, Gompertz };

/// Parses "normal" / "gumbel" / "gompertz", case-insensitive.
Family family_from_string(std::string_view name);
std::string to_string(Family f);

double family_cdf(Family f, double y);
double family_pdf(Family f, double y);
double family_log_pdf(Family f, double y);

/// d/dy log pdf — the score used by the likelihood gradients.
double family_score(Family f, double y);

/// F^{-1}(q) for q in (0,1).
double family_quantile(Family f, double q);

/// F^{-1}(1-q), computed without forming 1-q so it stays accurate in both
/// tails. The response quantile function evaluates exactly this expression.
double family_cquantile(Family f, double q);

struct FamilyMoments {
  double mean;
  double variance;
};

/// (mu_F, var_F): Normal (0,1); Gumbel (EulerGamma, pi^2/6);
/// Gompertz (-EulerGamma, pi^2/6).
FamilyMoments family_moments(Family f);

}  // namespace thresh
