#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thresh/difficulty.hpp"
#include "thresh/families.hpp"

namespace thresh {

enum class ObservationMode { Continuous, Discrete };

/// A fully parameterized threshold model:
///   P(Y_pi > y | theta_p) = F(alpha_i * (theta_p - x_p'gamma_i - delta_i(y)))
/// with one shared response family F and one shared transform kind g across
/// items. Discrete mode treats responses as category codes 1..categories on
/// a logit difficulty whose (lo, hi) match; category k collects the
/// probability mass between the half-integer cut points k-1/2 and k+1/2.
struct ModelSpec {
  Family family = Family::Normal;
  DifficultySpec difficulty;
  std::vector<ItemParams> items;
  int covariate_dim = 0;
  ObservationMode mode = ObservationMode::Continuous;
  int categories = 0;  // discrete mode only

  int item_count() const { return static_cast<int>(items.size()); }

  /// Throws std::invalid_argument when any structural invariant is broken.
  void validate() const;
};

struct PersonContext {
  double theta = 0.0;
  std::vector<double> covariates;

  PersonContext() = default;
  explicit PersonContext(double theta, std::vector<double> covariates = {})
      : theta(theta), covariates(std::move(covariates)) {}
};

/// theta_p - x_p' gamma_i, the margin the covariate model shifts.
double effective_theta(const ModelSpec& spec, int item, const PersonContext& person);

double survival(const ModelSpec& spec, int item, const PersonContext& person, double y);
double response_cdf(const ModelSpec& spec, int item, const PersonContext& person, double y);
double response_pdf(const ModelSpec& spec, int item, const PersonContext& person, double y);
double response_log_pdf(const ModelSpec& spec, int item, const PersonContext& person, double y);
double response_quantile(const ModelSpec& spec, int item, const PersonContext& person, double q);

/// k-th central moment of Y_pi (k = 1 returns the mean), evaluated by
/// quadrature of the quantile function over (eps, 1-eps). Throws
/// numeric_error when the moment integral does not converge, e.g. a
/// Gompertz-family model with log difficulty and k >= alpha*delta.
double central_moment(const ModelSpec& spec, int item, const PersonContext& person, int k);

/// P(Y = 1..m) for one person/item in discrete mode. Entries are
/// nonnegative and sum to one by construction (telescoping survival).
std::vector<double> discrete_pmf(const ModelSpec& spec, int item, const PersonContext& person);

/// Sum of delta_i(y_i) over the row; NaN entries mark missing responses and
/// are skipped. In discrete mode category codes are transformed directly.
double transformed_total_score(const ModelSpec& spec, std::span<const double> responses);

/// Inverse-transform simulation: one uniform per (person, item) cell in
/// person-major order, response = Q(U). Discrete mode inverts the pmf's
/// cumulative sums with the same uniforms. Returns a P x item_count
/// row-major matrix; deterministic for a fixed seed.
std::vector<double> simulate(const ModelSpec& spec, std::span<const PersonContext> persons,
                             std::uint64_t seed);

/// Draws P persons with theta ~ N(0, sigma_theta^2) and, when the spec has
/// covariates, covariate vectors with independent N(0,1) entries.
std::vector<PersonContext> sample_persons(const ModelSpec& spec, std::size_t n,
                                          double sigma_theta, std::uint64_t seed);

/// Monte Carlo check of the classical-test-theory decomposition implied by
/// the model: Y_i = T_i(theta) + eps_i with E(eps)=0, Cov(eps_i,eps_j)=0,
/// Cov(eps_i,T_j)=0. True scores come from central_moment(k=1). Also fits
/// T_j on T_1 linearly to judge whether the measurements are congeneric,
/// and reports the exact affine coefficients for linear difficulty.
struct CttReport {
  std::size_t sample_size = 0;

  std::vector<double> mean_error;     // E(eps_i) estimates, length I
  std::vector<double> mean_error_se;  // their MC standard errors

  // I x I row-major matrices; diagonal of error_cov holds error variances.
  std::vector<double> error_cov, error_cov_se;                // Cov(eps_i, eps_j)
  std::vector<double> error_truescore_cov, error_truescore_cov_se;  // Cov(eps_i, T_j)

  struct AffineFit {
    double slope = 1.0;
    double intercept = 0.0;
    double r_squared = 1.0;
  };
  std::vector<AffineFit> truescore_fit;  // T_j regressed on T_1 over the sample
  bool congeneric = true;                // all fits linear up to tolerance

  // Linear difficulty only: the exact relation T_i = a_i T_1 + b_i.
  std::vector<double> exact_slope, exact_intercept;
};

CttReport ctt_diagnostics(const ModelSpec& spec, std::span<const double> theta_sample,
                          std::uint64_t seed);

}  // namespace thresh
