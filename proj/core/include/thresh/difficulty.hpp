#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace thresh {

enum class DifficultyKind { Linear, Log, Logit };

DifficultyKind difficulty_kind_from_string(std::string_view name);
std::string to_string(DifficultyKind k);

/// The shared monotone transform g behind every item's difficulty function
/// delta_i(y) = delta0_i + delta_i * g(y).
///   Linear  g(y) = y                       on R
///   Log     g(y) = log(y)                  on (0, inf)
///   Logit   g(y) = log((y-a)/(b-y))        on (a, b), a = lo-c, b = hi+c
/// The margin c widens the nominal response interval so values observed at
/// the exact bounds stay inside the open support.
struct DifficultySpec {
  DifficultyKind kind = DifficultyKind::Linear;
  double lo = 0.0;   // logit only: nominal lower response bound
  double hi = 1.0;   // logit only: nominal upper response bound
  double c = 0.10;   // logit only: boundary margin, >= 0

  static DifficultySpec linear() { return {DifficultyKind::Linear, 0, 0, 0}; }
  static DifficultySpec log() { return {DifficultyKind::Log, 0, 0, 0}; }
  static DifficultySpec logit(double lo, double hi, double c = 0.10);

  /// Open support interval; -inf/+inf for unbounded sides.
  double support_lower() const;
  double support_upper() const;
  bool contains(double y) const;
};

double g_eval(const DifficultySpec& spec, double y);
double g_inverse(const DifficultySpec& spec, double x);
double g_derivative(const DifficultySpec& spec, double y);
double g_log_derivative(const DifficultySpec& spec, double y);

/// Per-item parameters: discrimination alpha > 0, intercept delta0, slope
/// delta > 0, covariate effects gamma (length = the model's covariate
/// dimension). Positivity is enforced here; estimation works on log(alpha),
/// log(delta) so the constraint can never be violated mid-fit.
struct ItemParams {
  double alpha = 1.0;
  double delta0 = 0.0;
  double delta = 1.0;
  std::vector<double> gamma;

  ItemParams() = default;
  ItemParams(double alpha, double delta0, double delta, std::vector<double> gamma = {});
};

double delta_eval(const ItemParams& item, const DifficultySpec& spec, double y);
double delta_inverse(const ItemParams& item, const DifficultySpec& spec, double x);

}  // namespace thresh
