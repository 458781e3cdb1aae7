#include "thresh/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "thresh/mathutil.hpp"

namespace thresh {

namespace {

void require_finite(double y, const char* op) {
  if (!std::isfinite(y)) {
    throw std::domain_error(std::string(op) + ": argument must be finite");
  }
}

void require_open_unit(double q, const char* op) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error(std::string(op) + ": probability must lie in (0,1), got " +
                            format_double(q));
  }
}

}  // namespace

Family family_from_string(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "normal") return Family::Normal;
  if (s == "gumbel") return Family::Gumbel;
  if (s == "gompertz") return Family::Gompertz;
  throw std::invalid_argument("unknown response family '" + std::string(name) +
                              "' (expected normal, gumbel or gompertz)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Normal: return "normal";
    case Family::Gumbel: return "gumbel";
    case Family::Gompertz: return "gompertz";
  }
  throw std::logic_error("unreachable family");
}

double family_cdf(Family f, double y) {
  require_finite(y, "family_cdf");
  switch (f) {
    case Family::Normal: return normal_cdf(y);
    case Family::Gumbel: return std::exp(-std::exp(-y));
    case Family::Gompertz: return -std::expm1(-std::exp(y));
  }
  throw std::logic_error("unreachable family");
}

double family_pdf(Family f, double y) {
  require_finite(y, "family_pdf");
  switch (f) {
    case Family::Normal: return normal_pdf(y);
    case Family::Gumbel: return std::exp(-y - std::exp(-y));
    case Family::Gompertz: return std::exp(y - std::exp(y));
  }
  throw std::logic_error("unreachable family");
}

double family_log_pdf(Family f, double y) {
  switch (f) {
    case Family::Normal: return normal_log_pdf(y);
    case Family::Gumbel: return -y - std::exp(-y);
    case Family::Gompertz: return y - std::exp(y);
  }
  throw std::logic_error("unreachable family");
}

double family_score(Family f, double y) {
  switch (f) {
    case Family::Normal: return -y;
    case Family::Gumbel: return -1.0 + std::exp(-y);
    case Family::Gompertz: return 1.0 - std::exp(y);
  }
  throw std::logic_error("unreachable family");
}

double family_quantile(Family f, double q) {
  require_open_unit(q, "family_quantile");
  switch (f) {
    case Family::Normal: return normal_quantile(q);
    case Family::Gumbel: return -std::log(-std::log(q));
    case Family::Gompertz: return std::log(-std::log1p(-q));
  }
  throw std::logic_error("unreachable family");
}

double family_cquantile(Family f, double q) {
  require_open_unit(q, "family_cquantile");
  switch (f) {
    case Family::Normal: return -normal_quantile(q);  // symmetry
    case Family::Gumbel: return -std::log(-std::log1p(-q));
    case Family::Gompertz: return std::log(-std::log(q));
  }
  throw std::logic_error("unreachable family");
}

FamilyMoments family_moments(Family f) {
  switch (f) {
    case Family::Normal: return {0.0, 1.0};
    case Family::Gumbel: return {kEulerGamma, kPiSqOver6};
    case Family::Gompertz: return {-kEulerGamma, kPiSqOver6};
  }
  throw std::logic_error("unreachable family");
}

}  // namespace thresh
