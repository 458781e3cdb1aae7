#include "thresh/difficulty.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "thresh/mathutil.hpp"

namespace thresh {

namespace {

void check_support(const DifficultySpec& spec, double y, const char* op) {
  if (!std::isfinite(y)) throw std::domain_error(std::string(op) + ": response must be finite");
  switch (spec.kind) {
    case DifficultyKind::Linear:
      return;
    case DifficultyKind::Log:
      if (y <= 0.0) {
        throw std::domain_error(std::string(op) + ": response " + format_double(y) +
                                " violates the lower bound 0 of the log transform");
      }
      return;
    case DifficultyKind::Logit: {
      const double a = spec.support_lower();
      const double b = spec.support_upper();
      if (y <= a) {
        throw std::domain_error(std::string(op) + ": response " + format_double(y) +
                                " violates the lower bound " + format_double(a) +
                                " of the logit transform");
      }
      if (y >= b) {
        throw std::domain_error(std::string(op) + ": response " + format_double(y) +
                                " violates the upper bound " + format_double(b) +
                                " of the logit transform");
      }
      return;
    }
  }
}

}  // namespace

DifficultyKind difficulty_kind_from_string(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "linear") return DifficultyKind::Linear;
  if (s == "log") return DifficultyKind::Log;
  if (s == "logit") return DifficultyKind::Logit;
  throw std::invalid_argument("unknown difficulty kind '" + std::string(name) +
                              "' (expected linear, log or logit)");
}

std::string to_string(DifficultyKind k) {
  switch (k) {
    case DifficultyKind::Linear: return "linear";
    case DifficultyKind::Log: return "log";
    case DifficultyKind::Logit: return "logit";
  }
  throw std::logic_error("unreachable difficulty kind");
}

DifficultySpec DifficultySpec::logit(double lo, double hi, double c) {
  if (!(lo < hi)) throw std::invalid_argument("logit difficulty requires lo < hi");
  if (!(c >= 0.0)) throw std::invalid_argument("logit difficulty requires margin c >= 0");
  return {DifficultyKind::Logit, lo, hi, c};
}

double DifficultySpec::support_lower() const {
  switch (kind) {
    case DifficultyKind::Linear: return -std::numeric_limits<double>::infinity();
    case DifficultyKind::Log: return 0.0;
    case DifficultyKind::Logit: return lo - c;
  }
  throw std::logic_error("unreachable difficulty kind");
}

double DifficultySpec::support_upper() const {
  switch (kind) {
    case DifficultyKind::Linear:
    case DifficultyKind::Log: return std::numeric_limits<double>::infinity();
    case DifficultyKind::Logit: return hi + c;
  }
  throw std::logic_error("unreachable difficulty kind");
}

bool DifficultySpec::contains(double y) const {
  return std::isfinite(y) && y > support_lower() && y < support_upper();
}

double g_eval(const DifficultySpec& spec, double y) {
  check_support(spec, y, "g_eval");
  switch (spec.kind) {
    case DifficultyKind::Linear: return y;
    case DifficultyKind::Log: return std::log(y);
    case DifficultyKind::Logit:
      return std::log((y - spec.support_lower()) / (spec.support_upper() - y));
  }
  throw std::logic_error("unreachable difficulty kind");
}

double g_inverse(const DifficultySpec& spec, double x) {
  if (!std::isfinite(x)) throw std::domain_error("g_inverse: argument must be finite");
  switch (spec.kind) {
    case DifficultyKind::Linear: return x;
    case DifficultyKind::Log: return std::exp(x);
    case DifficultyKind::Logit: {
      const double a = spec.support_lower();
      const double b = spec.support_upper();
      // a + (b-a)*sigmoid(x), anchored at whichever bound is closer so the
      // far tail is a small correction instead of a cancellation.
      if (x >= 0.0) {
        const double e = std::exp(-x);
        return b - (b - a) * e / (1.0 + e);
      }
      const double e = std::exp(x);
      return a + (b - a) * e / (1.0 + e);
    }
  }
  throw std::logic_error("unreachable difficulty kind");
}

double g_derivative(const DifficultySpec& spec, double y) {
  check_support(spec, y, "g_derivative");
  switch (spec.kind) {
    case DifficultyKind::Linear: return 1.0;
    case DifficultyKind::Log: return 1.0 / y;
    case DifficultyKind::Logit: {
      const double a = spec.support_lower();
      const double b = spec.support_upper();
      return (b - a) / ((y - a) * (b - y));
    }
  }
  throw std::logic_error("unreachable difficulty kind");
}

double g_log_derivative(const DifficultySpec& spec, double y) {
  check_support(spec, y, "g_log_derivative");
  switch (spec.kind) {
    case DifficultyKind::Linear: return 0.0;
    case DifficultyKind::Log: return -std::log(y);
    case DifficultyKind::Logit: {
      const double a = spec.support_lower();
      const double b = spec.support_upper();
      return std::log(b - a) - std::log(y - a) - std::log(b - y);
    }
  }
  throw std::logic_error("unreachable difficulty kind");
}

ItemParams::ItemParams(double alpha, double delta0, double delta, std::vector<double> gamma)
    : alpha(alpha), delta0(delta0), delta(delta), gamma(std::move(gamma)) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("ItemParams: discrimination alpha must be strictly positive");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("ItemParams: slope delta must be strictly positive");
  }
  if (!std::isfinite(delta0)) throw std::invalid_argument("ItemParams: delta0 must be finite");
}

double delta_eval(const ItemParams& item, const DifficultySpec& spec, double y) {
  return item.delta0 + item.delta * g_eval(spec, y);
}

double delta_inverse(const ItemParams& item, const DifficultySpec& spec, double x) {
  return g_inverse(spec, (x - item.delta0) / item.delta);
}

}  // namespace thresh
