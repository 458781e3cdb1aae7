#include "thresh/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace thresh {

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
  const double eps = 1.0e-14;
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  const int maxit = 100;

  QuadratureRule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);

  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * r.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * r.nodes[1];
    } else {
      z = 2.0 * z - r.nodes[i - 2];
    }
    double pp = 0.0;
    int its = 0;
    for (; its < maxit; ++its) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= eps) break;
    }
    if (its >= maxit) throw std::runtime_error("gauss_hermite: Newton iteration failed");
    // Store descending on the left half; mirror for the right.
    r.nodes[i] = z;
    r.nodes[n - 1 - i] = -z;
    r.weights[i] = 2.0 / (pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  const double eps = 1.0e-15;
  QuadratureRule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);

  const int m = (n + 1) / 2;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= eps) break;
    }
    r.nodes[i] = xm - xl * z;
    r.nodes[n - 1 - i] = xm + xl * z;
    r.weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

const UnitQuantileRule& unit_quantile_rule() {
  static const UnitQuantileRule cached = [] {
    constexpr int per_panel = 63;
    // Decade boundaries 1e-15 .. 1e-1, then 0.3 and 0.5; mirrored about 1/2.
    std::vector<double> left;
    for (int e = -15; e <= -1; ++e) left.push_back(std::pow(10.0, e));
    left.push_back(0.3);
    left.push_back(0.5);

    UnitQuantileRule out;
    out.tail_check_nodes = per_panel;
    auto append_panel = [&](double a, double b) {
      const QuadratureRule p = gauss_legendre(per_panel, a, b);
      out.rule.nodes.insert(out.rule.nodes.end(), p.nodes.begin(), p.nodes.end());
      out.rule.weights.insert(out.rule.weights.end(), p.weights.begin(), p.weights.end());
    };
    for (std::size_t k = 0; k + 1 < left.size(); ++k) append_panel(left[k], left[k + 1]);
    for (std::size_t k = left.size() - 1; k >= 1; --k) append_panel(1.0 - left[k], 1.0 - left[k - 1]);
    return out;
  }();
  return cached;
}

}  // namespace thresh
