#pragma once

#include <cstddef>
#include <vector>

namespace thresh {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Hermite rule for integrals of the form  ∫ e^{-x^2} h(x) dx.
/// Newton iteration on the Hermite recurrence; n up to a few hundred.
QuadratureRule gauss_hermite(int n);

/// Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Composite rule on (eps, 1-eps), eps = 1e-15, for integrals of quantile
/// functions  ∫_0^1 h(Q(q)) dq. Panels refine geometrically toward both
/// endpoints (decade splits, 63-point Gauss-Legendre per panel, 2016 nodes
/// total) so the endpoint singularities of Q cost no accuracy. Nodes are
/// ordered ascending; the first and last `tail_check_nodes` entries form the
/// outermost panel pair, used by callers to detect non-convergent integrands.
struct UnitQuantileRule {
  QuadratureRule rule;
  std::size_t tail_check_nodes;  // per side
};

const UnitQuantileRule& unit_quantile_rule();

}  // namespace thresh
