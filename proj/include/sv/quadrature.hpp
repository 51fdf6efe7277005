#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "sv/geometry.hpp"
#include "sv/parallel.hpp"

namespace sv {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton-refined in long
/// double. Exact for polynomial degree <= 2n-1.
struct GaussLegendre {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

inline GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    long double x = std::cos(std::numbers::pi_v<long double> *
                             (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    gl.nodes[i] = x;
    gl.weights[i] = 2.0L / ((1.0L - x * x) * dp * dp);
  }
  return gl;
}

/// Numerically stable (pairwise) sum.
template <class R>
R tree_sum(std::span<const R> v) {
  if (v.size() <= 8) {
    R acc(0);
    for (const R& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return tree_sum(v.subspan(0, half)) + tree_sum(v.subspan(half));
}

/// Product quadrature rule over the immersed surface: Gauss-Legendre in the
/// polar cosine times a uniform azimuth rule, n x 2n nodes assigned to
/// charts, with weights carrying the induced area element from the pipeline
/// metric (not the closed form, so integration doubles as a metric test).
template <class R>
struct SurfaceQuadrature {
  struct Node {
    ChartPoint point;
    R round_weight;  // weight against the round measure of S^2
    R weight;        // induced-area weight: round_weight * sqrt(det g)/round
    GeometryJet<R> gj;
  };
  int n = 0;
  int exactness = 0;
  std::vector<Node> nodes;

  R area() const {
    std::vector<R> w(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) w[i] = nodes[i].weight;
    return tree_sum(std::span<const R>(w));
  }

  /// Integral of a per-node integrand against the induced area.
  template <class F>
  R integrate(F&& f) const {
    std::vector<R> vals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
      vals[i] = nodes[i].weight * f(nodes[i]);
    });
    return tree_sum(std::span<const R>(vals));
  }

  /// Integral against the round measure (no induced factor).
  template <class F>
  R integrate_round(F&& f) const {
    std::vector<R> vals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
      vals[i] = nodes[i].round_weight * f(nodes[i]);
    });
    return tree_sum(std::span<const R>(vals));
  }
};

template <class R>
SurfaceQuadrature<R> build_surface_quadrature(const ImmersionEval<R>& imm,
                                              int n) {
  if (n < 2) throw std::invalid_argument("quadrature: n must be >= 2");
  SurfaceQuadrature<R> sq;
  sq.n = n;
  sq.exactness = 2 * n - 1;
  const GaussLegendre gl = gauss_legendre(n);
  sq.nodes.resize(static_cast<std::size_t>(n) * 2 * n);
  GeometryEngine<R> engine(imm);
  const long double dphi = std::numbers::pi_v<long double> / n;
  parallel_for(sq.nodes.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / (2 * n);
    const int j = static_cast<int>(idx) % (2 * n);
    const long double t = gl.nodes[i];
    const long double s = std::sqrt(1.0L - t * t);
    const long double phi = dphi * (j + 0.5L);
    const std::array<double, 3> x{static_cast<double>(s * std::cos(phi)),
                                  static_cast<double>(s * std::sin(phi)),
                                  static_cast<double>(t)};
    auto& node = sq.nodes[idx];
    node.point = project(x);
    node.round_weight = static_cast<R>(gl.weights[i] * dphi);
    node.gj = engine.geometry_jet(node.point);
    // Round metric density in stereographic coordinates: 4/(1+r^2)^2.
    const R r2 = R(node.point.u) * R(node.point.u) +
                 R(node.point.v) * R(node.point.v);
    const R round_density = R(4) / ((R(1) + r2) * (R(1) + r2));
    using std::sqrt;
    node.weight = node.round_weight * sqrt(node.gj.frame.det_g) / round_density;
  });
  return sq;
}

/// |integral of K dA - 4 pi| with the intrinsic (Christoffel-derived) K.
template <class R>
R gauss_bonnet_residual(const SurfaceQuadrature<R>& sq) {
  const R total = sq.integrate(
      [](const typename SurfaceQuadrature<R>::Node& n) { return n.gj.K_intrinsic; });
  const R residual = total - R(4) * std::numbers::pi_v<long double>;
  return residual < R(0) ? -residual : residual;
}

struct IntegralPair {
  double lhs;
  double rhs;
};

/// The three Simons-type integral identities:
///   1: int S(3S-4)              = 2 int B1
///   2: int S(3S-4)(3S-5)        = 2 int [B2 - 1/4 S(3S-4)^2 + 1/2 |grad S|^2]
///   3: int S(3S-4)(3S-5)(5S-9)  = 2 int [B3 - 1/8 S(3S-4)(45S^2-144S+116)
///                                        + 1/8(65S-166)|grad S|^2 - 5/8 (lap S)^2]
template <class R>
IntegralPair integral_identity(const SurfaceQuadrature<R>& sq, int which) {
  using Node = typename SurfaceQuadrature<R>::Node;
  auto inv_of = [](const Node& n) { return invariants(n.gj); };
  R lhs(0), rhs(0);
  switch (which) {
    case 1:
      lhs = sq.integrate([&](const Node& n) {
        const R S = n.gj.S;
        return S * (R(3) * S - R(4));
      });
      rhs = sq.integrate([&](const Node& n) { return R(2) * inv_of(n).B1; });
      break;
    case 2:
      lhs = sq.integrate([&](const Node& n) {
        const R S = n.gj.S;
        return S * (R(3) * S - R(4)) * (R(3) * S - R(5));
      });
      rhs = sq.integrate([&](const Node& n) {
        const R S = n.gj.S;
        const R q = S * (R(3) * S - R(4)) * (R(3) * S - R(4)) / R(4);
        return R(2) * (inv_of(n).B2 - q + n.gj.grad2S() / R(2));
      });
      break;
    case 3:
      lhs = sq.integrate([&](const Node& n) {
        const R S = n.gj.S;
        return S * (R(3) * S - R(4)) * (R(3) * S - R(5)) * (R(5) * S - R(9));
      });
      rhs = sq.integrate([&](const Node& n) {
        const R S = n.gj.S;
        const R q = S * (R(3) * S - R(4)) *
                    (R(45) * S * S - R(144) * S + R(116)) / R(8);
        return R(2) * (inv_of(n).B3 - q +
                       (R(65) * S - R(166)) / R(8) * n.gj.grad2S() -
                       R(5) / R(8) * n.gj.lapS * n.gj.lapS);
      });
      break;
    default:
      throw std::invalid_argument("integral_identity: which must be 1, 2 or 3");
  }
  return IntegralPair{static_cast<double>(lhs), static_cast<double>(rhs)};
}

struct BochnerResult {
  double residual;     // | int [2 (lap u)^2 - 2 |Hess u|^2 + (S-2)|grad u|^2] |
  double grad_energy;  // int |grad u|^2
  double div_residual; // | int lap u |, closed-surface divergence check
};

/// Reilly/Bochner identity for a scalar field on a surface whose curvature
/// is K = 1 - S/2: the integrand 2(lap u)^2 - 2|Hess u|^2 - 2K|grad u|^2
/// integrates to zero on a closed surface.
template <class R>
BochnerResult bochner_residual(const ImmersionEval<R>& imm,
                               const SurfaceQuadrature<R>& sq,
                               const AmbientPoly& u) {
  GeometryEngine<R> engine(imm);
  std::vector<R> main(sq.nodes.size()), grad(sq.nodes.size()),
      lap(sq.nodes.size());
  parallel_for(sq.nodes.size(), [&](std::size_t i) {
    const auto& node = sq.nodes[i];
    const ScalarCalc<R> sc = engine.scalar_calculus(u, node.point);
    const R S = node.gj.S;
    main[i] = node.weight * (R(2) * sc.laplacian * sc.laplacian -
                             R(2) * sc.hess_sq + (S - R(2)) * sc.grad_sq);
    grad[i] = node.weight * sc.grad_sq;
    lap[i] = node.weight * sc.laplacian;
  });
  const R res = tree_sum(std::span<const R>(main));
  const R ge = tree_sum(std::span<const R>(grad));
  const R dv = tree_sum(std::span<const R>(lap));
  return BochnerResult{std::abs(static_cast<double>(res)),
                       static_cast<double>(ge),
                       std::abs(static_cast<double>(dv))};
}

/// Gradient estimate: int |grad S|^2 <= int S(3S-4)(S - S_min).
template <class R>
IntegralPair gradient_bound_check(const SurfaceQuadrature<R>& sq) {
  using Node = typename SurfaceQuadrature<R>::Node;
  R smin = sq.nodes.front().gj.S;
  for (const auto& n : sq.nodes) smin = std::min(smin, n.gj.S);
  const R lhs = sq.integrate([](const Node& n) { return n.gj.grad2S(); });
  const R rhs = sq.integrate([&](const Node& n) {
    const R S = n.gj.S;
    return S * (R(3) * S - R(4)) * (S - smin);
  });
  return IntegralPair{static_cast<double>(lhs), static_cast<double>(rhs)};
}

/// CSV serialization of the rule: header then one row per node,
/// "chart,u,v,weight" with full double precision.
template <class R>
std::string rule_to_csv(const SurfaceQuadrature<R>& sq) {
  std::string out = "chart,u,v,weight\n";
  char buf[128];
  for (const auto& n : sq.nodes) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g\n",
                  n.point.chart == Chart::kNorth ? "north" : "south",
                  n.point.u, n.point.v, static_cast<double>(n.weight));
    out += buf;
  }
  return out;
}

}  // namespace sv
