#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "sv/jet.hpp"
#include "sv/poly3.hpp"

namespace sv {

/// Stereographic chart id. The north chart projects from the north pole
/// (0,0,1) and is centered on the south pole; the south chart is the mirror.
enum class Chart { kNorth, kSouth };

/// Point of S^2 given in one of the two stereographic charts. Points are
/// assigned to the chart where u^2+v^2 stays bounded (<= 1 + margin).
struct ChartPoint {
  Chart chart = Chart::kNorth;
  double u = 0.0;
  double v = 0.0;
};

constexpr double kChartRadiusMargin = 0.5;

/// Inverse stereographic projection; the result is a unit vector.
std::array<double, 3> embed_chart(const ChartPoint& p);

/// Stereographic coordinates of a unit vector in the given chart.
ChartPoint project_to_chart(const std::array<double, 3>& x, Chart chart);

/// Chart assignment convention: third coordinate > 0 goes to the south
/// chart, otherwise north (so the tie at 0 goes north).
Chart preferred_chart(const std::array<double, 3>& x);
ChartPoint project(const std::array<double, 3>& x);

bool chart_point_valid(const ChartPoint& p);

/// Degree-s Calabi standard minimal immersion S^2 -> S^{2s}: 2s+1 real
/// homogeneous harmonic polynomials with a fixed deterministic ordering
/// (zonal first, then cos/sin pairs by increasing sectoral order), each
/// scaled to make the image lie on the unit sphere.
struct HarmonicImmersion {
  int degree = 0;
  /// Unnormalized harmonic polynomials, exact rational coefficients.
  std::vector<Poly3> components;
  /// Exact squared L^2(S^2) norm of each component divided by 4*pi.
  std::vector<Rational> norm_sq;
  /// Overall normalization sqrt(4*pi/(2s+1)) applied after unit-norm scaling.
  double lambda = 0.0;

  int ambient_dim() const { return static_cast<int>(components.size()); }
  /// Codimension of the surface inside the target sphere S^{2s}.
  int codimension() const { return ambient_dim() - 3; }

  /// The evaluated component: P_alpha(x) / sqrt((2s+1) * norm_sq_alpha).
  /// Equals lambda * (unit-L2 component), so sum of squares is 1 on S^2.
  double component_value(int alpha, const std::array<double, 3>& x) const;
};

/// Builds the degree-s immersion. Rejects s < 1.
HarmonicImmersion build_calabi(int s);

/// Immersion with coefficients lowered to a concrete scalar type, plus jet
/// evaluation through the chart map. This is where all derivatives of the
/// immersion come from.
template <class R>
class ImmersionEval {
 public:
  explicit ImmersionEval(const HarmonicImmersion& imm) : degree_(imm.degree) {
    comps_.resize(imm.components.size());
    for (std::size_t a = 0; a < imm.components.size(); ++a) {
      const long double scale =
          1.0L / std::sqrt(static_cast<long double>(2 * imm.degree + 1) *
                           imm.norm_sq[a].to_long_double());
      for (const auto& [key, c] : imm.components[a].terms()) {
        auto [ex, ey, ez] = key;
        comps_[a].push_back(Term{
            ex, ey, ez, static_cast<R>(c.to_long_double() * scale)});
      }
    }
  }

  int degree() const { return degree_; }
  int ambient_dim() const { return static_cast<int>(comps_.size()); }
  int codimension() const { return ambient_dim() - 3; }

  /// Jets of the three sphere coordinates under the inverse stereographic
  /// map, expanded at the chart point.
  std::array<Jet<R>, 3> chart_jets(const ChartPoint& p, int order) const {
    const Jet<R> u = Jet<R>::variable(R(p.u), 0, order);
    const Jet<R> v = Jet<R>::variable(R(p.v), 1, order);
    const Jet<R> r2 = u * u + v * v;
    const Jet<R> iw = (r2 + R(1)).reciprocal();
    Jet<R> x = u * iw * R(2);
    Jet<R> y = v * iw * R(2);
    Jet<R> z = (p.chart == Chart::kNorth ? r2 - R(1) : -(r2 - R(1))) * iw;
    return {x, y, z};
  }

  /// Jets of every ambient component of the immersion at the chart point.
  std::vector<Jet<R>> jets(const ChartPoint& p, int order) const {
    if (order > Jet<R>::kMaxOrder)
      throw std::invalid_argument("immersion jets: order above jet ring limit");
    if (!chart_point_valid(p))
      throw std::invalid_argument("immersion jets: chart point out of range");
    auto [x, y, z] = chart_jets(p, order);
    // Shared power tables; every monomial is a product of three entries.
    std::vector<Jet<R>> xp = powers(x), yp = powers(y), zp = powers(z);
    std::vector<Jet<R>> out;
    out.reserve(comps_.size());
    for (const auto& terms : comps_) {
      Jet<R> acc(R(0), order);
      for (const Term& t : terms)
        acc += xp[t.ex] * yp[t.ey] * zp[t.ez] * t.coef;
      out.push_back(acc);
    }
    return out;
  }

 private:
  struct Term {
    int ex, ey, ez;
    R coef;
  };

  std::vector<Jet<R>> powers(const Jet<R>& j) const {
    std::vector<Jet<R>> p(degree_ + 1, Jet<R>(R(1), j.order()));
    for (int k = 1; k <= degree_; ++k) p[k] = p[k - 1] * j;
    return p;
  }

  int degree_;
  std::vector<std::vector<Term>> comps_;
};

}  // namespace sv
