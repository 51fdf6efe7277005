#include "sv/immersion.hpp"

#include <numbers>
#include <stdexcept>

namespace sv {

std::array<double, 3> embed_chart(const ChartPoint& p) {
  const double r2 = p.u * p.u + p.v * p.v;
  const double w = 1.0 + r2;
  const double z = (r2 - 1.0) / w;
  return {2.0 * p.u / w, 2.0 * p.v / w,
          p.chart == Chart::kNorth ? z : -z};
}

ChartPoint project_to_chart(const std::array<double, 3>& x, Chart chart) {
  const double denom = chart == Chart::kNorth ? 1.0 - x[2] : 1.0 + x[2];
  if (denom <= 0.0)
    throw std::domain_error("project_to_chart: point at the projection pole");
  return ChartPoint{chart, x[0] / denom, x[1] / denom};
}

Chart preferred_chart(const std::array<double, 3>& x) {
  return x[2] > 0.0 ? Chart::kSouth : Chart::kNorth;
}

ChartPoint project(const std::array<double, 3>& x) {
  return project_to_chart(x, preferred_chart(x));
}

bool chart_point_valid(const ChartPoint& p) {
  return p.u * p.u + p.v * p.v <= 1.0 + kChartRadiusMargin;
}

namespace {

// Re((x+iy)^m) and Im((x+iy)^m) as exact polynomials.
Poly3 sectoral(int m, bool imaginary) {
  Poly3 re = Poly3::monomial(0, 0, 0, Rational(1));
  Poly3 im;
  const Poly3 x = Poly3::variable(0);
  const Poly3 y = Poly3::variable(1);
  for (int k = 0; k < m; ++k) {
    Poly3 nre = re * x - im * y;
    Poly3 nim = re * y + im * x;
    re = nre;
    im = nim;
  }
  return imaginary ? im : re;
}

}  // namespace

HarmonicImmersion build_calabi(int s) {
  if (s < 1)
    throw std::invalid_argument("build_calabi: degree must be positive");
  HarmonicImmersion imm;
  imm.degree = s;
  imm.lambda = std::sqrt(4.0 * std::numbers::pi / (2.0 * s + 1.0));
  const Poly3 z = Poly3::variable(2);
  Poly3 zs = Poly3::monomial(0, 0, 0, Rational(1));
  std::vector<Poly3> zpow(s + 1);
  for (int k = 0; k <= s; ++k) {
    zpow[k] = zs;
    zs = zs * z;
  }
  imm.components.push_back(harmonic_projection(zpow[s]));
  for (int m = 1; m <= s; ++m) {
    imm.components.push_back(harmonic_projection(zpow[s - m] * sectoral(m, false)));
    imm.components.push_back(harmonic_projection(zpow[s - m] * sectoral(m, true)));
  }
  for (const Poly3& c : imm.components) {
    const Poly3 sq = c * c;
    imm.norm_sq.push_back(sq.sphere_average());
  }
  return imm;
}

double HarmonicImmersion::component_value(int alpha,
                                          const std::array<double, 3>& x) const {
  const Poly3& P = components[alpha];
  const double scale =
      1.0 / std::sqrt((2.0 * degree + 1.0) * norm_sq[alpha].to_double());
  double acc = 0.0;
  for (const auto& [key, c] : P.terms()) {
    auto [a, b, d] = key;
    acc += c.to_double() * std::pow(x[0], a) * std::pow(x[1], b) *
           std::pow(x[2], d);
  }
  return acc * scale;
}

}  // namespace sv
