#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sv/geometry.hpp"
#include "sv/parallel.hpp"
#include "sv/sampling.hpp"

namespace sv {

/// Catalog of pointwise identities evaluated as residuals on a GeometryJet.
/// Each check reduces to |lhs - rhs| (or a max over index combinations) and
/// is expected to vanish on the standard minimal spheres. Derivative terms
/// (grad S, Hess S, lap S, grad B1, ...) always use pipeline-computed
/// values; CONSTS separately asserts they are numerically zero, so no
/// residual silently assumes constancy.
enum class CheckId : int {
  kMinimal = 0,   // trace h = 0
  kCodazzi,       // total symmetry of the first covariant derivative
  kRic1,          // commutator of 4th-order derivatives vs curvature
  kRic2,          // commutator of 5th-order derivatives vs curvature
  kCurv3,         // derivative of the normal curvature 2-form
  kLap1,          // Laplacian of h via curvature contractions
  kLap2,          // Laplacian of grad h via curvature contractions
  kSimons,        // 1/2 lap S = B1 + 2S - |A|^2 - rho_perp
  kRefined,       // 1/2 lap S = B1 - 1/2 S(3S-4)
  kFunda,         // <a,b> = 0, |a|^2 = |b|^2 = S/4
  kNorma,         // |A|^2 = S^2/2, rho_perp = S^2
  kTwins,         // lap a = 1/2 a (4-3S), same for b
  kDual,          // lap a_1 = 1/2 a_1 (14-9S) + 7/4(-a S_1 + b S_2), twin
  kFird,          // <a_1,a_2> = 0, |a_1|^2 = |a_2|^2 = B1/8
  kDeriv01,       // <a,a_1> = <b,a_2> = S_1/8, <a,a_2> = -<b,a_1> = S_2/8
  kDeriv02,       // second-derivative pairings against Hess S and B1
  kDeriv12,       // <a_i, a_jk> pairings against grad B1
  kSecond,        // |a_11|^2 = |a_21|^2 = B2/16 - (3S-4)(S_11-S_22)/32, twin
  kGauge,         // a_12 - a_21 = 1/2 b (3S-4) componentwise
  kSwap,          // sum h_ijkl h_ijlk = B2 - 1/4 S(3S-4)^2
  kDouble,        // sum (lap h_ij)^2 = 1/4 S(3S-4)^2
  kB2B,           // B2 = 1/4 S(3S-4)^2 + C1
  kB2Const,       // 1/2 lap B1 = 7/2 lap S - 9/8 lap S^2 + 1/2 |grad S|^2
                  //   - 1/4 S(3S-4)(9S-14) + B2
  kB3Decomp,      // B3 = 1/4(45S^2-144S+116) B1 + 13/8(7S-8)|grad S|^2 + C2+C3
  kLapB2Combo,    // constant-S Laplacian-of-B2 combination sums to zero
  kPIneq,         // -S^2 + |A|^2 + rho_perp = S^2/2 (equality case)
  kConsts,        // |grad S|, lap S, |Hess S|, |grad B1| all vanish
};

constexpr int kNumChecks = static_cast<int>(CheckId::kConsts) + 1;

struct CheckInfo {
  CheckId id;
  const char* name;
  const char* statement;
  double base_tol;  // double precision, degrees s <= 3
};

const std::array<CheckInfo, kNumChecks>& check_catalog();
const CheckInfo& check_info(CheckId id);

/// Per-check maxima over a sample set.
struct ResidualReport {
  int degree = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol_scale = 1.0;  // multiplies each catalog base tolerance
  struct Row {
    CheckId id;
    double max_residual;
    double tolerance;
    bool pass;
  };
  std::vector<Row> rows;
  bool pass = true;
};

namespace detail {

template <class R>
R rabs(const R& x) {
  return x < R(0) ? -x : x;
}

}  // namespace detail

/// All catalog residuals at one point.
template <class R>
std::array<R, kNumChecks> pointwise_residuals(const GeometryJet<R>& gj) {
  using detail::rabs;
  std::array<R, kNumChecks> res;
  res.fill(R(0));
  auto put = [&res](CheckId id, const R& v) {
    R& slot = res[static_cast<int>(id)];
    const R a = rabs(v);
    if (a > slot) slot = a;
  };

  const int p = gj.p;
  const InvariantReport<R> inv = invariants(gj);
  const R S = gj.S;
  const R S1 = gj.gradS[0], S2 = gj.gradS[1];

  // Frame curvature tensors from the Gauss and Ricci equations.
  auto Rt = [&](int i, int j, int k, int l) {
    const R d = R((i == k && j == l) ? 1 : 0) - R((i == l && j == k) ? 1 : 0);
    return (R(2) - S) / R(2) * d;
  };
  auto Rn = [&](int al, int be, int k, int l) {
    R acc(0);
    for (int m = 0; m < 2; ++m)
      acc += gj.H2(al, k, m) * gj.H2(be, m, l) -
             gj.H2(be, k, m) * gj.H2(al, m, l);
    return acc;
  };
  // Covariant derivative of the normal curvature, through grad h.
  auto RnD = [&](int al, int be, int k) {
    R acc(0);
    for (int m = 0; m < 2; ++m)
      acc += gj.H3(al, 0, m, k) * gj.H2(be, m, 1) +
             gj.H2(al, 0, m) * gj.H3(be, m, 1, k) -
             gj.H3(be, 0, m, k) * gj.H2(al, m, 1) -
             gj.H2(be, 0, m) * gj.H3(al, m, 1, k);
    return acc;
  };
  // sum_m of grad_m R_{pikm}: the Gauss-equation curvature differentiates
  // into -1/2 (S_i d_pk - S_p d_ik).
  auto RtD = [&](int pi, int i, int k) {
    const R Sg[2] = {S1, S2};
    return (-(Sg[i] * R(pi == k ? 1 : 0)) + Sg[pi] * R(i == k ? 1 : 0)) / R(2);
  };
  // sum_m of grad_m R_{al be k m} using the 2-form structure in (k,m).
  auto RnDsum = [&](int al, int be, int k) {
    return k == 0 ? RnD(al, be, 1) : -RnD(al, be, 0);
  };

  // ---- structural identities on the derivative tensors -------------------

  for (int al = 0; al < p; ++al)
    put(CheckId::kMinimal, gj.H2(al, 0, 0) + gj.H2(al, 1, 1));

  for (int al = 0; al < p; ++al)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          put(CheckId::kCodazzi, gj.H3(al, i, j, k) - gj.H3(al, j, i, k));
          put(CheckId::kCodazzi, gj.H3(al, i, j, k) - gj.H3(al, i, k, j));
        }

  for (int al = 0; al < p; ++al)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            R rhs(0);
            for (int q = 0; q < 2; ++q)
              rhs += gj.H2(al, q, j) * Rt(q, i, k, l) +
                     gj.H2(al, i, q) * Rt(q, j, k, l);
            for (int be = 0; be < p; ++be)
              rhs += gj.H2(be, i, j) * Rn(be, al, k, l);
            put(CheckId::kRic1,
                gj.H4(al, i, j, k, l) - gj.H4(al, i, j, l, k) - rhs);
          }

  for (int al = 0; al < p; ++al)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            for (int m = 0; m < 2; ++m) {
              R rhs(0);
              for (int q = 0; q < 2; ++q)
                rhs += gj.H3(al, q, j, k) * Rt(q, i, l, m) +
                       gj.H3(al, i, q, k) * Rt(q, j, l, m) +
                       gj.H3(al, i, j, q) * Rt(q, k, l, m);
              for (int be = 0; be < p; ++be)
                rhs += gj.H3(be, i, j, k) * Rn(be, al, l, m);
              put(CheckId::kRic2,
                  gj.H5(al, i, j, k, l, m) - gj.H5(al, i, j, k, m, l) - rhs);
            }

  for (int al = 0; al < p; ++al)
    for (int be = 0; be < p; ++be)
      for (int k = 0; k < 2; ++k) {
        const R rhs = R(2) * (gj.b(be) * gj.a_i(k, al) +
                              gj.a(al) * gj.H3(be, 0, 1, k) -
                              gj.b(al) * gj.a_i(k, be) -
                              gj.a(be) * gj.H3(al, 0, 1, k));
        put(CheckId::kCurv3, RnD(al, be, k) - rhs);
      }

  for (int al = 0; al < p; ++al)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        R lhs(0), rhs(0);
        for (int m = 0; m < 2; ++m) {
          lhs += gj.H4(al, i, j, m, m);
          rhs += gj.H4(al, m, m, i, j);
          for (int q = 0; q < 2; ++q)
            rhs += gj.H2(al, q, i) * Rt(q, m, j, m) +
                   gj.H2(al, m, q) * Rt(q, i, j, m);
          for (int de = 0; de < p; ++de)
            rhs += gj.H2(de, m, i) * Rn(de, al, j, m);
        }
        put(CheckId::kLap1, lhs - rhs);
      }

  for (int al = 0; al < p; ++al)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          R lhs(0), rhs(0);
          for (int l = 0; l < 2; ++l) lhs += gj.H5(al, i, j, k, l, l);
          for (int m = 0; m < 2; ++m) {
            rhs += gj.H5(al, i, j, m, m, k);
            for (int q = 0; q < 2; ++q)
              rhs += R(2) * gj.H3(al, q, j, m) * Rt(q, i, k, m) +
                     R(2) * gj.H3(al, i, q, m) * Rt(q, j, k, m) +
                     gj.H3(al, i, j, q) * Rt(q, m, k, m);
            for (int de = 0; de < p; ++de)
              rhs += R(2) * gj.H3(de, i, j, m) * Rn(de, al, k, m);
          }
          for (int q = 0; q < 2; ++q)
            rhs += gj.H2(al, q, j) * RtD(q, i, k) +
                   gj.H2(al, i, q) * RtD(q, j, k);
          for (int de = 0; de < p; ++de)
            rhs += gj.H2(de, i, j) * RnDsum(de, al, k);
          put(CheckId::kLap2, lhs - rhs);
        }

  // ---- scalar identities --------------------------------------------------

  put(CheckId::kSimons,
      gj.lapS / R(2) - (inv.B1 + R(2) * S - inv.normA2 - inv.rhoPerp));
  put(CheckId::kRefined,
      gj.lapS / R(2) - (inv.B1 - S * (R(3) * S - R(4)) / R(2)));

  put(CheckId::kFunda, inv.ab_dot);
  put(CheckId::kFunda, inv.a_sq - S / R(4));
  put(CheckId::kFunda, inv.b_sq - S / R(4));

  put(CheckId::kNorma, inv.normA2 - S * S / R(2));
  put(CheckId::kNorma, inv.rhoPerp - S * S);

  for (int al = 0; al < p; ++al) {
    R lap_a(0), lap_b(0);
    for (int k = 0; k < 2; ++k) {
      lap_a += gj.H4(al, 0, 0, k, k);
      lap_b += gj.H4(al, 0, 1, k, k);
    }
    put(CheckId::kTwins, lap_a - gj.a(al) * (R(4) - R(3) * S) / R(2));
    put(CheckId::kTwins, lap_b - gj.b(al) * (R(4) - R(3) * S) / R(2));
  }

  for (int al = 0; al < p; ++al) {
    R lap_a1(0), lap_a2(0);
    for (int l = 0; l < 2; ++l) {
      lap_a1 += gj.H5(al, 0, 0, 0, l, l);
      lap_a2 += gj.H5(al, 0, 0, 1, l, l);
    }
    const R c = (R(14) - R(9) * S) / R(2);
    put(CheckId::kDual, lap_a1 - gj.a_i(0, al) * c -
                            R(7) / R(4) * (-gj.a(al) * S1 + gj.b(al) * S2));
    put(CheckId::kDual, lap_a2 - gj.a_i(1, al) * c +
                            R(7) / R(4) * (gj.b(al) * S1 + gj.a(al) * S2));
  }

  put(CheckId::kFird, inv.a1a2_dot);
  put(CheckId::kFird, inv.a1_sq - inv.B1 / R(8));
  put(CheckId::kFird, inv.a2_sq - inv.B1 / R(8));

  auto vdot = [&](auto&& f, auto&& g) {
    R acc(0);
    for (int al = 0; al < p; ++al) acc += f(al) * g(al);
    return acc;
  };
  auto va = [&](int al) { return gj.a(al); };
  auto vb = [&](int al) { return gj.b(al); };
  auto va1 = [&](int al) { return gj.a_i(0, al); };
  auto va2 = [&](int al) { return gj.a_i(1, al); };
  auto vaij = [&](int i, int j) {
    return [&gj, i, j](int al) { return gj.a_ij(i, j, al); };
  };

  put(CheckId::kDeriv01, vdot(va, va1) - S1 / R(8));
  put(CheckId::kDeriv01, vdot(vb, va2) - S1 / R(8));
  put(CheckId::kDeriv01, vdot(va, va2) - S2 / R(8));
  put(CheckId::kDeriv01, vdot(vb, va1) + S2 / R(8));

  const R S11 = gj.hessS[0][0], S22 = gj.hessS[1][1], S12 = gj.hessS[0][1];
  put(CheckId::kDeriv02, vdot(va, vaij(0, 0)) - (S11 - inv.B1) / R(8));
  put(CheckId::kDeriv02, vdot(vb, vaij(1, 0)) - (S11 - inv.B1) / R(8));
  put(CheckId::kDeriv02, vdot(va, vaij(1, 1)) - (S22 - inv.B1) / R(8));
  put(CheckId::kDeriv02, vdot(vb, vaij(0, 1)) + (S22 - inv.B1) / R(8));
  put(CheckId::kDeriv02, vdot(va, vaij(0, 1)) - S12 / R(8));
  put(CheckId::kDeriv02, vdot(vb, vaij(1, 1)) - S12 / R(8));
  put(CheckId::kDeriv02, vdot(va, vaij(1, 0)) - S12 / R(8));
  put(CheckId::kDeriv02, vdot(vb, vaij(0, 0)) + S12 / R(8));

  const R B1g1 = gj.gradB1[0], B1g2 = gj.gradB1[1];
  put(CheckId::kDeriv12, vdot(va1, vaij(1, 0)) + vdot(va2, vaij(0, 0)));
  put(CheckId::kDeriv12, vdot(va1, vaij(1, 1)) + vdot(va2, vaij(0, 1)));
  put(CheckId::kDeriv12, vdot(va1, vaij(0, 0)) - B1g1 / R(16));
  put(CheckId::kDeriv12, vdot(va2, vaij(1, 0)) - B1g1 / R(16));
  put(CheckId::kDeriv12, vdot(va1, vaij(0, 1)) - B1g2 / R(16));
  put(CheckId::kDeriv12, vdot(va2, vaij(1, 1)) - B1g2 / R(16));

  const R hesspart = (R(3) * S - R(4)) * (S11 - S22) / R(32);
  put(CheckId::kSecond, inv.a11_sq - (inv.B2 / R(16) - hesspart));
  put(CheckId::kSecond, inv.a21_sq - (inv.B2 / R(16) - hesspart));
  put(CheckId::kSecond, vdot(vaij(0, 0), vaij(1, 0)));
  put(CheckId::kSecond, inv.a22_sq - (inv.B2 / R(16) + hesspart));
  put(CheckId::kSecond, inv.a12_sq - (inv.B2 / R(16) + hesspart));
  put(CheckId::kSecond, vdot(vaij(1, 1), vaij(0, 1)));

  for (int al = 0; al < p; ++al)
    put(CheckId::kGauge, gj.a_ij(0, 1, al) - gj.a_ij(1, 0, al) -
                             gj.b(al) * (R(3) * S - R(4)) / R(2));

  {
    R swap_sum(0), double_sum(0);
    for (int al = 0; al < p; ++al)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          R lap_h(0);
          for (int k = 0; k < 2; ++k) lap_h += gj.H4(al, i, j, k, k);
          double_sum += lap_h * lap_h;
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
              swap_sum += gj.H4(al, i, j, k, l) * gj.H4(al, i, j, l, k);
        }
    const R quarter = S * (R(3) * S - R(4)) * (R(3) * S - R(4)) / R(4);
    put(CheckId::kSwap, swap_sum - (inv.B2 - quarter));
    put(CheckId::kDouble, double_sum - quarter);
    put(CheckId::kB2B, inv.B2 - quarter - inv.C1);
  }

  put(CheckId::kB2Const,
      gj.lapB1 / R(2) -
          (R(7) / R(2) * gj.lapS - R(9) / R(8) * gj.lapS2() +
           gj.grad2S() / R(2) -
           S * (R(3) * S - R(4)) * (R(9) * S - R(14)) / R(4) + inv.B2));

  put(CheckId::kB3Decomp,
      inv.B3 - ((R(45) * S * S - R(144) * S + R(116)) / R(4) * inv.B1 +
                R(13) / R(8) * (R(7) * S - R(8)) * gj.grad2S() + inv.C2 +
                inv.C3));

  {
    R gradB1_dot_gradS = B1g1 * S1 + B1g2 * S2;
    put(CheckId::kLapB2Combo,
        -(R(21) * S * S - R(64) * S + R(49)) * inv.B1 +
            R(7) * (R(1) - S / R(2)) * inv.B2 +
            S * (R(3) * S - R(4)) * (R(3) * S - R(4)) * (R(7) * S - R(12)) /
                R(4) +
            inv.B3 - R(7) / R(2) * (R(7) * S - R(8)) * gj.grad2S() -
            gradB1_dot_gradS + gj.lapS * gj.lapS / R(4) - gj.hess2S() / R(2));
  }

  put(CheckId::kPIneq, (-S * S + inv.normA2 + inv.rhoPerp) - S * S / R(2));

  using std::sqrt;
  put(CheckId::kConsts, sqrt(gj.grad2S()));
  put(CheckId::kConsts, rabs(gj.lapS));
  put(CheckId::kConsts, sqrt(gj.hess2S()));
  put(CheckId::kConsts,
      sqrt(gj.gradB1[0] * gj.gradB1[0] + gj.gradB1[1] * gj.gradB1[1]));

  return res;
}

/// Deterministic residual suite over seeded low-discrepancy sample points.
template <class R>
ResidualReport check_suite(const ImmersionEval<R>& imm, int n_samples,
                           std::uint64_t seed, double tol) {
  if (n_samples < 1)
    throw std::invalid_argument("check_suite: need at least one sample");
  GeometryEngine<R> engine(imm);
  const std::vector<ChartPoint> pts = sphere_samples(n_samples, seed);
  std::vector<std::array<R, kNumChecks>> per_point(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    per_point[i] = pointwise_residuals(engine.geometry_jet(pts[i]));
  });
  std::array<double, kNumChecks> maxres{};
  for (const auto& r : per_point)
    for (int c = 0; c < kNumChecks; ++c)
      maxres[c] = std::max(maxres[c], static_cast<double>(r[c]));
  ResidualReport rep;
  rep.degree = imm.degree();
  rep.samples = n_samples;
  rep.seed = seed;
  rep.tol_scale = tol / 1e-8;
  for (int c = 0; c < kNumChecks; ++c) {
    const CheckInfo& info = check_catalog()[c];
    const double tolerance = info.base_tol * rep.tol_scale;
    const bool pass = maxres[c] < tolerance;
    rep.rows.push_back({info.id, maxres[c], tolerance, pass});
    rep.pass = rep.pass && pass;
  }
  return rep;
}

}  // namespace sv
