#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sv/immersion.hpp"
#include "sv/jet.hpp"

namespace sv {

/// Adapted orthonormal frame and first-order metric data at a point.
/// {position, e1, e2, normal frame} is orthonormal in the ambient space;
/// e1, e2 span the image of the coordinate differentials.
template <class R>
struct FrameData {
  ChartPoint point;
  std::vector<R> position;             // ambient unit vector
  std::vector<R> e1, e2;               // tangent frame
  std::vector<std::vector<R>> normal;  // codimension-p normal frame
  R g[2][2];                           // coordinate metric
  R det_g;
  R ginv[2][2];
  R christoffel[2][2][2];              // [k][i][j]
  /// Normal connection <d_k e_beta, e_alpha> at the point, [k][alpha][beta].
  std::vector<R> normal_conn;
  /// Vielbein E[i][a]: frame vector e_a = sum_i E[i][a] d_i.
  R vielbein[2][2];

  int codim() const { return static_cast<int>(normal.size()); }
  R conn(int k, int alpha, int beta) const {
    const int p = codim();
    return normal_conn[(k * p + alpha) * p + beta];
  }
};

/// Per-point package of the second fundamental form and its covariant
/// derivatives through third order, expressed in the adapted orthonormal
/// frame, plus the scalar-field calculus of S and B1 needed by the
/// identity catalog. Indices i,j,... run over {0,1}; alpha over the
/// codimension. For the degree-1 immersion the codimension is zero and all
/// alpha-indexed data is empty, so every contraction is an exact zero.
template <class R>
struct GeometryJet {
  FrameData<R> frame;
  int p = 0;  // codimension

  std::vector<R> h2;  // p * 4,  [alpha](i,j)
  std::vector<R> h3;  // p * 8,  [alpha](i,j,k)
  std::vector<R> h4;  // p * 16, [alpha](i,j,k,l)
  std::vector<R> h5;  // p * 32, [alpha](i,j,k,l,m)

  R H2(int a, int i, int j) const { return h2[(a * 2 + i) * 2 + j]; }
  R H3(int a, int i, int j, int k) const {
    return h3[((a * 2 + i) * 2 + j) * 2 + k];
  }
  R H4(int a, int i, int j, int k, int l) const {
    return h4[(((a * 2 + i) * 2 + j) * 2 + k) * 2 + l];
  }
  R H5(int a, int i, int j, int k, int l, int m) const {
    return h5[((((a * 2 + i) * 2 + j) * 2 + k) * 2 + l) * 2 + m];
  }

  // Codimension vectors of the surface normal form: a = h_11, b = h_12,
  // a_i = h_11i, a_ij = h_11ij, a_ijk = h_11ijk.
  R a(int al) const { return H2(al, 0, 0); }
  R b(int al) const { return H2(al, 0, 1); }
  R a_i(int i, int al) const { return H3(al, 0, 0, i); }
  R a_ij(int i, int j, int al) const { return H4(al, 0, 0, i, j); }
  R a_ijk(int i, int j, int k, int al) const { return H5(al, 0, 0, i, j, k); }

  // Scalar fields at the point (frame components).
  R S = R(0);
  R gradS[2] = {R(0), R(0)};
  R hessS[2][2] = {{R(0), R(0)}, {R(0), R(0)}};
  R lapS = R(0);
  R B1 = R(0);
  R gradB1[2] = {R(0), R(0)};
  R lapB1 = R(0);
  R K_intrinsic = R(0);

  R grad2S() const { return gradS[0] * gradS[0] + gradS[1] * gradS[1]; }
  R hess2S() const {
    R acc(0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc += hessS[i][j] * hessS[i][j];
    return acc;
  }
  /// Laplacian of the field S^2 (exactly 2 S lap S + 2 |grad S|^2).
  R lapS2() const { return R(2) * S * lapS + R(2) * grad2S(); }
};

/// Frame-invariant scalars at a point.
template <class R>
struct InvariantReport {
  R S, K, K_gauss;
  R B1, B2, B3;
  R normA2;   // |A|^2
  R rhoPerp;  // squared norm of the normal curvature
  R C1, C2, C3;
  R a_sq, b_sq, ab_dot;
  R a1_sq, a2_sq, a1a2_dot;
  R a11_sq, a12_sq, a21_sq, a22_sq;
};

template <class R>
struct ScalarCalc {
  R grad_sq;
  R hess_sq;
  R laplacian;
};

/// Ambient polynomial (in the 2s+1 coordinates of the target sphere's
/// ambient space) used as a scalar field on the surface.
struct AmbientPoly {
  struct Term {
    double coef;
    std::vector<int> pow;  // exponent per ambient coordinate; short ok
  };
  std::vector<Term> terms;

  static AmbientPoly coordinate(int axis) {
    AmbientPoly p;
    p.terms.push_back({1.0, std::vector<int>(axis + 1, 0)});
    p.terms[0].pow[axis] = 1;
    return p;
  }
  static AmbientPoly product(int axis1, int axis2) {
    AmbientPoly p;
    const int n = std::max(axis1, axis2) + 1;
    p.terms.push_back({1.0, std::vector<int>(n, 0)});
    p.terms[0].pow[axis1] += 1;
    p.terms[0].pow[axis2] += 1;
    return p;
  }
};

namespace detail {

template <class R>
Jet<R> dot(const std::vector<Jet<R>>& x, const std::vector<Jet<R>>& y) {
  Jet<R> acc(R(0), std::min(x[0].order(), y[0].order()));
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

template <class R>
std::vector<Jet<R>> dcomp(const std::vector<Jet<R>>& x, int axis) {
  std::vector<Jet<R>> r;
  r.reserve(x.size());
  for (const auto& j : x) r.push_back(j.derivative(axis));
  return r;
}

}  // namespace detail

/// Full per-point geometry computation. Everything below is jet arithmetic
/// on the chart expansion of the immersion: no finite differences anywhere.
template <class R>
class GeometryEngine {
 public:
  explicit GeometryEngine(const ImmersionEval<R>& imm) : imm_(&imm) {}

  GeometryJet<R> geometry_jet(const ChartPoint& p) const {
    GeometryJet<R> gj;
    build(p, gj);
    return gj;
  }

  FrameData<R> adapted_frame(const ChartPoint& p) const {
    return geometry_jet(p).frame;
  }

  /// Gradient/Hessian/Laplacian of an ambient polynomial restricted to the
  /// surface, in the induced metric.
  ScalarCalc<R> scalar_calculus(const AmbientPoly& f, const ChartPoint& p) const {
    Workspace w;
    prepare(p, 1, w);
    Jet<R> fj(R(0), 3);
    for (const auto& t : f.terms) {
      Jet<R> term(static_cast<R>(t.coef), 3);
      for (std::size_t a = 0; a < t.pow.size(); ++a)
        for (int k = 0; k < t.pow[a]; ++k) term = term * w.F[a];
      fj += term;
    }
    return scalar_calc_from_jet(fj, w);
  }

 private:
  struct Workspace {
    ChartPoint point;
    int m = 0;  // ambient dimension
    int p = 0;  // codimension
    std::vector<Jet<R>> F;                    // order 5
    std::vector<Jet<R>> Fd[2];                // order 4
    Jet<R> g[2][2], det, ginv[2][2];          // order 4
    Jet<R> gamma[2][2][2];                    // order 3, [k][i][j]
    std::vector<Jet<R>> hvec[2][2];           // order 3, ambient valued
    std::vector<std::vector<Jet<R>>> e;       // normal frame, order 4
    std::vector<Jet<R>> omega;                // order 3, [k][alpha][beta]
    std::vector<Jet<R>> T0, T1, T2, T3;       // frame-alpha coordinate tensors
    Jet<R> Sjet;                              // order 3
    Jet<R> B1jet;                             // order 2

    Jet<R>& om(int k, int al, int be) {
      return omega[(k * p + al) * p + be];
    }
    Jet<R>& t0(int al, int i, int j) { return T0[(al * 2 + i) * 2 + j]; }
    Jet<R>& t1(int al, int i, int j, int k) {
      return T1[((al * 2 + i) * 2 + j) * 2 + k];
    }
    Jet<R>& t2(int al, int i, int j, int k, int l) {
      return T2[(((al * 2 + i) * 2 + j) * 2 + k) * 2 + l];
    }
    Jet<R>& t3(int al, int i, int j, int k, int l, int m) {
      return T3[((((al * 2 + i) * 2 + j) * 2 + k) * 2 + l) * 2 + m];
    }
  };

  void prepare(const ChartPoint& p, int max_tensor_depth, Workspace& w) const {
    w.point = p;
    w.m = imm_->ambient_dim();
    w.F = imm_->jets(p, Jet<R>::kMaxOrder);
    w.Fd[0] = detail::dcomp(w.F, 0);
    w.Fd[1] = detail::dcomp(w.F, 1);
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) {
        w.g[i][j] = detail::dot(w.Fd[i], w.Fd[j]);
        w.g[j][i] = w.g[i][j];
      }
    w.det = w.g[0][0] * w.g[1][1] - w.g[0][1] * w.g[0][1];
    if (!(w.det.value() > R(1e-12)))
      throw std::domain_error("geometry: degenerate induced metric");
    const Jet<R> idet = w.det.reciprocal();
    w.ginv[0][0] = w.g[1][1] * idet;
    w.ginv[1][1] = w.g[0][0] * idet;
    w.ginv[0][1] = -(w.g[0][1] * idet);
    w.ginv[1][0] = w.ginv[0][1];

    Jet<R> dg[2][2][2];  // [l][i][j] = d_l g_ij
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dg[l][i][j] = w.g[i][j].derivative(l);
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Jet<R> acc(R(0), 3);
          for (int l = 0; l < 2; ++l)
            acc += w.ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
          w.gamma[k][i][j] = acc * (R(1) / R(2));
        }

    if (max_tensor_depth < 2) return;

    // Gauss formula in the sphere: the normal-valued second fundamental
    // form is dd F - Gamma dF + g F.
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::vector<Jet<R>> ddF = detail::dcomp(w.Fd[i], j);
        w.hvec[i][j].resize(w.m);
        for (int A = 0; A < w.m; ++A) {
          Jet<R> acc = ddF[A] + w.g[i][j] * w.F[A];
          for (int k = 0; k < 2; ++k) acc -= w.gamma[k][i][j] * w.Fd[k][A];
          w.hvec[i][j][A] = acc;
        }
      }

    w.p = w.m - 3;
    build_normal_frame(w);

    const int p_ = w.p;
    w.omega.assign(2 * p_ * p_, Jet<R>());
    for (int k = 0; k < 2; ++k)
      for (int be = 0; be < p_; ++be) {
        std::vector<Jet<R>> de = detail::dcomp(w.e[be], k);
        for (int al = 0; al < p_; ++al) w.om(k, al, be) = detail::dot(de, w.e[al]);
      }

    w.T0.assign(p_ * 4, Jet<R>());
    for (int al = 0; al < p_; ++al)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          w.t0(al, i, j) = detail::dot(w.hvec[i][j], w.e[al]);

    // S as a scalar field: full metric contraction of the alpha components.
    // Empty codimension gives the exact zero jet.
    {
      Jet<R> acc(R(0), 3);
      for (int al = 0; al < p_; ++al)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int i2 = 0; i2 < 2; ++i2)
              for (int j2 = 0; j2 < 2; ++j2)
                acc += w.ginv[i][i2] * w.ginv[j][j2] * w.t0(al, i, j) *
                       w.t0(al, i2, j2);
      w.Sjet = acc;
    }

    if (max_tensor_depth < 3) return;

    // Covariant derivative recursions in coordinates. Tangent slots get
    // Christoffel corrections, the normal slot the normal connection.
    w.T1.assign(p_ * 8, Jet<R>());
    for (int al = 0; al < p_; ++al)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) {
            Jet<R> acc = w.t0(al, i, j).derivative(k);
            for (int mm = 0; mm < 2; ++mm) {
              acc -= w.gamma[mm][k][i] * w.t0(al, mm, j);
              acc -= w.gamma[mm][k][j] * w.t0(al, i, mm);
            }
            for (int be = 0; be < p_; ++be)
              acc += w.t0(be, i, j) * w.om(k, al, be);
            w.t1(al, i, j, k) = acc;
          }

    {
      Jet<R> acc(R(0), 2);
      for (int al = 0; al < p_; ++al)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
              for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < 2; ++j2)
                  for (int k2 = 0; k2 < 2; ++k2)
                    acc += w.ginv[i][i2] * w.ginv[j][j2] * w.ginv[k][k2] *
                           w.t1(al, i, j, k) * w.t1(al, i2, j2, k2);
      w.B1jet = acc;
    }

    w.T2.assign(p_ * 16, Jet<R>());
    for (int al = 0; al < p_; ++al)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
              Jet<R> acc = w.t1(al, i, j, k).derivative(l);
              for (int mm = 0; mm < 2; ++mm) {
                acc -= w.gamma[mm][l][i] * w.t1(al, mm, j, k);
                acc -= w.gamma[mm][l][j] * w.t1(al, i, mm, k);
                acc -= w.gamma[mm][l][k] * w.t1(al, i, j, mm);
              }
              for (int be = 0; be < p_; ++be)
                acc += w.t1(be, i, j, k) * w.om(l, al, be);
              w.t2(al, i, j, k, l) = acc;
            }

    w.T3.assign(p_ * 32, Jet<R>());
    for (int al = 0; al < p_; ++al)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
              for (int mm = 0; mm < 2; ++mm) {
                Jet<R> acc = w.t2(al, i, j, k, l).derivative(mm);
                for (int q = 0; q < 2; ++q) {
                  acc -= w.gamma[q][mm][i] * w.t2(al, q, j, k, l);
                  acc -= w.gamma[q][mm][j] * w.t2(al, i, q, k, l);
                  acc -= w.gamma[q][mm][k] * w.t2(al, i, j, q, l);
                  acc -= w.gamma[q][mm][l] * w.t2(al, i, j, k, q);
                }
                for (int be = 0; be < p_; ++be)
                  acc += w.t2(be, i, j, k, l) * w.om(mm, al, be);
                w.t3(al, i, j, k, l, mm) = acc;
              }
  }

  /// Gram-Schmidt normal frame as jets: ambient basis vectors projected to
  /// the complement of span{F, dF}, pivoting on the largest residual norm
  /// at the point (smallest index breaks ties).
  void build_normal_frame(Workspace& w) const {
    w.e.clear();
    if (w.p == 0) return;
    std::vector<std::vector<Jet<R>>> cand(w.m);
    std::vector<bool> used(w.m, false);
    for (int A = 0; A < w.m; ++A) {
      std::vector<Jet<R>> r(w.m, Jet<R>(R(0), 4));
      // epsilon_A - <eps_A,F> F - ginv^{ij} <eps_A, F_i> F_j
      for (int B = 0; B < w.m; ++B) r[B] = -(w.F[A] * w.F[B]);
      r[A] += R(1);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const Jet<R> c = w.ginv[i][j] * w.Fd[i][A];
          for (int B = 0; B < w.m; ++B) r[B] -= c * w.Fd[j][B];
        }
      cand[A] = std::move(r);
    }
    for (int step = 0; step < w.p; ++step) {
      int pick = -1;
      R best(0);
      for (int A = 0; A < w.m; ++A) {
        if (used[A]) continue;
        const R n2 = detail::dot(cand[A], cand[A]).value();
        if (pick < 0 || n2 > best) {
          pick = A;
          best = n2;
        }
      }
      used[pick] = true;
      std::vector<Jet<R>> v = cand[pick];
      const Jet<R> inv_norm = detail::dot(v, v).sqrt_jet().reciprocal();
      for (auto& c : v) c = c * inv_norm;
      for (int A = 0; A < w.m; ++A) {
        if (used[A]) continue;
        const Jet<R> proj = detail::dot(cand[A], v);
        for (int B = 0; B < w.m; ++B) cand[A][B] -= proj * v[B];
      }
      w.e.push_back(std::move(v));
    }
  }

  ScalarCalc<R> scalar_calc_from_jet(const Jet<R>& fj, const Workspace& w) const {
    R grad[2] = {fj.d(1, 0), fj.d(0, 1)};
    R hess[2][2];
    hess[0][0] = fj.d(2, 0);
    hess[0][1] = fj.d(1, 1);
    hess[1][0] = hess[0][1];
    hess[1][1] = fj.d(0, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          hess[i][j] -= w.gamma[k][i][j].value() * grad[k];
    ScalarCalc<R> out{R(0), R(0), R(0)};
    R ginv0[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) ginv0[i][j] = w.ginv[i][j].value();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        out.grad_sq += ginv0[i][j] * grad[i] * grad[j];
        out.laplacian += ginv0[i][j] * hess[i][j];
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            out.hess_sq += ginv0[i][k] * ginv0[j][l] * hess[i][j] * hess[k][l];
      }
    return out;
  }

  void build(const ChartPoint& p, GeometryJet<R>& gj) const {
    Workspace w;
    prepare(p, 5, w);
    const int p_ = w.p;
    gj.p = p_;

    // Point values of the frame package.
    FrameData<R>& fr = gj.frame;
    fr.point = w.point;
    fr.position.resize(w.m);
    for (int A = 0; A < w.m; ++A) fr.position[A] = w.F[A].value();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        fr.g[i][j] = w.g[i][j].value();
        fr.ginv[i][j] = w.ginv[i][j].value();
        for (int k = 0; k < 2; ++k)
          fr.christoffel[k][i][j] = w.gamma[k][i][j].value();
      }
    fr.det_g = w.det.value();
    fr.normal.resize(p_);
    for (int al = 0; al < p_; ++al) {
      fr.normal[al].resize(w.m);
      for (int A = 0; A < w.m; ++A) fr.normal[al][A] = w.e[al][A].value();
    }
    fr.normal_conn.resize(2 * p_ * p_);
    for (int k = 0; k < 2; ++k)
      for (int al = 0; al < p_; ++al)
        for (int be = 0; be < p_; ++be)
          fr.normal_conn[(k * p_ + al) * p_ + be] = w.om(k, al, be).value();

    // Orthonormal tangent frame by Gram-Schmidt on (d_u F, d_v F).
    using std::sqrt;
    const R s11 = sqrt(fr.g[0][0]);
    const R n2 = sqrt(fr.g[1][1] - fr.g[0][1] * fr.g[0][1] / fr.g[0][0]);
    fr.vielbein[0][0] = R(1) / s11;
    fr.vielbein[1][0] = R(0);
    fr.vielbein[0][1] = -fr.g[0][1] / (fr.g[0][0] * n2);
    fr.vielbein[1][1] = R(1) / n2;
    fr.e1.resize(w.m);
    fr.e2.resize(w.m);
    for (int A = 0; A < w.m; ++A) {
      fr.e1[A] = fr.vielbein[0][0] * w.Fd[0][A].value();
      fr.e2[A] = fr.vielbein[0][1] * w.Fd[0][A].value() +
                 fr.vielbein[1][1] * w.Fd[1][A].value();
    }

    // Convert coordinate tensors to the orthonormal frame at the point.
    const auto E = fr.vielbein;
    gj.h2.assign(p_ * 4, R(0));
    gj.h3.assign(p_ * 8, R(0));
    gj.h4.assign(p_ * 16, R(0));
    gj.h5.assign(p_ * 32, R(0));
    for (int al = 0; al < p_; ++al) {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          R acc(0);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              acc += E[i][a] * E[j][b] * w.t0(al, i, j).value();
          gj.h2[(al * 2 + a) * 2 + b] = acc;
        }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c) {
            R acc(0);
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                  acc += E[i][a] * E[j][b] * E[k][c] * w.t1(al, i, j, k).value();
            gj.h3[((al * 2 + a) * 2 + b) * 2 + c] = acc;
          }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d) {
              R acc(0);
              for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                  for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                      acc += E[i][a] * E[j][b] * E[k][c] * E[l][d] *
                             w.t2(al, i, j, k, l).value();
              gj.h4[(((al * 2 + a) * 2 + b) * 2 + c) * 2 + d] = acc;
            }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d)
              for (int f = 0; f < 2; ++f) {
                R acc(0);
                for (int i = 0; i < 2; ++i)
                  for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                      for (int l = 0; l < 2; ++l)
                        for (int mm = 0; mm < 2; ++mm)
                          acc += E[i][a] * E[j][b] * E[k][c] * E[l][d] *
                                 E[mm][f] * w.t3(al, i, j, k, l, mm).value();
                gj.h5[((((al * 2 + a) * 2 + b) * 2 + c) * 2 + d) * 2 + f] = acc;
              }
    }

    // Scalar fields of S and B1 from their jets.
    gj.S = w.Sjet.value();
    gj.B1 = w.B1jet.value();
    fill_scalar(w.Sjet, w, E, gj.gradS, gj.hessS, &gj.lapS);
    R dummyhess[2][2];
    fill_scalar(w.B1jet, w, E, gj.gradB1, dummyhess, &gj.lapB1);

    gj.K_intrinsic = intrinsic_curvature(w);
  }

  void fill_scalar(const Jet<R>& fj, const Workspace& w, const R E[2][2],
                   R grad_frame[2], R hess_frame[2][2], R* lap) const {
    R grad[2] = {fj.d(1, 0), fj.d(0, 1)};
    R hess[2][2];
    hess[0][0] = fj.d(2, 0);
    hess[0][1] = fj.d(1, 1);
    hess[1][0] = hess[0][1];
    hess[1][1] = fj.d(0, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          hess[i][j] -= w.gamma[k][i][j].value() * grad[k];
    for (int a = 0; a < 2; ++a) {
      grad_frame[a] = E[0][a] * grad[0] + E[1][a] * grad[1];
      for (int b = 0; b < 2; ++b) {
        R acc(0);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) acc += E[i][a] * E[j][b] * hess[i][j];
        hess_frame[a][b] = acc;
      }
    }
    *lap = hess_frame[0][0] + hess_frame[1][1];
  }

  /// Gauss curvature from the coordinate Christoffel jets:
  /// K = g_{1l} (d_1 Gamma^l_22 - d_2 Gamma^l_12
  ///             + Gamma^l_1m Gamma^m_22 - Gamma^l_2m Gamma^m_12) / det g.
  R intrinsic_curvature(const Workspace& w) const {
    R acc(0);
    for (int l = 0; l < 2; ++l) {
      R term = w.gamma[l][1][1].derivative(0).value() -
               w.gamma[l][0][1].derivative(1).value();
      for (int mm = 0; mm < 2; ++mm)
        term += w.gamma[l][0][mm].value() * w.gamma[mm][1][1].value() -
                w.gamma[l][1][mm].value() * w.gamma[mm][0][1].value();
      acc += w.g[0][l].value() * term;
    }
    return acc / w.det.value();
  }

  const ImmersionEval<R>* imm_;
};

/// Frame-invariant scalars of a geometry jet.
template <class R>
InvariantReport<R> invariants(const GeometryJet<R>& gj) {
  InvariantReport<R> r{};
  const int p = gj.p;
  auto dotp = [p](auto&& f, auto&& g) {
    R acc(0);
    for (int al = 0; al < p; ++al) acc += f(al) * g(al);
    return acc;
  };

  r.S = gj.S;
  r.K = gj.K_intrinsic;
  r.K_gauss = R(1) - gj.S / R(2);

  r.B1 = R(0);
  for (std::size_t i = 0; i < gj.h3.size(); ++i) r.B1 += gj.h3[i] * gj.h3[i];
  r.B2 = R(0);
  for (std::size_t i = 0; i < gj.h4.size(); ++i) r.B2 += gj.h4[i] * gj.h4[i];
  r.B3 = R(0);
  for (std::size_t i = 0; i < gj.h5.size(); ++i) r.B3 += gj.h5[i] * gj.h5[i];

  // |A|^2 = sum <S_al, S_be>^2 and rho_perp = sum |[S_al, S_be]|^2,
  // expanded through a = h_11, b = h_12.
  r.normA2 = R(0);
  r.rhoPerp = R(0);
  for (int al = 0; al < p; ++al)
    for (int be = 0; be < p; ++be) {
      const R inner = R(2) * gj.a(al) * gj.a(be) + R(2) * gj.b(al) * gj.b(be);
      r.normA2 += inner * inner;
      const R comm = gj.a(al) * gj.b(be) - gj.a(be) * gj.b(al);
      r.rhoPerp += R(8) * comm * comm;
    }

  r.a_sq = dotp([&](int al) { return gj.a(al); }, [&](int al) { return gj.a(al); });
  r.b_sq = dotp([&](int al) { return gj.b(al); }, [&](int al) { return gj.b(al); });
  r.ab_dot =
      dotp([&](int al) { return gj.a(al); }, [&](int al) { return gj.b(al); });

  auto a_i = [&](int i) { return [&gj, i](int al) { return gj.a_i(i, al); }; };
  r.a1_sq = dotp(a_i(0), a_i(0));
  r.a2_sq = dotp(a_i(1), a_i(1));
  r.a1a2_dot = dotp(a_i(0), a_i(1));

  auto a_ij = [&](int i, int j) {
    return [&gj, i, j](int al) { return gj.a_ij(i, j, al); };
  };
  r.a11_sq = dotp(a_ij(0, 0), a_ij(0, 0));
  r.a12_sq = dotp(a_ij(0, 1), a_ij(0, 1));
  r.a21_sq = dotp(a_ij(1, 0), a_ij(1, 0));
  r.a22_sq = dotp(a_ij(1, 1), a_ij(1, 1));

  r.C1 = R(0);
  r.C2 = R(0);
  r.C3 = R(0);
  for (int al = 0; al < p; ++al) {
    const R d1 = gj.a_ij(0, 0, al) - gj.a_ij(1, 1, al);
    const R d2 = gj.a_ij(0, 1, al) + gj.a_ij(1, 0, al);
    r.C1 += R(2) * (d1 * d1 + d2 * d2);
    const R c1 = gj.a_ijk(0, 0, 0, al) - gj.a_ijk(0, 1, 1, al);
    const R c2 = gj.a_ijk(1, 0, 0, al) - gj.a_ijk(1, 1, 1, al);
    r.C2 += R(2) * (c1 * c1 + c2 * c2);
    const R c3 = gj.a_ijk(0, 0, 1, al) + gj.a_ijk(0, 1, 0, al);
    const R c4 = gj.a_ijk(1, 0, 1, al) + gj.a_ijk(1, 1, 0, al);
    r.C3 += R(2) * (c3 * c3 + c4 * c4);
  }
  return r;
}

/// Scalar calculus of the field S itself (already carried by the jet).
template <class R>
ScalarCalc<R> scalar_calculus_of_S(const GeometryJet<R>& gj) {
  return ScalarCalc<R>{gj.grad2S(), gj.hess2S(), gj.lapS};
}

}  // namespace sv
