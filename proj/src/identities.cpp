#include "sv/identities.hpp"

namespace sv {

const std::array<CheckInfo, kNumChecks>& check_catalog() {
  static const std::array<CheckInfo, kNumChecks> kCatalog = {{
      {CheckId::kMinimal, "MINIMAL", "h_11 + h_22 = 0", 1e-10},
      {CheckId::kCodazzi, "CODAZZI", "h_ijk totally symmetric", 1e-9},
      {CheckId::kRic1, "RIC1",
       "h_ijkl - h_ijlk = h_pj R_pikl + h_ip R_pjkl + h_ij R_(beta alpha)kl",
       1e-8},
      {CheckId::kRic2, "RIC2",
       "h_ijklm - h_ijkml = curvature contraction of grad h", 1e-7},
      {CheckId::kCurv3, "CURV3",
       "grad_k R_(alpha beta)12 = 2(b a_k + a h_12k - ...)", 1e-8},
      {CheckId::kLap1, "LAP1",
       "lap h_ij = h_mmij + curvature contractions of h", 1e-8},
      {CheckId::kLap2, "LAP2",
       "lap h_ijk = (lap h_ij)_k + curvature contractions", 1e-7},
      {CheckId::kSimons, "SIMONS",
       "1/2 lap S = B1 + 2S - |A|^2 - rho_perp", 1e-8},
      {CheckId::kRefined, "REFINED", "1/2 lap S = B1 - 1/2 S(3S-4)", 1e-8},
      {CheckId::kFunda, "FUNDA", "<a,b> = 0, |a|^2 = |b|^2 = S/4", 1e-8},
      {CheckId::kNorma, "NORMA", "|A|^2 = S^2/2, rho_perp = S^2", 1e-8},
      {CheckId::kTwins, "TWINS", "lap a = 1/2 a(4-3S), lap b likewise", 1e-8},
      {CheckId::kDual, "DUAL",
       "lap a_1 = 1/2 a_1(14-9S) + 7/4(-a S_1 + b S_2), twin for a_2", 1e-7},
      {CheckId::kFird, "FIRD", "<a_1,a_2> = 0, |a_1|^2 = |a_2|^2 = B1/8",
       1e-8},
      {CheckId::kDeriv01, "DERIV01",
       "<a,a_1> = <b,a_2> = S_1/8, <a,a_2> = -<b,a_1> = S_2/8", 1e-8},
      {CheckId::kDeriv02, "DERIV02",
       "<a,a_11> = <b,a_21> = (S_11 - B1)/8 and companions", 1e-7},
      {CheckId::kDeriv12, "DERIV12",
       "<a_1,a_11> = <a_2,a_21> = (B1)_1/16 and companions", 1e-7},
      {CheckId::kSecond, "SECOND",
       "|a_11|^2 = |a_21|^2 = B2/16 - (3S-4)(S_11-S_22)/32, twin", 1e-7},
      {CheckId::kGauge, "GAUGE", "a_12 - a_21 = 1/2 b(3S-4)", 1e-7},
      {CheckId::kSwap, "SWAP", "sum h_ijkl h_ijlk = B2 - 1/4 S(3S-4)^2",
       1e-7},
      {CheckId::kDouble, "DOUBLE", "sum (lap h_ij)^2 = 1/4 S(3S-4)^2", 1e-8},
      {CheckId::kB2B, "B2B", "B2 = 1/4 S(3S-4)^2 + C1", 1e-7},
      {CheckId::kB2Const, "B2CONST",
       "1/2 lap B1 = 7/2 lap S - 9/8 lap S^2 + 1/2 |grad S|^2 "
       "- 1/4 S(3S-4)(9S-14) + B2",
       1e-7},
      {CheckId::kB3Decomp, "B3DECOMP",
       "B3 = 1/4(45S^2-144S+116) B1 + 13/8(7S-8)|grad S|^2 + C2 + C3", 1e-7},
      {CheckId::kLapB2Combo, "LAPB2COMBO",
       "-(21S^2-64S+49)B1 + 7(1-S/2)B2 + 1/4 S(3S-4)^2(7S-12) + B3 "
       "- derivative terms = 0",
       1e-7},
      {CheckId::kPIneq, "PINEQ", "-S^2 + |A|^2 + rho_perp = S^2/2", 1e-8},
      {CheckId::kConsts, "CONSTS",
       "grad S, lap S, Hess S, grad B1 vanish on the standard spheres", 1e-8},
  }};
  return kCatalog;
}

const CheckInfo& check_info(CheckId id) {
  return check_catalog()[static_cast<int>(id)];
}

}  // namespace sv
