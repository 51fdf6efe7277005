#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sv/rational.hpp"
#include "sv/rational_poly.hpp"

namespace sv {

/// Certified-by-expansion polynomial identities. Every certificate is pure
/// exact-rational coefficient algebra; no floating point anywhere.
enum class AlgebraId {
  kFinalPoly,   // collapse of the three S-polynomial blocks into
                // -1/2 S(3S-4)(3S-5)(5S-9)
  kFDisc,       // discriminant (134-114S)^2 + 864(3S-5)(9-5S) = 4(9S^2+3594S-5231)
  kEpsRoots,    // Vieta relations for -54 e^2 + (134-114S) e + 4(3S-5)(9-5S)
  kCritQuad,    // squared critical-point equation reduces to 45S^2+17970S-31211
  kKsRel,       // 2 - 2K(s) - S(s) = 0 as a rational function of s
  kComboZero,   // constant-S closed forms satisfy the Laplacian-of-B2 combo
};

struct AlgebraCatalogEntry {
  AlgebraId id;
  const char* name;
  const char* statement;
};

const std::vector<AlgebraCatalogEntry>& algebra_catalog();

/// Exact check of one identity; returns true iff the expanded coefficient
/// lists agree. Unknown names throw.
bool certify(AlgebraId id);
bool certify(const std::string& name);

/// Pair of codimension vectors (a, b) that encodes a traceless symmetric
/// surface form, with the derived scalars S = 2|a|^2 + 2|b|^2,
/// |A|^2 = 4|a|^4 + 4|b|^4 + 8<a,b>^2, rho_perp = 16(|a|^2 |b|^2 - <a,b>^2).
struct VectorPair {
  std::vector<double> a, b;

  double dot_aa() const;
  double dot_bb() const;
  double dot_ab() const;
  double S() const { return 2.0 * dot_aa() + 2.0 * dot_bb(); }
  double normA2() const;
  double rhoPerp() const;
};

struct PinchResult {
  double lhs;           // -S^2 + |A|^2 + rho_perp - S^2/2, always <= 0
  double equality_gap;  // 8<a,b>^2 + 2(|a|^2-|b|^2)^2; zero iff equality
};

/// The pointwise pinching inequality -S^2 + |A|^2 + rho_perp <= S^2/2:
/// lhs is the (nonpositive) slack, equality exactly when a is orthogonal to
/// b with |a| = |b|.
PinchResult pinch_inequality(const VectorPair& vp);

/// Exact-rational form of the slack, for property tests.
Rational pinch_lhs_exact(const std::vector<Rational>& a,
                         const std::vector<Rational>& b);

}  // namespace sv
