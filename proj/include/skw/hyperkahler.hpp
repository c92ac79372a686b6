#pragma once

#include <cstdint>
#include <vector>

#include "skw/rees.hpp"
#include "skw/special_kahler.hpp"

namespace skw {

/// Point of T*M: base z and covector alpha in real-chart components (du basis).
struct CotangentPoint {
  CVec z;
  RVec alpha;
};

/// Structures on T_alpha(T*M) in the split T_x M ⊕ T*_x M induced by the flat connection,
/// and in the coordinates (u, alpha).
struct HyperkahlerFrameData {
  RMat frame;    ///< columns: horizontal lifts of d/du^i, then vertical d/dalpha_i
  RMat i_split;  ///< diag(I, I^T)
  RMat j_split;  ///< [[0, -G^{-1}], [G, 0]]
  RMat k_split;  ///< I J
  RMat g_split;  ///< diag(G, G^{-1})
  RMat i;        ///< coordinate matrices frame * S * frame^{-1}
  RMat j;
  RMat k;
  RMat g;        ///< frame^{-T} g_split frame^{-1}
};

HyperkahlerFrameData tangent_split_at(const Prepotential& f, const CotangentPoint& pt);
RMat J_at(const Prepotential& f, const CotangentPoint& pt);

/// (a, b, c) = (1 - |zeta|^2, 2 Re zeta, 2 Im zeta) / (1 + |zeta|^2), so 0 -> I, 1 -> J, i -> K.
RVec stereographic(Complex zeta);
RMat twistor_structure_at(const Prepotential& f, const CotangentPoint& pt, Complex zeta);

enum class HkStructure { i, j, k, zeta };

/// Sup-norm of the Nijenhuis tensor over coordinate fields, derivatives by fourth-order central differences at step h.
double nijenhuis_at(const Prepotential& f, const CotangentPoint& pt, HkStructure s, double h = 1e-4,
                    Complex zeta = 0.0);

/// Sup-norm of d omega_S for omega_S(X, Y) = g(X, S Y).
double kahler_form_closedness(const Prepotential& f, const CotangentPoint& pt, HkStructure s, double h = 1e-4);

/// Quaternion relations, g-orthogonality and Kaehler-form symmetry at one point.
ResidualReport check_quaternion_at(const Prepotential& f, const CotangentPoint& pt);

/// Rees splitting of the pointwise weight-1 structure on T^C_x M; expected (1, ..., 1).
SplittingType twistor_normal_bundle_at(const Prepotential& f, const CotangentPoint& pt);

struct CorrespondenceReport {
  double j_difference = 0.0;  ///< sup |J_split - Psi^{-1} J_hodge Psi|
  double i_difference = 0.0;
  double rationalization_error = 0.0;
  bool pass(double tol = 1e-9) const { return j_difference < tol && i_difference < tol; }
};

/// Compares the split J with the J built from the pointwise Hodge structure, through
/// Psi(h, alpha) = d xi (P^{1,0} h + P^{0,1} G^{-1} alpha).
CorrespondenceReport correspondence_check(const Prepotential& f, const CotangentPoint& pt);

/// Base points from sample_points, covectors uniform in [-1, 1]^{2n}.
std::vector<CotangentPoint> sample_cotangent_points(const CatalogEntry& entry, int count, std::uint64_t seed,
                                                    double h = 1e-4);

}  // namespace skw
