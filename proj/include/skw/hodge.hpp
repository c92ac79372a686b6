#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skw/numerics/subspace.hpp"
#include "skw/prepotential.hpp"

namespace skw {

/// Complete decreasing filtration V = F^0 ⊇ F^1 ⊇ ... ⊇ F^len = 0.
/// Stored up to the first zero step; F^p = V for p <= 0 and 0 for p >= length().
class Filtration {
 public:
  /// Requires steps[0] = V, nested steps and a final zero step.
  Filtration(std::size_t ambient_dim, std::vector<Subspace> steps);
  /// Same, but appends the zero step when missing.
  static Filtration complete(std::size_t ambient_dim, std::vector<Subspace> steps);
  /// V ⊃ 0.
  static Filtration trivial(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return n_; }
  /// Index of the first zero step.
  int length() const { return static_cast<int>(steps_.size()) - 1; }
  const Subspace& step(int p) const;
  const std::vector<Subspace>& steps() const { return steps_; }
  /// dim F^p - dim F^{p+1}.
  std::size_t graded_dim(int p) const;

  friend bool operator==(const Filtration& a, const Filtration& b) {
    return a.n_ == b.n_ && a.steps_ == b.steps_;
  }

 private:
  std::size_t n_;
  Subspace full_;
  Subspace zero_;
  std::vector<Subspace> steps_;
};

/// Anti-linear involution of C^m given by a real 2m x 2m matrix on (Re v, Im v).
class RealStructure {
 public:
  explicit RealStructure(RationalMatrix action);
  /// Coordinatewise complex conjugation.
  static RealStructure conjugation(std::size_t m);
  /// v -> S conj(S^{-1} v).
  static RealStructure conjugated_by(const ExactMatrix& s);

  std::size_t dim() const { return m_.rows() / 2; }
  const RationalMatrix& matrix() const { return m_; }
  ExactVector apply(const ExactVector& v) const;
  Subspace apply(const Subspace& s) const;
  Filtration apply(const Filtration& f) const;

 private:
  RationalMatrix m_;
};

/// V = ⊕_{k+l=p} V^{k,l} with V^{k,l} = r(V^{l,k}).
class HodgeStructure {
 public:
  /// components[k] = V^{k, p-k}; validated for directness, spanning and conjugation symmetry.
  HodgeStructure(int weight, std::vector<Subspace> components, RealStructure real);

  int weight() const { return p_; }
  std::size_t dim() const { return real_.dim(); }
  const Subspace& component(int k) const;
  const std::vector<Subspace>& components() const { return comps_; }
  const RealStructure& real() const { return real_; }

 private:
  int p_;
  std::vector<Subspace> comps_;
  RealStructure real_;
};

/// Throws Errc::not_pure ("not pure of weight p") when F^k ⊕ Fbar^{p-k+1} != V for some k.
HodgeStructure filtration_to_hodge(const Filtration& f, const Filtration& fbar, const RealStructure& r,
                                   int weight);

struct HodgeFiltrations {
  Filtration f;
  Filtration fbar;
};

/// F^k = ⊕_{i>=k} V^{i,p-i}, Fbar^l = ⊕_{j>=l} V^{p-j,j}.
HodgeFiltrations hodge_to_filtration(const HodgeStructure& h);

/// Bilinear form Q(x, y) = x^T q y.
struct Polarization {
  ExactMatrix q;
  int weight;
};

struct PolarizationReport {
  bool parity = false;      ///< Q(x, y) = (-1)^p Q(y, x)
  bool orthogonal = false;  ///< Q(x, r(y)) = 0 for x, y in distinct components
  bool positive = false;    ///< i^{k-l} Q(x, r(x)) real and > 0
  Rational min_positivity;  ///< smallest value seen in the positivity test
  bool pass() const { return parity && orthogonal && positive; }
};

/// Checks on a basis of each component and on `samples` seeded random rational combinations.
/// Throws Errc::degenerate_form when Q is singular.
PolarizationReport check_polarization(const HodgeStructure& h, const Polarization& q, int samples = 8,
                                      std::uint64_t seed = 1);

/// Pair of real 4n x 4n matrices with I^2 = J^2 = -1, IJ = -JI.
struct QuaternionicStructure {
  RationalMatrix i;
  RationalMatrix j;
};

/// Throws Errc::relations_violated when the quaternion relations fail.
void check_quaternion_relations(const QuaternionicStructure& q);

/// J = r ∘ (P^{1,0} - P^{0,1}); I multiplication by i on C^m = R^{2m}.
/// Throws Errc::wrong_weight for weights other than 1.
QuaternionicStructure quaternionic_from_hodge(const HodgeStructure& h);

struct HodgeFromQuaternionic {
  HodgeStructure hodge;  ///< on C^{2n} in the adapted coordinates
  RationalMatrix frame;  ///< real 4n x 4n map from realified coordinates to R^{4n}; intertwines i and I
};

/// Picks an H-basis e_1..e_n, uses (e_k, J e_k) as a complex basis and splits
/// V^{1,0} = span{e_k}, V^{0,1} = span{J e_k} with r = J ∘ (P^{1,0} - P^{0,1}).
HodgeFromQuaternionic hodge_from_quaternionic(const QuaternionicStructure& q);

/// Pulls a quaternionic structure on realified coordinates back to R^{4n} through the frame.
QuaternionicStructure transport(const QuaternionicStructure& q, const RationalMatrix& frame);

struct VhsPointReport {
  double holomorphy_residual = 0.0;     ///< sup |(nabla_{d/dzbar_k} d/dz_j)^{0,1}|
  double full_derivative = 0.0;         ///< sup |nabla_{d/dzbar_k} d/dz_j|
  bool pure = false;
  double rationalization_error = 0.0;
  PolarizationReport polarization;
};

struct VhsReport {
  std::vector<VhsPointReport> points;
  double tol = 0.0;
  /// Sign convention of the polarizing form, reported rather than asserted.
  std::string polarization_convention;
  bool pass() const;
};

/// Weight-1 structure F^1 = T^{1,0} in the flat chart, rationalized at 1e-12.
/// Throws Errc::ill_conditioned when the rounding error exceeds 1e-9.
struct PointwiseHodge {
  HodgeStructure hodge;
  Filtration f;
  Filtration fbar;
  ExactMatrix tau;  ///< rationalized, symmetrized period matrix
  double rationalization_error;
};
PointwiseHodge pointwise_hodge(const Prepotential& f, const CVec& z);

/// Darboux form [[0, Id], [-Id, 0]] of the flat chart.
Polarization flat_polarization(std::size_t n);

VhsReport vhs_from_special_kahler(const Prepotential& f, const std::vector<CVec>& points, double tol);

}  // namespace skw
