#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skw/numerics/dense.hpp"
#include "skw/numerics/finite_difference.hpp"
#include "skw/prepotential.hpp"

namespace skw {

/// Christoffel symbols in the real chart u = (Re z, Im z): gamma[i](k, j) = Gamma^k_{ij}.
/// Component i is the connection matrix for the direction du^i.
using Christoffels = std::vector<RMat>;

/// Endomorphism-valued 1-form; c[i] pairs with du^i.
struct EndForm1 {
  std::vector<CMat> c;

  static EndForm1 from_real(const Christoffels& g);
  friend EndForm1 operator-(const EndForm1& a, const EndForm1& b);
  friend EndForm1 operator+(const EndForm1& a, const EndForm1& b);
  friend EndForm1 operator*(const EndForm1& a, double s);
};

/// Endomorphism-valued 2-form, full antisymmetric storage c[i * d + j].
struct EndForm2 {
  int d = 0;
  std::vector<CMat> c;

  EndForm2() = default;
  EndForm2(int dim, int rank);
  CMat& operator()(int i, int j) { return c[static_cast<std::size_t>(i * d + j)]; }
  const CMat& operator()(int i, int j) const { return c[static_cast<std::size_t>(i * d + j)]; }
  double max_abs() const;
};

struct MetricData {
  CMat tau;
  RMat im_tau;             ///< g_{j kbar} = Im tau_{jk}
  RMat g;                  ///< real 2n x 2n form diag(Im tau, Im tau)
  RMat omega;              ///< omega(X, Y) = g(X, I Y), matrix g * I
  RMat complex_structure;  ///< I in the real chart
};

/// Throws Errc::metric_degenerate when Im tau is not positive definite.
MetricData metric_at(const Prepotential& f, const CVec& z);

struct FlatChart {
  RVec xi;                  ///< (x, y) = (Re z, Re w)
  RVec p;                   ///< Im z
  RVec q;                   ///< Im w
  RMat jacobian;            ///< d xi / du
  std::vector<RMat> second; ///< second[a](i, j) = d^2 xi^a / du^i du^j
  RMat pq_jacobian;         ///< d(p, q) / du
};

/// Throws Errc::flat_chart_degenerate when d xi / du is singular.
FlatChart flat_chart_at(const Prepotential& f, const CVec& z);

/// Matrix of I in the flat chart, J I_u J^{-1}.
RMat flat_complex_structure(const FlatChart& chart);
/// d(p, q) / d(x, y).
RMat flat_pq_derivative(const FlatChart& chart);
/// omega components in the flat (x, y) chart.
RMat flat_omega(const FlatChart& chart, const MetricData& metric);

Christoffels flat_connection_at(const Prepotential& f, const CVec& z);
Christoffels levi_civita_at(const Prepotential& f, const CVec& z);

/// Chern connection in holomorphic coordinates: result[i](k, j) = Gamma^k_{ij}.
std::vector<CMat> chern_christoffels(const Prepotential& f, const CVec& z);

/// Type projectors on T^C for the real-chart complex structure.
CMat projector_10(const RMat& complex_structure);
CMat projector_01(const RMat& complex_structure);

struct HiggsField {
  EndForm1 a;                 ///< (1,0)-form with values in Hom(T^{1,0}, T^{0,1})
  EndForm1 a_bar;             ///< entrywise conjugate of a
  double off_type_residual;   ///< sup-norm of (nabla - D) - a - a_bar
};

HiggsField higgs_at(const Prepotential& f, const CVec& z);

struct SpecialKahlerPointData {
  CVec z;
  MetricData metric;
  Christoffels gamma_d;
  Christoffels gamma_nabla;
  HiggsField higgs;
  EndForm2 curvature_d;  ///< R_D by central differences of gamma_d
};

SpecialKahlerPointData point_data(const Prepotential& f, const CVec& z, double h = kDefaultStep);

struct Residual {
  std::string name;
  double value;
  double threshold;
  bool pass() const { return value < threshold; }
};

struct ResidualReport {
  std::vector<Residual> residuals;

  bool pass() const;
  double max() const;
  double value(const std::string& name) const;
  void add(std::string name, double value, double threshold);
  void append(const ResidualReport& other);
};

/// Flatness identity and its type components:
/// flatness: R_D + d_D A_R + A_R^A_R with A_R = nabla - D; flatness_20: d_D A + A^A;
/// flatness_02: dbar Abar + Abar^Abar; flatness_11: the (1,1) part; del_A: (d_D A)^{2,0};
/// dbar_Abar: (d_D Abar)^{0,2}; del_Abar: (d_D Abar)^{1,1}; curvature_balance: R_D + A^Abar + Abar^A;
/// dbar_A: (d_D A)^{1,1}.
ResidualReport check_equations(const Prepotential& f, const CVec& z, double tol,
                               double h = kDefaultStep);

/// d_nabla I symmetry, nabla omega, d omega, Re Omega, tau symmetry.
ResidualReport check_special_conditions(const Prepotential& f, const CVec& z, double tol,
                                        double h = kDefaultStep);

/// Pointwise structural identities: metric, complex structure, Kaehler potential,
/// flat-chart Darboux and nabla X certificates, torsion, D g, D I, flatness of nabla,
/// Higgs type, A^A, Chern formula agreement.
ResidualReport check_geometry(const Prepotential& f, const CVec& z, double h = kDefaultStep);

/// K = Im(sum w_i conj(z_i)) and its real gradient in the u chart.
double kahler_potential(const Prepotential& f, const CVec& z);
RVec kahler_potential_gradient(const Prepotential& f, const CVec& z);
/// d^2 K / dz_j dzbar_k from central differences of the gradient.
CMat kahler_complex_hessian(const Prepotential& f, const CVec& z, double h = kDefaultStep);

struct ClosedPath {
  std::function<CVec(double)> point;     ///< t in [0, 2 pi)
  std::function<CVec(double)> velocity;  ///< dz/dt
};

/// z(t) = center + radius (cos t d1 + sin t d2).
ClosedPath loop_path(const CVec& center, double radius, const CVec& d1, const CVec& d2);

struct LagrangianReport {
  double max_pullback = 0.0;   ///< sup |tau - tau^T| along the path
  double loop_integral = 0.0;  ///< |closed integral of sum w_r dz_r|
  bool pass = false;
};

LagrangianReport lagrangian_graph_check(const Prepotential& f, const ClosedPath& path,
                                        int nodes = 256);

/// Seeded uniform draws from the entry's box, keeping points whose axis stencil at
/// distance 10 h stays inside the domain. Throws Errc::sampling_failure when the
/// rejection budget runs out.
std::vector<CVec> sample_points(const CatalogEntry& entry, int count, std::uint64_t seed,
                                double h = kDefaultStep);

}  // namespace skw
