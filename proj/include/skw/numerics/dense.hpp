#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace skw {

using Complex = std::complex<double>;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using FloatComplexMatrix = CMat;

/// Relative singular-value cutoff for rank decisions on float matrices.
inline constexpr double kRankTolerance = 1e-9;

/// Rank with singular values below rel_tol * sigma_max treated as zero.
int numerical_rank(const CMat& m, double rel_tol = kRankTolerance);

/// Throws Errc::invalid_argument if any entry is NaN or infinite.
void require_finite(const CMat& m, const char* what);
void require_finite(const RMat& m, const char* what);

double max_abs(const RMat& m);
double max_abs(const CMat& m);
double max_abs(const std::vector<RMat>& ms);
double max_abs(const std::vector<CMat>& ms);

/// [[Re, -Im], [Im, Re]].
RMat realify(const CMat& m);

/// Lower-case `i` on R^{2n} = C^n in (Re, Im) coordinates.
RMat standard_complex_structure(int n);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const RMat& symmetric);

}  // namespace skw
