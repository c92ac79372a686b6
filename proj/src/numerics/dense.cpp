#include "skw/numerics/dense.hpp"

#include <cmath>
#include <string>

#include "skw/error.hpp"

namespace skw {

int numerical_rank(const CMat& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rel_tol * s(0);
  int r = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s(k) > cutoff) ++r;
  return r;
}

void require_finite(const CMat& m, const char* what) {
  if (!m.allFinite()) throw Error(Errc::invalid_argument, std::string(what) + " has non-finite entries");
}

void require_finite(const RMat& m, const char* what) {
  if (!m.allFinite()) throw Error(Errc::invalid_argument, std::string(what) + " has non-finite entries");
}

double max_abs(const RMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const std::vector<RMat>& ms) {
  double out = 0.0;
  for (const auto& m : ms) out = std::max(out, max_abs(m));
  return out;
}

double max_abs(const std::vector<CMat>& ms) {
  double out = 0.0;
  for (const auto& m : ms) out = std::max(out, max_abs(m));
  return out;
}

RMat realify(const CMat& m) {
  const auto r = m.rows(), c = m.cols();
  RMat out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = m.real();
  out.topRightCorner(r, c) = -m.imag();
  out.bottomLeftCorner(r, c) = m.imag();
  out.bottomRightCorner(r, c) = m.real();
  return out;
}

RMat standard_complex_structure(int n) {
  return realify(Complex(0.0, 1.0) * CMat::Identity(n, n));
}

double min_eigenvalue(const RMat& symmetric) {
  Eigen::SelfAdjointEigenSolver<RMat> es(symmetric, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace skw
