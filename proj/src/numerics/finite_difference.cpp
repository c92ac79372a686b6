#include "skw/numerics/finite_difference.hpp"

#include <iomanip>
#include <sstream>

namespace skw {

std::string format_point(const RVec& x) {
  std::ostringstream os;
  os << std::setprecision(17) << "(";
  for (Eigen::Index k = 0; k < x.size(); ++k) os << (k ? ", " : "") << x(k);
  os << ")";
  return os.str();
}

RMat finite_diff_jacobian(const VectorField& f, const RVec& x, double h) {
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "finite-difference step must be positive");
  RMat jac;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    RVec plus = x, minus = x;
    plus(j) += h;
    minus(j) -= h;
    RVec fp, fm;
    try {
      fp = f(plus);
    } catch (const std::exception& e) {
      throw Error(Errc::stencil_failure, std::string(e.what()) + " at " + format_point(plus));
    }
    try {
      fm = f(minus);
    } catch (const std::exception& e) {
      throw Error(Errc::stencil_failure, std::string(e.what()) + " at " + format_point(minus));
    }
    if (j == 0) jac.resize(fp.size(), x.size());
    jac.col(j) = (fp - fm) / (2.0 * h);
  }
  return jac;
}

}  // namespace skw
