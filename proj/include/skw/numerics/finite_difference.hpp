#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "skw/error.hpp"
#include "skw/numerics/dense.hpp"

namespace skw {

/// Default central-difference step.
inline constexpr double kDefaultStep = 1e-5;

using VectorField = std::function<RVec(const RVec&)>;

/// Central-difference Jacobian, column j = (f(x + h e_j) - f(x - h e_j)) / 2h.
/// A failure at a stencil point is rethrown as Errc::stencil_failure naming the point.
RMat finite_diff_jacobian(const VectorField& f, const RVec& x, double h = kDefaultStep);

std::string format_point(const RVec& x);

/// Partial derivatives of an arbitrary field by central differences.
/// Value must support `a - b` and `a * double`.
template <class Field>
auto central_partials(const Field& f, const RVec& x, double h) {
  using Value = decltype(f(x));
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "finite-difference step must be positive");
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(x.size()));
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    RVec plus = x, minus = x;
    plus(j) += h;
    minus(j) -= h;
    Value fp, fm;
    try {
      fp = f(plus);
      fm = f(minus);
    } catch (const Error& e) {
      throw Error(Errc::stencil_failure, std::string(e.what()) + " at stencil point around " +
                                             format_point(x) + "; shrink step or move point");
    }
    out.push_back((fp - fm) * (0.5 / h));
  }
  return out;
}

/// Fourth-order central differences on the points x ± h e_j, x ± 2h e_j.
template <class Field>
auto central_partials4(const Field& f, const RVec& x, double h) {
  using Value = decltype(f(x));
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "finite-difference step must be positive");
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(x.size()));
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Value v[4];
    try {
      for (int k = 0; k < 4; ++k) {
        RVec y = x;
        y(j) += h * std::array<double, 4>{2.0, 1.0, -1.0, -2.0}[static_cast<std::size_t>(k)];
        v[k] = f(y);
      }
    } catch (const Error& e) {
      throw Error(Errc::stencil_failure, std::string(e.what()) + " at stencil point around " +
                                             format_point(x) + "; shrink step or move point");
    }
    out.push_back(((v[1] - v[2]) * 8.0 - (v[0] - v[3])) * (1.0 / (12.0 * h)));
  }
  return out;
}

}  // namespace skw
