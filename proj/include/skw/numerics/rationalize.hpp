#pragma once

#include "skw/numerics/dense.hpp"
#include "skw/numerics/exact_complex.hpp"
#include "skw/numerics/matrix.hpp"

namespace skw {

/// Continued-fraction convergent closest to x with |x - p/q| <= tol.
Rational rationalize(double x, double tol = 1e-12);
ExactComplex rationalize(Complex z, double tol = 1e-12);

struct RationalizedMatrix {
  ExactMatrix value;
  double max_error = 0.0;  ///< sup-norm of (input - value)
};

RationalizedMatrix rationalize(const CMat& m, double tol = 1e-12);

double to_double(const Rational& q);
Complex to_complex(const ExactComplex& z);
RMat to_dense(const RationalMatrix& m);
CMat to_dense(const ExactMatrix& m);

}  // namespace skw
