#include "skw/numerics/rationalize.hpp"

#include <cmath>

#include "skw/error.hpp"

namespace skw {

Rational rationalize(double x, double tol) {
  if (!std::isfinite(x)) throw Error(Errc::invalid_argument, "cannot rationalize a non-finite value");
  // convergents h/k of the continued fraction of x
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double rem = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    Rational approx(h, k);
    approx.canonicalize();
    if (std::abs(x - approx.get_d()) <= tol || rem == 0.0) return approx;
    const double inv = 1.0 / rem;
    if (inv > 1e15) return approx;  // next convergent is below double resolution
    const double a = std::floor(inv);
    rem = inv - a;
    const mpz_class ai = static_cast<long>(a);
    mpz_class h_next = ai * h + h_prev;
    mpz_class k_next = ai * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  Rational approx(h, k);
  approx.canonicalize();
  return approx;
}

ExactComplex rationalize(Complex z, double tol) {
  return {rationalize(z.real(), tol), rationalize(z.imag(), tol)};
}

RationalizedMatrix rationalize(const CMat& m, double tol) {
  RationalizedMatrix out{ExactMatrix(m.rows(), m.cols()), 0.0};
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out.value(r, c) = rationalize(m(r, c), tol);
      out.max_error = std::max(out.max_error, std::abs(m(r, c) - to_complex(out.value(r, c))));
    }
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

Complex to_complex(const ExactComplex& z) { return {z.re().get_d(), z.im().get_d()}; }

RMat to_dense(const RationalMatrix& m) {
  RMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

CMat to_dense(const ExactMatrix& m) {
  CMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = to_complex(m(r, c));
  return out;
}

}  // namespace skw
