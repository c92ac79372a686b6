#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace skw {

using Rational = mpq_class;

/// Gaussian rational re + im*i with both parts kept in canonical reduced form.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactComplex i() { return {Rational(0), Rational(1)}; }

  /// Parses "a/b+c/d*i"; either part may be omitted, "i" and "-i" are accepted.
  static ExactComplex parse(std::string_view text);
  std::string to_string() const;

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  ExactComplex conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const ExactComplex& z) { return z.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline ExactComplex conj(const ExactComplex& z) { return z.conj(); }
inline Rational conj(const Rational& q) { return q; }

/// "p/q" (or "p" for integers) for a canonical rational.
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace skw
