#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skw/numerics/dense.hpp"

namespace skw {

/// Third derivatives C, stored as c[a](b, c) = d^3 F / dz_a dz_b dz_c.
using ThirdDerivatives = std::vector<CMat>;

/// A holomorphic prepotential with analytic derivatives up to third order and
/// an explicit domain of validity.
class Prepotential {
 public:
  struct Provider {
    std::function<Complex(const CVec&)> value;
    std::function<CVec(const CVec&)> grad;
    std::function<CMat(const CVec&)> hess;
    std::function<ThirdDerivatives(const CVec&)> third;
    /// Extra exclusions (branch cuts, poles); positivity of Im tau is always required on top.
    std::function<bool(const CVec&)> admissible;
  };

  Prepotential(int dim, Provider provider);

  int dim() const { return dim_; }
  bool in_domain(const CVec& z) const;

  // All evaluators throw Errc::outside_domain off the domain.
  Complex value(const CVec& z) const;
  CVec grad(const CVec& z) const;
  CMat hess(const CVec& z) const;
  ThirdDerivatives third(const CVec& z) const;

 private:
  void require_domain(const CVec& z) const;

  int dim_;
  Provider p_;
};

/// tau = Hess F.
CMat eval_tau(const Prepotential& f, const CVec& z);
/// w = grad F.
CVec magnetic_coords(const Prepotential& f, const CVec& z);

/// u = (Re z, Im z).
RVec to_real_chart(const CVec& z);
CVec from_real_chart(const RVec& u);

/// Axis-aligned box in the real chart from which sample points are drawn.
struct SampleBox {
  RVec lo;
  RVec hi;
};

struct CatalogEntry {
  std::string name;
  Prepotential prepotential;
  std::map<std::string, Complex> parameters;
  SampleBox box;

  /// Canonical `name(key=value,...)` selector string.
  std::string selector() const;
};

/// F = 1/2 z^T tau0 z; requires tau0 symmetric with Im tau0 positive definite.
Prepotential quadratic_prepotential(const CMat& tau0);
/// F = z^3 on the upper half plane.
Prepotential cubic_prepotential();
/// F = (i / 2pi) z^2 log(z^2 / lambda^2), principal branch of log(z / lambda).
Prepotential swlog_prepotential(Complex lambda);
/// F = i/2 (z1^2 + z2^2) + z1 z2^2.
Prepotential coupled_prepotential();

/// Default entries: quadratic, cubic, swlog, coupled.
std::vector<CatalogEntry> catalog();

/// Resolves "name" or "name(key=value,...)"; throws Errc::invalid_argument on unknown names or keys.
CatalogEntry make_entry(std::string_view selector);

/// Parses "a", "bi", "a+bi", "i" with decimal/exponent floats.
Complex parse_complex(std::string_view text);

}  // namespace skw
