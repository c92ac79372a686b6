#pragma once

#include <vector>

#include "skw/hodge.hpp"

namespace skw {

/// Bundle on P^1 glued from the Rees modules of F (at 0) and Fbar (at infinity),
/// optionally twisted by O(shift * infinity).
struct ReesBundle {
  Filtration f;
  Filtration fbar;
  int shift = 0;

  ReesBundle(Filtration f_, Filtration fbar_, int shift_ = 0);
  std::size_t rank() const { return f.ambient_dim(); }
};

struct SplittingType {
  std::vector<int> degrees;  ///< weakly decreasing

  int degree() const;
  std::size_t rank() const { return degrees.size(); }
  Rational slope() const;
};

struct ReesGenerator {
  int exponent;  ///< the generator is z^{-exponent} v
  ExactVector v;
};

/// Basis of V adapted to F, each vector tagged with the largest k such that v ∈ F^k.
std::vector<ReesGenerator> rees_generators(const Filtration& f);

/// F^k = {v : z^{-k} v lies in the module generated}. Throws Errc::non_spanning when the
/// generators do not span V and Errc::invalid_argument on negative exponents.
Filtration filtration_from_module(std::size_t ambient_dim, const std::vector<ReesGenerator>& generators);

/// h^0(S(m * infinity)) = Σ_d dim(F^{-d} ∩ Fbar^{d-m}).
long h0(const ReesBundle& b, int m);

/// Σ_p p dim Gr_F^p + Σ_q q dim Gr_Fbar^q.
int degree_formula(const ReesBundle& b);

/// Grothendieck degrees recovered from the jumps of h0 over a window where the
/// profile saturates. Throws Errc::inconsistent_profile if no multiset fits.
SplittingType splitting_type(const ReesBundle& b);

bool is_semistable_of_slope(const ReesBundle& b, int w);

/// Σ_{p+q=w} dim(F^p ∩ Fbar^q) = dim V with the intersections spanning V.
bool purity_oracle(const Filtration& f, const Filtration& fbar, int w);

}  // namespace skw
