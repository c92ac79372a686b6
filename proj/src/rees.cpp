#include "skw/rees.hpp"

#include <algorithm>
#include <functional>

#include "skw/error.hpp"

namespace skw {

ReesBundle::ReesBundle(Filtration f_, Filtration fbar_, int shift_)
    : f(std::move(f_)), fbar(std::move(fbar_)), shift(shift_) {
  if (f.ambient_dim() != fbar.ambient_dim())
    throw Error(Errc::dimension_mismatch, "filtrations live on spaces of different dimension");
}

int SplittingType::degree() const {
  int s = 0;
  for (int a : degrees) s += a;
  return s;
}

Rational SplittingType::slope() const {
  if (degrees.empty()) return Rational(0);
  Rational q(degree(), static_cast<long>(degrees.size()));
  q.canonicalize();
  return q;
}

std::vector<ReesGenerator> rees_generators(const Filtration& f) {
  const std::size_t n = f.ambient_dim();
  std::vector<ReesGenerator> out;
  Subspace current = Subspace::zero(n);
  for (int k = f.length() - 1; k >= 0; --k) {
    for (const auto& v : f.step(k).basis_vectors()) {
      if (current.contains(v)) continue;
      current = current.sum(Subspace(n, {v}));
      out.push_back({k, v});
    }
  }
  for (int k = 0; k < f.length(); ++k) {
    const auto count = std::count_if(out.begin(), out.end(), [k](const ReesGenerator& g) { return g.exponent == k; });
    if (static_cast<std::size_t>(count) != f.graded_dim(k))
      throw Error(Errc::inconsistent_profile, "adapted basis does not match graded dimensions");
  }
  return out;
}

Filtration filtration_from_module(std::size_t ambient_dim, const std::vector<ReesGenerator>& generators) {
  int top = 0;
  for (const auto& g : generators) {
    if (g.exponent < 0) throw Error(Errc::invalid_argument, "generator exponents must be non-negative");
    if (g.v.size() != ambient_dim) throw Error(Errc::dimension_mismatch, "generator has wrong length");
    top = std::max(top, g.exponent);
  }
  std::vector<Subspace> steps;
  for (int k = 0; k <= top + 1; ++k) {
    std::vector<ExactVector> vs;
    for (const auto& g : generators)
      if (g.exponent >= k) vs.push_back(g.v);
    steps.emplace_back(ambient_dim, vs);
  }
  if (steps.front() != Subspace::full(ambient_dim))
    throw Error(Errc::non_spanning, "generators do not span the space");
  return Filtration(ambient_dim, std::move(steps));
}

long h0(const ReesBundle& b, int m) {
  const int mm = m + b.shift;
  long total = 0;
  for (int d = 1 - b.f.length(); d <= mm + b.fbar.length() - 1; ++d)
    total += static_cast<long>(b.f.step(-d).intersect(b.fbar.step(d - mm)).dim());
  return total;
}

int degree_formula(const ReesBundle& b) {
  int deg = 0;
  for (int p = 0; p < b.f.length(); ++p) deg += p * static_cast<int>(b.f.graded_dim(p));
  for (int q = 0; q < b.fbar.length(); ++q) deg += q * static_cast<int>(b.fbar.graded_dim(q));
  return deg + b.shift * static_cast<int>(b.rank());
}

SplittingType splitting_type(const ReesBundle& b) {
  const long r = static_cast<long>(b.rank());
  const int span = b.f.length() + b.fbar.length();
  const int m0 = -span - 1 - b.shift;
  if (h0(b, m0) != 0) throw Error(Errc::inconsistent_profile, "inconsistent h0 profile: nonzero below window");

  std::vector<int> degrees;
  std::vector<std::pair<int, long>> profile{{m0, 0}};
  long prev_h = 0, prev_delta = 0;
  int saturated = 0;
  for (int m = m0 + 1; m <= m0 + 4 * span + 8; ++m) {
    const long h = h0(b, m);
    const long delta = h - prev_h;
    if (delta < prev_delta || delta > r)
      throw Error(Errc::inconsistent_profile, "inconsistent h0 profile at m=" + std::to_string(m));
    for (long c = 0; c < delta - prev_delta; ++c) degrees.push_back(-m);
    profile.emplace_back(m, h);
    saturated = (delta == r) ? saturated + 1 : 0;
    prev_h = h;
    prev_delta = delta;
    if (saturated >= 2) break;
  }
  if (saturated < 2 || static_cast<long>(degrees.size()) != r)
    throw Error(Errc::inconsistent_profile, "inconsistent h0 profile: no saturation in window");

  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  for (const auto& [m, h] : profile) {
    long fit = 0;
    for (int a : degrees) fit += std::max(a + m + 1, 0);
    if (fit != h) throw Error(Errc::inconsistent_profile, "inconsistent h0 profile: fit fails at m=" + std::to_string(m));
  }
  SplittingType st{std::move(degrees)};
  if (st.degree() != degree_formula(b))
    throw Error(Errc::inconsistent_profile, "inconsistent h0 profile: degree " + std::to_string(st.degree()) +
                                                " differs from filtration degree " +
                                                std::to_string(degree_formula(b)));
  return st;
}

bool is_semistable_of_slope(const ReesBundle& b, int w) {
  const SplittingType st = splitting_type(b);
  return std::all_of(st.degrees.begin(), st.degrees.end(), [w](int a) { return a == w; });
}

bool purity_oracle(const Filtration& f, const Filtration& fbar, int w) {
  const std::size_t n = f.ambient_dim();
  if (fbar.ambient_dim() != n) throw Error(Errc::dimension_mismatch, "filtrations differ in dimension");
  std::size_t total = 0;
  Subspace sum = Subspace::zero(n);
  for (int p = w - fbar.length() + 1; p <= f.length() - 1; ++p) {
    const Subspace piece = f.step(p).intersect(fbar.step(w - p));
    total += piece.dim();
    sum = sum.sum(piece);
  }
  return total == n && sum.dim() == n;
}

}  // namespace skw
