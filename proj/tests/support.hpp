#pragma once

#include <cstdint>
#include <vector>

#include "skw/hodge.hpp"
#include "skw/numerics/rng.hpp"
#include "skw/rees.hpp"

namespace skw::testing {

inline Rational small_rational(Rng& rng, long span = 3) {
  Rational q(rng.integer(-span, span), rng.integer(1, 2));
  q.canonicalize();
  return q;
}

inline ExactComplex small_complex(Rng& rng, long span = 3) {
  return {small_rational(rng, span), small_rational(rng, span)};
}

inline ExactVector random_vector(Rng& rng, std::size_t n) {
  ExactVector v(n);
  for (auto& e : v) e = small_complex(rng);
  return v;
}

inline ExactMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = small_complex(rng);
    if (rank(m) == n) return m;
  }
}

inline RationalMatrix random_invertible_real(Rng& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = small_rational(rng);
    if (rank(m) == n) return m;
  }
}

inline Subspace random_subspace(Rng& rng, std::size_t n, std::size_t dim) {
  for (;;) {
    std::vector<ExactVector> vs;
    for (std::size_t k = 0; k < dim; ++k) vs.push_back(random_vector(rng, n));
    Subspace s(n, vs);
    if (s.dim() == dim) return s;
  }
}

/// Random complete filtration whose steps are random nested subspaces of C^n.
inline Filtration random_filtration(Rng& rng, std::size_t n, int max_len = 3) {
  const int len = static_cast<int>(rng.integer(1, max_len));
  std::vector<std::size_t> dims{n};
  for (int k = 1; k < len; ++k) dims.push_back(static_cast<std::size_t>(rng.integer(0, static_cast<long>(dims.back()))));
  // nested: F^k = span of the first dims[k] columns of a random invertible matrix
  const ExactMatrix g = random_invertible(rng, n);
  std::vector<Subspace> steps;
  for (std::size_t d : dims) {
    std::vector<ExactVector> cols;
    for (std::size_t c = 0; c < d; ++c) cols.push_back(g.col(c));
    steps.emplace_back(n, cols);
  }
  return Filtration::complete(n, std::move(steps));
}

/// Random weight-1 Hodge structure on C^m: r = S conj S^{-1}, V^{1,0} a random
/// half-dimensional subspace transverse to its conjugate.
inline HodgeStructure random_weight1(Rng& rng, std::size_t m) {
  const RealStructure r = RealStructure::conjugated_by(random_invertible(rng, m));
  for (;;) {
    const Subspace v10 = random_subspace(rng, m, m / 2);
    const Subspace v01 = r.apply(v10);
    if (v10.intersect(v01).is_zero()) return HodgeStructure(1, {v01, v10}, r);
  }
}

/// Left multiplication by i and j on H^n in the real basis (1, i, j, k) per factor.
inline QuaternionicStructure standard_quaternionic(std::size_t n) {
  RationalMatrix i(4 * n, 4 * n), j(4 * n, 4 * n);
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t o = 4 * b;
    // i*1 = i, i*i = -1, i*j = k, i*k = -j
    i(o + 1, o + 0) = 1;
    i(o + 0, o + 1) = -1;
    i(o + 3, o + 2) = 1;
    i(o + 2, o + 3) = -1;
    // j*1 = j, j*i = -k, j*j = -1, j*k = i
    j(o + 2, o + 0) = 1;
    j(o + 3, o + 1) = -1;
    j(o + 0, o + 2) = -1;
    j(o + 1, o + 3) = 1;
  }
  return {i, j};
}

inline QuaternionicStructure random_quaternionic(Rng& rng, std::size_t n) {
  const RationalMatrix g = random_invertible_real(rng, 4 * n);
  const RationalMatrix gi = inverse(g);
  const auto s = standard_quaternionic(n);
  return {g * s.i * gi, g * s.j * gi};
}

/// Independent count of global sections of S(m * infinity): the dimension of the solution
/// space of the stacked coefficient constraints s_d ∈ F^{-d}, s_d ∈ Fbar^{d-m}, computed as
/// one nullspace over all degrees in a window.
inline long section_count_oracle(const Filtration& f, const Filtration& fbar, int m) {
  const std::size_t n = f.ambient_dim();
  const int lo = -f.length() - fbar.length() - std::abs(m) - 2;
  const int hi = f.length() + fbar.length() + std::abs(m) + 2;
  const std::size_t degrees = static_cast<std::size_t>(hi - lo + 1);
  std::vector<ExactVector> rows;
  for (int d = lo; d <= hi; ++d) {
    const std::size_t off = static_cast<std::size_t>(d - lo) * n;
    for (const Subspace* s : {&f.step(-d), &fbar.step(d - m)}) {
      // constraint: the coefficient is annihilated by every functional vanishing on s
      const auto annihilators = nullspace(s->basis());
      for (const auto& a : annihilators) {
        ExactVector row(degrees * n);
        for (std::size_t k = 0; k < n; ++k) row[off + k] = a[k];
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return static_cast<long>(degrees * n);
  const auto sol = nullspace(ExactMatrix::from_rows(rows, degrees * n));
  return static_cast<long>(sol.size());
}

}  // namespace skw::testing
