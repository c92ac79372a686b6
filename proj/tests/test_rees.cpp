#include <gtest/gtest.h>

#include <algorithm>

#include "skw/error.hpp"
#include "skw/rees.hpp"
#include "support.hpp"

namespace skw {
namespace {

using testing::random_filtration;
using testing::random_invertible;
using testing::section_count_oracle;

ExactVector unit(std::size_t n, std::size_t k) {
  ExactVector v(n);
  v[k] = 1;
  return v;
}

/// F^0 = ... = F^top = <vs>, intermediate steps given explicitly.
Filtration make(std::size_t n, const std::vector<std::vector<ExactVector>>& steps) {
  std::vector<Subspace> s{Subspace::full(n)};
  for (const auto& vs : steps) s.emplace_back(n, vs);
  return Filtration::complete(n, std::move(s));
}

Filtration transform(const Filtration& f, const ExactMatrix& g) {
  std::vector<Subspace> steps;
  for (const auto& s : f.steps()) steps.push_back(s.image(g));
  return Filtration(f.ambient_dim(), std::move(steps));
}

/// Direct sum with the second summand placed in the trailing coordinates.
Filtration direct_sum(const Filtration& a, const Filtration& b) {
  const std::size_t na = a.ambient_dim(), nb = b.ambient_dim(), n = na + nb;
  const int len = std::max(a.length(), b.length());
  std::vector<Subspace> steps;
  for (int p = 0; p <= len; ++p) {
    std::vector<ExactVector> vs;
    for (const auto& v : a.step(p).basis_vectors()) {
      ExactVector w(n);
      std::copy(v.begin(), v.end(), w.begin());
      vs.push_back(w);
    }
    for (const auto& v : b.step(p).basis_vectors()) {
      ExactVector w(n);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<long>(na));
      vs.push_back(w);
    }
    steps.emplace_back(n, vs);
  }
  return Filtration(n, std::move(steps));
}

/// Pure weight-w pair on C^n: F^p = V for p <= w, Fbar trivial.
ReesBundle pure_shifted(std::size_t n, int w) {
  std::vector<Subspace> steps(static_cast<std::size_t>(w) + 1, Subspace::full(n));
  return ReesBundle(Filtration::complete(n, std::move(steps)), Filtration::trivial(n));
}

TEST(ReesModule, TrivialGenerator) {
  const Filtration f = filtration_from_module(1, {{0, unit(1, 0)}});
  EXPECT_EQ(f, Filtration::trivial(1));
}

TEST(ReesModule, ShiftedGenerator) {
  const Filtration f = filtration_from_module(1, {{1, unit(1, 0)}});
  EXPECT_EQ(f.length(), 2);
  EXPECT_EQ(f.step(1), Subspace::full(1));
}

TEST(ReesModule, MixedGenerators) {
  const Filtration f = filtration_from_module(2, {{1, unit(2, 0)}, {0, unit(2, 1)}});
  EXPECT_EQ(f, make(2, {{unit(2, 0)}}));
}

TEST(ReesModule, RedundantGeneratorsDoNotChangeTheModule) {
  const Filtration f = filtration_from_module(2, {{1, unit(2, 0)}, {0, unit(2, 0)}, {0, unit(2, 1)}});
  EXPECT_EQ(f, make(2, {{unit(2, 0)}}));
}

TEST(ReesModule, Errors) {
  try {
    filtration_from_module(2, {{0, unit(2, 0)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_spanning);
  }
  try {
    filtration_from_module(1, {{-1, unit(1, 0)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}

TEST(ReesModule, RoundTripOnRandomFiltrations) {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const Filtration f = random_filtration(rng, 4, 4);
    auto gens = rees_generators(f);
    EXPECT_EQ(filtration_from_module(4, gens), f);
    // multiplying a generator by z adds nothing new
    for (const auto& g : rees_generators(f))
      if (g.exponent > 0) gens.push_back({g.exponent - 1, g.v});
    EXPECT_EQ(filtration_from_module(4, gens), f);
  }
}

TEST(H0, PureLineOfWeightW) {
  for (int w = 0; w <= 4; ++w) EXPECT_EQ(h0(pure_shifted(1, w), 0), w + 1);
}

TEST(H0, WorkedExample) {
  const Filtration f = make(2, {{unit(2, 0)}});
  const ReesBundle b(f, f);
  EXPECT_EQ(h0(b, 0), 4);
  EXPECT_EQ(h0(b, -1), 2);
  EXPECT_EQ(h0(b, -2), 1);
  EXPECT_EQ(h0(b, -3), 0);
  EXPECT_EQ(h0(b, -10), 0);
  for (int m = -4; m <= 3; ++m) EXPECT_EQ(h0(b, m), section_count_oracle(f, f, m)) << m;
}

TEST(H0, MatchesIndependentCountOnRandomPairs) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const Filtration f = random_filtration(rng, 3, 3), fb = random_filtration(rng, 3, 3);
    const ReesBundle b(f, fb);
    for (int m = -5; m <= 2; ++m) ASSERT_EQ(h0(b, m), section_count_oracle(f, fb, m)) << t << " " << m;
  }
}

TEST(H0, ConvexProfile) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const ReesBundle b(random_filtration(rng, 4, 3), random_filtration(rng, 4, 3));
    for (int m = -8; m <= 4; ++m) {
      const long d1 = h0(b, m) - h0(b, m - 1), d2 = h0(b, m + 1) - h0(b, m);
      EXPECT_LE(d1, d2);
      EXPECT_LE(d2, static_cast<long>(b.rank()));
    }
  }
}

TEST(Splitting, Examples) {
  const Filtration e1 = make(2, {{unit(2, 0)}});
  EXPECT_EQ(splitting_type(ReesBundle(e1, e1)).degrees, (std::vector<int>{2, 0}));
  EXPECT_EQ(splitting_type(ReesBundle(Filtration::trivial(3), Filtration::trivial(3))).degrees,
            (std::vector<int>{0, 0, 0}));
  // opposed lines: F^1 = <e1>, Fbar^1 = <e2>
  const Filtration e2 = make(2, {{unit(2, 1)}});
  EXPECT_EQ(splitting_type(ReesBundle(e1, e2)).degrees, (std::vector<int>{1, 1}));
  EXPECT_EQ(splitting_type(pure_shifted(2, 3)).degrees, (std::vector<int>{3, 3}));
}

TEST(Splitting, TwistShiftsEveryDegree) {
  const Filtration e1 = make(2, {{unit(2, 0)}});
  for (int s = -2; s <= 2; ++s)
    EXPECT_EQ(splitting_type(ReesBundle(e1, e1, s)).degrees, (std::vector<int>{2 + s, s}));
}

TEST(Splitting, SlopeIsAverageDegree) {
  SplittingType t{{2, 1, 0}};
  EXPECT_EQ(t.degree(), 3);
  EXPECT_EQ(t.slope(), Rational(1));
  t.degrees = {1, 0};
  EXPECT_EQ(t.slope(), Rational(1, 2));
}

TEST(Splitting, DegreeMatchesGradedFormula) {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const ReesBundle b(random_filtration(rng, 4, 4), random_filtration(rng, 4, 4));
    const SplittingType s = splitting_type(b);
    EXPECT_EQ(s.degree(), degree_formula(b));
    EXPECT_TRUE(std::is_sorted(s.degrees.rbegin(), s.degrees.rend()));
  }
}

TEST(Splitting, InvariantUnderGL) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Filtration f = random_filtration(rng, 3, 3), fb = random_filtration(rng, 3, 3);
    const ExactMatrix g = random_invertible(rng, 3);
    EXPECT_EQ(splitting_type(ReesBundle(f, fb)).degrees,
              splitting_type(ReesBundle(transform(f, g), transform(fb, g))).degrees);
  }
}

TEST(Splitting, AdditiveUnderDirectSum) {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const Filtration a = random_filtration(rng, 2, 3), ab = random_filtration(rng, 2, 3);
    const Filtration c = random_filtration(rng, 2, 3), cb = random_filtration(rng, 2, 3);
    auto expected = splitting_type(ReesBundle(a, ab)).degrees;
    const auto other = splitting_type(ReesBundle(c, cb)).degrees;
    expected.insert(expected.end(), other.begin(), other.end());
    std::sort(expected.rbegin(), expected.rend());
    EXPECT_EQ(splitting_type(ReesBundle(direct_sum(a, c), direct_sum(ab, cb))).degrees, expected);
  }
}

TEST(Semistability, PurityEquivalence) {
  Rng rng(12);
  int pure_seen = 0;
  for (int t = 0; t < 120; ++t) {
    const Filtration f = random_filtration(rng, 2, 3), fb = random_filtration(rng, 2, 3);
    const ReesBundle b(f, fb);
    for (int w = -1; w <= 4; ++w) {
      const bool pure = purity_oracle(f, fb, w);
      pure_seen += pure;
      EXPECT_EQ(is_semistable_of_slope(b, w), pure) << t << " w=" << w;
    }
  }
  EXPECT_GT(pure_seen, 0);
}

TEST(Semistability, WorkedExampleIsUnstable) {
  const Filtration e1 = make(2, {{unit(2, 0)}});
  for (int w = 0; w <= 2; ++w) {
    EXPECT_FALSE(is_semistable_of_slope(ReesBundle(e1, e1), w));
    EXPECT_FALSE(purity_oracle(e1, e1, w));
  }
}

TEST(H0, VanishesBelowTheWindow) {
  Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    const ReesBundle b(random_filtration(rng, 3, 4), random_filtration(rng, 3, 4));
    for (int m = -(b.f.length() + b.fbar.length()) - 3; m <= -(b.f.length() + b.fbar.length()); ++m)
      EXPECT_EQ(h0(b, m), 0);
  }
}

TEST(Semistability, NamedExamples) {
  // pure weight 1 on C^4: F^1 = <e1, e2>, Fbar^1 = <e3, e4>
  const Filtration f = make(4, {{unit(4, 0), unit(4, 1)}});
  const Filtration fb = make(4, {{unit(4, 2), unit(4, 3)}});
  EXPECT_TRUE(is_semistable_of_slope(ReesBundle(f, fb), 1));
  EXPECT_TRUE(purity_oracle(f, fb, 1));
  EXPECT_EQ(splitting_type(ReesBundle(f, fb)).degrees, (std::vector<int>{1, 1, 1, 1}));
  // pure weight 2 of type (1,1) on C^1
  const Filtration one = make(1, {{unit(1, 0)}});
  EXPECT_TRUE(is_semistable_of_slope(ReesBundle(one, one), 2));
  EXPECT_TRUE(purity_oracle(one, one, 2));
}

TEST(Semistability, RandomPureStructures) {
  Rng rng(16);
  for (int t = 0; t < 30; ++t) {
    // types (k, w - k) on a random basis
    const std::size_t n = 3;
    const int w = static_cast<int>(rng.integer(0, 3));
    const ExactMatrix g = random_invertible(rng, n);
    std::vector<int> type(n);
    for (auto& k : type) k = static_cast<int>(rng.integer(0, w));
    std::vector<Subspace> fs, fbs;
    for (int p = 0; p <= w + 1; ++p) {
      std::vector<ExactVector> a, b;
      for (std::size_t c = 0; c < n; ++c) {
        if (type[c] >= p) a.push_back(g.col(c));
        if (w - type[c] >= p) b.push_back(g.col(c));
      }
      fs.emplace_back(n, a);
      fbs.emplace_back(n, b);
    }
    const Filtration f = Filtration::complete(n, fs), fb = Filtration::complete(n, fbs);
    EXPECT_TRUE(purity_oracle(f, fb, w));
    EXPECT_TRUE(is_semistable_of_slope(ReesBundle(f, fb), w));
  }
}

TEST(Semistability, ForcedOverlapIsImpureAndUnbalanced) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    // F^1 and Fbar^1 share a random line in C^2
    const Subspace line = testing::random_subspace(rng, 2, 1);
    const Filtration f = Filtration::complete(2, {Subspace::full(2), line});
    EXPECT_FALSE(purity_oracle(f, f, 1));
    const auto d = splitting_type(ReesBundle(f, f)).degrees;
    EXPECT_NE(d.front(), d.back());
  }
}

}  // namespace
}  // namespace skw
