#include <gtest/gtest.h>

#include "skw/error.hpp"
#include "skw/hodge.hpp"
#include "skw/special_kahler.hpp"
#include "support.hpp"

namespace skw {
namespace {

using testing::random_invertible;
using testing::random_quaternionic;
using testing::random_weight1;
using testing::standard_quaternionic;

const ExactComplex I = ExactComplex::i();

Filtration flag(std::size_t n, std::vector<std::vector<ExactVector>> steps) {
  std::vector<Subspace> s{Subspace::full(n)};
  for (auto& vs : steps) s.emplace_back(n, vs);
  return Filtration::complete(n, std::move(s));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;
}

TEST(Filtration, ValidatesShape) {
  const Subspace line(2, {{1, 0}});
  EXPECT_EQ(code_of([&] { Filtration(2, {line, Subspace::zero(2)}); }), Errc::incomplete_filtration);
  EXPECT_EQ(code_of([&] { Filtration(2, {Subspace::full(2), line}); }), Errc::incomplete_filtration);
  EXPECT_EQ(code_of([&] { Filtration(2, {Subspace::full(2), Subspace::zero(2), line}); }),
            Errc::incomplete_filtration);
  const Filtration f = flag(2, {{{1, 0}}});
  EXPECT_EQ(f.length(), 2);
  EXPECT_EQ(f.step(-3), Subspace::full(2));
  EXPECT_EQ(f.step(5), Subspace::zero(2));
  EXPECT_EQ(f.graded_dim(0), 1u);
  EXPECT_EQ(f.graded_dim(1), 1u);
}

TEST(RealStructure, RejectsLinearOrNonInvolutiveMaps) {
  EXPECT_THROW(RealStructure(RationalMatrix::identity(2)), Error);  // linear, not anti-linear
  RationalMatrix twice = RealStructure::conjugation(1).matrix();
  twice(0, 0) = 2;
  EXPECT_THROW(RealStructure(std::move(twice)), Error);
  const RealStructure r = RealStructure::conjugation(2);
  EXPECT_EQ(r.apply(ExactVector{I, 1}), (ExactVector{-I, 1}));
}

TEST(FiltrationToHodge, TransverseLineAndConjugate) {
  const RealStructure r = RealStructure::conjugation(2);
  const Filtration f = flag(2, {{{1, I}}});
  const HodgeStructure h = filtration_to_hodge(f, r.apply(f), r, 1);
  EXPECT_EQ(h.component(1), Subspace(2, {{1, I}}));
  EXPECT_EQ(h.component(0), Subspace(2, {{1, -I}}));
}

TEST(FiltrationToHodge, RealLineIsNotPure) {
  const RealStructure r = RealStructure::conjugation(2);
  const Filtration f = flag(2, {{{1, 0}}});
  try {
    filtration_to_hodge(f, r.apply(f), r, 1);
    FAIL() << "expected impurity";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_pure);
    EXPECT_NE(std::string(e.what()).find("not pure of weight 1"), std::string::npos);
  }
}

TEST(FiltrationToHodge, RequiresConjugateFiltration) {
  const RealStructure r = RealStructure::conjugation(2);
  const Filtration f = flag(2, {{{1, I}}});
  EXPECT_THROW(filtration_to_hodge(f, flag(2, {{{1, 2}}}), r, 1), Error);
}

TEST(FiltrationToHodge, RoundTripOnRandomStructures) {
  Rng rng(7);
  for (int t = 0; t < 25; ++t) {
    const HodgeStructure h = random_weight1(rng, 4);
    const auto fil = hodge_to_filtration(h);
    const HodgeStructure back = filtration_to_hodge(fil.f, fil.fbar, h.real(), 1);
    EXPECT_EQ(back.components(), h.components());
    EXPECT_EQ(h.component(0).dim(), h.component(1).dim());
  }
}

TEST(FiltrationToHodge, WeightTwoRoundTrip) {
  // V = C^3 with V^{2,0} = <(1, i, 0)>, V^{1,1} = <(0, 0, 1)>, V^{0,2} = <(1, -i, 0)>
  const RealStructure r = RealStructure::conjugation(3);
  const HodgeStructure h(2, {Subspace(3, {{1, -I, 0}}), Subspace(3, {{0, 0, 1}}), Subspace(3, {{1, I, 0}})}, r);
  const auto fil = hodge_to_filtration(h);
  EXPECT_EQ(fil.f.step(1).dim(), 2u);
  EXPECT_EQ(fil.f.step(2).dim(), 1u);
  EXPECT_EQ(filtration_to_hodge(fil.f, fil.fbar, r, 2).components(), h.components());
  EXPECT_THROW(filtration_to_hodge(fil.f, fil.fbar, r, 1), Error);
}

TEST(Polarization, StandardExampleAndSignFlip) {
  const RealStructure r = RealStructure::conjugation(2);
  const Filtration f = flag(2, {{{1, I}}});
  const HodgeStructure h = filtration_to_hodge(f, r.apply(f), r, 1);
  ExactMatrix q = ExactMatrix::from_rows({{0, 1}, {-1, 0}}, 2);
  const PolarizationReport good = check_polarization(h, {q, 1});
  EXPECT_TRUE(good.pass());
  EXPECT_GT(good.min_positivity, 0);  // i * Q((1,i),(1,-i)) = i * (-2i) = 2 on the basis vector
  const PolarizationReport bad = check_polarization(h, {-q, 1});
  EXPECT_TRUE(bad.orthogonal);
  EXPECT_FALSE(bad.positive);
  EXPECT_THROW(check_polarization(h, {ExactMatrix(2, 2), 1}), Error);
}

TEST(Polarization, WeightTwoIdentity) {
  const RealStructure r = RealStructure::conjugation(1);
  const HodgeStructure h(2, {Subspace::zero(1), Subspace::full(1), Subspace::zero(1)}, r);
  const PolarizationReport rep = check_polarization(h, {ExactMatrix::identity(1), 2});
  EXPECT_TRUE(rep.pass());
}

TEST(Polarization, InvariantUnderChangeOfComponentBasis) {
  // the report depends only on the subspaces, so rebuilding them from scaled bases changes nothing
  const RealStructure r = RealStructure::conjugation(4);
  const HodgeStructure h(1, {Subspace(4, {{1, 0, -I, 0}, {0, 1, 0, -I}}), Subspace(4, {{1, 0, I, 0}, {0, 1, 0, I}})}, r);
  const ExactVector a{1, 0, I, 0}, b{0, 1, 0, I};
  ExactVector c(4), d(4);
  const ExactComplex s(Rational(2), Rational(1));
  for (std::size_t k = 0; k < 4; ++k) {
    c[k] = s * a[k] + b[k];
    d[k] = a[k] - ExactComplex(Rational(1, 3)) * b[k];
  }
  const HodgeStructure h2(1, {r.apply(Subspace(4, {c, d})), Subspace(4, {c, d})}, r);
  const Polarization q = flat_polarization(2);
  const auto r1 = check_polarization(h, q);
  const auto r2 = check_polarization(h2, q);
  EXPECT_EQ(r1.pass(), r2.pass());
  EXPECT_TRUE(r1.pass());
}

TEST(Quaternionic, ModelCaseSwapAndConjugate) {
  // r(v1, v2) = (conj v2, conj v1) on C^2
  RationalMatrix rm(4, 4);
  rm(0, 1) = 1;
  rm(1, 0) = 1;
  rm(2, 3) = -1;
  rm(3, 2) = -1;
  const RealStructure r(rm);
  const HodgeStructure h(1, {Subspace(2, {{0, 1}}), Subspace(2, {{1, 0}})}, r);
  const QuaternionicStructure q = quaternionic_from_hodge(h);
  // J(1, 0) = (0, 1) and J(0, 1) = (-1, 0) in realified coordinates (Re v1, Re v2, Im v1, Im v2)
  EXPECT_EQ((q.j * std::vector<Rational>{1, 0, 0, 0}), (std::vector<Rational>{0, 1, 0, 0}));
  EXPECT_EQ((q.j * std::vector<Rational>{0, 1, 0, 0}), (std::vector<Rational>{-1, 0, 0, 0}));
  EXPECT_NO_THROW(check_quaternion_relations(q));
}

TEST(Quaternionic, RandomStructuresSatisfyRelations) {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const QuaternionicStructure q = quaternionic_from_hodge(random_weight1(rng, 4));
    EXPECT_EQ(q.i * q.j, -(q.j * q.i));
    EXPECT_EQ(q.j * q.j, -RationalMatrix::identity(8));
  }
}

TEST(Quaternionic, WrongWeightRejected) {
  const RealStructure r = RealStructure::conjugation(1);
  const HodgeStructure h(0, {Subspace::full(1)}, r);
  EXPECT_EQ(code_of([&] { quaternionic_from_hodge(h); }), Errc::wrong_weight);
}

void expect_round_trip(const QuaternionicStructure& q) {
  const HodgeFromQuaternionic hq = hodge_from_quaternionic(q);
  const QuaternionicStructure back = transport(quaternionic_from_hodge(hq.hodge), hq.frame);
  EXPECT_EQ(back.i, q.i);
  EXPECT_EQ(back.j, q.j);
}

TEST(HodgeFromQuaternionic, StandardPairSplitsOneAndOne) {
  const auto q = standard_quaternionic(1);
  const HodgeFromQuaternionic hq = hodge_from_quaternionic(q);
  EXPECT_EQ(hq.hodge.component(1).dim(), 1u);
  EXPECT_EQ(hq.hodge.component(0).dim(), 1u);
  expect_round_trip(q);
}

TEST(HodgeFromQuaternionic, DirectSumOfStandardPairs) {
  const auto q = standard_quaternionic(2);
  const HodgeFromQuaternionic hq = hodge_from_quaternionic(q);
  EXPECT_EQ(hq.hodge.component(1).dim(), 2u);
  expect_round_trip(q);
}

TEST(HodgeFromQuaternionic, RandomConjugatesRoundTrip) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) expect_round_trip(random_quaternionic(rng, 2));
}

TEST(HodgeFromQuaternionic, HodgeSideRoundTripPreservesJ) {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const HodgeStructure h = random_weight1(rng, 4);
    const QuaternionicStructure q = quaternionic_from_hodge(h);
    const HodgeFromQuaternionic hq = hodge_from_quaternionic(q);
    const QuaternionicStructure back = transport(quaternionic_from_hodge(hq.hodge), hq.frame);
    EXPECT_EQ(back.j, q.j);
    EXPECT_EQ(back.i, q.i);
  }
}

TEST(HodgeFromQuaternionic, RejectsBrokenRelations) {
  auto q = standard_quaternionic(1);
  q.j = q.i;
  EXPECT_EQ(code_of([&] { hodge_from_quaternionic(q); }), Errc::relations_violated);
}

TEST(Vhs, QuadraticIsExactlyHolomorphic) {
  const CatalogEntry e = make_entry("quadratic(n=2,tau=1.5i,offdiag=0.25)");
  const auto pts = sample_points(e, 8, 1);
  const VhsReport rep = vhs_from_special_kahler(e.prepotential, pts, 1e-12);
  EXPECT_TRUE(rep.pass());
  for (const auto& p : rep.points) EXPECT_EQ(p.full_derivative, 0.0);
}

TEST(Vhs, CubicAndSwlogPass) {
  for (const char* name : {"cubic", "swlog", "coupled"}) {
    const CatalogEntry e = make_entry(name);
    const VhsReport rep = vhs_from_special_kahler(e.prepotential, sample_points(e, 32, 2), 1e-5);
    EXPECT_TRUE(rep.pass()) << name;
    for (const auto& p : rep.points) {
      EXPECT_TRUE(p.polarization.positive) << name;
      EXPECT_LE(p.rationalization_error, 1e-9);
    }
  }
}

TEST(Vhs, PointwiseFiltrationIsTheHolomorphicTangentSpace) {
  const Prepotential f = cubic_prepotential();
  CVec z(1);
  z << Complex(0.0, 1.0);
  const PointwiseHodge ph = pointwise_hodge(f, z);
  // tau(i) = 6i, so F^1 = <(1, 6i)>
  EXPECT_EQ(ph.f.step(1), Subspace(2, {{1, ExactComplex(Rational(0), Rational(6))}}));
}

}  // namespace
}  // namespace skw
