#include "skw/hyperkahler.hpp"

#include <algorithm>
#include <cmath>

#include "skw/error.hpp"
#include "skw/numerics/rationalize.hpp"
#include "skw/numerics/rng.hpp"

namespace skw {

namespace {

struct RMatValue {
  RMat m;
  friend RMatValue operator-(const RMatValue& a, const RMatValue& b) { return {a.m - b.m}; }
  friend RMatValue operator*(const RMatValue& a, double s) { return {a.m * s}; }
};

CotangentPoint split_point(const RVec& x, int n) {
  return {from_real_chart(x.head(2 * n)), x.tail(2 * n)};
}

RVec joined(const CotangentPoint& pt) {
  RVec x(2 * pt.alpha.size());
  x << to_real_chart(pt.z), pt.alpha;
  return x;
}

RMat structure_matrix(const HyperkahlerFrameData& d, HkStructure s, Complex zeta) {
  switch (s) {
    case HkStructure::i: return d.i;
    case HkStructure::j: return d.j;
    case HkStructure::k: return d.k;
    case HkStructure::zeta: {
      const RVec abc = stereographic(zeta);
      return abc(0) * d.i + abc(1) * d.j + abc(2) * d.k;
    }
  }
  return d.i;
}

}  // namespace

HyperkahlerFrameData tangent_split_at(const Prepotential& f, const CotangentPoint& pt) {
  const int n = f.dim();
  const int d = 2 * n;
  if (pt.alpha.size() != d) throw Error(Errc::dimension_mismatch, "covector must have 2n components");
  const MetricData m = metric_at(f, pt.z);
  const Christoffels gn = flat_connection_at(f, pt.z);

  RMat hmat = RMat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) hmat(j, i) += pt.alpha(k) * gn[i](k, j);

  HyperkahlerFrameData out;
  out.frame = RMat::Identity(2 * d, 2 * d);
  out.frame.bottomLeftCorner(d, d) = hmat;
  const RMat ginv = m.g.inverse();
  out.i_split = RMat::Zero(2 * d, 2 * d);
  out.i_split.topLeftCorner(d, d) = m.complex_structure;
  out.i_split.bottomRightCorner(d, d) = m.complex_structure.transpose();
  out.j_split = RMat::Zero(2 * d, 2 * d);
  out.j_split.topRightCorner(d, d) = -ginv;
  out.j_split.bottomLeftCorner(d, d) = m.g;
  out.k_split = out.i_split * out.j_split;
  out.g_split = RMat::Zero(2 * d, 2 * d);
  out.g_split.topLeftCorner(d, d) = m.g;
  out.g_split.bottomRightCorner(d, d) = ginv;

  RMat finv = RMat::Identity(2 * d, 2 * d);
  finv.bottomLeftCorner(d, d) = -hmat;
  out.i = out.frame * out.i_split * finv;
  out.j = out.frame * out.j_split * finv;
  out.k = out.frame * out.k_split * finv;
  out.g = finv.transpose() * out.g_split * finv;
  return out;
}

RMat J_at(const Prepotential& f, const CotangentPoint& pt) { return tangent_split_at(f, pt).j; }

RVec stereographic(Complex zeta) {
  const double r2 = std::norm(zeta);
  RVec abc(3);
  abc << 1.0 - r2, 2.0 * zeta.real(), 2.0 * zeta.imag();
  return abc / (1.0 + r2);
}

RMat twistor_structure_at(const Prepotential& f, const CotangentPoint& pt, Complex zeta) {
  return structure_matrix(tangent_split_at(f, pt), HkStructure::zeta, zeta);
}

double nijenhuis_at(const Prepotential& f, const CotangentPoint& pt, HkStructure s, double h, Complex zeta) {
  const int n = f.dim();
  const auto field = [&](const RVec& x) {
    return RMatValue{structure_matrix(tangent_split_at(f, split_point(x, n)), s, zeta)};
  };
  const RVec x = joined(pt);
  const RMat sm = field(x).m;
  const auto ds = central_partials4(field, x, h);
  const int dim = static_cast<int>(x.size());
  double out = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      RVec nv = RVec::Zero(dim);
      for (int c = 0; c < dim; ++c) nv += sm(c, a) * ds[c].m.col(b) - sm(c, b) * ds[c].m.col(a);
      nv += sm * (ds[b].m.col(a) - ds[a].m.col(b));
      out = std::max(out, nv.cwiseAbs().maxCoeff());
    }
  return out;
}

double kahler_form_closedness(const Prepotential& f, const CotangentPoint& pt, HkStructure s, double h) {
  const int n = f.dim();
  const auto field = [&](const RVec& x) {
    const HyperkahlerFrameData d = tangent_split_at(f, split_point(x, n));
    return RMatValue{d.g * structure_matrix(d, s, 0.0)};
  };
  const auto dw = central_partials4(field, joined(pt), h);
  const int dim = static_cast<int>(dw.size());
  double out = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int c = b + 1; c < dim; ++c)
        out = std::max(out, std::abs(dw[a].m(b, c) + dw[b].m(c, a) + dw[c].m(a, b)));
  return out;
}

ResidualReport check_quaternion_at(const Prepotential& f, const CotangentPoint& pt) {
  const HyperkahlerFrameData d = tangent_split_at(f, pt);
  const auto id = RMat::Identity(d.i.rows(), d.i.cols());
  ResidualReport rep;
  rep.add("I_squared", max_abs(RMat(d.i * d.i + id)), 1e-12);
  rep.add("J_squared", max_abs(RMat(d.j * d.j + id)), 1e-12);
  rep.add("K_squared", max_abs(RMat(d.k * d.k + id)), 1e-12);
  rep.add("IJK", max_abs(RMat(d.i * d.j * d.k + id)), 1e-12);
  rep.add("IJ_anticommute", max_abs(RMat(d.i * d.j + d.j * d.i)), 1e-12);
  rep.add("I_orthogonal", max_abs(RMat(d.i.transpose() * d.g * d.i - d.g)), 1e-9);
  rep.add("J_orthogonal", max_abs(RMat(d.j.transpose() * d.g * d.j - d.g)), 1e-9);
  rep.add("K_orthogonal", max_abs(RMat(d.k.transpose() * d.g * d.k - d.g)), 1e-9);
  return rep;
}

SplittingType twistor_normal_bundle_at(const Prepotential& f, const CotangentPoint& pt) {
  const PointwiseHodge ph = pointwise_hodge(f, pt.z);
  return splitting_type(ReesBundle(ph.f, ph.fbar));
}

CorrespondenceReport correspondence_check(const Prepotential& f, const CotangentPoint& pt) {
  const int n = f.dim();
  const int d = 2 * n;
  const HyperkahlerFrameData split = tangent_split_at(f, pt);
  const MetricData m = metric_at(f, pt.z);
  const FlatChart fc = flat_chart_at(f, pt.z);
  const PointwiseHodge ph = pointwise_hodge(f, pt.z);
  const QuaternionicStructure q = quaternionic_from_hodge(ph.hodge);

  const CMat jac = fc.jacobian.cast<Complex>();
  CMat psi_c(d, 2 * d);
  psi_c.leftCols(d) = jac * projector_10(m.complex_structure);
  psi_c.rightCols(d) = jac * projector_01(m.complex_structure) * m.g.inverse().cast<Complex>();
  RMat psi(2 * d, 2 * d);
  psi.topRows(d) = psi_c.real();
  psi.bottomRows(d) = psi_c.imag();
  const RMat psi_inv = psi.inverse();

  CorrespondenceReport rep;
  rep.rationalization_error = ph.rationalization_error;
  rep.j_difference = max_abs(RMat(psi_inv * to_dense(q.j) * psi - split.j_split));
  rep.i_difference = max_abs(RMat(psi_inv * to_dense(q.i) * psi - split.i_split));
  return rep;
}

std::vector<CotangentPoint> sample_cotangent_points(const CatalogEntry& entry, int count, std::uint64_t seed,
                                                    double h) {
  const auto base = sample_points(entry, count, seed, h);
  Rng rng(seed ^ 0x5bd1e995ULL);
  std::vector<CotangentPoint> out;
  for (const auto& z : base) {
    RVec alpha(2 * entry.prepotential.dim());
    for (Eigen::Index k = 0; k < alpha.size(); ++k) alpha(k) = rng.uniform(-1.0, 1.0);
    out.push_back({z, alpha});
  }
  return out;
}

}  // namespace skw
