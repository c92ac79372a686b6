#include "skw/hodge.hpp"

#include <algorithm>
#include <cmath>

#include "skw/error.hpp"
#include "skw/numerics/finite_difference.hpp"
#include "skw/numerics/rationalize.hpp"
#include "skw/numerics/rng.hpp"
#include "skw/special_kahler.hpp"

namespace skw {

namespace {

RationalMatrix multiplication_by_i(std::size_t m) {
  RationalMatrix out(2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    out(k, k + m) = -1;
    out(k + m, k) = 1;
  }
  return out;
}

ExactComplex bilinear(const ExactMatrix& q, const ExactVector& x, const ExactVector& y) {
  ExactComplex acc;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    ExactComplex row;
    for (std::size_t b = 0; b < y.size(); ++b)
      if (!y[b].is_zero() && !q(a, b).is_zero()) row += q(a, b) * y[b];
    acc += x[a] * row;
  }
  return acc;
}

ExactComplex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return ExactComplex(1);
    case 1: return ExactComplex::i();
    case 2: return ExactComplex(-1);
    default: return -ExactComplex::i();
  }
}

ExactVector unit(std::size_t n, std::size_t k) {
  ExactVector v(n);
  v[k] = 1;
  return v;
}

Subspace sum_of(std::size_t n, const std::vector<const Subspace*>& parts) {
  Subspace out = Subspace::zero(n);
  for (const auto* s : parts) out = out.sum(*s);
  return out;
}

ExactMatrix columns(const std::vector<ExactVector>& cols, std::size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

}  // namespace

Filtration::Filtration(std::size_t ambient_dim, std::vector<Subspace> steps)
    : n_(ambient_dim), full_(Subspace::full(ambient_dim)), zero_(Subspace::zero(ambient_dim)) {
  if (steps.empty()) throw Error(Errc::incomplete_filtration, "filtration has no steps");
  for (const auto& s : steps)
    if (s.ambient_dim() != n_) throw Error(Errc::dimension_mismatch, "filtration step has wrong ambient dimension");
  if (steps.front() != full_) throw Error(Errc::incomplete_filtration, "filtration must start at the full space");
  for (std::size_t k = 0; k + 1 < steps.size(); ++k)
    if (!steps[k].contains(steps[k + 1]))
      throw Error(Errc::incomplete_filtration, "filtration steps are not nested at index " + std::to_string(k + 1));
  auto first_zero = std::find_if(steps.begin(), steps.end(), [](const Subspace& s) { return s.is_zero(); });
  if (first_zero == steps.end()) throw Error(Errc::incomplete_filtration, "filtration must end at the zero space");
  steps.erase(first_zero + 1, steps.end());
  steps_ = std::move(steps);
}

Filtration Filtration::complete(std::size_t ambient_dim, std::vector<Subspace> steps) {
  if (steps.empty() || !steps.back().is_zero()) steps.push_back(Subspace::zero(ambient_dim));
  return Filtration(ambient_dim, std::move(steps));
}

Filtration Filtration::trivial(std::size_t ambient_dim) {
  return Filtration(ambient_dim, {Subspace::full(ambient_dim), Subspace::zero(ambient_dim)});
}

const Subspace& Filtration::step(int p) const {
  if (p <= 0) return full_;
  if (p >= length()) return zero_;
  return steps_[static_cast<std::size_t>(p)];
}

std::size_t Filtration::graded_dim(int p) const { return step(p).dim() - step(p + 1).dim(); }

RealStructure::RealStructure(RationalMatrix action) : m_(std::move(action)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0)
    throw Error(Errc::dimension_mismatch, "real structure must be a square matrix of even size");
  const std::size_t m = m_.rows() / 2;
  if (m_ * m_ != RationalMatrix::identity(2 * m))
    throw Error(Errc::invalid_argument, "real structure is not an involution");
  const RationalMatrix i = multiplication_by_i(m);
  if (m_ * i != -(i * m_)) throw Error(Errc::invalid_argument, "real structure is not anti-linear");
}

RealStructure RealStructure::conjugation(std::size_t m) {
  RationalMatrix c = RationalMatrix::identity(2 * m);
  for (std::size_t k = m; k < 2 * m; ++k) c(k, k) = -1;
  return RealStructure(std::move(c));
}

RealStructure RealStructure::conjugated_by(const ExactMatrix& s) {
  const std::size_t m = s.rows();
  return RealStructure(realify(s) * conjugation(m).matrix() * realify(inverse(s)));
}

ExactVector RealStructure::apply(const ExactVector& v) const {
  if (v.size() != dim()) throw Error(Errc::dimension_mismatch, "vector length does not match real structure");
  return complexify(m_ * realify(v));
}

Subspace RealStructure::apply(const Subspace& s) const {
  std::vector<ExactVector> images;
  for (const auto& b : s.basis_vectors()) images.push_back(apply(b));
  return Subspace(s.ambient_dim(), images);
}

Filtration RealStructure::apply(const Filtration& f) const {
  std::vector<Subspace> steps;
  for (const auto& s : f.steps()) steps.push_back(apply(s));
  return Filtration(f.ambient_dim(), std::move(steps));
}

HodgeStructure::HodgeStructure(int weight, std::vector<Subspace> components, RealStructure real)
    : p_(weight), comps_(std::move(components)), real_(std::move(real)) {
  if (p_ < 0) throw Error(Errc::invalid_argument, "weight must be non-negative");
  if (comps_.size() != static_cast<std::size_t>(p_ + 1))
    throw Error(Errc::dimension_mismatch, "expected one component per (k, p-k)");
  const std::size_t m = real_.dim();
  std::size_t total = 0;
  std::vector<const Subspace*> parts;
  for (const auto& c : comps_) {
    if (c.ambient_dim() != m) throw Error(Errc::dimension_mismatch, "component has wrong ambient dimension");
    total += c.dim();
    parts.push_back(&c);
  }
  if (total != m || sum_of(m, parts) != Subspace::full(m))
    throw Error(Errc::not_pure, "components do not form a direct sum decomposition");
  for (int k = 0; k <= p_; ++k)
    if (comps_[k] != real_.apply(comps_[p_ - k]))
      throw Error(Errc::invalid_argument, "component (" + std::to_string(k) + "," + std::to_string(p_ - k) +
                                              ") is not the conjugate of its mirror");
}

const Subspace& HodgeStructure::component(int k) const {
  if (k < 0 || k > p_) throw Error(Errc::invalid_argument, "component index out of range");
  return comps_[static_cast<std::size_t>(k)];
}

HodgeStructure filtration_to_hodge(const Filtration& f, const Filtration& fbar, const RealStructure& r,
                                   int weight) {
  const std::size_t m = f.ambient_dim();
  if (fbar.ambient_dim() != m || r.dim() != m)
    throw Error(Errc::dimension_mismatch, "filtrations and real structure disagree on dimension");
  if (weight < 0) throw Error(Errc::invalid_argument, "weight must be non-negative");
  if (r.apply(f) != fbar) throw Error(Errc::invalid_argument, "Fbar is not the conjugate of F");
  const Subspace full = Subspace::full(m);
  for (int k = 0; k <= weight + 1; ++k) {
    const Subspace& a = f.step(k);
    const Subspace& b = fbar.step(weight - k + 1);
    if (a.dim() + b.dim() != m || a.sum(b) != full)
      throw Error(Errc::not_pure, "not pure of weight " + std::to_string(weight) + " (fails at k=" +
                                      std::to_string(k) + ")");
  }
  std::vector<Subspace> comps;
  for (int k = 0; k <= weight; ++k) comps.push_back(f.step(k).intersect(fbar.step(weight - k)));
  return HodgeStructure(weight, std::move(comps), r);
}

HodgeFiltrations hodge_to_filtration(const HodgeStructure& h) {
  const std::size_t m = h.dim();
  const int p = h.weight();
  std::vector<Subspace> f, fbar;
  for (int k = 0; k <= p + 1; ++k) {
    std::vector<const Subspace*> a, b;
    for (int i = k; i <= p; ++i) {
      a.push_back(&h.component(i));
      b.push_back(&h.component(p - i));
    }
    f.push_back(sum_of(m, a));
    fbar.push_back(sum_of(m, b));
  }
  return {Filtration(m, std::move(f)), Filtration(m, std::move(fbar))};
}

PolarizationReport check_polarization(const HodgeStructure& h, const Polarization& q, int samples,
                                      std::uint64_t seed) {
  const std::size_t m = h.dim();
  if (q.q.rows() != m || q.q.cols() != m) throw Error(Errc::dimension_mismatch, "polarization has wrong size");
  if (rank(q.q) != m) throw Error(Errc::degenerate_form, "polarization is degenerate");
  if (q.weight != h.weight()) throw Error(Errc::wrong_weight, "polarization weight differs from Hodge weight");

  PolarizationReport rep;
  const ExactComplex sign = (q.weight % 2 == 0) ? ExactComplex(1) : ExactComplex(-1);
  rep.parity = true;
  for (std::size_t a = 0; a < m && rep.parity; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (q.q(a, b) != sign * q.q(b, a)) {
        rep.parity = false;
        break;
      }

  const int p = h.weight();
  rep.orthogonal = true;
  for (int k = 0; k <= p && rep.orthogonal; ++k)
    for (int k2 = 0; k2 <= p && rep.orthogonal; ++k2) {
      if (k == k2) continue;
      for (const auto& x : h.component(k).basis_vectors())
        for (const auto& y : h.component(k2).basis_vectors())
          if (!bilinear(q.q, x, h.real().apply(y)).is_zero()) rep.orthogonal = false;
    }

  Rng rng(seed);
  rep.positive = true;
  bool first = true;
  for (int k = 0; k <= p; ++k) {
    const auto basis = h.component(k).basis_vectors();
    if (basis.empty()) continue;
    std::vector<ExactVector> tests = basis;
    for (int s = 0; s < samples; ++s) {
      ExactVector v(m);
      bool nonzero = false;
      for (const auto& b : basis) {
        const ExactComplex c(Rational(rng.integer(-3, 3)), Rational(rng.integer(-3, 3)));
        if (c.is_zero()) continue;
        nonzero = true;
        for (std::size_t t = 0; t < m; ++t) v[t] += c * b[t];
      }
      if (nonzero) tests.push_back(std::move(v));
    }
    const ExactComplex factor = i_power(k - (p - k));
    for (const auto& x : tests) {
      const ExactComplex val = factor * bilinear(q.q, x, h.real().apply(x));
      if (!val.is_real() || sgn(val.re()) <= 0) rep.positive = false;
      if (val.is_real() && (first || val.re() < rep.min_positivity)) {
        rep.min_positivity = val.re();
        first = false;
      }
    }
  }
  return rep;
}

void check_quaternion_relations(const QuaternionicStructure& q) {
  const std::size_t d = q.i.rows();
  if (q.i.cols() != d || q.j.rows() != d || q.j.cols() != d || d % 4 != 0)
    throw Error(Errc::dimension_mismatch, "quaternionic structure needs two square matrices of size 4n");
  const RationalMatrix minus_id = -RationalMatrix::identity(d);
  if (q.i * q.i != minus_id) throw Error(Errc::relations_violated, "I^2 != -1");
  if (q.j * q.j != minus_id) throw Error(Errc::relations_violated, "J^2 != -1");
  if (q.i * q.j != -(q.j * q.i)) throw Error(Errc::relations_violated, "IJ != -JI");
}

QuaternionicStructure quaternionic_from_hodge(const HodgeStructure& h) {
  if (h.weight() != 1) throw Error(Errc::wrong_weight, "quaternionic structure needs weight 1");
  const std::size_t m = h.dim();
  std::vector<ExactVector> cols = h.component(1).basis_vectors();
  const std::size_t n10 = cols.size();
  for (auto& v : h.component(0).basis_vectors()) cols.push_back(std::move(v));
  const ExactMatrix b = columns(cols, m);
  ExactMatrix d(m, m);
  for (std::size_t k = 0; k < m; ++k) d(k, k) = k < n10 ? 1 : -1;
  const ExactMatrix split = b * d * inverse(b);
  return {multiplication_by_i(m), h.real().matrix() * realify(split)};
}

HodgeFromQuaternionic hodge_from_quaternionic(const QuaternionicStructure& q) {
  check_quaternion_relations(q);
  const std::size_t d = q.i.rows();
  const std::size_t n = d / 4;
  const RationalMatrix k = q.i * q.j;

  std::vector<std::vector<Rational>> span;  // rows
  std::vector<std::vector<Rational>> chosen;
  for (std::size_t t = 0; t < d && chosen.size() < n; ++t) {
    std::vector<Rational> e(d, Rational(0));
    e[t] = 1;
    auto trial = span;
    trial.push_back(e);
    trial.push_back(q.i * e);
    trial.push_back(q.j * e);
    trial.push_back(k * e);
    if (rank(RationalMatrix::from_rows(trial, d)) == span.size() + 4) {
      span = std::move(trial);
      chosen.push_back(std::move(e));
    }
  }
  if (chosen.size() != n) throw Error(Errc::relations_violated, "could not find a quaternionic basis");

  std::vector<std::vector<Rational>> f = chosen;
  for (const auto& e : chosen) f.push_back(q.j * e);
  RationalMatrix frame(d, d);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    const auto fi = q.i * f[c];
    for (std::size_t r = 0; r < d; ++r) {
      frame(r, c) = f[c][r];
      frame(r, c + 2 * n) = fi[r];
    }
  }

  const std::size_t m = 2 * n;
  RationalMatrix r(2 * m, 2 * m);
  for (std::size_t a = 0; a < n; ++a) {
    r(a, a + n) = 1;
    r(a + n, a) = 1;
    r(m + a, m + a + n) = -1;
    r(m + a + n, m + a) = -1;
  }
  std::vector<ExactVector> v10, v01;
  for (std::size_t a = 0; a < n; ++a) {
    v10.push_back(unit(m, a));
    v01.push_back(unit(m, a + n));
  }
  HodgeStructure h(1, {Subspace(m, v01), Subspace(m, v10)}, RealStructure(std::move(r)));
  return {std::move(h), std::move(frame)};
}

QuaternionicStructure transport(const QuaternionicStructure& q, const RationalMatrix& frame) {
  const RationalMatrix inv = inverse(frame);
  return {frame * q.i * inv, frame * q.j * inv};
}

bool VhsReport::pass() const {
  return std::all_of(points.begin(), points.end(), [this](const VhsPointReport& p) {
    return p.holomorphy_residual < tol && p.pure && p.polarization.pass();
  });
}

PointwiseHodge pointwise_hodge(const Prepotential& f, const CVec& z) {
  const int n = f.dim();
  const std::size_t m = static_cast<std::size_t>(2 * n);
  const CMat tau = eval_tau(f, z);
  const CMat sym = 0.5 * (tau + tau.transpose());
  auto rq = rationalize(sym);
  ExactMatrix tq = rq.value;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tq(a, b) = (rq.value(a, b) + rq.value(b, a)) / ExactComplex(2);
  const double err = std::max(max_abs(CMat(tau - to_dense(tq))), 0.0);
  if (!(err <= 1e-9))
    throw Error(Errc::ill_conditioned, "point too ill-conditioned: rationalization error " + std::to_string(err) +
                                           " at " + format_point(to_real_chart(z)));

  std::vector<ExactVector> f1;
  for (int j = 0; j < n; ++j) {
    ExactVector v(m);
    v[j] = 1;
    for (int a = 0; a < n; ++a) v[n + a] = tq(a, j);
    f1.push_back(std::move(v));
  }
  const RealStructure r = RealStructure::conjugation(m);
  Filtration fil = Filtration::complete(m, {Subspace::full(m), Subspace(m, f1)});
  Filtration filbar = r.apply(fil);
  HodgeStructure h = filtration_to_hodge(fil, filbar, r, 1);
  return {std::move(h), std::move(fil), std::move(filbar), std::move(tq), err};
}

Polarization flat_polarization(std::size_t n) {
  ExactMatrix q(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    q(a, a + n) = 1;
    q(a + n, a) = -1;
  }
  return {std::move(q), 1};
}

VhsReport vhs_from_special_kahler(const Prepotential& f, const std::vector<CVec>& points, double tol) {
  const int n = f.dim();
  const int d = 2 * n;
  VhsReport rep;
  rep.tol = tol;
  rep.polarization_convention = "omega(X,Y) = g(X, I Y); Q = omega in the flat chart = sum dx^dy";
  const CMat p01 = projector_01(standard_complex_structure(n));
  for (const auto& z : points) {
    VhsPointReport pr;
    // nabla is the trivial derivative in the flat chart: differentiate d xi (d/dz_j) numerically
    const RVec u = to_real_chart(z);
    const auto djac = central_partials(
        [&](const RVec& x) -> RMat { return flat_chart_at(f, from_real_chart(x)).jacobian; }, u, kDefaultStep);
    const Eigen::PartialPivLU<RMat> lu(flat_chart_at(f, z).jacobian);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        CVec w = CVec::Zero(d);
        w(j) = 0.5;
        w(n + j) = Complex(0.0, -0.5);
        // d/dzbar_k = (d/dx_k + i d/dy_k) / 2
        const CVec dflat = 0.5 * (djac[static_cast<std::size_t>(k)].cast<Complex>() * w) +
                           Complex(0.0, 0.5) * (djac[static_cast<std::size_t>(n + k)].cast<Complex>() * w);
        const CVec out = lu.solve(RMat(dflat.real())).cast<Complex>() +
                         Complex(0.0, 1.0) * lu.solve(RMat(dflat.imag())).cast<Complex>();
        pr.full_derivative = std::max(pr.full_derivative, out.cwiseAbs().maxCoeff());
        pr.holomorphy_residual = std::max(pr.holomorphy_residual, (p01 * out).cwiseAbs().maxCoeff());
      }
    try {
      const PointwiseHodge ph = pointwise_hodge(f, z);
      pr.pure = true;
      pr.rationalization_error = ph.rationalization_error;
      pr.polarization = check_polarization(ph.hodge, flat_polarization(static_cast<std::size_t>(n)));
    } catch (const Error& e) {
      if (e.code() != Errc::not_pure) throw;
      pr.pure = false;
    }
    rep.points.push_back(std::move(pr));
  }
  return rep;
}

}  // namespace skw
