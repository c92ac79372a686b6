#include "skw/special_kahler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skw/error.hpp"
#include "skw/numerics/rng.hpp"

namespace skw {

namespace {

constexpr Complex kI{0.0, 1.0};

RMat block_diag(const RMat& a, const RMat& b) {
  RMat out = RMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// d G / du^m with G = diag(Y, Y), Y = Im tau.
std::vector<RMat> metric_derivatives(const ThirdDerivatives& c) {
  const int n = static_cast<int>(c.size());
  std::vector<RMat> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int m = 0; m < n; ++m) {
    const RMat dy = c[m].imag();
    out.push_back(block_diag(dy, dy));
  }
  for (int m = 0; m < n; ++m) {
    const RMat dy = c[m].real();
    out.push_back(block_diag(dy, dy));
  }
  return out;
}

Christoffels christoffels_from_metric(const RMat& g, const std::vector<RMat>& dg) {
  const int d = static_cast<int>(g.rows());
  const RMat ginv = g.inverse();
  Christoffels gamma(static_cast<std::size_t>(d), RMat::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      RVec lowered(d);
      for (int l = 0; l < d; ++l) lowered(l) = 0.5 * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
      const RVec raised = ginv * lowered;
      for (int k = 0; k < d; ++k) gamma[i](k, j) = raised(k);
    }
  }
  return gamma;
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

EndForm2 curvature(const EndForm1& gamma, const std::vector<EndForm1>& dgamma) {
  const int d = static_cast<int>(gamma.c.size());
  EndForm2 out(d, static_cast<int>(gamma.c[0].rows()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out(i, j) = dgamma[i].c[j] - dgamma[j].c[i] + commutator(gamma.c[i], gamma.c[j]);
  return out;
}

/// Exterior covariant derivative of an End-valued 1-form.
EndForm2 covariant_d(const EndForm1& b, const std::vector<EndForm1>& db, const EndForm1& gamma) {
  const int d = static_cast<int>(b.c.size());
  EndForm2 out(d, static_cast<int>(b.c[0].rows()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out(i, j) = db[i].c[j] - db[j].c[i] + commutator(gamma.c[i], b.c[j]) -
                  commutator(gamma.c[j], b.c[i]);
  return out;
}

EndForm2 wedge(const EndForm1& a, const EndForm1& b) {
  const int d = static_cast<int>(a.c.size());
  EndForm2 out(d, static_cast<int>(a.c[0].rows()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = a.c[i] * b.c[j] - a.c[j] * b.c[i];
  return out;
}

EndForm2 add(const EndForm2& a, const EndForm2& b) {
  EndForm2 out = a;
  for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] += b.c[k];
  return out;
}

/// Projects the form indices through p (first slot) and q (second slot).
EndForm2 project(const EndForm2& t, const CMat& p, const CMat& q) {
  const int d = t.d;
  EndForm2 out(d, static_cast<int>(t.c[0].rows()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CMat acc = CMat::Zero(t.c[0].rows(), t.c[0].cols());
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const Complex w = p(a, i) * q(b, j);
          if (w != Complex(0.0)) acc += w * t(a, b);
        }
      out(i, j) = acc;
    }
  return out;
}

EndForm2 part20(const EndForm2& t, const CMat& p10) { return project(t, p10, p10); }
EndForm2 part02(const EndForm2& t, const CMat& p01) { return project(t, p01, p01); }
EndForm2 part11(const EndForm2& t, const CMat& p10, const CMat& p01) {
  return add(project(t, p10, p01), project(t, p01, p10));
}

RMat darboux(int n) {
  RMat out = RMat::Zero(2 * n, 2 * n);
  out.topRightCorner(n, n) = RMat::Identity(n, n);
  out.bottomLeftCorner(n, n) = -RMat::Identity(n, n);
  return out;
}

struct RMatValue {
  RMat m;
  friend RMatValue operator-(const RMatValue& a, const RMatValue& b) { return {a.m - b.m}; }
  friend RMatValue operator*(const RMatValue& a, double s) { return {a.m * s}; }
};

}  // namespace

EndForm1 EndForm1::from_real(const Christoffels& g) {
  EndForm1 out;
  out.c.reserve(g.size());
  for (const auto& m : g) out.c.push_back(m.cast<Complex>());
  return out;
}

EndForm1 operator-(const EndForm1& a, const EndForm1& b) {
  EndForm1 out = a;
  for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] -= b.c[k];
  return out;
}

EndForm1 operator+(const EndForm1& a, const EndForm1& b) {
  EndForm1 out = a;
  for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] += b.c[k];
  return out;
}

EndForm1 operator*(const EndForm1& a, double s) {
  EndForm1 out = a;
  for (auto& m : out.c) m *= s;
  return out;
}

EndForm2::EndForm2(int dim, int rank)
    : d(dim), c(static_cast<std::size_t>(dim * dim), CMat::Zero(rank, rank)) {}

double EndForm2::max_abs() const { return skw::max_abs(c); }

MetricData metric_at(const Prepotential& f, const CVec& z) {
  const int n = f.dim();
  MetricData m;
  m.tau = eval_tau(f, z);
  m.im_tau = m.tau.imag();
  if (min_eigenvalue(0.5 * (m.im_tau + m.im_tau.transpose())) <= 0.0)
    throw Error(Errc::metric_degenerate, "metric degenerate at point " + format_point(to_real_chart(z)));
  m.g = block_diag(m.im_tau, m.im_tau);
  m.complex_structure = standard_complex_structure(n);
  m.omega = m.g * m.complex_structure;
  return m;
}

FlatChart flat_chart_at(const Prepotential& f, const CVec& z) {
  const int n = f.dim();
  const CVec w = magnetic_coords(f, z);
  const CMat tau = eval_tau(f, z);
  const ThirdDerivatives c = f.third(z);

  FlatChart fc;
  fc.xi.resize(2 * n);
  fc.xi << z.real(), w.real();
  fc.p = z.imag();
  fc.q = w.imag();

  fc.jacobian = RMat::Zero(2 * n, 2 * n);
  fc.jacobian.topLeftCorner(n, n) = RMat::Identity(n, n);
  fc.jacobian.bottomLeftCorner(n, n) = tau.real();
  fc.jacobian.bottomRightCorner(n, n) = -tau.imag();
  if (numerical_rank(fc.jacobian.cast<Complex>()) < 2 * n)
    throw Error(Errc::flat_chart_degenerate,
                "flat chart degenerate at point " + format_point(to_real_chart(z)));

  fc.second.assign(static_cast<std::size_t>(2 * n), RMat::Zero(2 * n, 2 * n));
  for (int r = 0; r < n; ++r) {
    RMat& s = fc.second[static_cast<std::size_t>(n + r)];
    const RMat re = c[r].real();
    const RMat im = c[r].imag();
    s.topLeftCorner(n, n) = re;
    s.topRightCorner(n, n) = -im;
    s.bottomLeftCorner(n, n) = -im;
    s.bottomRightCorner(n, n) = -re;
  }

  fc.pq_jacobian = RMat::Zero(2 * n, 2 * n);
  fc.pq_jacobian.topRightCorner(n, n) = RMat::Identity(n, n);
  fc.pq_jacobian.bottomLeftCorner(n, n) = tau.imag();
  fc.pq_jacobian.bottomRightCorner(n, n) = tau.real();
  return fc;
}

RMat flat_complex_structure(const FlatChart& chart) {
  const int n = static_cast<int>(chart.p.size());
  return chart.jacobian * standard_complex_structure(n) * chart.jacobian.inverse();
}

RMat flat_pq_derivative(const FlatChart& chart) { return chart.pq_jacobian * chart.jacobian.inverse(); }

RMat flat_omega(const FlatChart& chart, const MetricData& metric) {
  const RMat jinv = chart.jacobian.inverse();
  return jinv.transpose() * metric.omega * jinv;
}

Christoffels flat_connection_at(const Prepotential& f, const CVec& z) {
  const FlatChart fc = flat_chart_at(f, z);
  const int d = static_cast<int>(fc.jacobian.rows());
  const RMat jinv = fc.jacobian.inverse();
  Christoffels gamma(static_cast<std::size_t>(d), RMat::Zero(d, d));
  for (int c = 0; c < d; ++c) {
    const RMat& s = fc.second[static_cast<std::size_t>(c)];
    if (s.isZero(0.0)) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) gamma[i](k, j) += jinv(k, c) * s(i, j);
  }
  return gamma;
}

Christoffels levi_civita_at(const Prepotential& f, const CVec& z) {
  const MetricData m = metric_at(f, z);
  return christoffels_from_metric(m.g, metric_derivatives(f.third(z)));
}

std::vector<CMat> chern_christoffels(const Prepotential& f, const CVec& z) {
  const int n = f.dim();
  const MetricData m = metric_at(f, z);
  const ThirdDerivatives c = f.third(z);
  const RMat yinv = m.im_tau.inverse();
  std::vector<CMat> gamma(static_cast<std::size_t>(n), CMat::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (int l = 0; l < n; ++l) acc += yinv(k, l) * c[i](j, l);
        gamma[i](k, j) = -0.5 * kI * acc;
      }
  return gamma;
}

CMat projector_10(const RMat& complex_structure) {
  const auto d = complex_structure.rows();
  return 0.5 * (CMat::Identity(d, d) - kI * complex_structure.cast<Complex>());
}

CMat projector_01(const RMat& complex_structure) {
  const auto d = complex_structure.rows();
  return 0.5 * (CMat::Identity(d, d) + kI * complex_structure.cast<Complex>());
}

HiggsField higgs_at(const Prepotential& f, const CVec& z) {
  const MetricData m = metric_at(f, z);
  const EndForm1 ar =
      EndForm1::from_real(flat_connection_at(f, z)) - EndForm1::from_real(levi_civita_at(f, z));
  const CMat p10 = projector_10(m.complex_structure);
  const CMat p01 = projector_01(m.complex_structure);
  const int d = static_cast<int>(ar.c.size());

  HiggsField h;
  std::vector<CMat> typed(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) typed[a] = p01 * ar.c[a] * p10;
  h.a.c.assign(static_cast<std::size_t>(d), CMat::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < d; ++a)
      if (p10(a, i) != Complex(0.0)) h.a.c[i] += p10(a, i) * typed[a];
  h.a_bar.c.reserve(static_cast<std::size_t>(d));
  for (const auto& m_i : h.a.c) h.a_bar.c.push_back(m_i.conjugate());
  h.off_type_residual = max_abs((ar - h.a - h.a_bar).c);
  return h;
}

SpecialKahlerPointData point_data(const Prepotential& f, const CVec& z, double h) {
  SpecialKahlerPointData pd;
  pd.z = z;
  pd.metric = metric_at(f, z);
  pd.gamma_d = levi_civita_at(f, z);
  pd.gamma_nabla = flat_connection_at(f, z);
  pd.higgs = higgs_at(f, z);
  const auto field = [&f](const RVec& u) {
    return EndForm1::from_real(levi_civita_at(f, from_real_chart(u)));
  };
  pd.curvature_d = curvature(EndForm1::from_real(pd.gamma_d), central_partials(field, to_real_chart(z), h));
  return pd;
}

bool ResidualReport::pass() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.pass(); });
}

double ResidualReport::max() const {
  double out = 0.0;
  for (const auto& r : residuals) out = std::max(out, r.value);
  return out;
}

double ResidualReport::value(const std::string& name) const {
  for (const auto& r : residuals)
    if (r.name == name) return r.value;
  throw Error(Errc::invalid_argument, "no residual named '" + name + "'");
}

void ResidualReport::add(std::string name, double value, double threshold) {
  residuals.push_back({std::move(name), value, threshold});
}

void ResidualReport::append(const ResidualReport& other) {
  residuals.insert(residuals.end(), other.residuals.begin(), other.residuals.end());
}

ResidualReport check_equations(const Prepotential& f, const CVec& z, double tol, double h) {
  const RVec u = to_real_chart(z);
  const MetricData m = metric_at(f, z);
  const CMat p10 = projector_10(m.complex_structure);
  const CMat p01 = projector_01(m.complex_structure);

  const EndForm1 gd = EndForm1::from_real(levi_civita_at(f, z));
  const EndForm1 gn = EndForm1::from_real(flat_connection_at(f, z));
  const EndForm1 ar = gn - gd;
  const HiggsField higgs = higgs_at(f, z);
  const EndForm1& a = higgs.a;
  const EndForm1& ab = higgs.a_bar;

  const auto d_gd = central_partials(
      [&f](const RVec& x) { return EndForm1::from_real(levi_civita_at(f, from_real_chart(x))); }, u, h);
  const auto d_gn = central_partials(
      [&f](const RVec& x) { return EndForm1::from_real(flat_connection_at(f, from_real_chart(x))); }, u, h);
  const auto d_a = central_partials([&f](const RVec& x) { return higgs_at(f, from_real_chart(x)).a; }, u, h);
  const auto d_ab =
      central_partials([&f](const RVec& x) { return higgs_at(f, from_real_chart(x)).a_bar; }, u, h);
  std::vector<EndForm1> d_ar;
  d_ar.reserve(d_gn.size());
  for (std::size_t i = 0; i < d_gn.size(); ++i) d_ar.push_back(d_gn[i] - d_gd[i]);

  const EndForm2 r_d = curvature(gd, d_gd);
  const EndForm2 dd_ar = covariant_d(ar, d_ar, gd);
  const EndForm2 dd_a = covariant_d(a, d_a, gd);
  const EndForm2 dd_ab = covariant_d(ab, d_ab, gd);

  const EndForm2 flatness = add(add(r_d, dd_ar), wedge(ar, ar));
  const EndForm2 del_a = part20(dd_a, p10);
  const EndForm2 flatness_20 = add(del_a, wedge(a, a));
  const EndForm2 dbar_abar = part02(dd_ab, p01);
  const EndForm2 flatness_02 = add(dbar_abar, wedge(ab, ab));
  const EndForm2 balance = add(r_d, add(wedge(a, ab), wedge(ab, a)));
  const EndForm2 dbar_a = part11(dd_a, p10, p01);
  const EndForm2 del_abar = part11(dd_ab, p10, p01);
  const EndForm2 flatness_11 = add(balance, add(dbar_a, del_abar));

  ResidualReport rep;
  rep.add("flatness", flatness.max_abs(), tol);
  rep.add("flatness_20", flatness_20.max_abs(), tol);
  rep.add("flatness_02", flatness_02.max_abs(), tol);
  rep.add("flatness_11", flatness_11.max_abs(), tol);
  rep.add("del_A", del_a.max_abs(), tol);
  rep.add("dbar_Abar", dbar_abar.max_abs(), tol);
  rep.add("del_Abar", del_abar.max_abs(), tol);
  rep.add("curvature_balance", balance.max_abs(), tol);
  rep.add("dbar_A", dbar_a.max_abs(), tol);
  return rep;
}

ResidualReport check_special_conditions(const Prepotential& f, const CVec& z, double tol, double h) {
  const int n = f.dim();
  const int d = 2 * n;
  const RVec u = to_real_chart(z);
  const MetricData m = metric_at(f, z);
  const Christoffels gn = flat_connection_at(f, z);
  const RMat& cs = m.complex_structure;

  const auto d_cs = central_partials(
      [&f](const RVec& x) { return RMatValue{metric_at(f, from_real_chart(x)).complex_structure}; }, u, h);
  const auto d_om =
      central_partials([&f](const RVec& x) { return RMatValue{metric_at(f, from_real_chart(x)).omega}; }, u, h);

  // (nabla_i I)^k_j = d_i I^k_j + Gamma^k_{il} I^l_j - I^k_l Gamma^l_{ij}
  std::vector<RMat> nabla_i(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) nabla_i[i] = d_cs[i].m + gn[i] * cs - cs * gn[i];
  double sym = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) sym = std::max(sym, std::abs(nabla_i[i](k, j) - nabla_i[j](k, i)));

  // (nabla_i omega)_{jk} = d_i omega_jk - Gamma^l_ij omega_lk - Gamma^l_ik omega_jl
  double nabla_om = 0.0;
  for (int i = 0; i < d; ++i) {
    const RMat t = d_om[i].m - gn[i].transpose() * m.omega - m.omega * gn[i];
    nabla_om = std::max(nabla_om, max_abs(t));
  }

  double d_omega = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        d_omega = std::max(d_omega, std::abs(d_om[i].m(j, k) + d_om[j].m(k, i) + d_om[k].m(i, j)));

  const FlatChart fc = flat_chart_at(f, z);
  const RMat x = fc.jacobian.topRows(n);
  const RMat y = fc.jacobian.bottomRows(n);
  const RMat p = fc.pq_jacobian.topRows(n);
  const RMat q = fc.pq_jacobian.bottomRows(n);
  const RMat re_omega = (x.transpose() * y - y.transpose() * x) - (p.transpose() * q - q.transpose() * p);

  ResidualReport rep;
  rep.add("dnabla_I_symmetry", sym, tol);
  rep.add("nabla_omega", nabla_om, tol);
  rep.add("d_omega", d_omega, tol);
  rep.add("re_Omega", max_abs(re_omega), tol);
  rep.add("tau_symmetry", max_abs(CMat(m.tau - m.tau.transpose())), tol);
  return rep;
}

double kahler_potential(const Prepotential& f, const CVec& z) {
  return (magnetic_coords(f, z).array() * z.conjugate().array()).sum().imag();
}

RVec kahler_potential_gradient(const Prepotential& f, const CVec& z) {
  // K = Im(w . conj z); dK/da_j = Im(sum_i tau_ij conj z_i + w_j), dK/db_j = Re(sum_i tau_ij conj z_i) - Re w_j
  const int n = f.dim();
  const CVec w = magnetic_coords(f, z);
  const CMat tau = eval_tau(f, z);
  const CVec t = tau.transpose() * z.conjugate();
  RVec g(2 * n);
  for (int j = 0; j < n; ++j) {
    g(j) = (t(j) + w(j)).imag();
    g(n + j) = t(j).real() - w(j).real();
  }
  return g;
}

CMat kahler_complex_hessian(const Prepotential& f, const CVec& z, double h) {
  const int n = f.dim();
  const RMat hr = finite_diff_jacobian(
      [&f](const RVec& u) { return kahler_potential_gradient(f, from_real_chart(u)); }, to_real_chart(z), h);
  CMat out(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      out(j, k) = 0.25 * Complex(hr(j, k) + hr(n + j, n + k), hr(j, n + k) - hr(n + j, k));
  return out;
}

ResidualReport check_geometry(const Prepotential& f, const CVec& z, double h) {
  const int n = f.dim();
  const int d = 2 * n;
  const MetricData m = metric_at(f, z);
  const RMat& cs = m.complex_structure;
  const FlatChart fc = flat_chart_at(f, z);
  const Christoffels gd = levi_civita_at(f, z);
  const Christoffels gn = flat_connection_at(f, z);
  const std::vector<RMat> dg = metric_derivatives(f.third(z));

  ResidualReport rep;
  rep.add("metric_negativity", -min_eigenvalue(m.im_tau), 0.0);
  rep.add("I_squared", max_abs(RMat(cs * cs + RMat::Identity(d, d))), 1e-12);
  rep.add("metric_hermitian", max_abs(RMat(cs.transpose() * m.g * cs - m.g)), 1e-10);
  rep.add("omega_antisymmetry", max_abs(RMat(m.omega + m.omega.transpose())), 1e-12);
  rep.add("kahler_potential_hessian",
          max_abs(CMat(kahler_complex_hessian(f, z, h) - m.im_tau.cast<Complex>())), 1e-7);
  rep.add("darboux", max_abs(RMat(flat_omega(fc, m) - darboux(n))), 1e-8);
  rep.add("nabla_x_certificate", max_abs(RMat(flat_pq_derivative(fc) + flat_complex_structure(fc))), 1e-6);

  double tor_n = 0.0, tor_d = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        tor_n = std::max(tor_n, std::abs(gn[i](k, j) - gn[j](k, i)));
        tor_d = std::max(tor_d, std::abs(gd[i](k, j) - gd[j](k, i)));
      }
  rep.add("torsion_nabla", tor_n, 1e-10);
  rep.add("torsion_D", tor_d, 1e-10);

  double dg_res = 0.0, di_res = 0.0;
  for (int i = 0; i < d; ++i) {
    dg_res = std::max(dg_res, max_abs(RMat(dg[i] - gd[i].transpose() * m.g - m.g * gd[i])));
    di_res = std::max(di_res, max_abs(RMat(gd[i] * cs - cs * gd[i])));
  }
  rep.add("D_g", dg_res, 1e-6);
  rep.add("D_I", di_res, 1e-6);

  const auto d_gn = central_partials(
      [&f](const RVec& x) { return EndForm1::from_real(flat_connection_at(f, from_real_chart(x))); },
      to_real_chart(z), h);
  rep.add("nabla_curvature", curvature(EndForm1::from_real(gn), d_gn).max_abs(), 1e-5);

  const HiggsField higgs = higgs_at(f, z);
  rep.add("higgs_off_type", higgs.off_type_residual, 1e-10);
  rep.add("a_wedge_a", wedge(higgs.a, higgs.a).max_abs(), 1e-10);

  // D applied to the frame d/dz_j, compared with the Chern symbols
  const std::vector<CMat> chern = chern_christoffels(f, z);
  CMat v = CMat::Zero(d, n);
  for (int j = 0; j < n; ++j) {
    v(j, j) = 0.5;
    v(n + j, j) = -0.5 * kI;
  }
  double chern_res = 0.0;
  for (int i = 0; i < n; ++i) {
    CMat dv = CMat::Zero(d, n);
    for (int a = 0; a < d; ++a)
      if (v(a, i) != Complex(0.0)) dv += v(a, i) * gd[a].cast<Complex>() * v;
    chern_res = std::max(chern_res, max_abs(CMat(dv - v * chern[i])));
  }
  rep.add("chern_formula", chern_res, 1e-8);
  return rep;
}

ClosedPath loop_path(const CVec& center, double radius, const CVec& d1, const CVec& d2) {
  ClosedPath p;
  p.point = [=](double t) -> CVec { return center + radius * (std::cos(t) * d1 + std::sin(t) * d2); };
  p.velocity = [=](double t) -> CVec { return radius * (-std::sin(t) * d1 + std::cos(t) * d2); };
  return p;
}

LagrangianReport lagrangian_graph_check(const Prepotential& f, const ClosedPath& path, int nodes) {
  if (nodes < 3) throw Error(Errc::invalid_argument, "loop quadrature needs at least 3 nodes");
  LagrangianReport rep;
  Complex integral = 0.0;
  const double dt = 2.0 * std::numbers::pi / nodes;
  for (int k = 0; k < nodes; ++k) {
    const double t = k * dt;
    const CVec z = path.point(t);
    const CMat tau = eval_tau(f, z);
    rep.max_pullback = std::max(rep.max_pullback, max_abs(CMat(tau - tau.transpose())));
    integral += (magnetic_coords(f, z).array() * path.velocity(t).array()).sum() * dt;
  }
  rep.loop_integral = std::abs(integral);
  rep.pass = rep.max_pullback < 1e-7 && rep.loop_integral < 1e-6;
  return rep;
}

std::vector<CVec> sample_points(const CatalogEntry& entry, int count, std::uint64_t seed, double h) {
  if (count < 0) throw Error(Errc::invalid_argument, "point count must be non-negative");
  const Prepotential& f = entry.prepotential;
  const auto dim = entry.box.lo.size();
  Rng rng(seed);
  std::vector<CVec> out;
  const long budget = 1000L * std::max(count, 1);
  for (long attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
    RVec u(dim);
    for (Eigen::Index k = 0; k < dim; ++k) u(k) = rng.uniform(entry.box.lo(k), entry.box.hi(k));
    bool ok = f.in_domain(from_real_chart(u));
    for (Eigen::Index k = 0; ok && k < dim; ++k)
      for (double s : {-10.0 * h, 10.0 * h}) {
        RVec v = u;
        v(k) += s;
        if (!f.in_domain(from_real_chart(v))) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(from_real_chart(u));
  }
  if (static_cast<int>(out.size()) < count)
    throw Error(Errc::sampling_failure, "could only place " + std::to_string(out.size()) + " of " +
                                            std::to_string(count) + " points inside the domain of '" +
                                            entry.name + "'");
  return out;
}

}  // namespace skw
