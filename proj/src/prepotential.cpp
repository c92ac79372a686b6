#include "skw/prepotential.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "skw/error.hpp"
#include "skw/numerics/finite_difference.hpp"

namespace skw {

namespace {

constexpr Complex kI{0.0, 1.0};

ThirdDerivatives zero_third(int n) { return ThirdDerivatives(n, CMat::Zero(n, n)); }

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17);
  if (z.imag() == 0.0) {
    os << z.real();
  } else if (z.real() == 0.0) {
    os << z.imag() << "i";
  } else {
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  }
  return os.str();
}

double parse_real(const std::string& s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw Error(Errc::invalid_argument, "malformed number '" + s + "'");
  return v;
}

SampleBox box(std::vector<double> lo, std::vector<double> hi) {
  SampleBox b{RVec(static_cast<Eigen::Index>(lo.size())), RVec(static_cast<Eigen::Index>(hi.size()))};
  for (std::size_t k = 0; k < lo.size(); ++k) {
    b.lo(static_cast<Eigen::Index>(k)) = lo[k];
    b.hi(static_cast<Eigen::Index>(k)) = hi[k];
  }
  return b;
}

CatalogEntry quadratic_entry(int n, Complex tau, Complex offdiag) {
  CMat tau0 = CMat::Constant(n, n, offdiag);
  tau0.diagonal().setConstant(tau);
  SampleBox b{RVec::Constant(2 * n, -1.0), RVec::Constant(2 * n, 1.0)};
  return {"quadratic", quadratic_prepotential(tau0),
          {{"n", Complex(n, 0)}, {"offdiag", offdiag}, {"tau", tau}}, b};
}

CatalogEntry cubic_entry() {
  return {"cubic", cubic_prepotential(), {}, box({-1.5, 0.2}, {1.5, 2.0})};
}

CatalogEntry swlog_entry(Complex lambda) {
  // scaled annulus sector away from the cut and from |z| = |lambda| e^{-3/2}
  const double s = std::abs(lambda);
  return {"swlog", swlog_prepotential(lambda), {{"lambda", lambda}},
          box({0.5 * s, -1.5 * s}, {2.0 * s, 1.5 * s})};
}

CatalogEntry coupled_entry() {
  return {"coupled", coupled_prepotential(), {},
          box({-1.0, -1.0, 0.0, -0.25}, {1.0, 1.0, 0.5, 0.25})};
}

}  // namespace

Prepotential::Prepotential(int dim, Provider provider) : dim_(dim), p_(std::move(provider)) {
  if (dim <= 0) throw Error(Errc::invalid_argument, "prepotential dimension must be positive");
}

bool Prepotential::in_domain(const CVec& z) const {
  if (z.size() != dim_ || !z.allFinite()) return false;
  if (p_.admissible && !p_.admissible(z)) return false;
  const RMat im_tau = p_.hess(z).imag();
  if (!im_tau.allFinite()) return false;
  return min_eigenvalue(0.5 * (im_tau + im_tau.transpose())) > 0.0;
}

void Prepotential::require_domain(const CVec& z) const {
  if (z.size() != dim_) throw Error(Errc::dimension_mismatch, "point has wrong dimension");
  if (!in_domain(z))
    throw Error(Errc::outside_domain, "point " + format_point(to_real_chart(z)) + " is outside the domain");
}

Complex Prepotential::value(const CVec& z) const {
  require_domain(z);
  return p_.value(z);
}

CVec Prepotential::grad(const CVec& z) const {
  require_domain(z);
  return p_.grad(z);
}

CMat Prepotential::hess(const CVec& z) const {
  require_domain(z);
  return p_.hess(z);
}

ThirdDerivatives Prepotential::third(const CVec& z) const {
  require_domain(z);
  return p_.third(z);
}

CMat eval_tau(const Prepotential& f, const CVec& z) { return f.hess(z); }

CVec magnetic_coords(const Prepotential& f, const CVec& z) { return f.grad(z); }

RVec to_real_chart(const CVec& z) {
  RVec u(2 * z.size());
  u.head(z.size()) = z.real();
  u.tail(z.size()) = z.imag();
  return u;
}

CVec from_real_chart(const RVec& u) {
  const auto n = u.size() / 2;
  CVec z(n);
  for (Eigen::Index k = 0; k < n; ++k) z(k) = Complex(u(k), u(n + k));
  return z;
}

Prepotential quadratic_prepotential(const CMat& tau0) {
  const int n = static_cast<int>(tau0.rows());
  if (tau0.cols() != n) throw Error(Errc::dimension_mismatch, "tau0 must be square");
  if ((tau0 - tau0.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw Error(Errc::invalid_argument, "tau0 must be symmetric");
  if (min_eigenvalue(tau0.imag()) <= 0.0)
    throw Error(Errc::invalid_argument, "Im tau0 must be positive definite");
  Prepotential::Provider p;
  p.value = [tau0](const CVec& z) { return Complex(0.5) * (z.transpose() * tau0 * z)(0, 0); };
  p.grad = [tau0](const CVec& z) -> CVec { return tau0 * z; };
  p.hess = [tau0](const CVec&) { return tau0; };
  p.third = [n](const CVec&) { return zero_third(n); };
  return Prepotential(n, std::move(p));
}

Prepotential cubic_prepotential() {
  Prepotential::Provider p;
  p.value = [](const CVec& z) { return z(0) * z(0) * z(0); };
  p.grad = [](const CVec& z) { return CVec::Constant(1, 3.0 * z(0) * z(0)); };
  p.hess = [](const CVec& z) { return CMat::Constant(1, 1, 6.0 * z(0)); };
  p.third = [](const CVec&) { return ThirdDerivatives{CMat::Constant(1, 1, 6.0)}; };
  return Prepotential(1, std::move(p));
}

Prepotential swlog_prepotential(Complex lambda) {
  if (lambda == 0.0) throw Error(Errc::invalid_argument, "swlog needs nonzero lambda");
  // log(z^2 / lambda^2) is taken as 2 Log(z / lambda): holomorphic off the ray z / lambda <= 0
  const auto L = [lambda](Complex z) { return 2.0 * std::log(z / lambda); };
  const Complex c = kI / (2.0 * std::numbers::pi);
  Prepotential::Provider p;
  p.value = [=](const CVec& z) { return c * z(0) * z(0) * L(z(0)); };
  p.grad = [=](const CVec& z) { return CVec::Constant(1, 2.0 * c * (z(0) * L(z(0)) + z(0))); };
  p.hess = [=](const CVec& z) { return CMat::Constant(1, 1, 2.0 * c * (L(z(0)) + 3.0)); };
  p.third = [=](const CVec& z) { return ThirdDerivatives{CMat::Constant(1, 1, 4.0 * c / z(0))}; };
  p.admissible = [lambda](const CVec& z) {
    const Complex t = z(0) / lambda;
    return !(t.imag() == 0.0 && t.real() <= 0.0);
  };
  return Prepotential(1, std::move(p));
}

Prepotential coupled_prepotential() {
  Prepotential::Provider p;
  p.value = [](const CVec& z) {
    return 0.5 * kI * (z(0) * z(0) + z(1) * z(1)) + z(0) * z(1) * z(1);
  };
  p.grad = [](const CVec& z) {
    CVec w(2);
    w << kI * z(0) + z(1) * z(1), kI * z(1) + 2.0 * z(0) * z(1);
    return w;
  };
  p.hess = [](const CVec& z) {
    CMat t(2, 2);
    t << kI, 2.0 * z(1), 2.0 * z(1), kI + 2.0 * z(0);
    return t;
  };
  p.third = [](const CVec&) {
    ThirdDerivatives c = zero_third(2);
    c[0](1, 1) = 2.0;
    c[1](0, 1) = 2.0;
    c[1](1, 0) = 2.0;
    return c;
  };
  return Prepotential(2, std::move(p));
}

std::string CatalogEntry::selector() const {
  if (parameters.empty()) return name;
  std::string out = name + "(";
  bool first = true;
  for (const auto& [key, value] : parameters) {
    out += (first ? "" : ",") + key + "=" + format_complex(value);
    first = false;
  }
  return out + ")";
}

std::vector<CatalogEntry> catalog() {
  return {quadratic_entry(1, kI, 0.0), cubic_entry(), swlog_entry(1.0), coupled_entry()};
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(Errc::invalid_argument, "empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s)};
  return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

CatalogEntry make_entry(std::string_view selector) {
  std::string text(selector);
  std::string name = text;
  std::map<std::string, Complex> params;
  if (auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') throw Error(Errc::invalid_argument, "malformed selector '" + text + "'");
    name = text.substr(0, open);
    std::string body = text.substr(open + 1, text.size() - open - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(Errc::invalid_argument, "parameter '" + item + "' lacks '='");
      params[item.substr(0, eq)] = parse_complex(item.substr(eq + 1));
    }
  }
  auto take = [&](const std::string& key, Complex fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    Complex v = it->second;
    params.erase(it);
    return v;
  };
  CatalogEntry entry = [&]() {
    if (name == "quadratic") {
      const Complex n = take("n", 1.0);
      const Complex tau = take("tau", kI);
      const Complex off = take("offdiag", 0.0);
      if (n.imag() != 0.0 || n.real() < 1.0 || n.real() != std::floor(n.real()))
        throw Error(Errc::invalid_argument, "quadratic: n must be a positive integer");
      return quadratic_entry(static_cast<int>(n.real()), tau, off);
    }
    if (name == "cubic") return cubic_entry();
    if (name == "swlog") return swlog_entry(take("lambda", 1.0));
    if (name == "coupled") return coupled_entry();
    throw Error(Errc::invalid_argument, "unknown catalog entry '" + name + "'");
  }();
  if (!params.empty())
    throw Error(Errc::invalid_argument, "unknown parameter '" + params.begin()->first + "' for " + name);
  return entry;
}

}  // namespace skw
