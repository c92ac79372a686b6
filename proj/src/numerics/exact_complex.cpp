#include "skw/numerics/exact_complex.hpp"

#include <cctype>
#include <ostream>

#include "skw/error.hpp"

namespace skw {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::outside_domain: return "outside_domain";
    case Errc::metric_degenerate: return "metric_degenerate";
    case Errc::flat_chart_degenerate: return "flat_chart_degenerate";
    case Errc::stencil_failure: return "stencil_failure";
    case Errc::not_pure: return "not_pure";
    case Errc::wrong_weight: return "wrong_weight";
    case Errc::relations_violated: return "relations_violated";
    case Errc::incomplete_filtration: return "incomplete_filtration";
    case Errc::non_spanning: return "non_spanning";
    case Errc::inconsistent_profile: return "inconsistent_profile";
    case Errc::ill_conditioned: return "ill_conditioned";
    case Errc::degenerate_form: return "degenerate_form";
    case Errc::parse_error: return "parse_error";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::sampling_failure: return "sampling_failure";
  }
  return "unknown";
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm2();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(Errc::parse_error, "empty rational");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw Error(Errc::parse_error, "malformed rational '" + s + "'");
    }
  }
  if (s.front() == '+') s.erase(0, 1);
  try {
    Rational q(s, 10);
    if (q.get_den() == 0) throw Error(Errc::parse_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse_error, "malformed rational '" + s + "'");
  }
}

ExactComplex ExactComplex::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(Errc::parse_error, "empty complex literal");

  if (s.back() != 'i') return {parse_rational(s)};

  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, parse_rational(im_part)};
}

std::string ExactComplex::to_string() const {
  if (is_zero()) return "0";
  if (is_real()) return rational_to_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_to_string(re_);
  std::string im = rational_to_string(im_);
  if (!out.empty() && sgn(im_) > 0) out += "+";
  return out + im + "*i";
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.to_string(); }

}  // namespace skw
