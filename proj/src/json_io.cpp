#include "skw/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "skw/error.hpp"

namespace skw {

namespace {

void write_string(std::string& out, const std::string& s) { out += Json(s).dump(); }

void write_value(std::string& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, val] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(out, key);
        out += ": ";
        write_value(out, val, indent + 2);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
      if (scalars) {
        out += "[";
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (k) out += ", ";
          write_value(out, v[k], indent + 2);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",\n";
        out += pad;
        write_value(out, v[k], indent + 2);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      return;
    }
    default:
      out += v.dump();
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::parse_error, "expected a rational as string or integer");
}

}  // namespace

std::string write_json(const Json& value) {
  std::string out;
  write_value(out, value, 0);
  out += "\n";
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

ExactVector vector_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw Error(Errc::parse_error, "vector must be a JSON array");
  if (j.size() != dim) throw Error(Errc::dimension_mismatch, "vector has length " + std::to_string(j.size()) +
                                                                 ", expected " + std::to_string(dim));
  ExactVector v;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      v.emplace_back(e.get<long>());
    } else if (e.is_string()) {
      try {
        v.push_back(ExactComplex::parse(e.get<std::string>()));
      } catch (const Error& err) {
        throw Error(Errc::parse_error, err.what());
      }
    } else {
      throw Error(Errc::parse_error, "vector entries must be strings or integers");
    }
  }
  return v;
}

Json vector_to_json(const ExactVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

namespace {

std::vector<Subspace> steps_from_json(const Json& steps, std::size_t n, const char* key) {
  if (!steps.is_array()) throw Error(Errc::parse_error, std::string("'") + key + "' must be an array");
  std::vector<Subspace> out;
  for (const auto& step : steps) {
    if (!step.is_array()) throw Error(Errc::parse_error, "each step must be an array of vectors");
    std::vector<ExactVector> vs;
    for (const auto& v : step) vs.push_back(vector_from_json(v, n));
    out.emplace_back(n, vs);
  }
  return out;
}

std::size_t dim_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw Error(Errc::parse_error, "filtration JSON needs an integer 'dim'");
  const long n = j["dim"].get<long>();
  if (n <= 0) throw Error(Errc::invalid_argument, "'dim' must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

Filtration filtration_from_json(const Json& j) {
  const std::size_t n = dim_from_json(j);
  if (!j.contains("steps")) throw Error(Errc::parse_error, "filtration JSON needs 'steps'");
  auto steps = steps_from_json(j["steps"], n, "steps");
  if (steps.empty()) throw Error(Errc::incomplete_filtration, "filtration has no steps");
  return Filtration::complete(n, std::move(steps));
}

Json filtration_to_json(const Filtration& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) {
    Json step = Json::array();
    for (const auto& v : s.basis_vectors()) step.push_back(vector_to_json(v));
    steps.push_back(std::move(step));
  }
  Json out;
  out["dim"] = f.ambient_dim();
  out["steps"] = std::move(steps);
  return out;
}

RealStructure real_structure_from_json(const Json& j, std::size_t m) {
  if (!j.is_array() || j.size() != 2 * m) throw Error(Errc::parse_error, "real structure must be a 2n x 2n matrix");
  RationalMatrix r(2 * m, 2 * m);
  for (std::size_t a = 0; a < 2 * m; ++a) {
    if (!j[a].is_array() || j[a].size() != 2 * m)
      throw Error(Errc::parse_error, "real structure must be a 2n x 2n matrix");
    for (std::size_t b = 0; b < 2 * m; ++b) r(a, b) = rational_from_json(j[a][b]);
  }
  return RealStructure(std::move(r));
}

FiltrationPair filtration_pair_from_json(const Json& j) {
  Filtration f = filtration_from_json(j);
  const std::size_t n = f.ambient_dim();
  if (j.contains("bar_steps")) {
    auto steps = steps_from_json(j["bar_steps"], n, "bar_steps");
    if (steps.empty()) throw Error(Errc::incomplete_filtration, "conjugate filtration has no steps");
    return {std::move(f), Filtration::complete(n, std::move(steps))};
  }
  if (j.value("conjugate", false)) {
    const RealStructure r = j.contains("real_structure") ? real_structure_from_json(j["real_structure"], n)
                                                         : RealStructure::conjugation(n);
    Filtration fbar = r.apply(f);
    return {std::move(f), std::move(fbar)};
  }
  throw Error(Errc::parse_error, "need either 'bar_steps' or \"conjugate\": true");
}

}  // namespace skw
