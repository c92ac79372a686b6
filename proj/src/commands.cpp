#include "skw/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numbers>

#include "skw/error.hpp"
#include "skw/hodge.hpp"
#include "skw/hyperkahler.hpp"
#include "skw/json_io.hpp"
#include "skw/numerics/rationalize.hpp"
#include "skw/numerics/rng.hpp"
#include "skw/rees.hpp"
#include "skw/special_kahler.hpp"

namespace skw {

namespace {

enum class Context { geometry, data };

int exit_code_for(Errc code, Context ctx) {
  if (code == Errc::parse_error) return kUsageError;
  if (ctx == Context::data) return kDataError;
  switch (code) {
    case Errc::invalid_argument: return kUsageError;
    case Errc::sampling_failure:
    case Errc::outside_domain:
    case Errc::stencil_failure: return kSamplingFailure;
    case Errc::ill_conditioned:
    case Errc::metric_degenerate:
    case Errc::flat_chart_degenerate: return kCheckFailure;
    default: return kDataError;
  }
}

Json header(const std::string& command) {
  Json j;
  j["tool"] = "skw";
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

CommandResult guarded(const std::string& command, Context ctx, const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    Json j = header(command);
    j["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    return {exit_code_for(e.code(), ctx), write_json(j)};
  }
}

Json config_json(const RunConfig& c, double tol, double step) {
  Json j;
  j["entry"] = c.entry;
  j["points"] = c.points;
  j["seed"] = c.seed;
  j["tol"] = tol;
  j["step"] = step;
  return j;
}

void validate(const RunConfig& c, double tol, double step) {
  if (c.points < 1) throw Error(Errc::invalid_argument, "--points must be at least 1");
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "--tol must be positive");
  if (!(step > 0.0)) throw Error(Errc::invalid_argument, "--step must be positive");
}

Json point_json(const CVec& z) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < z.size(); ++k) out.push_back(Json::array({z(k).real(), z(k).imag()}));
  return out;
}

Json report_json(const ResidualReport& r) {
  Json out = Json::object();
  for (const auto& res : r.residuals) out[res.name] = res.value;
  return out;
}

void collect(const ResidualReport& r, std::map<std::string, double>& maxima, Json& failures, int index,
             const std::string& group) {
  for (const auto& res : r.residuals) {
    auto [it, inserted] = maxima.emplace(group + "." + res.name, res.value);
    if (!inserted) it->second = std::max(it->second, res.value);
    if (!res.pass())
      failures.push_back({{"point", index}, {"check", group + "." + res.name}, {"value", res.value},
                          {"threshold", res.threshold}});
  }
}

Json maxima_json(const std::map<std::string, double>& maxima, const std::vector<std::string>& order) {
  Json out = Json::object();
  for (const auto& name : order) out[name] = maxima.at(name);
  return out;
}

std::vector<std::string> residual_order(const std::vector<std::pair<std::string, ResidualReport>>& groups) {
  std::vector<std::string> names;
  for (const auto& [g, r] : groups)
    for (const auto& res : r.residuals) names.push_back(g + "." + res.name);
  return names;
}

Json polarization_json(const PolarizationReport& p) {
  return {{"parity", p.parity}, {"orthogonal", p.orthogonal}, {"positive", p.positive},
          {"min_positivity", rational_to_string(p.min_positivity)}};
}

Json lagrangian_json(const Prepotential& f, const CVec& z) {
  const int n = f.dim();
  CVec d1 = CVec::Zero(n), d2 = CVec::Zero(n);
  d1(0) = 1.0;
  d2(0) = Complex(0.0, 1.0);
  const ClosedPath path = loop_path(z, 0.01, d1, d2);
  for (int k = 0; k < 256; ++k)
    if (!f.in_domain(path.point(2.0 * std::numbers::pi * k / 256))) return {{"skipped", true}};
  const LagrangianReport rep = lagrangian_graph_check(f, path, 256);
  return {{"max_pullback", rep.max_pullback}, {"loop_integral", rep.loop_integral}, {"pass", rep.pass}};
}

}  // namespace

CommandResult cmd_catalog() {
  return guarded("catalog", Context::geometry, [] {
    Json j = header("catalog");
    Json entries = Json::array();
    for (const auto& e : catalog()) {
      Json box = {{"lo", Json::array()}, {"hi", Json::array()}};
      for (Eigen::Index k = 0; k < e.box.lo.size(); ++k) {
        box["lo"].push_back(e.box.lo(k));
        box["hi"].push_back(e.box.hi(k));
      }
      entries.push_back({{"name", e.name}, {"selector", e.selector()}, {"dim", e.prepotential.dim()}, {"box", box}});
    }
    j["entries"] = std::move(entries);
    return CommandResult{kPass, write_json(j)};
  });
}

CommandResult cmd_verify(const RunConfig& config) {
  return guarded("verify", Context::geometry, [&] {
    const double tol = config.tol.value_or(1e-5);
    const double step = config.step.value_or(kDefaultStep);
    validate(config, tol, step);
    const CatalogEntry entry = make_entry(config.entry);
    const Prepotential& f = entry.prepotential;
    const auto points = sample_points(entry, config.points, config.seed, step);

    Json j = header("verify");
    j["config"] = config_json(config, tol, step);
    j["entry"] = entry.selector();
    Json pts = Json::array();
    Json failures = Json::array();
    std::map<std::string, double> maxima;
    std::vector<std::string> order;
    bool all_pass = true;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      const CVec& z = points[idx];
      const int i = static_cast<int>(idx);
      const std::vector<std::pair<std::string, ResidualReport>> groups = {
          {"equations", check_equations(f, z, tol, step)},
          {"special_conditions", check_special_conditions(f, z, tol, step)},
          {"geometry", check_geometry(f, z, step)}};
      if (order.empty()) order = residual_order(groups);
      Json pj;
      pj["index"] = i;
      pj["z"] = point_json(z);
      bool pass = true;
      for (const auto& [name, rep] : groups) {
        pj[name] = report_json(rep);
        collect(rep, maxima, failures, i, name);
        pass = pass && rep.pass();
      }
      const VhsReport vhs = vhs_from_special_kahler(f, {z}, tol);
      const VhsPointReport& vp = vhs.points.front();
      pj["vhs"] = {{"holomorphy_residual", vp.holomorphy_residual},
                   {"pure", vp.pure},
                   {"rationalization_error", vp.rationalization_error},
                   {"polarization", polarization_json(vp.polarization)}};
      if (!vhs.pass()) failures.push_back({{"point", i}, {"check", "vhs"}});
      pass = pass && vhs.pass();
      const Json lag = lagrangian_json(f, z);
      if (lag.contains("pass") && !lag["pass"].get<bool>()) {
        failures.push_back({{"point", i}, {"check", "lagrangian"}});
        pass = false;
      }
      pj["lagrangian"] = lag;
      pj["pass"] = pass;
      all_pass = all_pass && pass;
      pts.push_back(std::move(pj));
    }
    j["polarization_convention"] = "omega(X,Y) = g(X, I Y); Q = omega in the flat chart = sum dx^dy";
    j["points"] = std::move(pts);
    j["max_residuals"] = maxima_json(maxima, order);
    j["failures"] = std::move(failures);
    j["pass"] = all_pass;
    return CommandResult{all_pass ? kPass : kCheckFailure, write_json(j)};
  });
}

CommandResult cmd_rees(const std::string& sub, const std::string& text, std::optional<int> weight) {
  return guarded("rees " + sub, Context::data, [&] {
    if (sub != "split" && sub != "purity") throw Error(Errc::parse_error, "unknown rees subcommand '" + sub + "'");
    if (sub == "purity" && !weight) throw Error(Errc::parse_error, "rees purity needs --weight");
    const FiltrationPair pair = filtration_pair_from_json(parse_json_text(text));
    const ReesBundle bundle(pair.f, pair.fbar);
    const SplittingType st = splitting_type(bundle);

    Json j = header("rees " + sub);
    Json split = Json::array();
    for (int a : st.degrees) split.push_back(a);
    j["splitting"] = std::move(split);
    j["degree"] = st.degree();
    j["rank"] = st.rank();
    j["slope"] = to_double(st.slope());
    Json semi = Json::array();
    if (!st.degrees.empty() && st.degrees.front() == st.degrees.back()) semi.push_back(st.degrees.front());
    j["semistable_of"] = std::move(semi);
    Json profile = Json::array();
    for (int m = 0; m >= -(pair.f.length() + pair.fbar.length()); --m) profile.push_back(h0(bundle, m));
    j["h0_from_0_down"] = std::move(profile);
    int code = kPass;
    if (sub == "purity") {
      const bool pure = purity_oracle(pair.f, pair.fbar, *weight);
      const bool semistable = is_semistable_of_slope(bundle, *weight);
      j["weight"] = *weight;
      j["pure"] = pure;
      j["semistable"] = semistable;
      j["agree"] = pure == semistable;
      if (pure != semistable) code = kCheckFailure;
    }
    return CommandResult{code, write_json(j)};
  });
}

CommandResult cmd_hk(const std::string& sub, const RunConfig& config) {
  return guarded("hk " + sub, Context::geometry, [&] {
    double tol = 0.0;
    if (sub == "check") tol = config.tol.value_or(1e-4);
    else if (sub == "nijenhuis") tol = config.tol.value_or(1e-4);
    else if (sub == "correspondence") tol = config.tol.value_or(1e-9);
    else throw Error(Errc::invalid_argument, "unknown hk subcommand '" + sub + "'");
    const double step = config.step.value_or(1e-4);
    validate(config, tol, step);
    const CatalogEntry entry = make_entry(config.entry);
    const Prepotential& f = entry.prepotential;
    const auto points = sample_cotangent_points(entry, config.points, config.seed, step);

    Json j = header("hk " + sub);
    j["config"] = config_json(config, tol, step);
    j["entry"] = entry.selector();
    Json pts = Json::array();
    bool all_pass = true;
    double worst = 0.0;

    std::vector<Complex> zetas;
    if (sub == "nijenhuis") {
      Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
      for (int k = 0; k < 8; ++k) zetas.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
      Json zj = Json::array();
      for (const auto& z : zetas) zj.push_back(Json::array({z.real(), z.imag()}));
      j["zetas"] = std::move(zj);
    }

    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      const CotangentPoint& pt = points[idx];
      Json pj;
      pj["index"] = idx;
      pj["z"] = point_json(pt.z);
      Json alpha = Json::array();
      for (Eigen::Index k = 0; k < pt.alpha.size(); ++k) alpha.push_back(pt.alpha(k));
      pj["alpha"] = std::move(alpha);
      bool pass = true;
      if (sub == "check") {
        ResidualReport rep = check_quaternion_at(f, pt);
        rep.add("d_omega_I", kahler_form_closedness(f, pt, HkStructure::i, step), tol);
        rep.add("d_omega_J", kahler_form_closedness(f, pt, HkStructure::j, step), tol);
        rep.add("d_omega_K", kahler_form_closedness(f, pt, HkStructure::k, step), tol);
        pj["residuals"] = report_json(rep);
        pass = rep.pass();
        worst = std::max(worst, rep.max());
      } else if (sub == "nijenhuis") {
        Json nj;
        double m = 0.0;
        for (auto [name, s] : {std::pair{"I", HkStructure::i}, {"J", HkStructure::j}, {"K", HkStructure::k}}) {
          const double v = nijenhuis_at(f, pt, s, step);
          nj[name] = v;
          m = std::max(m, v);
        }
        Json zv = Json::array();
        for (const auto& zeta : zetas) {
          const double v = nijenhuis_at(f, pt, HkStructure::zeta, step, zeta);
          zv.push_back(v);
          m = std::max(m, v);
        }
        nj["zeta"] = std::move(zv);
        pj["nijenhuis"] = std::move(nj);
        pass = m < tol;
        worst = std::max(worst, m);
      } else {
        const CorrespondenceReport rep = correspondence_check(f, pt);
        pj["j_difference"] = rep.j_difference;
        pj["i_difference"] = rep.i_difference;
        pj["rationalization_error"] = rep.rationalization_error;
        pass = rep.pass(tol);
        worst = std::max({worst, rep.j_difference, rep.i_difference});
      }
      pj["pass"] = pass;
      all_pass = all_pass && pass;
      pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    j["max_residual"] = worst;
    j["pass"] = all_pass;
    return CommandResult{all_pass ? kPass : kCheckFailure, write_json(j)};
  });
}

CommandResult cmd_twistor(const std::string& sub, const RunConfig& config) {
  return guarded("twistor " + sub, Context::geometry, [&] {
    if (sub != "normal-bundle") throw Error(Errc::invalid_argument, "unknown twistor subcommand '" + sub + "'");
    const double step = config.step.value_or(1e-4);
    validate(config, 1.0, step);
    const CatalogEntry entry = make_entry(config.entry);
    const auto points = sample_cotangent_points(entry, config.points, config.seed, step);

    Json j = header("twistor " + sub);
    j["config"] = {{"entry", config.entry}, {"points", config.points}, {"seed", config.seed}};
    j["entry"] = entry.selector();
    Json pts = Json::array();
    bool all_pass = true;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      const SplittingType st = twistor_normal_bundle_at(entry.prepotential, points[idx]);
      const bool pass = std::all_of(st.degrees.begin(), st.degrees.end(), [](int a) { return a == 1; });
      Json split = Json::array();
      for (int a : st.degrees) split.push_back(a);
      pts.push_back({{"index", idx}, {"z", point_json(points[idx].z)}, {"splitting", split}, {"pass", pass}});
      all_pass = all_pass && pass;
    }
    j["points"] = std::move(pts);
    j["pass"] = all_pass;
    return CommandResult{all_pass ? kPass : kCheckFailure, write_json(j)};
  });
}

}  // namespace skw
