#pragma once

// Subcommands of the pfu command-line tool. Every report is rendered either as
// structured text or, with --json, as one JSON object.
//
// Exit codes: 0 when a verdict was produced, 1 for input or domain errors,
// 2 for contract violations and anything unexpected.

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "pfu/cli/formats.hpp"
#include "pfu/elliptic/weierstrass.hpp"
#include "pfu/k3/k3.hpp"
#include "pfu/mirror/mirror.hpp"
#include "pfu/transform/pullback.hpp"
#include "pfu/transform/symmetric.hpp"
#include "pfu/uniformize/uniformize.hpp"

namespace pfu::cli {

using Json = nlohmann::ordered_json;

/// Accumulates a report as JSON and renders it as text on demand.
class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  Json& doc() { return doc_; }

  void write(std::ostream& out, bool json) const {
    if (json) {
      out << doc_.dump(2) << "\n";
      return;
    }
    for (const auto& [key, value] : doc_.items()) write_text(out, key, value, 0);
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
  }

  static void write_text(std::ostream& out, const std::string& key, const Json& v, int depth) {
    std::string pad(2 * depth, ' ');
    if (v.is_object()) {
      out << pad << key << ":\n";
      for (const auto& [k, x] : v.items()) write_text(out, k, x, depth + 1);
    } else if (v.is_array()) {
      out << pad << key << ":";
      if (v.empty()) out << " none";
      out << "\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          bool first = true;
          for (const auto& [k, x] : item.items()) {
            out << pad << (first ? "  - " : "    ") << k << ": " << flat(x) << "\n";
            first = false;
          }
        } else {
          out << pad << "  - " << flat(item) << "\n";
        }
      }
    } else {
      out << pad << key << ": " << scalar(v) << "\n";
    }
  }

  static std::string flat(const Json& v) {
    if (!v.is_array()) return v.is_object() ? v.dump() : scalar(v);
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + flat(v[i]);
    return s + "]";
  }

  Json doc_;
};

namespace detail {

inline Json operator_json(const LinearODE& L, char var) {
  Json j;
  j["order"] = L.order();
  Json c = Json::object();
  for (int i = 1; i <= L.order(); ++i) c["P" + std::to_string(i)] = to_string(L.coeff(i), std::string(1, var));
  j["coefficients"] = c;
  return j;
}

inline Json point_json(const SingularPointReport& p, char var) {
  Json j;
  j["location"] = p.location.str(std::string(1, var));
  Json ex = Json::array();
  for (const auto& e : p.exponents) ex.push_back(e.str());
  j["exponents"] = ex;
  if (p.exponent_difference) j["difference"] = p.exponent_difference->str();
  j["classification"] = p.label();
  return j;
}

inline Json points_json(const std::vector<SingularPointReport>& pts, char var) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_json(p, var));
  return a;
}

inline Json failures_json(const std::vector<PointFailure>& fs, char var) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back({{"location", f.location.str(std::string(1, var))}, {"reason", f.reason}});
  return a;
}

inline Json fibers_json(const std::vector<FiberPoint>& fs, char var) {
  Json a = Json::array();
  for (const auto& f : fs)
    a.push_back({{"point", f.point.str(std::string(1, var))}, {"ramification", f.ramification}});
  return a;
}

inline Rational parse_constant(const std::string& text, const std::string& what) {
  RationalFunction v = parse_ratfunc(text);
  if (!v.is_constant()) throw InputError(what + " must be a constant");
  return v.constant_value();
}

inline std::string var_name(char v) { return std::string(1, v); }

}  // namespace detail

inline Report analyze_command(const OdeInput& in) {
  Report r("analyze");
  auto& d = r.doc();
  d["variable"] = detail::var_name(in.var);
  d["operator"] = detail::operator_json(in.op, in.var);
  FuchsianReport f = fuchsian_check(in.op);
  d["fuchsian"] = f.fuchsian;
  d["points"] = f.fuchsian ? detail::points_json(analyze(in.op), in.var) : Json::array();
  d["verdict"] = f.fuchsian ? "FUCHSIAN" : "NOT FUCHSIAN";
  return r;
}

inline Report pnf_command(const OdeInput& in) {
  Report r("pnf");
  r.doc()["variable"] = detail::var_name(in.var);
  r.doc()["operator"] = detail::operator_json(pnf(in.op), in.var);
  return r;
}

inline Report pullback_command(const OdeInput& in, const std::string& map_text) {
  std::optional<char> mv;
  RationalFunction R = parse_ratfunc_tracking(map_text, mv);
  char var = mv.value_or('z');
  Report r("pullback");
  auto& d = r.doc();
  d["variable"] = detail::var_name(var);
  d["map"] = to_string(R, detail::var_name(var));
  LinearODE pulled = pullback2(in.op, R);
  d["operator"] = detail::operator_json(pulled, var);
  d["normal_form"] = detail::operator_json(pnf2(pulled), var);
  Json pts = Json::array();
  for (const auto& p : classify_pullback(in.op, R)) {
    Json j;
    j["location"] = p.point.str(detail::var_name(var));
    j["image"] = p.image ? p.image->str(detail::var_name(in.var)) : std::string("none");
    j["ramification"] = p.ramification;
    j["difference"] = p.predicted_difference.str();
    j["classification"] = p.label();
    pts.push_back(j);
  }
  d["points"] = pts;
  return r;
}

inline Report sym2_command(const OdeInput& in) {
  Report r("sym2");
  r.doc()["variable"] = detail::var_name(in.var);
  r.doc()["operator"] = detail::operator_json(sym2(in.op), in.var);
  return r;
}

inline Report sqrt_command(const OdeInput& in) {
  Report r("sqrt");
  auto& d = r.doc();
  d["variable"] = detail::var_name(in.var);
  try {
    LinearODE root = sym2_root(in.op);
    d["operator"] = detail::operator_json(root, in.var);
    d["verdict"] = "SYMMETRIC SQUARE";
  } catch (const NotSymmetricSquare& e) {
    d["verdict"] = "NotSymmetricSquare";
    d["reason"] = e.what();
  }
  return r;
}

inline Report uniformize_command(const OdeInput& in) {
  Report r("uniformize");
  auto& d = r.doc();
  d["variable"] = detail::var_name(in.var);
  LinearODE L = in.op;
  if (L.order() == 2 && !is_pnf(L)) {
    L = pnf2(L);
    d["note"] = "operator replaced by its projective normal form";
  }
  UniformizationReport u = uniformization_check(L);
  d["operator"] = detail::operator_json(L, in.var);
  d["points"] = detail::points_json(u.points, in.var);
  d["signature"] = u.pass ? u.signature.str() : std::string("none");
  d["failures"] = detail::failures_json(u.failures, in.var);
  d["verdict"] = u.pass ? "UNIFORMIZING" : "NOT UNIFORMIZING";
  return r;
}

inline Report mirror_command(const OdeInput& in, const std::string& point, int terms, const std::string& scale) {
  Report r("mirror-map");
  auto& d = r.doc();
  AlgebraicPoint at = parse_point(point);
  Rational sc = detail::parse_constant(scale, "scale");
  MirrorMap m = mirror_map(in.op, at, terms, sc);
  d["point"] = at.str(detail::var_name(in.var));
  d["coordinate"] = detail::var_name(in.var) + " = " + to_string(m.coordinate, "t");
  d["terms"] = terms;
  d["q_of_t"] = to_string(m.q_of_t, "t");
  d["series"] = to_string(m.series, "q");
  return r;
}

inline Report elliptic_command(const WeierstrassModel& w, char var) {
  Report r("elliptic");
  auto& d = r.doc();
  std::string v = detail::var_name(var);
  d["variable"] = v;
  d["g2"] = to_string(w.g2, v);
  d["g3"] = to_string(w.g3, v);
  d["discriminant"] = to_string(discriminant(w), v);
  EllipticModularityReport e = check_elliptic_modularity(w);
  d["J"] = to_string(e.J, v);
  d["degree"] = e.degree;
  Json fibers = Json::array();
  if (e.fibers)
    for (const auto& [pt, k] : *e.fibers) fibers.push_back({{"location", pt.str(v)}, {"fiber", k.str()}});
  d["fibers"] = fibers;
  d["zeros"] = detail::fibers_json(e.zeros, var);
  d["ones"] = detail::fibers_json(e.ones, var);
  d["poles"] = detail::fibers_json(e.poles, var);
  d["riemann_hurwitz_defect"] = e.riemann_hurwitz_defect;
  d["extra_ramification"] = detail::fibers_json(e.extra_ramification, var);
  d["failures"] = detail::failures_json(e.order_failures, var);
  Json app = Json::array();
  for (const auto& p : e.apparent) app.push_back(p.str(v));
  d["apparent"] = app;
  Json forb = Json::array();
  for (const auto& p : e.forbidden_fibers) forb.push_back(p.str(v));
  d["forbidden_fibers"] = forb;
  d["points"] = detail::points_json(e.lambda_points, var);
  d["verdict"] = e.modular ? "MODULAR" : "NOT MODULAR";
  return r;
}

inline Report k3_command(const std::string& hn_text, const SignatureInput& sig, const std::optional<OdeInput>& ode) {
  std::optional<char> hv;
  RationalFunction hn = parse_ratfunc_tracking(hn_text, hv);
  char var = hv.value_or('x');
  std::string v = detail::var_name(var);
  Report r("k3-check");
  auto& d = r.doc();
  d["variable"] = v;
  d["level"] = sig.data.level();
  d["signature"] = sig.data.signature().str();
  d["hn"] = to_string(hn, v);
  std::optional<LinearODE> L3;
  if (ode) L3 = ode->op;
  K3ModularityReport k = check_k3_modularity(hn, sig.data, L3);
  Json pts = Json::array();
  for (const auto& p : k.points) {
    Json j;
    j["location"] = p.point.str(v);
    j["value"] = p.value.str();
    j["order"] = p.order == kCusp ? std::string("inf") : std::to_string(p.order);
    j["multiplicity"] = p.multiplicity;
    j["classification"] = p.admissible ? "ADMISSIBLE" : "INADMISSIBLE";
    pts.push_back(j);
  }
  d["points"] = pts;
  d["extra_ramification"] = detail::fibers_json(k.extra_ramification, var);
  d["combinatorial"] = k.combinatorial;
  if (k.analytic) {
    d["analytic"] = k.analytic->pass;
    d["analytic_signature"] = k.analytic->pass ? k.analytic->signature.str() : std::string("none");
    d["agreement"] = *k.agreement;
  }
  d["verdict"] = k.modular ? "MODULAR" : "NOT MODULAR";
  return r;
}

/// Runs the tool on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard-Fuchs uniformization toolkit", "pfu"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string ode, map, point, scale = "1", g2, g3, model, hn, signature, k3_ode;
  int terms = 10;

  auto add_ode = [&](CLI::App* sub) { sub->add_option("--ode", ode, "ODE file or fixture:<name>")->required(); };
  auto* analyze_cmd = app.add_subcommand("analyze", "Singular points, exponents and classifications");
  add_ode(analyze_cmd);
  auto* pnf_cmd = app.add_subcommand("pnf", "Projective normal form of an order-2 or order-3 operator");
  add_ode(pnf_cmd);
  auto* pull_cmd = app.add_subcommand("pullback", "Pullback of an order-2 operator along a rational map");
  add_ode(pull_cmd);
  pull_cmd->add_option("--map", map, "Rational map z -> R(z)")->required();
  auto* sym2_cmd = app.add_subcommand("sym2", "Symmetric square of an order-2 operator");
  add_ode(sym2_cmd);
  auto* sqrt_cmd = app.add_subcommand("sqrt", "Symmetric square root of an order-3 operator");
  add_ode(sqrt_cmd);
  auto* uni_cmd = app.add_subcommand("uniformize", "Orbifold uniformization verdict and signature");
  add_ode(uni_cmd);
  auto* mm_cmd = app.add_subcommand("mirror-map", "Mirror map q-series at a MUM point");
  add_ode(mm_cmd);
  mm_cmd->add_option("--point", point, "MUM point: a rational number or inf")->required();
  mm_cmd->add_option("--terms", terms, "Number of q-series terms")->check(CLI::PositiveNumber);
  mm_cmd->add_option("--scale", scale, "Coordinate scale c: x = 1/(c t) at inf, x = p + c t otherwise");
  auto* ell_cmd = app.add_subcommand("elliptic", "Kodaira census and modularity of a Weierstrass model");
  auto* g2_opt = ell_cmd->add_option("--g2", g2, "Weierstrass g2");
  auto* g3_opt = ell_cmd->add_option("--g3", g3, "Weierstrass g3");
  auto* model_opt = ell_cmd->add_option("--model", model, "fixture:<name> instead of --g2/--g3");
  g2_opt->needs(g3_opt);
  g3_opt->needs(g2_opt);
  model_opt->excludes(g2_opt)->excludes(g3_opt);
  auto* k3_cmd = app.add_subcommand("k3-check", "Modularity of a K3 family from its Hauptmodul relation");
  k3_cmd->add_option("--hn", hn, "Generalized functional invariant H_n")->required();
  k3_cmd->add_option("--signature", signature, "Signature file or fixture:<name>")->required();
  k3_cmd->add_option("--ode", k3_ode, "Order-3 Picard-Fuchs operator for the analytic cross-check");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    auto emit = [&](const Report& r) {
      r.write(out, json);
      return 0;
    };
    if (*analyze_cmd) return emit(analyze_command(load_ode(ode)));
    if (*pnf_cmd) return emit(pnf_command(load_ode(ode)));
    if (*pull_cmd) return emit(pullback_command(load_ode(ode), map));
    if (*sym2_cmd) return emit(sym2_command(load_ode(ode)));
    if (*sqrt_cmd) return emit(sqrt_command(load_ode(ode)));
    if (*uni_cmd) return emit(uniformize_command(load_ode(ode)));
    if (*mm_cmd) return emit(mirror_command(load_ode(ode), point, terms, scale));
    if (*ell_cmd) {
      if (!model.empty()) {
        if (model.rfind("fixture:", 0) != 0) throw InputError("--model expects fixture:<name>");
        Fixture f = load_fixture(model.substr(8));
        if (!std::holds_alternative<WeierstrassModel>(f.payload))
          throw InputError("fixture " + f.name + " is not a Weierstrass model");
        return emit(elliptic_command(std::get<WeierstrassModel>(f.payload), 's'));
      }
      if (g2.empty()) throw InputError("elliptic needs --g2 and --g3, or --model");
      std::optional<char> var;
      WeierstrassModel w{parse_ratfunc_tracking(g2, var), parse_ratfunc_tracking(g3, var)};
      return emit(elliptic_command(w, var.value_or('x')));
    }
    if (*k3_cmd) {
      std::optional<OdeInput> L3;
      if (!k3_ode.empty()) L3 = load_ode(k3_ode);
      return emit(k3_command(hn, load_signature(signature), L3));
    }
    err << "error: no subcommand\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pfu::cli
