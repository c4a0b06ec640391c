#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error (invalid
// degrees, non-positive class, failed verification), 2 internal certification
// failure, 64 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k0qgr/json_io.hpp"
#include "k0qgr/selftest.hpp"

namespace k0qgr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitCertification = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  std::string command;
  std::string degrees;
  std::optional<std::string> poly;
  std::optional<std::string> module;
  std::size_t n = 10;
  std::string width = "1/1000000000000000";
  std::optional<double> tol;
  std::int64_t shift = 1;
  std::string format = "text";
  bool dot = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::int64_t> parse_degree_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad degree '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad degree '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--degrees is empty");
  return out;
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789-+") != std::string::npos)
      throw UsageError("bad rational '" + text + "'");
    return Int(s.front() == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw UsageError("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

namespace detail {

using json_io::json;

inline void emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

inline std::string join_ints(std::span<const Int> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return s;
}

inline LaurentPoly require_poly(const RunConfig& cfg) {
  if (!cfg.poly) throw UsageError(cfg.command + " needs --poly");
  return LaurentPoly::parse(*cfg.poly);
}

inline int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto items = k0qgr::run_selftest();
  bool all = true;
  json arr = json::array();
  std::string text;
  for (const auto& it : items) {
    all = all && it.passed;
    arr.push_back(json{{"name", it.name}, {"passed", it.passed}, {"detail", it.detail}});
    text += std::string(it.passed ? "PASS " : "FAIL ") + it.name + ": " + it.detail + "\n";
  }
  text += all ? "all items passed\n" : "some items FAILED\n";
  emit(out, cfg, json{{"items", arr}, {"passed", all}}, text);
  if (!all) err << "selftest failed\n";
  return all ? kExitOk : kExitCertification;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "selftest") return cmd_selftest(cfg, out, err);
  if (cfg.degrees.empty()) throw UsageError(cfg.command + " needs --degrees");
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be text or json");
  const auto raw = parse_degree_list(cfg.degrees);
  const DegreeData dd = DegreeData::validate(std::span<const std::int64_t>(raw));
  const Rational width = parse_rational(cfg.width);
  if (width.sign() <= 0) throw UsageError("--width must be positive");
  const double tol = cfg.tol.value_or(default_modulus_tolerance(dd));
  if (!(tol > 0)) throw UsageError("--tol must be positive");

  if (cfg.command == "analyze") {
    const IntPoly f = defining_int_poly(dd);
    const FactorList fl = factor_f(dd);
    const MaxModulusReport mm = max_modulus_report(dd, tol);
    const IsolatingInterval theta = refine(mm.theta_interval, width);
    json j{{"degrees", json_io::degrees_to_json(dd)},
           {"d", dd.d()},
           {"ell", dd.ell()},
           {"f", json_io::ints_to_json(f.coeffs())},
           {"factors", json_io::factors_to_json(fl)},
           {"irreducible", fl.irreducible_single()},
           {"theta", json_io::round12(mm.theta)},
           {"theta_inv", json_io::round12(mm.theta_inv)},
           {"theta_interval", json_io::interval_to_json(theta)},
           {"unique_max_modulus", mm.passed()}};
    std::string text = "degrees " + dd.to_string() + "  d = " + std::to_string(dd.d()) +
                       "  ell = " + std::to_string(dd.ell()) + "\n";
    text += "f(t) = " + f.pretty() + "\n";
    text += "factors:";
    for (std::size_t k = 0; k < fl.factors.size(); ++k) {
      text += " (" + fl.factors[k].poly.pretty() + ")";
      if (fl.factors[k].multiplicity > 1) text += "^" + std::to_string(fl.factors[k].multiplicity);
      if (fl.theta_factor == k) text += "*";
    }
    text += fl.irreducible_single() ? "  [irreducible]\n" : "  [* vanishes at theta]\n";
    text += "theta = " + json_io::format12(mm.theta) + "  1/theta = " + json_io::format12(mm.theta_inv) + "\n";
    text += std::string("unique root of maximal modulus: ") + (mm.passed() ? "yes" : "NO") + "\n";
    emit(out, cfg, j, text);
    if (!mm.passed()) err << "certification failed: " << mm.failure << "\n";
    return mm.passed() ? kExitOk : kExitCertification;
  }
  if (cfg.command == "hilbert") {
    const auto a = hilbert_coeffs(dd, cfg.n);
    emit(out, cfg, json{{"degrees", json_io::degrees_to_json(dd)}, {"coefficients", json_io::ints_to_json(a)}},
         join_ints(a) + "\n");
    return kExitOk;
  }
  if (cfg.command == "roots") {
    const MaxModulusReport mm = max_modulus_report(dd, tol);
    const FactorList fl = factor_f(dd);
    json j = json_io::roots_report(mm, fl);
    j["theta_interval"] = json_io::interval_to_json(refine(mm.theta_interval, width));
    std::string text;
    for (const auto& r : mm.roots)
      text += json_io::format12(r.re) + (r.im < 0 ? " - " : " + ") + json_io::format12(std::abs(r.im)) +
              "i   |z| = " + json_io::format12(r.modulus) + "\n";
    text += "theta = " + json_io::format12(mm.theta) + "  1/theta = " + json_io::format12(mm.theta_inv) + "\n";
    text += std::string("unique max modulus: ") + (mm.passed() ? "yes" : "NO (" + mm.failure + ")") + "\n";
    emit(out, cfg, j, text);
    if (!mm.passed()) err << "certification failed: " << mm.failure << "\n";
    return mm.passed() ? kExitOk : kExitCertification;
  }
  if (cfg.command == "graph") {
    const QuiverGraph q(dd);
    const SecondGraph gr(q);
    if (cfg.dot) {
      out << q.to_dot() << gr.to_dot();
      return kExitOk;
    }
    const PrimitivityReport rep = certify_primitive(gr);
    const LaurentPoly det = char_poly_det(gr);
    std::string text = "second graph: " + std::to_string(gr.size()) + " vertices, " +
                       std::to_string(gr.edge_count()) + " edges\n";
    text += "char poly (det):    " + det.pretty() + "\n";
    if (dd.g() <= kMaxCycleSumGenerators) text += "char poly (cycles): " + char_poly_cycles(gr, dd).pretty() + "\n";
    text += "strongly connected: " + std::string(rep.strongly_connected ? "yes" : "no") +
            "  period: " + std::to_string(rep.period) +
            "  primitivity witness: " + std::to_string(rep.primitivity_witness.value_or(-1)) + "\n";
    text += "Perron root: " + json_io::format12(rep.perron_root) + "\n";
    emit(out, cfg, json_io::primitivity_report(rep), text);
    return kExitOk;
  }
  if (cfg.command == "k0-reduce" || cfg.command == "k0-shift") {
    K0Class c = reduce(require_poly(cfg), dd);
    if (cfg.command == "k0-shift") c = shift_class(c, cfg.shift);
    const Cone cone = cone_position(c);
    emit(out, cfg, json_io::class_to_json(c, cone),
         "[" + LaurentPoly::from_poly(c.rep()).pretty() + "]  " + to_string(cone) + "\n");
    return kExitOk;
  }
  if (cfg.command == "k0-sign") {
    const Sign s = sign_at_theta(require_poly(cfg), dd);
    emit(out, cfg, json{{"sign", to_string(s)}}, std::string(to_string(s)) + "\n");
    return kExitOk;
  }
  if (cfg.command == "realize") {
    const LaurentPoly p = require_poly(cfg);
    const ModuleDescription m = realize(p, dd);
    emit(out, cfg, json_io::module_to_json(m), m.pretty(dd) + "\n");
    return kExitOk;
  }
  if (cfg.command == "verify") {
    const LaurentPoly p = require_poly(cfg);
    if (!cfg.module) throw UsageError("verify needs --module");
    std::string text = *cfg.module;
    if (!text.empty() && text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw UsageError("cannot read " + text.substr(1));
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    json mj;
    try {
      mj = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(Errc::Parse, std::string("module JSON: ") + e.what());
    }
    const ModuleDescription m = json_io::module_from_json(mj, dd);
    const VerificationReport rep = verify_realization(p, m, dd);
    std::string t = "congruent mod f: " + std::string(rep.congruent ? "yes" : "no") +
                    "\nhilbert coefficients nonnegative (" + std::to_string(rep.terms) +
                    " terms): " + (rep.hilbert_nonnegative ? "yes" : "no") +
                    "\nq_M(theta) >= 0: " + (rep.sign_nonnegative ? "yes" : "no") + "\n";
    emit(out, cfg, json_io::verification_to_json(rep), t);
    if (!rep.passed()) err << "verification failed\n";
    return rep.passed() ? kExitOk : kExitDomain;
  }
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return detail::dispatch(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::Parse) return kExitUsage;
    return e.is_domain() ? kExitDomain : kExitCertification;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCertification;
  }
}

/// Parses argv and runs the command.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered Grothendieck groups of two-dimensional regular algebras from degree data", "k0qgr"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--degrees", cfg.degrees, "Generator degrees, comma-separated");
  app.add_option("--poly", cfg.poly, "Laurent polynomial as exponent:coefficient pairs, e.g. 0:-3,1:13,2:-4");
  app.add_option("--module", cfg.module, "Module description JSON (or @file) for verify");
  app.add_option("-n", cfg.n, "Last Hilbert coefficient index");
  app.add_option("--width", cfg.width, "Width of theta's isolating interval, as a/b");
  app.add_option("--tol", cfg.tol, "Modulus separation tolerance");
  app.add_option("-k,--shift", cfg.shift, "Degree shift for k0-shift");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--dot", cfg.dot, "Emit both graphs in DOT format (graph command)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"analyze", "f, its factorisation, theta and the max-modulus check"},
      {"hilbert", "Hilbert coefficients a_0..a_n"},
      {"roots", "numeric roots of f and their modulus certificate"},
      {"graph", "second graph: char poly, primitivity, Perron root"},
      {"k0-reduce", "canonical representative and cone position of a class"},
      {"k0-sign", "exact sign of p(theta)"},
      {"k0-shift", "class of M(k) given the class of M"},
      {"realize", "module description realising a positive class"},
      {"verify", "check a module description against a polynomial"},
      {"selftest", "reproduce the worked examples"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace k0qgr::cli
