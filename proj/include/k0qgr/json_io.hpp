#pragma once

// JSON forms of the library's values and reports. Integers that do not fit
// in 64 bits are written as decimal strings.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "k0qgr/charpoly.hpp"
#include "k0qgr/factor.hpp"
#include "k0qgr/k0.hpp"
#include "k0qgr/modulus.hpp"
#include "k0qgr/primitive.hpp"
#include "k0qgr/realize.hpp"
#include "k0qgr/sturm.hpp"

namespace k0qgr::json_io {

using nlohmann::json;

inline json int_to_json(const Int& x) {
  if (fits_int64(x)) return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error(Errc::Parse, "expected an integer, got " + j.dump());
}

inline json ints_to_json(std::span<const Int> xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(int_to_json(x));
  return arr;
}

/// Rounds to 12 significant digits.
inline double round12(double x) {
  if (x == 0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

inline std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline json rational_to_json(const Rational& r) {
  return json(boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str());
}

inline json interval_to_json(const IsolatingInterval& iv) {
  return json::array({rational_to_json(iv.low), rational_to_json(iv.high)});
}

inline json degrees_to_json(const DegreeData& dd) { return json(dd.degrees()); }

inline json factors_to_json(const FactorList& fl) {
  json arr = json::array();
  for (const auto& f : fl.factors)
    for (int k = 0; k < f.multiplicity; ++k) arr.push_back(ints_to_json(f.poly.coeffs()));
  return arr;
}

/// Certification report of the roots of f.
inline json roots_report(const MaxModulusReport& rep, const FactorList& fl) {
  json roots = json::array();
  for (const auto& r : rep.roots)
    roots.push_back({{"re", round12(r.re)}, {"im", round12(r.im)}, {"modulus", round12(r.modulus)}});
  return json{{"roots", roots},
              {"theta", round12(rep.theta)},
              {"theta_inv", round12(rep.theta_inv)},
              {"theta_interval", interval_to_json(rep.theta_interval)},
              {"unique_max_modulus", rep.unique_max_modulus && rep.unique_min_modulus},
              {"factors", factors_to_json(fl)}};
}

inline json primitivity_report(const PrimitivityReport& rep) {
  return json{{"strongly_connected", rep.strongly_connected},
              {"period", rep.period},
              {"primitivity_witness", rep.primitivity_witness ? json(*rep.primitivity_witness) : json(nullptr)},
              {"perron_root", round12(rep.perron_root)}};
}

inline json class_to_json(const K0Class& c, Cone cone) {
  return json{{"degrees", degrees_to_json(c.source())},
              {"rep", ints_to_json(c.coordinates())},
              {"cone", to_string(cone)}};
}

inline json module_to_json(const ModuleDescription& m) {
  json blocks = json::array();
  for (const auto& b : m.blocks()) {
    blocks.push_back({{"kind", b.kind == Block::Kind::free ? "free" : "cyclic"},
                      {"gen", b.kind == Block::Kind::free ? json(nullptr) : json(b.gen)},
                      {"shift", b.shift},
                      {"mult", int_to_json(b.mult)}});
  }
  return json{{"blocks", blocks}};
}

inline ModuleDescription module_from_json(const json& j, const DegreeData& dd) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw Error(Errc::Parse, "module description must be an object with a 'blocks' array");
  std::vector<Block> blocks;
  for (const auto& jb : j["blocks"]) {
    if (!jb.is_object()) throw Error(Errc::Parse, "block must be an object");
    Block b;
    const std::string kind = jb.value("kind", "");
    if (kind == "free") {
      b.kind = Block::Kind::free;
    } else if (kind == "cyclic") {
      b.kind = Block::Kind::cyclic;
      if (!jb.contains("gen") || !jb["gen"].is_number_integer())
        throw Error(Errc::Parse, "cyclic block needs an integer 'gen'");
      b.gen = jb["gen"].get<int>();
      if (b.gen != 1 && b.gen != dd.g())
        throw Error(Errc::Parse, "cyclic block generator must be 1 or g = " + std::to_string(dd.g()));
    } else {
      throw Error(Errc::Parse, "block kind must be 'free' or 'cyclic'");
    }
    if (!jb.contains("shift") || !jb["shift"].is_number_integer())
      throw Error(Errc::Parse, "block needs an integer 'shift'");
    b.shift = jb["shift"].get<std::int64_t>();
    if (!jb.contains("mult")) throw Error(Errc::Parse, "block needs 'mult'");
    b.mult = int_from_json(jb["mult"]);
    if (b.mult.sign() < 0) throw Error(Errc::Parse, "block multiplicity must be nonnegative");
    blocks.push_back(std::move(b));
  }
  return ModuleDescription(std::move(blocks));
}

inline json verification_to_json(const VerificationReport& r) {
  return json{{"congruent", r.congruent},
              {"hilbert_nonnegative", r.hilbert_nonnegative},
              {"hilbert_terms", r.terms},
              {"sign_nonnegative", r.sign_nonnegative},
              {"passed", r.passed()}};
}

inline json split_to_json(const std::vector<SplitEvaluation>& evs) {
  json arr = json::array();
  for (const auto& ev : evs) {
    json e{{"kind", to_string(ev.kind)}, {"factor", ints_to_json(ev.factor.coeffs())}};
    if (ev.factor.degree() == 1) {
      e["root"] = int_to_json(ev.root);
      e["value"] = int_to_json(ev.coordinates.front());
    } else {
      e["coordinates"] = ints_to_json(ev.coordinates);
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace k0qgr::json_io
