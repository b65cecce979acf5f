// Copyright 2026 The abelcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON documents, command dispatch, and report rendering for the CLI.
//
// Documents are strict: unknown keys are rejected. Group elements and
// characters are integer arrays; rational class coefficients may be given
// as [num, den]. Exit status is 0 on success, 1 when the mathematics
// fails, 2 when the input is at fault.

#ifndef ABELCOVER_CLI_HPP_
#define ABELCOVER_CLI_HPP_

#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "abelcover/abelian_group.hpp"
#include "abelcover/cover_data.hpp"
#include "abelcover/errors.hpp"
#include "abelcover/gluing.hpp"
#include "abelcover/invariants.hpp"
#include "abelcover/local_classifier.hpp"
#include "abelcover/local_config.hpp"
#include "abelcover/surface_model.hpp"

namespace abelcover {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct InputDocument {
  std::string version = kSchemaVersion;
  std::optional<GluingProblem> problem;
  std::optional<LocalConfig> local;
};

namespace detail {

[[noreturn]] inline void Bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::kInput, path + ": " + msg);
}

inline void CheckKeys(const Json& obj, const std::string& path,
                      const std::set<std::string>& allowed) {
  if (!obj.is_object()) Bad(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) Bad(path, "unknown key '" + key + "'");
  }
}

inline const Json& Need(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) Bad(path, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string GetString(const Json& v, const std::string& path) {
  if (!v.is_string()) Bad(path, "expected a string");
  return v.get<std::string>();
}

inline long long GetInt(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) Bad(path, "expected an integer");
  return v.get<long long>();
}

inline bool GetBool(const Json& v, const std::string& path) {
  if (!v.is_boolean()) Bad(path, "expected a boolean");
  return v.get<bool>();
}

inline const Json& GetArray(const Json& v, const std::string& path) {
  if (!v.is_array()) Bad(path, "expected an array");
  return v;
}

inline std::vector<int> GetInts(const Json& v, const std::string& path) {
  std::vector<int> out;
  std::size_t i = 0;
  for (const Json& x : GetArray(v, path)) {
    out.push_back(static_cast<int>(GetInt(x, path + "/" + std::to_string(i++))));
  }
  return out;
}

inline Q GetRational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Q(v.get<long long>());
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
      v[1].is_number_integer() && v[1].get<long long>() != 0) {
    return Q(v[0].get<long long>(), v[1].get<long long>());
  }
  Bad(path, "expected an integer or [num, den]");
}

inline std::vector<Q> GetClass(const Json& v, const std::string& path, int rank) {
  std::vector<Q> out;
  std::size_t i = 0;
  for (const Json& x : GetArray(v, path)) {
    out.push_back(GetRational(x, path + "/" + std::to_string(i++)));
  }
  if (static_cast<int>(out.size()) != rank) {
    Bad(path, "class has " + std::to_string(out.size()) + " entries, surface rank is " +
                  std::to_string(rank));
  }
  return out;
}

inline Json RationalJson(const Q& q) {
  if (q.denominator() == 1) return q.numerator();
  return Json::array({q.numerator(), q.denominator()});
}

inline Json ClassJson(const std::vector<Q>& cls) {
  Json a = Json::array();
  for (const Q& q : cls) a.push_back(RationalJson(q));
  return a;
}

inline GroupElement GetElement(const FiniteAbelianGroup& g, const Json& v,
                               const std::string& path) {
  GroupElement e{GetInts(v, path)};
  if (!g.Contains(e)) Bad(path, "not an element of the group");
  return e;
}

inline Mask GetMask(const Json& v, const std::string& path, int r) {
  std::vector<int> c = GetInts(v, path);
  if (static_cast<int>(c.size()) != r) Bad(path, "element length differs from r");
  Mask m = 0;
  for (int j = 0; j < r; ++j) {
    if (c[j] != 0 && c[j] != 1) Bad(path, "Z_2 coordinates must be 0 or 1");
    if (c[j]) m |= Mask{1} << j;
  }
  return m;
}

inline Json MaskJson(Mask m, int r) {
  return Json(ElementFromMask(m, r).coeffs);
}

inline std::shared_ptr<const SmoothSurfaceModel> ParseModel(const Json& c,
                                                            const std::string& path) {
  std::string kind = GetString(Need(c, path, "kind"), path + "/kind");
  if (kind == "P2" || kind == "P1xP1") {
    for (const char* k : {"gram", "canonical", "chi_O"}) {
      if (c.contains(k)) Bad(path, std::string("'") + k + "' is fixed for catalog kinds");
    }
    return std::make_shared<const SmoothSurfaceModel>(
        kind == "P2" ? SmoothSurfaceModel::P2() : SmoothSurfaceModel::P1xP1());
  }
  if (kind != "LATTICE") Bad(path + "/kind", "expected P2, P1xP1 or LATTICE");
  std::vector<std::vector<long long>> gram;
  std::size_t i = 0;
  for (const Json& row : GetArray(Need(c, path, "gram"), path + "/gram")) {
    std::vector<long long> r;
    for (int x : GetInts(row, path + "/gram/" + std::to_string(i))) r.push_back(x);
    gram.push_back(std::move(r));
    ++i;
  }
  std::vector<long long> canonical;
  for (int x : GetInts(Need(c, path, "canonical"), path + "/canonical")) canonical.push_back(x);
  long long chi = GetInt(Need(c, path, "chi_O"), path + "/chi_O");
  try {
    return std::make_shared<const SmoothSurfaceModel>(
        SmoothSurfaceModel::Lattice(std::move(gram), std::move(canonical), chi));
  } catch (const Error& e) {
    Bad(path, e.what());
  }
}

inline LocalConfig ParseLocal(const Json& v, const std::string& path) {
  CheckKeys(v, path, {"r", "base", "g0", "lines"});
  LocalConfig cfg;
  long long r = GetInt(Need(v, path, "r"), path + "/r");
  if (r < 0 || r > kMaxLocalRank) Bad(path + "/r", "r must be in 0..16");
  cfg.r = static_cast<int>(r);
  std::string base = GetString(Need(v, path, "base"), path + "/base");
  if (base == "smooth") {
    cfg.base = BaseKind::kSmooth;
  } else if (base == "dc") {
    cfg.base = BaseKind::kDoubleCurve;
  } else {
    Bad(path + "/base", "expected 'smooth' or 'dc'");
  }
  if (v.contains("g0")) cfg.g0 = GetMask(v["g0"], path + "/g0", cfg.r);
  std::size_t i = 0;
  for (const Json& l : GetArray(Need(v, path, "lines"), path + "/lines")) {
    std::string lp = path + "/lines/" + std::to_string(i++);
    CheckKeys(l, lp, {"side", "elements", "symbol"});
    LocalLine line;
    if (l.contains("side")) line.side = static_cast<int>(GetInt(l["side"], lp + "/side"));
    std::size_t j = 0;
    for (const Json& e : GetArray(Need(l, lp, "elements"), lp + "/elements")) {
      line.elements.push_back(GetMask(e, lp + "/elements/" + std::to_string(j++), cfg.r));
    }
    if (l.contains("symbol")) line.symbol = GetString(l["symbol"], lp + "/symbol");
    cfg.lines.push_back(std::move(line));
  }
  return cfg;
}

inline GluingProblem ParseProblem(const Json& doc) {
  GluingProblem p;
  p.group = FiniteAbelianGroup(GetInts(Need(doc, "", "group"), "/group"));
  for (int n : p.group.orders()) {
    if (n < 2) Bad("/group", "cyclic orders must be at least 2");
  }
  std::size_t i = 0;
  for (const Json& c : GetArray(Need(doc, "", "components"), "/components")) {
    std::string path = "/components/" + std::to_string(i++);
    CheckKeys(c, path, {"id", "kind", "gram", "canonical", "chi_O"});
    Component comp{GetString(Need(c, path, "id"), path + "/id"), ParseModel(c, path)};
    p.data.push_back(BuildingData{p.group, comp.id, {}, std::nullopt});
    p.surface.components.push_back(std::move(comp));
  }
  auto data_on = [&](const std::string& comp, const std::string& path) -> BuildingData& {
    for (BuildingData& bd : p.data) {
      if (bd.component == comp) return bd;
    }
    throw Error(ErrorKind::kUnknownId, path + ": unknown component '" + comp + "'");
  };
  auto rank_of = [&](const std::string& comp, const std::string& path) {
    const Component* c = p.surface.FindComponent(comp);
    if (!c) throw Error(ErrorKind::kUnknownId, path + ": unknown component '" + comp + "'");
    return c->model->rank;
  };
  i = 0;
  for (const Json& c : GetArray(Need(doc, "", "curves"), "/curves")) {
    std::string path = "/curves/" + std::to_string(i++);
    CheckKeys(c, path, {"id", "role", "sides", "rational"});
    CurveDecl curve;
    curve.id = GetString(Need(c, path, "id"), path + "/id");
    std::string role = GetString(Need(c, path, "role"), path + "/role");
    if (role == "branch") {
      curve.role = CurveRole::kBranch;
    } else if (role == "double") {
      curve.role = CurveRole::kDouble;
    } else {
      Bad(path + "/role", "expected 'branch' or 'double'");
    }
    if (c.contains("rational")) curve.rational = GetBool(c["rational"], path + "/rational");
    std::size_t j = 0;
    for (const Json& s : GetArray(Need(c, path, "sides"), path + "/sides")) {
      std::string sp = path + "/sides/" + std::to_string(j++);
      CheckKeys(s, sp, curve.role == CurveRole::kDouble
                           ? std::set<std::string>{"component", "class", "inertia"}
                           : std::set<std::string>{"component", "class"});
      CurveSide side;
      side.component = GetString(Need(s, sp, "component"), sp + "/component");
      side.cls = GetClass(Need(s, sp, "class"), sp + "/class", rank_of(side.component, sp));
      if (s.contains("inertia")) {
        GroupElement g = GetElement(p.group, s["inertia"], sp + "/inertia");
        if (!p.group.IsZero(g)) {
          data_on(side.component, sp)
              .branches.push_back({curve.id, MakeCyclicPair(p.group, g)});
        }
      }
      curve.sides.push_back(std::move(side));
    }
    p.surface.curves.push_back(std::move(curve));
  }
  i = 0;
  for (const Json& y : GetArray(Need(doc, "", "points"), "/points")) {
    std::string path = "/points/" + std::to_string(i++);
    CheckKeys(y, path, {"id", "on", "mults", "c_singular", "cycle"});
    PointDecl pt;
    pt.id = GetString(Need(y, path, "id"), path + "/id");
    std::size_t j = 0;
    for (const Json& c : GetArray(Need(y, path, "on"), path + "/on")) {
      pt.on.push_back(GetString(c, path + "/on/" + std::to_string(j++)));
    }
    if (y.contains("mults")) {
      if (!y["mults"].is_object()) Bad(path + "/mults", "expected an object");
      for (const auto& [k, v] : y["mults"].items()) {
        pt.incident_mults[k] = static_cast<int>(GetInt(v, path + "/mults/" + k));
      }
    }
    if (y.contains("c_singular")) {
      pt.c_singular = GetBool(y["c_singular"], path + "/c_singular");
    }
    if (y.contains("cycle")) {
      j = 0;
      for (const Json& e : GetArray(y["cycle"], path + "/cycle")) {
        std::string ep = path + "/cycle/" + std::to_string(j++);
        CheckKeys(e, ep, {"component", "curve"});
        pt.cycle.push_back({GetString(Need(e, ep, "component"), ep + "/component"),
                            GetString(Need(e, ep, "curve"), ep + "/curve")});
      }
    }
    p.surface.points.push_back(std::move(pt));
  }
  i = 0;
  if (doc.contains("branch_data")) {
    for (const Json& d : GetArray(doc["branch_data"], "/branch_data")) {
      std::string path = "/branch_data/" + std::to_string(i++);
      CheckKeys(d, path, {"curve", "component", "generator", "psi_exponent"});
      std::string cid = GetString(Need(d, path, "curve"), path + "/curve");
      const CurveDecl* c = p.surface.FindCurve(cid);
      if (!c) throw Error(ErrorKind::kUnknownId, path + ": unknown curve '" + cid + "'");
      if (c->role == CurveRole::kDouble) {
        Bad(path, "double curve inertia belongs on the curve sides");
      }
      std::string comp = d.contains("component")
                             ? GetString(d["component"], path + "/component")
                             : (c->sides.empty() ? std::string() : c->sides[0].component);
      GroupElement g = GetElement(p.group, Need(d, path, "generator"), path + "/generator");
      int psi = d.contains("psi_exponent")
                    ? static_cast<int>(GetInt(d["psi_exponent"], path + "/psi_exponent"))
                    : 1;
      CyclicPair pair;
      try {
        pair = MakeCyclicPair(p.group, g, psi);
      } catch (const Error& e) {
        Bad(path, e.what());
      }
      data_on(comp, path).branches.push_back({cid, pair});
    }
  }
  i = 0;
  if (doc.contains("line_bundles")) {
    for (const Json& l : GetArray(doc["line_bundles"], "/line_bundles")) {
      std::string path = "/line_bundles/" + std::to_string(i++);
      CheckKeys(l, path, {"component", "character", "class"});
      std::string comp = GetString(Need(l, path, "component"), path + "/component");
      BuildingData& bd = data_on(comp, path);
      Character chi{GetInts(Need(l, path, "character"), path + "/character")};
      if (!p.group.Contains(GroupElement{chi.coeffs})) Bad(path, "not a character");
      auto model = p.surface.ComponentById(comp).model;
      if (!bd.L) bd.L = LineBundleMap{};
      bd.L->insert_or_assign(
          chi, QDivisorClass{GetClass(Need(l, path, "class"), path + "/class", model->rank),
                             model});
    }
  }
  return p;
}

}  // namespace detail

inline InputDocument parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kInput, std::string("malformed JSON: ") + e.what());
  }
  detail::CheckKeys(doc, "/", {"version", "group", "components", "curves", "points",
                               "branch_data", "line_bundles", "local_config"});
  InputDocument out;
  out.version = detail::GetString(detail::Need(doc, "", "version"), "/version");
  if (out.version != kSchemaVersion) {
    detail::Bad("/version", "unsupported schema version '" + out.version + "'");
  }
  bool global = doc.contains("group") || doc.contains("components") ||
                doc.contains("curves") || doc.contains("points");
  if (global) out.problem = detail::ParseProblem(doc);
  if (doc.contains("local_config")) {
    out.local = detail::ParseLocal(doc["local_config"], "/local_config");
  }
  if (!out.problem && !out.local) {
    detail::Bad("/", "document has neither a surface nor a local_config");
  }
  return out;
}

// Canonical JSON form of a document; parse_input(render) reproduces it.
inline Json render_input(const InputDocument& d) {
  Json out;
  out["version"] = d.version;
  if (d.problem) {
    const GluingProblem& p = *d.problem;
    out["group"] = p.group.orders();
    Json comps = Json::array();
    for (const Component& c : p.surface.components) {
      Json j;
      j["id"] = c.id;
      j["kind"] = c.model->kind == SurfaceKind::kP2      ? "P2"
                  : c.model->kind == SurfaceKind::kP1xP1 ? "P1xP1"
                                                         : "LATTICE";
      if (c.model->kind == SurfaceKind::kLattice) {
        j["gram"] = c.model->gram;
        j["canonical"] = c.model->canonical;
        j["chi_O"] = c.model->chi_O;
      }
      comps.push_back(j);
    }
    out["components"] = comps;
    Json curves = Json::array();
    for (const CurveDecl& c : p.surface.curves) {
      Json j;
      j["id"] = c.id;
      j["role"] = c.role == CurveRole::kDouble ? "double" : "branch";
      Json sides = Json::array();
      for (const CurveSide& s : c.sides) {
        Json sj;
        sj["component"] = s.component;
        sj["class"] = detail::ClassJson(s.cls);
        if (c.role == CurveRole::kDouble) {
          GroupElement g = p.group.Zero();
          if (const BuildingData* bd = FindData(p.data, s.component)) {
            for (const BranchDatum& b : bd->branches) {
              if (b.curve == c.id) g = b.pair.generator;
            }
          }
          sj["inertia"] = g.coeffs;
        }
        sides.push_back(sj);
      }
      j["sides"] = sides;
      j["rational"] = c.rational;
      curves.push_back(j);
    }
    out["curves"] = curves;
    Json points = Json::array();
    for (const PointDecl& y : p.surface.points) {
      Json j;
      j["id"] = y.id;
      j["on"] = y.on;
      if (!y.incident_mults.empty()) j["mults"] = y.incident_mults;
      j["c_singular"] = y.c_singular;
      if (!y.cycle.empty()) {
        Json cyc = Json::array();
        for (const CycleEntry& e : y.cycle) {
          cyc.push_back({{"component", e.component}, {"curve", e.curve}});
        }
        j["cycle"] = cyc;
      }
      points.push_back(j);
    }
    out["points"] = points;
    Json data = Json::array();
    Json bundles = Json::array();
    for (const BuildingData& bd : p.data) {
      for (const BranchDatum& b : bd.branches) {
        if (IsDoubleCurve(p.surface, b.curve)) continue;
        data.push_back({{"curve", b.curve},
                        {"component", bd.component},
                        {"generator", b.pair.generator.coeffs},
                        {"psi_exponent", b.pair.psi_exponent}});
      }
      if (bd.L) {
        for (const auto& [chi, cls] : *bd.L) {
          bundles.push_back({{"component", bd.component},
                             {"character", chi.coeffs},
                             {"class", detail::ClassJson(cls.coeffs)}});
        }
      }
    }
    out["branch_data"] = data;
    if (!bundles.empty()) out["line_bundles"] = bundles;
  }
  if (d.local) {
    const LocalConfig& c = *d.local;
    Json j;
    j["r"] = c.r;
    j["base"] = c.base == BaseKind::kSmooth ? "smooth" : "dc";
    if (c.base == BaseKind::kDoubleCurve) j["g0"] = detail::MaskJson(c.g0, c.r);
    Json lines = Json::array();
    for (const LocalLine& l : c.lines) {
      Json lj;
      if (c.base == BaseKind::kDoubleCurve) lj["side"] = l.side;
      Json els = Json::array();
      for (Mask m : l.elements) els.push_back(detail::MaskJson(m, c.r));
      lj["elements"] = els;
      if (!l.symbol.empty()) lj["symbol"] = l.symbol;
      lines.push_back(lj);
    }
    j["lines"] = lines;
    out["local_config"] = j;
  }
  return out;
}

struct CommandRequest {
  std::string command;
  std::string file;  // may be empty for `tables`
  std::string point;
  int table = 0;  // 0 means all
  bool regenerate = false;
  std::string format = "text";
};

struct CommandOutput {
  int exit_code = 0;
  bool error = false;  // text is an error message
  std::string text;
};

namespace detail {

// Display width in code points, so aligned columns survive UTF-8 cells.
inline std::size_t Width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

inline std::string Pad(const std::string& s, std::size_t w) {
  std::size_t n = Width(s);
  return s + std::string(w > n ? w - n : 0, ' ');
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string CharName(const Character& chi) { return FormatElement(chi.coeffs); }

inline std::string MonomialString(const SigmaMonomial& m) {
  std::string s;
  for (const auto& [sym, e] : m) {
    if (!s.empty()) s += " ";
    s += sym;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

inline std::string ChiValueString(const ChiContribution& c) {
  return c.relevant ? "2^" + std::to_string(c.exponent) + " = " + std::to_string(c.Value())
                    : "0";
}

inline Json RowJson(const TableRow& r) {
  Json j;
  j["table"] = r.table;
  j["label"] = r.label;
  j["h_order"] = r.h_order;
  j["relations"] = r.printed_relations;
  j["iota"] = r.iota;
  j["chi"] = r.chi.ToString();
  j["singularity"] = r.singularity;
  j["normalization"] = r.normalization;
  j["curve_map"] = r.curve_map;
  j["sr_type"] = r.sr_type;
  if (!r.same_as.empty()) j["same_as"] = r.same_as;
  if (r.erratum) j["erratum_relations"] = r.relations;
  return j;
}

struct Result {
  bool ok = true;
  Json json = Json::object();
  std::string text;
};

inline const GluingProblem& NeedProblem(const InputDocument& d) {
  if (!d.problem) throw Error(ErrorKind::kInput, "this command needs a surface document");
  return *d.problem;
}

inline LocalConfig NeedLocal(const InputDocument& d, const std::string& point) {
  if (!point.empty()) return local_config_at(NeedProblem(d), point);
  if (!d.local) throw Error(ErrorKind::kInput, "give --point or a local_config");
  return *d.local;
}

inline Result RunValidate(const InputDocument& d) {
  const GluingProblem& p = NeedProblem(d);
  Result r;
  std::ostringstream t;
  Json findings = Json::array();
  for (const Finding& f : validate_surface(p.surface).findings) {
    findings.push_back({{"code", f.code}, {"locus", f.locus}, {"message", f.message}});
    t << "finding " << f.code << " at " << f.locus << ": " << f.message << "\n";
    r.ok = false;
  }
  r.json["findings"] = findings;
  if (!r.ok) {
    r.text = t.str();
    return r;
  }
  Json comps = Json::array();
  for (const BuildingData& bd : p.data) {
    Json c;
    c["component"] = bd.component;
    StructureFlags f = structure_flags(p.surface, bd);
    c["normal"] = f.normal;
    c["gdc"] = f.gdc;
    c["standardable"] = f.standardable;
    t << "component " << bd.component << ": normal=" << f.normal << " gdc=" << f.gdc
      << " standardable=" << f.standardable;
    try {
      LineBundleMap L = line_bundles(p.surface, bd);
      FundamentalCheck fc = check_fundamental_relations(p.surface, bd, L);
      c["fundamental_relations"] = fc.ok;
      if (!fc.ok) {
        r.ok = false;
        c["violating"] = {CharName(fc.violating->first), CharName(fc.violating->second)};
      }
      Json lj = Json::object();
      for (const auto& [chi, cls] : L) lj[CharName(chi)] = ClassJson(cls.coeffs);
      c["L"] = lj;
      t << " fundamental_relations=" << (fc.ok ? "ok" : "FAIL");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNoSolution) throw;
      r.ok = false;
      c["fundamental_relations"] = false;
      c["error"] = e.what();
      t << " " << e.what();
    }
    t << "\n";
    comps.push_back(c);
  }
  r.json["components"] = comps;
  Json slc = Json::array();
  for (const SlcViolation& v : slc_check(p.surface, p.data).violations) {
    r.ok = false;
    slc.push_back({{"component", v.component}, {"locus", v.locus}, {"value", FormatQ(v.value)}});
    t << "slc violation on " << v.component << " at " << v.locus << ": " << FormatQ(v.value)
      << "\n";
  }
  r.json["slc_violations"] = slc;
  t << (r.ok ? "valid\n" : "invalid\n");
  r.text = t.str();
  return r;
}

inline Result RunClassify(const InputDocument& d, const std::string& point) {
  LocalConfig cfg = NeedLocal(d, point);
  Classification c = classify(cfg);
  const TableRow& row = *c.row;
  Result r;
  r.json["row"] = RowJson(row);
  r.json["relations"] = c.code.ToString();
  r.json["h_order"] = c.h_order;
  r.json["iota"] = c.iota;
  r.json["chi_contribution"] = c.chi.Value();
  r.json["normalization"] = c.normalization.ToString();
  std::ostringstream t;
  if (!point.empty()) t << "point " << point << "\n";
  t << "row " << row.label << " (table " << row.table << ")";
  if (!row.same_as.empty()) t << ", same as " << row.same_as;
  t << "\nrelations " << c.code.ToString() << "\n|H| " << c.h_order << "\niota " << c.iota
    << "\nchi contribution " << ChiValueString(c.chi) << "\nsingularity "
    << row.singularity << "\nnormalization " << c.normalization.ToString() << "\n";
  if (!row.curve_map.empty()) t << "double curve " << row.curve_map << "\n";
  if (!row.sr_type.empty()) t << "semiresolution " << row.sr_type << "\n";
  r.text = t.str();
  return r;
}

inline std::string HString(const std::optional<Cohomology>& h) {
  if (!h) return "INDETERMINATE";
  return "(" + std::to_string(h->h0) + "," + std::to_string(h->h1) + "," +
         std::to_string(h->h2) + ")";
}

inline std::string HString(const std::optional<CurveCohomology>& h) {
  if (!h) return "INDETERMINATE";
  return "(" + std::to_string(h->h0) + "," + std::to_string(h->h1) + ")";
}

inline Result RunInvariants(const InputDocument& d) {
  const GluingProblem& p = NeedProblem(d);
  InvariantReport rep = build_report(p);
  Result r;
  std::ostringstream t;
  r.json["k_square"] = RationalJson(rep.k_square);
  r.json["chi_OX"] = rep.chi.chi_OX;
  r.json["chi_OXprime"] = rep.chi.chi_OXprime;
  r.json["chi_B"] = rep.chi.chi_B;
  r.json["relevant_weight"] = rep.chi.relevant;
  t << "K^2 = " << FormatQ(rep.k_square) << "\nchi(O_X) = " << rep.chi.chi_OX
    << "\n  chi(O_X') = " << rep.chi.chi_OXprime << "\n  chi(O_B~) = " << rep.chi.chi_B
    << "\n  relevant = " << rep.chi.relevant << "\n";
  Json rel = Json::array();
  for (const RelevantPoint& y : rep.relevant) {
    rel.push_back({{"point", y.point}, {"weight", y.weight}});
    t << "relevant point " << y.point << " weight " << y.weight << "\n";
  }
  r.json["relevant_points"] = rel;
  Json eig = Json::array();
  for (const EigensheafReport& e : rep.eigensheaves) {
    eig.push_back({{"character", e.chi.coeffs},
                   {"chi_F", e.chi_F},
                   {"chi_imalpha", e.chi_imalpha},
                   {"piece_degrees", e.piece_degrees},
                   {"t_count", e.t_count},
                   {"h_imalpha", HString(e.imalpha_h)},
                   {"h_F", HString(e.F_h)}});
    t << "character " << CharName(e.chi) << ": chi(F)=" << e.chi_F
      << " chi(im alpha)=" << e.chi_imalpha << " h(im alpha)=" << HString(e.imalpha_h)
      << " h(F)=" << HString(e.F_h) << "\n";
  }
  r.json["eigensheaves"] = eig;
  Json cart = Json::array();
  for (const auto& [y, c] : rep.cartier) {
    cart.push_back({{"point", y}, {"index", c.ToString()}, {"basis", c.basis}});
    t << "cartier index at " << y << ": " << c.ToString() << "\n";
  }
  r.json["cartier"] = cart;
  r.json["diagnostics"] = rep.diagnostics;
  for (const std::string& s : rep.diagnostics) t << "note: " << s << "\n";
  r.text = t.str();
  return r;
}

inline Result RunGlue(const InputDocument& d) {
  const GluingProblem& p = NeedProblem(d);
  GlueReport g = glue_check(p);
  Result r;
  std::ostringstream t;
  Json v = Json::array();
  for (const GlueViolation& x : g.violations) {
    v.push_back({{"curve", x.curve}, {"point", x.point}, {"message", x.message}});
    t << "violation on " << x.curve;
    if (!x.point.empty()) t << " at " << x.point;
    t << ": " << x.message << "\n";
  }
  r.json["violations"] = v;
  r.ok = g.ok();
  if (r.ok) {
    SideSets sets = incidence_sets(p);
    Json e = Json::array();
    for (const CurveCharSets& s : sets.entries) {
      long long deg = m_degree(p, sets, s.curve, s.chi);
      e.push_back({{"curve", s.curve},
                   {"character", s.chi.coeffs},
                   {"A", s.A},
                   {"B", s.B},
                   {"N", s.N},
                   {"deg_M", deg}});
      t << s.curve << " " << CharName(s.chi) << ": |A|=" << s.A.size()
        << " |B|=" << s.B.size() << " |N|=" << s.N.size() << " deg M=" << deg << "\n";
    }
    r.json["sets"] = e;
    r.json["diagnostics"] = sets.diagnostics;
    for (const std::string& s : sets.diagnostics) t << "note: " << s << "\n";
  }
  t << (r.ok ? "glueable\n" : "not glueable\n");
  r.text = t.str();
  return r;
}

inline Result RunTables(int table, bool regen) {
  if (table < 0 || table > kTableCount) {
    throw Error(ErrorKind::kInput, "--table must be in 1..9");
  }
  Result r;
  std::ostringstream t;
  Json tables = Json::array();
  for (int id = 1; id <= kTableCount; ++id) {
    if (table && id != table) continue;
    std::vector<const TableRow*> rows = TableIndex::Get().Rows(id);
    Json tj;
    tj["table"] = id;
    Json rj = Json::array();
    std::vector<std::vector<std::string>> cells = {
        {"No.", "|H|", "Relations", "iota", "chi", "Singularity", "X~", "C map", "sr"}};
    for (const TableRow* row : rows) {
      rj.push_back(RowJson(*row));
      bool same = !row->same_as.empty();
      cells.push_back({row->label, std::to_string(row->h_order), row->printed_relations,
                       same ? "" : std::to_string(row->iota), same ? "" : row->chi.ToString(),
                       same ? "same as " + row->same_as : row->singularity,
                       row->printed_normalization, same ? "" : row->curve_map,
                       same ? "" : row->sr_type});
    }
    std::vector<std::size_t> w(cells[0].size(), 0);
    for (const auto& c : cells) {
      for (std::size_t i = 0; i < c.size(); ++i) w[i] = std::max(w[i], Width(c[i]));
    }
    t << "Table " << id << "\n";
    for (const auto& c : cells) {
      std::string line;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (id <= 3 && i == 4) continue;  // no chi column
        line += Pad(c[i], w[i]) + "  ";
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      t << line << "\n";
    }
    tj["rows"] = rj;
    if (regen) {
      RegenerationReport rep = regenerate(id);
      tj["regenerated_classes"] = rep.classes;
      t << "regenerated " << rep.classes << " classes for " << rep.rows << " rows: ok\n";
    }
    t << "\n";
    tables.push_back(tj);
  }
  r.json["tables"] = tables;
  r.text = t.str();
  return r;
}

inline Result RunIndex(const InputDocument& d, const std::string& point) {
  const GluingProblem& p = NeedProblem(d);
  Result r;
  std::ostringstream t;
  Json out = Json::array();
  for (const PointDecl& y : p.surface.points) {
    if (!point.empty() && y.id != point) continue;
    CartierIndex c = global_cartier_index(p, y.id);
    out.push_back({{"point", y.id}, {"index", c.ToString()}, {"basis", c.basis}});
    t << y.id << ": " << c.ToString() << " (" << c.basis << ")\n";
  }
  if (!point.empty() && out.empty()) p.surface.Point(point);
  r.json["points"] = out;
  r.text = t.str();
  return r;
}

inline Result RunLocalEq(const InputDocument& d, const std::string& point) {
  // At a declared point the symbols are curve ids; C is s0.
  LocalConfig cfg = NeedLocal(d, point);
  LocalEquations eq = local_equations(cfg);
  Result r;
  std::ostringstream t;
  Json pw = Json::array();
  for (const PowerEquation& e : eq.powers) {
    pw.push_back({{"character", e.chi.coeffs}, {"d", e.d}, {"rhs", MonomialString(e.sigma)}});
    t << "z" << CharName(e.chi) << "^" << e.d << " = " << MonomialString(e.sigma) << "\n";
  }
  Json pr = Json::array();
  for (const PairEquation& e : eq.pairs) {
    pr.push_back({{"chi", e.chi.coeffs},
                  {"chi_prime", e.chi_prime.coeffs},
                  {"product", e.product.coeffs},
                  {"sigma", MonomialString(e.sigma)}});
    t << "z" << CharName(e.chi) << " z" << CharName(e.chi_prime) << " = ";
    if (!e.sigma.empty()) t << MonomialString(e.sigma) << " ";
    t << "z" << CharName(e.product) << "\n";
  }
  r.json["powers"] = pw;
  r.json["pairs"] = pr;
  r.text = t.str();
  return r;
}

}  // namespace detail

inline CommandOutput run_command(const CommandRequest& req) {
  static const std::set<std::string> kCommands = {
      "validate", "classify-point", "invariants", "glue-check", "tables", "index", "local-eq"};
  Json out;
  out["command"] = req.command;
  CommandOutput result;
  detail::Result r;
  try {
    if (!kCommands.count(req.command)) {
      throw Error(ErrorKind::kInput, "unknown command '" + req.command + "'");
    }
    if (req.format != "text" && req.format != "json") {
      throw Error(ErrorKind::kInput, "--format must be text or json");
    }
    if (req.command == "tables") {
      r = detail::RunTables(req.table, req.regenerate);
    } else {
      if (req.file.empty()) throw Error(ErrorKind::kInput, "missing input file");
      InputDocument doc = parse_input(detail::ReadFile(req.file));
      if (req.command == "validate") r = detail::RunValidate(doc);
      if (req.command == "classify-point") r = detail::RunClassify(doc, req.point);
      if (req.command == "invariants") r = detail::RunInvariants(doc);
      if (req.command == "glue-check") r = detail::RunGlue(doc);
      if (req.command == "index") r = detail::RunIndex(doc, req.point);
      if (req.command == "local-eq") r = detail::RunLocalEq(doc, req.point);
    }
    result.exit_code = r.ok ? 0 : 1;
    out["status"] = r.ok ? "ok" : "fail";
    out["results"] = r.json;
  } catch (const Error& e) {
    result.exit_code = IsInputError(e.kind()) ? 2 : 1;
    result.error = true;
    out["status"] = "error";
    out["results"] = {{"error", ErrorKindName(e.kind())}, {"message", e.what()}};
    r.text = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.error = true;
    out["status"] = "error";
    out["results"] = {{"error", "input"}, {"message", e.what()}};
    r.text = std::string("error: ") + e.what() + "\n";
  }
  result.text = req.format == "json" ? out.dump(2) + "\n" : r.text;
  return result;
}

}  // namespace abelcover

#endif  // ABELCOVER_CLI_HPP_
