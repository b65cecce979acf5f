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


// Gluing component covers along the double curves, for G = Z_2^r.
//
// Checks are the computable ones: both sides carry the same inertia g_l,
// weighted branch elements agree modulo g_l at every declared point of a
// double curve, and the cycle conditions hold at the c-singular points.

#ifndef ABELCOVER_GLUING_HPP_
#define ABELCOVER_GLUING_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "abelcover/abelian_group.hpp"
#include "abelcover/cover_data.hpp"
#include "abelcover/errors.hpp"
#include "abelcover/local_config.hpp"
#include "abelcover/surface_model.hpp"

namespace abelcover {

struct GluingProblem {
  GdcSurface surface;
  FiniteAbelianGroup group;
  std::vector<BuildingData> data;  // one per component

  const BuildingData& DataOn(const std::string& component) const {
    const BuildingData* bd = FindData(data, component);
    if (!bd) {
      throw Error(ErrorKind::kMissingEntry,
                  "no building data for component '" + component + "'");
    }
    return *bd;
  }
};

// g_l as seen from one side of a double curve; zero when no datum is given.
inline GroupElement DoubleInertia(const GluingProblem& p, const CurveDecl& c,
                                  std::size_t side) {
  const BuildingData& bd = p.DataOn(c.sides.at(side).component);
  const BranchDatum* found = nullptr;
  for (const BranchDatum& d : bd.branches) {
    if (d.curve != c.id) continue;
    if (found) {
      throw Error(ErrorKind::kShape,
                  "double curve '" + c.id + "' carries two data on '" + bd.component + "'");
    }
    found = &d;
  }
  return found ? found->pair.generator : p.group.Zero();
}

// Branch-role data on a component whose curve passes through the point.
inline std::vector<const BranchDatum*> BranchDataAt(const GluingProblem& p,
                                                    const std::string& component,
                                                    const PointDecl& y) {
  std::vector<const BranchDatum*> out;
  for (const BranchDatum& d : p.DataOn(component).branches) {
    if (!IsDoubleCurve(p.surface, d.curve) && y.IsOn(d.curve)) out.push_back(&d);
  }
  return out;
}

// The double curve through a smooth point of C, if any.
inline const CurveDecl* DoubleCurveAt(const GdcSurface& s, const PointDecl& y) {
  for (const std::string& cid : y.on) {
    const CurveDecl& c = s.Curve(cid);
    if (c.role == CurveRole::kDouble) return &c;
  }
  return nullptr;
}

struct GlueViolation {
  std::string curve;
  std::string point;  // empty for curve-wide violations
  std::string message;
};

struct GlueReport {
  std::vector<GlueViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline void RequireElementary2(const FiniteAbelianGroup& g) {
  if (!g.IsElementary2()) {
    throw Error(ErrorKind::kUnsupported, "gluing is implemented for Z_2^r only");
  }
}

// Sum, in Z_2^r, of the branch elements through y weighted by multiplicity.
inline Mask WeightedSum(const GluingProblem& p, const std::string& component,
                        const PointDecl& y) {
  Mask s = 0;
  for (const BranchDatum* d : BranchDataAt(p, component, y)) {
    if (y.Mult(d->curve) % 2) s ^= MaskFromElement(d->pair.generator);
  }
  return s;
}

// D.F on each side must be accounted for by the declared points.
inline void CheckIncidenceComplete(const GluingProblem& p, const CurveDecl& c) {
  for (const CurveSide& side : c.sides) {
    QDivisorClass F = p.surface.ClassOn(c.id, side.component);
    std::set<std::string> curves;
    for (const BranchDatum& d : p.DataOn(side.component).branches) {
      if (!IsDoubleCurve(p.surface, d.curve)) curves.insert(d.curve);
    }
    for (const std::string& cid : curves) {
      Q dot = intersect(p.surface.ClassOn(cid, side.component), F);
      Q declared(0);
      for (const PointDecl& y : p.surface.points) {
        if (y.IsOn(c.id) && y.IsOn(cid)) declared += y.Mult(cid);
      }
      if (dot != declared) {
        throw Error(ErrorKind::kIncompleteInput,
                    "'" + cid + "' meets '" + c.id + "' with intersection number " +
                        FormatQ(dot) +
                        " on '" + side.component + "' but the declared points account for " +
                        FormatQ(declared));
      }
    }
  }
}

inline GlueReport glue_check(const GluingProblem& p) {
  RequireElementary2(p.group);
  GlueReport r;
  std::map<std::string, Mask> inertia;
  for (const CurveDecl* c : p.surface.DoubleCurves()) {
    if (!c->rational) {
      throw Error(ErrorKind::kUnsupported, "double curve '" + c->id + "' is not rational");
    }
    if (c->sides.size() != 2) {
      throw Error(ErrorKind::kShape, "double curve '" + c->id + "' needs two sides");
    }
    if (c->sides[0].component == c->sides[1].component) {
      throw Error(ErrorKind::kUnsupported,
                  "double curve '" + c->id + "' is glued to its own component");
    }
    Mask ga = MaskFromElement(DoubleInertia(p, *c, 0));
    Mask gb = MaskFromElement(DoubleInertia(p, *c, 1));
    if (ga != gb) {
      r.violations.push_back({c->id, "", "the two sides declare different inertia"});
    }
    inertia[c->id] = ga;
    CheckIncidenceComplete(p, *c);
  }
  for (const PointDecl& y : p.surface.points) {
    if (y.c_singular) {
      Subgroup hy = inertia_at_point(p.surface, p.data, y.id);
      std::size_t q = y.cycle.size();
      for (std::size_t i = 0; i < q; ++i) {
        const std::string& ci = y.cycle[i].curve;
        Mask gi = inertia.at(ci);
        Mask prev = inertia.at(y.cycle[(i + q - 1) % q].curve);
        Mask next = inertia.at(y.cycle[(i + 1) % q].curve);
        if ((prev ^ next) != 0 && (prev ^ next) != gi) {
          r.violations.push_back({ci, y.id, "neighbouring inertia differ modulo g_l"});
        }
        std::uint64_t product = (gi ? 2 : 1) * (next ? 2 : 1);
        if (SpanOrder({gi, next}) != product || product != hy.order()) {
          r.violations.push_back(
              {ci, y.id, "adjacent inertia do not split the inertia subgroup"});
        }
      }
      continue;
    }
    const CurveDecl* c = DoubleCurveAt(p.surface, y);
    if (!c) continue;
    Mask diff = WeightedSum(p, c->sides[0].component, y) ^
                WeightedSum(p, c->sides[1].component, y);
    if (diff != 0 && diff != inertia.at(c->id)) {
      r.violations.push_back({c->id, y.id, "branch elements disagree modulo g_l"});
    }
  }
  return r;
}

struct CurveCharSets {
  std::string curve;
  Character chi;
  std::set<std::string> A, B, N;
};

struct SideSets {
  std::vector<CurveCharSets> entries;  // curve order, then character order
  std::map<Character, std::set<std::string>> T;
  std::vector<std::string> diagnostics;

  const CurveCharSets* Find(const std::string& curve, const Character& chi) const {
    for (const CurveCharSets& e : entries) {
      if (e.curve == curve && e.chi == chi) return &e;
    }
    return nullptr;
  }
};

inline const Residue kHalf{1, 2};

inline SideSets incidence_sets(const GluingProblem& p) {
  RequireElementary2(p.group);
  SideSets out;
  std::set<std::string> notes;
  std::vector<Character> chars = p.group.Characters();
  for (const CurveDecl* c : p.surface.DoubleCurves()) {
    GroupElement g = DoubleInertia(p, *c, 0);
    // Per side, the points where two order-2 data meet with total multiplicity 1.
    std::map<std::string, std::vector<const BranchDatum*>> pairs[2];
    for (std::size_t s = 0; s < 2; ++s) {
      const std::string& comp = c->sides[s].component;
      for (const PointDecl& y : p.surface.points) {
        if (y.c_singular || !y.IsOn(c->id)) continue;
        std::vector<const BranchDatum*> data = BranchDataAt(p, comp, y);
        if (data.empty()) continue;
        Q total(0);
        for (const BranchDatum* d : data) total += Q(d->pair.order - 1, d->pair.order);
        if (total != 1) {
          notes.insert("point '" + y.id + "' on '" + c->id + "' side '" + comp +
                       "': branch multiplicity " + FormatQ(total));
          continue;
        }
        for (const BranchDatum* d : data) {
          if (y.Mult(d->curve) != 1) {
            throw Error(ErrorKind::kUnsupported,
                        "'" + d->curve + "' is not transverse to '" + c->id +
                            "' at '" + y.id + "'");
          }
        }
        pairs[s][y.id] = data;
      }
    }
    for (const Character& chi : chars) {
      if (!p.group.Evaluate(chi, g).IsZero()) continue;
      CurveCharSets e{c->id, chi, {}, {}, {}};
      for (std::size_t s = 0; s < 2; ++s) {
        for (const auto& [yid, data] : pairs[s]) {
          bool all = true;
          for (const BranchDatum* d : data) {
            if (p.group.Evaluate(chi, d->pair.generator) != kHalf) all = false;
          }
          if (all) (s == 0 ? e.A : e.B).insert(yid);
        }
      }
      for (const std::string& y : e.A) {
        if (e.B.count(y)) e.N.insert(y);
      }
      out.entries.push_back(std::move(e));
    }
  }
  for (const Character& chi : chars) {
    std::set<std::string>& t = out.T[chi];
    for (const PointDecl& y : p.surface.points) {
      if (!y.c_singular) continue;
      Subgroup hy = inertia_at_point(p.surface, p.data, y.id);
      bool trivial = true;
      for (const GroupElement& h : hy.elements()) {
        if (!p.group.Evaluate(chi, h).IsZero()) trivial = false;
      }
      if (trivial) t.insert(y.id);
    }
  }
  out.diagnostics.assign(notes.begin(), notes.end());
  return out;
}

// deg M_{l,chi} = deg(L_chi . F_l) - |A|, which must agree with the b side.
inline long long m_degree(const GluingProblem& p, const SideSets& sets,
                          const std::string& curve, const Character& chi) {
  const CurveDecl& c = p.surface.Curve(curve);
  const CurveCharSets* e = sets.Find(curve, chi);
  if (!e) {
    throw Error(ErrorKind::kShape, "character " + FormatElement(chi.coeffs) +
                                       " is nontrivial on the inertia of '" + curve + "'");
  }
  long long deg[2];
  for (std::size_t s = 0; s < 2; ++s) {
    const std::string& comp = c.sides[s].component;
    const BuildingData& bd = p.DataOn(comp);
    QDivisorClass L = LookupL(p.surface, bd, line_bundles(p.surface, bd), chi);
    Q d = intersect(L, p.surface.ClassOn(curve, comp));
    if (d.denominator() != 1) {
      throw Error(ErrorKind::kInconsistency,
                  "L restricted to '" + curve + "' has fractional degree");
    }
    deg[s] = d.numerator() - static_cast<long long>(s == 0 ? e->A.size() : e->B.size());
  }
  if (deg[0] != deg[1]) {
    throw Error(ErrorKind::kInconsistency,
                "deg M on '" + curve + "' for character " + FormatElement(chi.coeffs) +
                    " is " + std::to_string(deg[0]) + " from one side and " +
                    std::to_string(deg[1]) + " from the other");
  }
  return deg[0];
}

inline long long m_degree(const GluingProblem& p, const std::string& curve,
                          const Character& chi) {
  return m_degree(p, incidence_sets(p), curve, chi);
}

struct RelevantPoint {
  std::string point;
  std::uint64_t weight = 0;  // [G : H_y]
};

// c-singular points, and points lying in some N_{l,chi}; declaration order.
inline std::vector<RelevantPoint> relevant_points(const GluingProblem& p,
                                                  const SideSets& sets) {
  std::vector<RelevantPoint> out;
  for (const PointDecl& y : p.surface.points) {
    bool rel = y.c_singular;
    for (const CurveCharSets& e : sets.entries) {
      if (e.N.count(y.id)) rel = true;
    }
    if (!rel) continue;
    Subgroup hy = inertia_at_point(p.surface, p.data, y.id);
    out.push_back({y.id, p.group.order() / hy.order()});
  }
  return out;
}

inline std::vector<RelevantPoint> relevant_points(const GluingProblem& p) {
  return relevant_points(p, incidence_sets(p));
}

// The germ of the cover at a declared point that is not c-singular.
inline LocalConfig local_config_at(const GluingProblem& p, const std::string& point) {
  RequireElementary2(p.group);
  const PointDecl& y = p.surface.Point(point);
  if (y.c_singular) {
    throw Error(ErrorKind::kUnsupported,
                "'" + point + "' is c-singular; its germ is not a table configuration");
  }
  LocalConfig cfg;
  cfg.r = static_cast<int>(p.group.rank());
  auto add_lines = [&](const std::string& comp, int side) {
    std::map<std::string, LocalLine> by_curve;
    std::vector<std::string> order;
    for (const BranchDatum* d : BranchDataAt(p, comp, y)) {
      auto [it, fresh] = by_curve.try_emplace(d->curve, LocalLine{side, {}, d->curve});
      if (fresh) order.push_back(d->curve);
      it->second.elements.push_back(MaskFromElement(d->pair.generator));
      if (it->second.elements.size() > 2) {
        throw Error(ErrorKind::kUnsupported,
                    "'" + d->curve + "' carries more than two data");
      }
    }
    for (const std::string& cid : order) cfg.lines.push_back(by_curve[cid]);
  };
  if (const CurveDecl* c = DoubleCurveAt(p.surface, y)) {
    cfg.base = BaseKind::kDoubleCurve;
    cfg.g0 = MaskFromElement(DoubleInertia(p, *c, 0));
    add_lines(c->sides[0].component, 1);
    add_lines(c->sides[1].component, 2);
    return cfg;
  }
  std::set<std::string> comps = p.surface.ComponentsAt(y);
  if (comps.size() > 1) {
    throw Error(ErrorKind::kShape, "'" + point + "' lies on several components");
  }
  if (!comps.empty()) add_lines(*comps.begin(), 0);
  return cfg;
}

}  // namespace abelcover

#endif  // ABELCOVER_GLUING_HPP_
