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


// K^2 and chi(O_X) of a glued Z_2^r cover, per-character Euler
// characteristics, and Cartier indices at declared points.

#ifndef ABELCOVER_INVARIANTS_HPP_
#define ABELCOVER_INVARIANTS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelcover/abelian_group.hpp"
#include "abelcover/cover_data.hpp"
#include "abelcover/errors.hpp"
#include "abelcover/gluing.hpp"
#include "abelcover/local_classifier.hpp"
#include "abelcover/surface_model.hpp"

namespace abelcover {

// sum_i |G| (K + D + C')^2 over the components, C' counted once.
inline Q k_square(const GluingProblem& p) {
  Q total(0);
  for (const Component& comp : p.surface.components) {
    const BuildingData& bd = p.DataOn(comp.id);
    QDivisorClass c = QDivisorClass::Canonical(comp.model) + HurwitzClass(p.surface, bd);
    for (const CurveDecl* dc : p.surface.DoubleCurves()) {
      for (const CurveSide& side : dc->sides) {
        if (side.component == comp.id) c = c + p.surface.ClassOn(dc->id, comp.id);
      }
    }
    total += Q(static_cast<long long>(p.group.order())) * intersect(c, c);
  }
  return total;
}

struct DoubleCurveTerm {
  std::string curve;
  Character chi;
  long long deg_m = 0;
  std::size_t n_count = 0;
};

inline std::vector<DoubleCurveTerm> DoubleCurveTerms(const GluingProblem& p,
                                                     const SideSets& sets) {
  std::vector<DoubleCurveTerm> out;
  for (const CurveCharSets& e : sets.entries) {
    out.push_back({e.curve, e.chi, m_degree(p, sets, e.curve, e.chi), e.N.size()});
  }
  return out;
}

// sum over l and chi with chi(g_l) = 0 of 1 - deg M_{l,chi}.
inline long long chi_normalized_B(const GluingProblem& p, const SideSets& sets) {
  long long total = 0;
  for (const DoubleCurveTerm& t : DoubleCurveTerms(p, sets)) total += 1 - t.deg_m;
  return total;
}

inline long long chi_normalized_B(const GluingProblem& p) {
  return chi_normalized_B(p, incidence_sets(p));
}

struct CurveCohomology {
  long long h0 = 0;
  long long h1 = 0;
  bool operator==(const CurveCohomology&) const = default;
};

struct EigensheafReport {
  Character chi;
  long long chi_F = 0;
  long long chi_imalpha = 0;
  std::vector<long long> piece_degrees;  // line bundles on the F_l
  std::size_t t_count = 0;
  std::optional<CurveCohomology> imalpha_h;  // empty when not forced
  std::optional<Cohomology> F_h;             // empty when not forced
};

inline EigensheafReport chi_eigensheaf(const GluingProblem& p, const SideSets& sets,
                                       const Character& chi) {
  p.group.Check(chi);
  EigensheafReport r;
  r.chi = chi;
  bool trivial = chi == p.group.TrivialCharacter();
  for (const CurveCharSets& e : sets.entries) {
    if (e.chi != chi) continue;
    long long d = trivial ? 0 : -m_degree(p, sets, e.curve, chi) -
                                    static_cast<long long>(e.N.size());
    r.piece_degrees.push_back(d);
  }
  r.t_count = sets.T.at(chi).size();
  long long t = static_cast<long long>(r.t_count);
  r.chi_imalpha = -t;
  CurveCohomology sum;
  for (long long d : r.piece_degrees) {
    r.chi_imalpha += 1 + d;
    auto [h0, h1] = cohomology_p1(d);
    sum.h0 += h0;
    sum.h1 += h1;
  }
  // The map onto O_T is surjective on sections in these cases.
  if (t == 0) {
    r.imalpha_h = sum;
  } else if (sum.h0 == 0) {
    r.imalpha_h = CurveCohomology{0, sum.h1 + t};
  } else if (trivial && t <= 1) {
    r.imalpha_h = CurveCohomology{sum.h0 - t, sum.h1};
  }

  long long chi_L = 0;
  bool pieces_known = true;
  Cohomology lsum;
  for (const Component& comp : p.surface.components) {
    const BuildingData& bd = p.DataOn(comp.id);
    QDivisorClass L = LookupL(p.surface, bd, line_bundles(p.surface, bd), chi);
    QDivisorClass inv = L * Q(-1);
    chi_L += euler_char_inverse(L);
    if (comp.model->kind == SurfaceKind::kLattice) {
      pieces_known = false;
      continue;
    }
    Cohomology h = cohomology(inv);
    lsum.h0 += h.h0;
    lsum.h1 += h.h1;
    lsum.h2 += h.h2;
  }
  r.chi_F = chi_L - r.chi_imalpha;
  if (pieces_known && r.imalpha_h && lsum.h1 == 0 && lsum.h2 == 0) {
    if (trivial) {
      long long c = p.surface.ConnectedComponents();
      long long comps = static_cast<long long>(p.surface.components.size());
      r.F_h = Cohomology{c, r.imalpha_h->h0 - (comps - c), r.imalpha_h->h1};
    } else if (lsum.h0 == 0) {
      r.F_h = Cohomology{0, r.imalpha_h->h0, r.imalpha_h->h1};
    }
  }
  return r;
}

inline EigensheafReport chi_eigensheaf(const GluingProblem& p, const Character& chi) {
  return chi_eigensheaf(p, incidence_sets(p), chi);
}

struct ChiBreakdown {
  long long chi_OXprime = 0;
  long long chi_B = 0;
  long long relevant = 0;
  long long chi_OX = 0;
};

// chi(O_X') - chi(O_B~) + sum over relevant points of [G : H_y], checked
// against the sum of the eigensheaf Euler characteristics.
inline ChiBreakdown chi_breakdown(const GluingProblem& p, const SideSets& sets) {
  ChiBreakdown b;
  for (const Component& comp : p.surface.components) {
    const BuildingData& bd = p.DataOn(comp.id);
    LineBundleMap L = line_bundles(p.surface, bd);
    b.chi_OXprime += comp.model->chi_O;
    for (const auto& [chi, cls] : L) b.chi_OXprime += euler_char_inverse(cls);
  }
  b.chi_B = chi_normalized_B(p, sets);
  for (const RelevantPoint& y : relevant_points(p, sets)) {
    b.relevant += static_cast<long long>(y.weight);
  }
  b.chi_OX = b.chi_OXprime - b.chi_B + b.relevant;
  long long sum = 0;
  for (const Character& chi : p.group.Characters()) {
    sum += chi_eigensheaf(p, sets, chi).chi_F;
  }
  if (sum != b.chi_OX) {
    throw Error(ErrorKind::kInternalConsistency,
                "chi(O_X) is " + std::to_string(b.chi_OX) +
                    " but the eigensheaves sum to " + std::to_string(sum));
  }
  return b;
}

inline long long chi_OX(const GluingProblem& p) {
  return chi_breakdown(p, incidence_sets(p)).chi_OX;
}

struct CartierIndex {
  std::optional<long long> value;  // empty means indeterminate
  std::string basis;

  std::string ToString() const {
    return value ? std::to_string(*value) : "INDETERMINATE";
  }
};

inline CartierIndex global_cartier_index(const GluingProblem& p,
                                         const std::string& point) {
  const PointDecl& y = p.surface.Point(point);
  if (y.c_singular) {
    bool bare = true;
    for (const BuildingData& bd : p.data) {
      for (const BranchDatum& d : bd.branches) {
        if (!IsDoubleCurve(p.surface, d.curve) && y.IsOn(d.curve)) bare = false;
      }
    }
    if (bare && glue_check(p).ok()) {
      return {1, "cycle point without branch lines: degenerate cusp"};
    }
    return {std::nullopt, "cycle point outside the sufficient conditions"};
  }
  std::vector<CyclicPair> pairs;
  std::vector<std::size_t> mask;
  auto add = [&](const BranchDatum& d, bool in_mask) {
    if (in_mask) mask.push_back(pairs.size());
    pairs.push_back(d.pair);
  };
  const CurveDecl* c = DoubleCurveAt(p.surface, y);
  if (!c) {
    for (const std::string& comp : p.surface.ComponentsAt(y)) {
      for (const BranchDatum& d : p.DataOn(comp).branches) {
        if (y.IsOn(d.curve)) add(d, true);
      }
    }
    if (pairs.empty()) return {1, "no branch data"};
    return {residual_index(component_sum_hom(p.group, pairs), mask),
            "normal point: residual index"};
  }
  for (const BranchDatum& d : p.DataOn(c->sides[0].component).branches) {
    if (d.curve == c->id) add(d, false);
  }
  for (const CurveSide& side : c->sides) {
    for (const BranchDatum* d : BranchDataAt(p, side.component, y)) add(*d, true);
  }
  if (pairs.empty()) return {1, "d.c. point without branch data"};
  long long res = residual_index(component_sum_hom(p.group, pairs), mask);
  if (res == 1) return {1, "tree graph and the character is a pullback"};
  return {2, "the character is not a pullback"};
}

struct PointCheck {
  std::string point;
  std::string label;
  std::uint64_t local = 0;
  std::uint64_t global = 0;
  bool ok() const { return local == global; }
};

// The chi column value of the germ against the relevant-point weight, at
// every point of a double curve whose germ is a table configuration.
inline std::vector<PointCheck> cross_check_points(const GluingProblem& p,
                                                  const SideSets& sets) {
  std::map<std::string, std::uint64_t> weight;
  for (const RelevantPoint& y : relevant_points(p, sets)) weight[y.point] = y.weight;
  std::vector<PointCheck> out;
  for (const PointDecl& y : p.surface.points) {
    if (y.c_singular || !DoubleCurveAt(p.surface, y)) continue;
    LocalConfig cfg = local_config_at(p, y.id);
    Classification cls;
    try {
      cls = classify(cfg);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kShape) continue;
      throw;
    }
    out.push_back({y.id, cls.row->label, cls.chi.Value(), weight[y.id]});
  }
  return out;
}

struct InvariantReport {
  Q k_square;
  ChiBreakdown chi;
  std::vector<RelevantPoint> relevant;
  std::vector<EigensheafReport> eigensheaves;
  std::vector<std::pair<std::string, CartierIndex>> cartier;
  std::vector<std::string> diagnostics;
};

// Runs the preconditions, then every invariant.
inline InvariantReport build_report(const GluingProblem& p) {
  ValidationReport v = validate_surface(p.surface);
  if (!v.ok()) {
    const Finding& f = v.findings.front();
    throw Error(ErrorKind::kInput, "surface invalid at '" + f.locus + "': " + f.message);
  }
  for (const BuildingData& bd : p.data) {
    if (bd.L) {
      FundamentalCheck fc = check_fundamental_relations(p.surface, bd);
      if (!fc.ok) {
        throw Error(ErrorKind::kInconsistency,
                    "given L on '" + bd.component + "' violates the fundamental relations");
      }
    }
  }
  SlcReport slc = slc_check(p.surface, p.data);
  if (!slc.ok()) {
    const SlcViolation& s = slc.violations.front();
    throw Error(ErrorKind::kUnsupported, "not slc at '" + s.locus + "' on '" +
                                             s.component + "': multiplicity " +
                                             FormatQ(s.value));
  }
  GlueReport g = glue_check(p);
  if (!g.ok()) {
    const GlueViolation& f = g.violations.front();
    throw Error(ErrorKind::kInconsistency,
                "gluing fails on '" + f.curve + "'" +
                    (f.point.empty() ? "" : " at '" + f.point + "'") + ": " + f.message);
  }
  SideSets sets = incidence_sets(p);
  InvariantReport r;
  r.k_square = k_square(p);
  r.chi = chi_breakdown(p, sets);
  r.relevant = relevant_points(p, sets);
  for (const Character& chi : p.group.Characters()) {
    r.eigensheaves.push_back(chi_eigensheaf(p, sets, chi));
  }
  for (const PointDecl& y : p.surface.points) {
    r.cartier.emplace_back(y.id, global_cartier_index(p, y.id));
  }
  r.diagnostics = sets.diagnostics;
  return r;
}

}  // namespace abelcover

#endif  // ABELCOVER_INVARIANTS_HPP_
