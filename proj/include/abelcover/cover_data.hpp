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

// Building data of standard covers over the normalized components.
//
// A double curve with nonzero inertia g_l is recorded as a branch datum of
// each adjacent component cover. Such data enter the line bundle solve and
// the inertia subgroups, but carry Hurwitz multiplicity zero.
//
// Only declared points are inspected. Every intersection point among branch
// and double curves that matters for slc must be declared by the user.

#ifndef ABELCOVER_COVER_DATA_HPP_
#define ABELCOVER_COVER_DATA_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelcover/abelian_group.hpp"
#include "abelcover/local_config.hpp"
#include "abelcover/surface_model.hpp"

namespace abelcover {

struct BranchDatum {
  std::string curve;
  CyclicPair pair;
};

using LineBundleMap = std::map<Character, QDivisorClass>;

struct BuildingData {
  FiniteAbelianGroup group;
  std::string component;
  std::vector<BranchDatum> branches;
  std::optional<LineBundleMap> L;
};

inline bool IsDoubleCurve(const GdcSurface& s, const std::string& curve) {
  return s.Curve(curve).role == CurveRole::kDouble;
}

struct FundamentalCheck {
  bool ok = true;
  std::optional<std::pair<Character, Character>> violating;
  std::optional<QDivisorClass> residual;  // LHS - RHS at the violation
};

inline QDivisorClass LookupL(const GdcSurface& s, const BuildingData& bd,
                             const LineBundleMap& L, const Character& chi) {
  auto model = s.ComponentById(bd.component).model;
  if (chi == bd.group.TrivialCharacter()) return QDivisorClass::Zero(model);
  auto it = L.find(chi);
  if (it == L.end()) {
    throw Error(ErrorKind::kMissingEntry,
                "no L entry for character " + FormatElement(chi.coeffs) +
                    " on '" + bd.component + "'");
  }
  return it->second;
}

// L_chi + L_chi' = L_{chi chi'} + sum_i eps^i [D_i] over unordered pairs.
inline FundamentalCheck check_fundamental_relations(const GdcSurface& s,
                                                    const BuildingData& bd,
                                                    const LineBundleMap& L) {
  auto model = s.ComponentById(bd.component).model;
  std::vector<QDivisorClass> classes;
  for (const BranchDatum& d : bd.branches) {
    classes.push_back(s.ClassOn(d.curve, bd.component));
  }
  std::vector<Character> chars = bd.group.Characters();
  for (std::size_t i = 1; i < chars.size(); ++i) {
    for (std::size_t j = i; j < chars.size(); ++j) {
      const Character& a = chars[i];
      const Character& b = chars[j];
      QDivisorClass diff = LookupL(s, bd, L, a) + LookupL(s, bd, L, b) -
                           LookupL(s, bd, L, bd.group.Multiply(a, b));
      for (std::size_t k = 0; k < bd.branches.size(); ++k) {
        int e = epsilon(bd.group, a, b, bd.branches[k].pair);
        if (e) diff = diff - classes[k] * Q(e);
      }
      if (!diff.IsZero()) return FundamentalCheck{false, std::pair{a, b}, diff};
    }
  }
  return FundamentalCheck{};
}

inline FundamentalCheck check_fundamental_relations(const GdcSurface& s,
                                                    const BuildingData& bd) {
  if (!bd.L) {
    throw Error(ErrorKind::kMissingEntry,
                "building data on '" + bd.component + "' has no L map");
  }
  return check_fundamental_relations(s, bd, *bd.L);
}

// L_chi = sum_i (a^i_chi / m_i) [D_i], which must be integral.
inline LineBundleMap solve_line_bundles(const GdcSurface& s,
                                        const BuildingData& bd) {
  auto model = s.ComponentById(bd.component).model;
  std::vector<QDivisorClass> classes;
  for (const BranchDatum& d : bd.branches) {
    CheckPair(bd.group, d.pair);
    classes.push_back(s.ClassOn(d.curve, bd.component));
  }
  LineBundleMap out;
  std::vector<Character> chars = bd.group.Characters();
  for (std::size_t i = 1; i < chars.size(); ++i) {
    QDivisorClass L = QDivisorClass::Zero(model);
    for (std::size_t k = 0; k < bd.branches.size(); ++k) {
      const CyclicPair& p = bd.branches[k].pair;
      int a = character_exponent(bd.group, chars[i], p);
      if (a) L = L + classes[k] * Q(a, p.order);
    }
    if (!L.IsIntegral()) {
      throw Error(ErrorKind::kNoSolution,
                  "L for character " + FormatElement(chars[i].coeffs) +
                      " on '" + bd.component + "' is the fractional class " +
                      L.ToString());
    }
    out.emplace(chars[i], L);
  }
  return out;
}

// The given L map, or the solved one.
inline LineBundleMap line_bundles(const GdcSurface& s, const BuildingData& bd) {
  return bd.L ? *bd.L : solve_line_bundles(s, bd);
}

struct HurwitzDivisor {
  std::map<std::string, Q> mults;        // branch curves only
  std::vector<std::string> double_locus;  // rho = 0
};

inline HurwitzDivisor hurwitz_divisor(const GdcSurface& s,
                                      const BuildingData& bd) {
  HurwitzDivisor h;
  for (const BranchDatum& d : bd.branches) {
    if (IsDoubleCurve(s, d.curve)) {
      h.double_locus.push_back(d.curve);
      continue;
    }
    h.mults[d.curve] += Q(d.pair.order - 1, d.pair.order);
  }
  return h;
}

// Hurwitz divisor as a class: sum of mult * [curve].
inline QDivisorClass HurwitzClass(const GdcSurface& s, const BuildingData& bd) {
  QDivisorClass D = QDivisorClass::Zero(s.ComponentById(bd.component).model);
  for (const auto& [curve, m] : hurwitz_divisor(s, bd).mults) {
    D = D + s.ClassOn(curve, bd.component) * m;
  }
  return D;
}

inline const BuildingData* FindData(const std::vector<BuildingData>& data,
                                    const std::string& component) {
  for (const BuildingData& bd : data) {
    if (bd.component == component) return &bd;
  }
  return nullptr;
}

inline Subgroup inertia_at_point(const GdcSurface& s,
                                 const std::vector<BuildingData>& data,
                                 const std::string& point_id) {
  const PointDecl& p = s.Point(point_id);
  if (data.empty()) {
    throw Error(ErrorKind::kShape, "no building data supplied");
  }
  std::vector<GroupElement> gens;
  for (const BuildingData& bd : data) {
    for (const BranchDatum& d : bd.branches) {
      if (p.IsOn(d.curve)) gens.push_back(d.pair.generator);
    }
  }
  return subgroup_generated(data.front().group, gens);
}

struct StructureFlags {
  bool normal = true;
  bool gdc = true;
  bool standardable = true;
};

inline StructureFlags structure_flags(const GdcSurface& s,
                                      const BuildingData& bd) {
  StructureFlags f;
  HurwitzDivisor h = hurwitz_divisor(s, bd);
  for (const auto& [curve, m] : h.mults) {
    if (m >= 1) f.normal = false;
    if (m > 1) f.gdc = false;
    if (m == 1) {
      int order2 = 0, total = 0;
      for (const BranchDatum& d : bd.branches) {
        if (d.curve != curve) continue;
        ++total;
        if (d.pair.order == 2) ++order2;
      }
      if (!(total == 2 && order2 == 2)) f.standardable = false;
    }
  }
  return f;
}

struct SlcViolation {
  std::string component;
  std::string locus;  // curve or point id
  Q value;
};

struct SlcReport {
  std::vector<SlcViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Components of nu*D + C' have multiplicity <= 1 and every declared point
// has multiplicity <= 2 on every component through it.
inline SlcReport slc_check(const GdcSurface& s,
                           const std::vector<BuildingData>& data) {
  SlcReport r;
  for (const BuildingData& bd : data) {
    HurwitzDivisor h = hurwitz_divisor(s, bd);
    for (const auto& [curve, m] : h.mults) {
      if (m > 1) r.violations.push_back({bd.component, curve, m});
    }
    for (const PointDecl& p : s.points) {
      Q total(0);
      bool touches = false;
      for (const auto& [curve, m] : h.mults) {
        if (p.IsOn(curve)) {
          total += m;
          touches = true;
        }
      }
      for (const std::string& cid : p.on) {
        const CurveDecl* c = s.FindCurve(cid);
        if (!c || c->role != CurveRole::kDouble) continue;
        for (const CurveSide& side : c->sides) {
          if (side.component == bd.component) {
            total += 1;
            touches = true;
          }
        }
      }
      if (touches && total > 2) {
        r.violations.push_back({bd.component, p.id, total});
      }
    }
  }
  return r;
}

// sigma exponents keyed by symbol.
using SigmaMonomial = std::map<std::string, long long>;

struct PairEquation {  // z_chi z_chi' = prod sigma^eps z_{chi chi'}
  Character chi;
  Character chi_prime;
  Character product;
  SigmaMonomial sigma;
};

struct PowerEquation {  // z_chi^d = prod sigma^{d a / m}
  Character chi;
  int d = 1;
  SigmaMonomial sigma;
};

struct LocalEquations {
  std::vector<PairEquation> pairs;
  std::vector<PowerEquation> powers;
};

struct SymbolPair {
  std::string symbol;
  CyclicPair pair;
};

inline LocalEquations local_equations(const FiniteAbelianGroup& group,
                                      const std::vector<SymbolPair>& lines) {
  LocalEquations eq;
  std::vector<Character> chars = group.Characters();
  for (const SymbolPair& l : lines) CheckPair(group, l.pair);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    PowerEquation pw{chars[i], group.CharacterOrder(chars[i]), {}};
    for (const SymbolPair& l : lines) {
      int a = character_exponent(group, chars[i], l.pair);
      long long e = static_cast<long long>(pw.d) * a / l.pair.order;
      if (e) pw.sigma[l.symbol] += e;
    }
    eq.powers.push_back(std::move(pw));
    for (std::size_t j = i; j < chars.size(); ++j) {
      PairEquation pe{chars[i], chars[j], group.Multiply(chars[i], chars[j]), {}};
      for (const SymbolPair& l : lines) {
        int e = epsilon(group, chars[i], chars[j], l.pair);
        if (e) pe.sigma[l.symbol] += e;
      }
      eq.pairs.push_back(std::move(pe));
    }
  }
  return eq;
}

// Symbols default to s0 for C and s1, s2, ... for the lines in order.
inline std::vector<SymbolPair> SymbolPairs(const LocalConfig& cfg) {
  FiniteAbelianGroup group(std::vector<int>(cfg.r, 2));
  std::vector<SymbolPair> out;
  if (cfg.base == BaseKind::kDoubleCurve && cfg.g0) {
    out.push_back({"s0", MakeCyclicPair(group, ElementFromMask(cfg.g0, cfg.r))});
  }
  int n = 0;
  for (const LocalLine& l : cfg.lines) {
    ++n;
    std::string sym = l.symbol.empty() ? "s" + std::to_string(n) : l.symbol;
    for (Mask g : l.elements) {
      out.push_back({sym, MakeCyclicPair(group, ElementFromMask(g, cfg.r))});
    }
  }
  return out;
}

inline LocalEquations local_equations(const LocalConfig& cfg) {
  return local_equations(FiniteAbelianGroup(std::vector<int>(cfg.r, 2)),
                         SymbolPairs(cfg));
}

}  // namespace abelcover

#endif  // ABELCOVER_COVER_DATA_HPP_
