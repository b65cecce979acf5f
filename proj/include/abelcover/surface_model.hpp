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

// Intersection lattices of smooth surface components, Riemann-Roch, catalog
// cohomology, and the incidence skeleton of a g.d.c. base surface.
//
// Linear equivalence is lattice equality: Picard groups are torsion free.

#ifndef ABELCOVER_SURFACE_MODEL_HPP_
#define ABELCOVER_SURFACE_MODEL_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abelcover/abelian_group.hpp"

namespace abelcover {

enum class SurfaceKind { kP2, kP1xP1, kLattice };

inline const char* SurfaceKindName(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::kP2: return "P2";
    case SurfaceKind::kP1xP1: return "P1xP1";
    case SurfaceKind::kLattice: return "LATTICE";
  }
  return "?";
}

struct SmoothSurfaceModel {
  SurfaceKind kind = SurfaceKind::kLattice;
  int rank = 0;
  std::vector<std::vector<long long>> gram;
  std::vector<long long> canonical;
  long long chi_O = 1;

  static SmoothSurfaceModel P2() {
    return {SurfaceKind::kP2, 1, {{1}}, {-3}, 1};
  }
  static SmoothSurfaceModel P1xP1() {
    return {SurfaceKind::kP1xP1, 2, {{0, 1}, {1, 0}}, {-2, -2}, 1};
  }
  static SmoothSurfaceModel Lattice(std::vector<std::vector<long long>> gram,
                                    std::vector<long long> canonical,
                                    long long chi_O) {
    SmoothSurfaceModel s{SurfaceKind::kLattice,
                         static_cast<int>(gram.size()), std::move(gram),
                         std::move(canonical), chi_O};
    s.Validate();
    return s;
  }

  void Validate() const {
    if (static_cast<int>(gram.size()) != rank ||
        static_cast<int>(canonical.size()) != rank) {
      throw Error(ErrorKind::kShape, "gram/canonical size differs from rank");
    }
    for (int i = 0; i < rank; ++i) {
      if (static_cast<int>(gram[i].size()) != rank) {
        throw Error(ErrorKind::kShape, "gram matrix is not square");
      }
      for (int j = 0; j < rank; ++j) {
        if (gram[i][j] != gram[j][i]) {
          throw Error(ErrorKind::kShape, "gram matrix is not symmetric");
        }
      }
    }
  }

  bool operator==(const SmoothSurfaceModel&) const = default;
};

struct QDivisorClass {
  std::vector<Q> coeffs;
  std::shared_ptr<const SmoothSurfaceModel> surface;

  static QDivisorClass Zero(std::shared_ptr<const SmoothSurfaceModel> s) {
    return QDivisorClass{std::vector<Q>(s->rank, Q(0)), s};
  }
  static QDivisorClass FromInts(std::shared_ptr<const SmoothSurfaceModel> s,
                                const std::vector<long long>& v) {
    if (static_cast<int>(v.size()) != s->rank) {
      throw Error(ErrorKind::kShape, "class length differs from lattice rank");
    }
    QDivisorClass c{{}, std::move(s)};
    for (long long x : v) c.coeffs.push_back(Q(x));
    return c;
  }
  static QDivisorClass Canonical(std::shared_ptr<const SmoothSurfaceModel> s) {
    return FromInts(s, s->canonical);
  }

  bool IsIntegral() const {
    for (const Q& q : coeffs) {
      if (q.denominator() != 1) return false;
    }
    return true;
  }
  bool IsZero() const {
    for (const Q& q : coeffs) {
      if (q != 0) return false;
    }
    return true;
  }

  QDivisorClass operator+(const QDivisorClass& o) const {
    CheckSame(o);
    QDivisorClass r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
  }
  QDivisorClass operator-(const QDivisorClass& o) const {
    CheckSame(o);
    QDivisorClass r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
  }
  QDivisorClass operator*(const Q& k) const {
    QDivisorClass r = *this;
    for (Q& c : r.coeffs) c *= k;
    return r;
  }
  bool operator==(const QDivisorClass& o) const {
    return coeffs == o.coeffs &&
           (surface == o.surface || *surface == *o.surface);
  }

  void CheckSame(const QDivisorClass& o) const {
    if (!surface || !o.surface ||
        (surface != o.surface && !(*surface == *o.surface))) {
      throw Error(ErrorKind::kSurfaceMismatch,
                  "divisor classes live on different surfaces");
    }
  }

  std::string ToString() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) s += ",";
      s += FormatQ(coeffs[i]);
    }
    return s + ")";
  }
};

inline Q intersect(const QDivisorClass& a, const QDivisorClass& b) {
  a.CheckSame(b);
  const auto& gram = a.surface->gram;
  Q total(0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (gram[i][j] != 0) total += a.coeffs[i] * b.coeffs[j] * gram[i][j];
    }
  }
  return total;
}

// chi(L^{-1}) = chi(O) + L.(L+K)/2.
inline long long euler_char_inverse(const QDivisorClass& L) {
  if (!L.IsIntegral()) {
    throw Error(ErrorKind::kParity, "class " + L.ToString() + " is not integral");
  }
  Q v = Q(L.surface->chi_O) +
        intersect(L, L + QDivisorClass::Canonical(L.surface)) / 2;
  if (v.denominator() != 1) {
    throw Error(ErrorKind::kParity,
                "Riemann-Roch value is not integral for " + L.ToString());
  }
  return v.numerator();
}

struct Cohomology {
  long long h0 = 0;
  long long h1 = 0;
  long long h2 = 0;
  long long Euler() const { return h0 - h1 + h2; }
  bool operator==(const Cohomology&) const = default;
};

// h^0 and h^1 of O(d) on P^1.
inline std::pair<long long, long long> cohomology_p1(long long d) {
  if (d >= 0) return {d + 1, 0};
  if (d <= -2) return {0, -d - 1};
  return {0, 0};
}

inline long long Binomial2(long long n) {  // C(n+2, 2) for n >= 0
  return n < 0 ? 0 : (n + 2) * (n + 1) / 2;
}

// Cohomology of O(L) on a catalog surface.
inline Cohomology cohomology(const QDivisorClass& L) {
  if (!L.IsIntegral()) {
    throw Error(ErrorKind::kParity, "class " + L.ToString() + " is not integral");
  }
  switch (L.surface->kind) {
    case SurfaceKind::kP2: {
      long long d = L.coeffs[0].numerator();
      return Cohomology{Binomial2(d), 0, Binomial2(-3 - d)};
    }
    case SurfaceKind::kP1xP1: {
      auto [a0, a1] = cohomology_p1(L.coeffs[0].numerator());
      auto [b0, b1] = cohomology_p1(L.coeffs[1].numerator());
      return Cohomology{a0 * b0, a0 * b1 + a1 * b0, a1 * b1};
    }
    case SurfaceKind::kLattice:
      break;
  }
  throw Error(ErrorKind::kUnsupportedKind,
              "cohomology is only available for P2 and P1xP1");
}

enum class CurveRole { kBranch, kDouble };

struct CurveSide {
  std::string component;
  std::vector<Q> cls;
};

struct CurveDecl {
  std::string id;
  CurveRole role = CurveRole::kBranch;
  std::vector<CurveSide> sides;
  bool rational = true;
};

struct CycleEntry {
  std::string component;
  std::string curve;
};

struct PointDecl {
  std::string id;
  std::vector<std::string> on;
  std::map<std::string, int> incident_mults;
  bool c_singular = false;
  std::vector<CycleEntry> cycle;

  int Mult(const std::string& curve) const {
    auto it = incident_mults.find(curve);
    return it == incident_mults.end() ? 1 : it->second;
  }
  bool IsOn(const std::string& curve) const {
    for (const std::string& c : on) {
      if (c == curve) return true;
    }
    return false;
  }
};

struct Component {
  std::string id;
  std::shared_ptr<const SmoothSurfaceModel> model;
};

struct GdcSurface {
  std::vector<Component> components;
  std::vector<CurveDecl> curves;
  std::vector<PointDecl> points;

  const Component* FindComponent(const std::string& id) const {
    for (const Component& c : components) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
  const CurveDecl* FindCurve(const std::string& id) const {
    for (const CurveDecl& c : curves) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
  const PointDecl* FindPoint(const std::string& id) const {
    for (const PointDecl& p : points) {
      if (p.id == id) return &p;
    }
    return nullptr;
  }
  const PointDecl& Point(const std::string& id) const {
    const PointDecl* p = FindPoint(id);
    if (!p) throw Error(ErrorKind::kUnknownId, "unknown point '" + id + "'");
    return *p;
  }
  const CurveDecl& Curve(const std::string& id) const {
    const CurveDecl* c = FindCurve(id);
    if (!c) throw Error(ErrorKind::kUnknownId, "unknown curve '" + id + "'");
    return *c;
  }
  const Component& ComponentById(const std::string& id) const {
    const Component* c = FindComponent(id);
    if (!c) throw Error(ErrorKind::kUnknownId, "unknown component '" + id + "'");
    return *c;
  }

  // Class of a curve on one of its components.
  QDivisorClass ClassOn(const std::string& curve,
                        const std::string& component) const {
    const CurveDecl& c = Curve(curve);
    for (const CurveSide& s : c.sides) {
      if (s.component == component) {
        return QDivisorClass{s.cls, ComponentById(component).model};
      }
    }
    throw Error(ErrorKind::kUnknownId,
                "curve '" + curve + "' does not lie on '" + component + "'");
  }

  std::vector<const CurveDecl*> DoubleCurves() const {
    std::vector<const CurveDecl*> out;
    for (const CurveDecl& c : curves) {
      if (c.role == CurveRole::kDouble) out.push_back(&c);
    }
    return out;
  }

  // Components whose declared curves pass through the point.
  std::set<std::string> ComponentsAt(const PointDecl& p) const {
    std::set<std::string> out;
    for (const std::string& cid : p.on) {
      if (const CurveDecl* c = FindCurve(cid)) {
        for (const CurveSide& s : c->sides) out.insert(s.component);
      }
    }
    return out;
  }

  // Number of connected components of Y (components joined by double curves).
  int ConnectedComponents() const {
    std::map<std::string, std::string> parent;
    for (const Component& c : components) parent[c.id] = c.id;
    auto find = [&](std::string x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (const CurveDecl& c : curves) {
      if (c.role != CurveRole::kDouble || c.sides.size() != 2) continue;
      if (!parent.count(c.sides[0].component) ||
          !parent.count(c.sides[1].component)) {
        continue;
      }
      parent[find(c.sides[0].component)] = find(c.sides[1].component);
    }
    std::set<std::string> roots;
    for (const Component& c : components) roots.insert(find(c.id));
    return static_cast<int>(roots.size());
  }
};

struct Finding {
  std::string code;
  std::string locus;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

inline ValidationReport validate_surface(const GdcSurface& s) {
  ValidationReport r;
  auto add = [&](std::string code, std::string locus, std::string msg) {
    r.findings.push_back({std::move(code), std::move(locus), std::move(msg)});
  };
  std::set<std::string> ids;
  for (const Component& c : s.components) {
    if (!ids.insert("component:" + c.id).second) {
      add("duplicate-id", c.id, "component declared twice");
    }
  }
  for (const CurveDecl& c : s.curves) {
    if (!ids.insert("curve:" + c.id).second) {
      add("duplicate-id", c.id, "curve declared twice");
    }
    if (c.role == CurveRole::kBranch && c.sides.size() != 1) {
      add("branch-sides", c.id, "branch curve must have exactly one side");
    }
    if (c.role == CurveRole::kDouble) {
      if (c.sides.size() != 2) {
        add("double-sides", c.id, "double curve must have exactly two sides");
      }
      if (!c.rational) {
        add("double-not-rational", c.id,
            "double curves must be smooth rational");
      }
    }
    for (const CurveSide& side : c.sides) {
      const Component* comp = s.FindComponent(side.component);
      if (!comp) {
        add("dangling-component", c.id,
            "unknown component '" + side.component + "'");
      } else if (static_cast<int>(side.cls.size()) != comp->model->rank) {
        add("class-rank", c.id, "class length differs from lattice rank");
      }
    }
  }
  for (const PointDecl& p : s.points) {
    if (!ids.insert("point:" + p.id).second) {
      add("duplicate-id", p.id, "point declared twice");
    }
    int doubles = 0;
    bool dangling = false;
    for (const std::string& cid : p.on) {
      const CurveDecl* c = s.FindCurve(cid);
      if (!c) {
        add("dangling-curve", p.id, "unknown curve '" + cid + "'");
        dangling = true;
        continue;
      }
      if (c->role == CurveRole::kDouble) ++doubles;
      if (p.c_singular && c->role != CurveRole::kDouble) {
        add("c-singular-branch", p.id,
            "c-singular point lies on branch curve '" + cid + "'");
      }
    }
    for (const auto& [cid, m] : p.incident_mults) {
      if (m < 1) add("mult", p.id, "multiplicity must be positive");
      if (!p.IsOn(cid)) {
        add("mult-curve", p.id, "multiplicity given for curve not on point");
      }
    }
    if (dangling) continue;
    if (!p.c_singular) {
      if (doubles > 1) {
        add("c-smooth", p.id,
            "a smooth point of C lies on exactly one double curve");
      }
      if (!p.cycle.empty()) {
        add("cycle", p.id, "cycle given for a point that is not c-singular");
      }
      continue;
    }
    const std::size_t q = p.cycle.size();
    if (q < 3) {
      add("cycle-length", p.id, "c-singular point needs a cycle of length >= 3");
    }
    if (static_cast<int>(q) != doubles) {
      add("cycle-length", p.id,
          "cycle length " + std::to_string(q) + " differs from the " +
              std::to_string(doubles) + " double curves through the point");
    }
    for (std::size_t i = 0; i < q; ++i) {
      const CycleEntry& e = p.cycle[i];
      const CycleEntry& next = p.cycle[(i + 1) % q];
      const CurveDecl* f = s.FindCurve(e.curve);
      if (!f || f->role != CurveRole::kDouble || !p.IsOn(e.curve) ||
          f->sides.size() != 2) {
        add("cycle-curve", p.id,
            "cycle entry '" + e.curve + "' is not a double curve at the point");
        continue;
      }
      std::set<std::string> sides{f->sides[0].component, f->sides[1].component};
      std::set<std::string> want{e.component, next.component};
      if (sides != want) {
        add("cycle-order", p.id,
            "double curve '" + e.curve + "' does not join '" + e.component +
                "' and '" + next.component + "'");
      }
    }
  }
  return r;
}

}  // namespace abelcover

#endif  // ABELCOVER_SURFACE_MODEL_HPP_
