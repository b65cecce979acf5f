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


#include <memory>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "abelcover/cover_data.hpp"
#include "test_support.hpp"

namespace abelcover {
namespace {

// chi_j is the nonzero character of Z_2^2 that is trivial on g_j.
const Character kChi1{{0, 1}};
const Character kChi2{{1, 0}};
const Character kChi3{{1, 1}};

struct Pencil {
  GdcSurface surface;
  BuildingData data;
};

// Lines of P2 through one point y, one per generator; a repeated curve id
// puts two data on the same line.
Pencil MakePencil(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens,
                  const std::vector<std::string>& ids = {}) {
  Pencil p;
  p.surface.components.push_back(
      {"Y", std::make_shared<const SmoothSurfaceModel>(SmoothSurfaceModel::P2())});
  p.data = BuildingData{g, "Y", {}, std::nullopt};
  PointDecl y{"y", {}, {}, false, {}};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string id = ids.empty() ? "D" + std::to_string(i + 1) : ids[i];
    if (!p.surface.FindCurve(id)) {
      p.surface.curves.push_back({id, CurveRole::kBranch, {{"Y", {Q(1)}}}, true});
      y.on.push_back(id);
    }
    p.data.branches.push_back({id, MakeCyclicPair(g, gens[i])});
  }
  p.surface.points.push_back(y);
  return p;
}

TEST(SolveLineBundles, WorkedExampleQuadricSide) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  LineBundleMap L = solve_line_bundles(ex1.surface, ex1.DataOn("Y1"));
  ASSERT_EQ(L.size(), 3u);
  for (const Character& chi : {kChi1, kChi2, kChi3}) {
    EXPECT_EQ(L.at(chi).ToString(), "(1,1)");
  }
}

TEST(SolveLineBundles, WorkedExamplePlaneSide) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  LineBundleMap L = solve_line_bundles(ex1.surface, ex1.DataOn("Y2"));
  for (const Character& chi : {kChi1, kChi2, kChi3}) {
    EXPECT_EQ(L.at(chi).ToString(), "(2)");
  }
}

TEST(SolveLineBundles, OddClassHasNoSquareRoot) {
  GdcSurface s;
  s.components.push_back({"Y", std::make_shared<const SmoothSurfaceModel>(
                                   SmoothSurfaceModel::Lattice({{1}}, {-3}, 1))});
  s.curves.push_back({"D", CurveRole::kBranch, {{"Y", {Q(1)}}}, true});
  FiniteAbelianGroup g({2});
  BuildingData bd{g, "Y", {{"D", MakeCyclicPair(g, GroupElement{{1}})}}, std::nullopt};
  try {
    solve_line_bundles(s, bd);
    FAIL() << "expected no-solution";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoSolution);
    EXPECT_NE(std::string(e.what()).find("1/2"), std::string::npos);
  }
}

TEST(FundamentalRelations, WorkedExamplePlaneSidePasses) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  const BuildingData& bd = ex1.DataOn("Y2");
  auto model = ex1.surface.ComponentById("Y2").model;
  LineBundleMap L;
  for (const Character& chi : {kChi1, kChi2, kChi3}) {
    L.emplace(chi, QDivisorClass::FromInts(model, {2}));
  }
  EXPECT_TRUE(check_fundamental_relations(ex1.surface, bd, L).ok);
}

TEST(FundamentalRelations, PerturbedBundleFailsAtFirstPair) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  const BuildingData& bd = ex1.DataOn("Y1");
  LineBundleMap L = solve_line_bundles(ex1.surface, bd);
  L.at(kChi1) = QDivisorClass::FromInts(ex1.surface.ComponentById("Y1").model, {2, 1});
  FundamentalCheck fc = check_fundamental_relations(ex1.surface, bd, L);
  ASSERT_FALSE(fc.ok);
  EXPECT_EQ(fc.violating->first, kChi1);
  EXPECT_EQ(fc.violating->second, kChi1);
}

TEST(FundamentalRelations, TrivialDataPass) {
  FiniteAbelianGroup g({2, 2});
  Pencil p = MakePencil(g, {});
  LineBundleMap L;
  for (const Character& chi : {kChi1, kChi2, kChi3}) {
    L.emplace(chi, QDivisorClass::Zero(p.surface.components[0].model));
  }
  EXPECT_TRUE(check_fundamental_relations(p.surface, p.data, L).ok);
}

TEST(FundamentalRelations, MissingEntryIsReported) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  LineBundleMap L = solve_line_bundles(ex1.surface, ex1.DataOn("Y1"));
  L.erase(kChi2);
  try {
    check_fundamental_relations(ex1.surface, ex1.DataOn("Y1"), L);
    FAIL() << "expected missing-entry";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingEntry);
  }
}

TEST(HurwitzDivisor, WorkedExampleHalfLines) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  HurwitzDivisor h = hurwitz_divisor(ex1.surface, ex1.DataOn("Y1"));
  EXPECT_EQ(h.mults.size(), 6u);
  for (const auto& [curve, m] : h.mults) EXPECT_EQ(m, Q(1, 2)) << curve;
  EXPECT_TRUE(h.double_locus.empty());
}

TEST(HurwitzDivisor, DoubledLineAndOrderFour) {
  FiniteAbelianGroup g({2, 2});
  Pencil p = MakePencil(g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}}, {"D", "D"});
  EXPECT_EQ(hurwitz_divisor(p.surface, p.data).mults.at("D"), Q(1));
  FiniteAbelianGroup z4({4});
  Pencil q = MakePencil(z4, {GroupElement{{1}}});
  EXPECT_EQ(hurwitz_divisor(q.surface, q.data).mults.at("D1"), Q(3, 4));
}

TEST(HurwitzDivisor, DoubleCurveInertiaHasNoMultiplicity) {
  GluingProblem cyc = testing::LoadProblem("6cycle.json");
  HurwitzDivisor h = hurwitz_divisor(cyc.surface, cyc.DataOn("Y1"));
  EXPECT_EQ(h.mults.size(), 3u);
  EXPECT_EQ(h.double_locus.size(), 2u);
}

TEST(InertiaAtPoint, WorkedExamplePointIsEverything) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  EXPECT_EQ(inertia_at_point(ex1.surface, ex1.data, "y1").order(), 4u);
}

TEST(InertiaAtPoint, EmptyAndCyclicCases) {
  FiniteAbelianGroup z4({4});
  Pencil p = MakePencil(z4, {GroupElement{{1}}});
  p.surface.points.push_back({"far", {}, {}, false, {}});
  EXPECT_EQ(inertia_at_point(p.surface, {p.data}, "far").order(), 1u);
  EXPECT_EQ(inertia_at_point(p.surface, {p.data}, "y").order(), 4u);
  EXPECT_THROW(inertia_at_point(p.surface, {p.data}, "nowhere"), Error);
}

TEST(StructureFlags, NormalDoubledAndTripled) {
  FiniteAbelianGroup g({2, 2});
  Pencil halves = MakePencil(g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}});
  StructureFlags f = structure_flags(halves.surface, halves.data);
  EXPECT_TRUE(f.normal);
  Pencil doubled = MakePencil(g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}}, {"D", "D"});
  f = structure_flags(doubled.surface, doubled.data);
  EXPECT_FALSE(f.normal);
  EXPECT_TRUE(f.gdc);
  EXPECT_TRUE(f.standardable);
  Pencil tripled = MakePencil(
      g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}, GroupElement{{1, 1}}}, {"D", "D", "D"});
  EXPECT_FALSE(structure_flags(tripled.surface, tripled.data).gdc);
}

TEST(SlcCheck, FourHalfLinesPassFiveFail) {
  FiniteAbelianGroup g({2, 2, 2});
  std::vector<GroupElement> gens = {GroupElement{{1, 0, 0}}, GroupElement{{0, 1, 0}},
                                    GroupElement{{0, 0, 1}}, GroupElement{{1, 1, 1}}};
  Pencil four = MakePencil(g, gens);
  EXPECT_TRUE(slc_check(four.surface, {four.data}).ok());
  gens.push_back(GroupElement{{1, 1, 0}});
  Pencil five = MakePencil(g, gens);
  SlcReport r = slc_check(five.surface, {five.data});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].value, Q(5, 2));
}

TEST(SlcCheck, DoubleCurveGermAndThreeHalfLinesFail) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  EXPECT_TRUE(slc_check(ex1.surface, ex1.data).ok());
  for (PointDecl& y : ex1.surface.points) {
    if (y.id == "y1") y.on.push_back("F1");
  }
  SlcReport r = slc_check(ex1.surface, ex1.data);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].locus, "y1");
  EXPECT_EQ(r.violations[0].value, Q(5, 2));
}

TEST(LocalEquations, SingleLineInZ2) {
  FiniteAbelianGroup g({2});
  LocalEquations eq = local_equations(g, {{"s", MakeCyclicPair(g, GroupElement{{1}})}});
  ASSERT_EQ(eq.powers.size(), 1u);
  EXPECT_EQ(eq.powers[0].d, 2);
  EXPECT_EQ(eq.powers[0].sigma, (SigmaMonomial{{"s", 1}}));
}

TEST(LocalEquations, SingleLineInZ4) {
  FiniteAbelianGroup g({4});
  LocalEquations eq = local_equations(g, {{"s", MakeCyclicPair(g, GroupElement{{1}})}});
  const PowerEquation& z1 = eq.powers[0];
  EXPECT_EQ(z1.chi, (Character{{1}}));
  EXPECT_EQ(z1.d, 4);
  EXPECT_EQ(z1.sigma, (SigmaMonomial{{"s", 1}}));
}

TEST(LocalEquations, DoubledLineGermOfTableTwo) {
  LocalConfig cfg = testing::LoadLocal("local_4p1.json");
  LocalEquations eq = local_equations(cfg);
  auto power = [&](std::vector<int> chi) {
    for (const PowerEquation& p : eq.powers) {
      if (p.chi.coeffs == chi) return p.sigma;
    }
    return SigmaMonomial{{"missing", 1}};
  };
  EXPECT_EQ(power({1, 0, 0, 0}), (SigmaMonomial{{"s1", 1}}));
  EXPECT_EQ(power({0, 1, 0, 0}), (SigmaMonomial{{"s1", 1}}));
  EXPECT_EQ(power({0, 0, 1, 0}), (SigmaMonomial{{"s2", 1}}));
  EXPECT_EQ(power({0, 0, 0, 1}), (SigmaMonomial{{"s3", 1}}));
}

}  // namespace
}  // namespace abelcover
