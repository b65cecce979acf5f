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

#include <gtest/gtest.h>

#include "abelcover/invariants.hpp"
#include "test_support.hpp"

namespace abelcover {
namespace {

const Cohomology kVanishing{0, 0, 0};

TEST(KSquare, WorkedExamples) {
  EXPECT_EQ(k_square(testing::LoadProblem("ex1.json")), Q(6));
  EXPECT_EQ(k_square(testing::LoadProblem("6cycle.json")), Q(6));
}

TEST(ChiNormalizedB, WorkedExamples) {
  EXPECT_EQ(chi_normalized_B(testing::LoadProblem("ex1.json")), 4);
  EXPECT_EQ(chi_normalized_B(testing::LoadProblem("6cycle.json")), 6);
}

TEST(ChiOX, WorkedExamples) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  ChiBreakdown b = chi_breakdown(ex1, incidence_sets(ex1));
  EXPECT_EQ(b.chi_OXprime, 2);
  EXPECT_EQ(b.chi_B, 4);
  EXPECT_EQ(b.relevant, 3);
  EXPECT_EQ(b.chi_OX, 1);
  EXPECT_EQ(chi_OX(testing::LoadProblem("6cycle.json")), 1);
}

TEST(ChiEigensheaf, WorkedExampleCharacters) {
  GluingProblem p = testing::LoadProblem("ex1.json");
  for (const Character& chi : p.group.Characters()) {
    EigensheafReport e = chi_eigensheaf(p, chi);
    ASSERT_TRUE(e.F_h.has_value());
    if (chi == p.group.TrivialCharacter()) {
      EXPECT_EQ(e.chi_F, 1);
      EXPECT_EQ(*e.F_h, (Cohomology{1, 0, 0}));
    } else {
      // (im alpha)_chi = O_C(-y).
      EXPECT_EQ(e.piece_degrees, (std::vector<long long>{-1}));
      EXPECT_EQ(e.chi_F, 0);
      EXPECT_EQ(*e.F_h, kVanishing);
    }
  }
}

TEST(ChiEigensheaf, CycleCharacters) {
  GluingProblem p = testing::LoadProblem("6cycle.json");
  for (const Character& chi : p.group.Characters()) {
    EigensheafReport e = chi_eigensheaf(p, chi);
    ASSERT_TRUE(e.F_h.has_value());
    ASSERT_TRUE(e.imalpha_h.has_value());
    EXPECT_EQ(e.F_h->h1, 0);
    EXPECT_EQ(e.F_h->h2, 0);
    EXPECT_EQ(e.imalpha_h->h1, 0);
    if (chi == p.group.TrivialCharacter()) {
      EXPECT_EQ(e.t_count, 1);
      EXPECT_EQ(e.chi_imalpha, 5);
    } else {
      EXPECT_EQ(e.piece_degrees.size(), 2u);
    }
  }
}

TEST(ChiEigensheaf, LatticeComponentLeavesCohomologyOpen) {
  GluingProblem p = testing::LoadProblem("ex1.json");
  p.surface.components[1].model = std::make_shared<const SmoothSurfaceModel>(
      SmoothSurfaceModel::Lattice({{1}}, {-3}, 1));
  EigensheafReport e = chi_eigensheaf(p, Character{{0, 1}});
  EXPECT_EQ(e.chi_F, 0);
  EXPECT_FALSE(e.F_h.has_value());
  EXPECT_EQ(k_square(p), Q(6));
  EXPECT_EQ(chi_OX(p), 1);
}

TEST(CartierIndex, WorkedExamplePoints) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  for (const char* y : {"y1", "y2", "y3"}) {
    CartierIndex c = global_cartier_index(ex1, y);
    ASSERT_TRUE(c.value.has_value()) << y;
    EXPECT_EQ(*c.value, 1);
  }
}

TEST(CartierIndex, CyclePoints) {
  GluingProblem p = testing::LoadProblem("6cycle.json");
  EXPECT_EQ(global_cartier_index(p, "y").ToString(), "1");
  EXPECT_EQ(global_cartier_index(p, "P1").ToString(), "2");
  EXPECT_EQ(global_cartier_index(p, "Q1").ToString(), "1");
}

TEST(CartierIndex, CycleWithBranchDataIsIndeterminate) {
  GluingProblem p = testing::LoadProblem("6cycle.json");
  for (PointDecl& y : p.surface.points) {
    if (y.id == "y") y.on.push_back("p1");
  }
  EXPECT_EQ(global_cartier_index(p, "y").ToString(), "INDETERMINATE");
}

TEST(CrossCheck, LocalAndGlobalAgreeOnWorkedExamples) {
  for (const char* name : {"ex1.json", "6cycle.json"}) {
    GluingProblem p = testing::LoadProblem(name);
    for (const PointCheck& c : cross_check_points(p, incidence_sets(p))) {
      EXPECT_TRUE(c.ok()) << name << " " << c.point << " " << c.label;
    }
  }
}

TEST(BuildReport, RejectsBrokenInputs) {
  GluingProblem p = testing::LoadProblem("ex1.json");
  for (BuildingData& bd : p.data) {
    for (BranchDatum& d : bd.branches) {
      if (d.curve == "F2") d.pair = MakeCyclicPair(p.group, GroupElement{{1, 0}});
    }
  }
  try {
    build_report(p);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_FALSE(IsInputError(e.kind()));
  }
}

}  // namespace
}  // namespace abelcover
