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

#include "abelcover/surface_model.hpp"
#include "test_support.hpp"

namespace abelcover {
namespace {

using Model = std::shared_ptr<const SmoothSurfaceModel>;

Model P2() { return std::make_shared<const SmoothSurfaceModel>(SmoothSurfaceModel::P2()); }
Model Quadric() {
  return std::make_shared<const SmoothSurfaceModel>(SmoothSurfaceModel::P1xP1());
}

TEST(Intersect, CatalogGramMatrices) {
  Model q = Quadric();
  EXPECT_EQ(intersect(QDivisorClass::FromInts(q, {1, 1}), QDivisorClass::FromInts(q, {1, 1})),
            Q(2));
  EXPECT_EQ(intersect(QDivisorClass::FromInts(q, {1, 0}), QDivisorClass::FromInts(q, {1, 0})),
            Q(0));
  Model p = P2();
  EXPECT_EQ(intersect(QDivisorClass::FromInts(p, {1}), QDivisorClass::FromInts(p, {1})), Q(1));
}

TEST(Intersect, DifferentSurfacesAreRejected) {
  try {
    intersect(QDivisorClass::FromInts(P2(), {1}), QDivisorClass::FromInts(Quadric(), {1, 0}));
    FAIL() << "expected a surface mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSurfaceMismatch);
  }
}

TEST(EulerCharInverse, BundlesWithoutCohomology) {
  EXPECT_EQ(euler_char_inverse(QDivisorClass::FromInts(Quadric(), {1, 1})), 0);
  EXPECT_EQ(euler_char_inverse(QDivisorClass::FromInts(P2(), {2})), 0);
}

TEST(EulerCharInverse, TrivialBundleGivesChiO) {
  auto lat = std::make_shared<const SmoothSurfaceModel>(
      SmoothSurfaceModel::Lattice({{-1}}, {1}, 3));
  EXPECT_EQ(euler_char_inverse(QDivisorClass::Zero(lat)), 3);
  EXPECT_EQ(euler_char_inverse(QDivisorClass::Zero(P2())), 1);
}

TEST(EulerCharInverse, FractionalClassIsParityError) {
  QDivisorClass half{{Q(1, 2)}, P2()};
  try {
    euler_char_inverse(half);
    FAIL() << "expected a parity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParity);
  }
}

TEST(Cohomology, NegativeBundlesOnCatalogSurfaces) {
  EXPECT_EQ(cohomology(QDivisorClass::FromInts(P2(), {-2})), (Cohomology{0, 0, 0}));
  EXPECT_EQ(cohomology(QDivisorClass::FromInts(Quadric(), {-1, -1})), (Cohomology{0, 0, 0}));
  EXPECT_EQ(cohomology(QDivisorClass::FromInts(P2(), {-4})), (Cohomology{0, 0, 3}));
  EXPECT_EQ(cohomology(QDivisorClass::FromInts(Quadric(), {2, -2})), (Cohomology{0, 3, 0}));
}

TEST(Cohomology, ProjectiveLine) {
  EXPECT_EQ(cohomology_p1(-1), std::make_pair(0LL, 0LL));
  EXPECT_EQ(cohomology_p1(2), std::make_pair(3LL, 0LL));
  EXPECT_EQ(cohomology_p1(-3), std::make_pair(0LL, 2LL));
}

TEST(Cohomology, LatticeIsUnsupported) {
  auto lat = std::make_shared<const SmoothSurfaceModel>(
      SmoothSurfaceModel::Lattice({{1}}, {-3}, 1));
  try {
    cohomology(QDivisorClass::FromInts(lat, {1}));
    FAIL() << "expected unsupported-kind";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedKind);
  }
}

TEST(Cohomology, AgreesWithRiemannRochOnCatalogSurfaces) {
  for (int d = -6; d <= 6; ++d) {
    QDivisorClass L = QDivisorClass::FromInts(P2(), {d});
    EXPECT_EQ(cohomology(L).Euler(), euler_char_inverse(L * Q(-1))) << d;
  }
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      QDivisorClass L = QDivisorClass::FromInts(Quadric(), {a, b});
      EXPECT_EQ(cohomology(L).Euler(), euler_char_inverse(L * Q(-1))) << a << "," << b;
    }
  }
}

TEST(Lattice, RejectsMalformedGram) {
  EXPECT_THROW(SmoothSurfaceModel::Lattice({{0, 1}, {2, 0}}, {0, 0}, 1), Error);
  EXPECT_THROW(SmoothSurfaceModel::Lattice({{0, 1}}, {0}, 1), Error);
}

TEST(ValidateSurface, WorkedExamplesAreValid) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  EXPECT_TRUE(validate_surface(ex1.surface).ok());
  GluingProblem cyc = testing::LoadProblem("6cycle.json");
  EXPECT_TRUE(validate_surface(cyc.surface).ok());
  int singular = 0;
  for (const PointDecl& y : cyc.surface.points) {
    if (y.c_singular) {
      ++singular;
      EXPECT_EQ(y.cycle.size(), 6u);
    }
  }
  EXPECT_EQ(singular, 1);
  EXPECT_EQ(cyc.surface.ConnectedComponents(), 1);
}

TEST(ValidateSurface, OneSidedDoubleCurveIsInvalid) {
  GluingProblem ex1 = testing::LoadProblem("ex1.json");
  ex1.surface.curves[0].sides.pop_back();
  ValidationReport r = validate_surface(ex1.surface);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.findings.front().code, "double-sides");
}

TEST(ValidateSurface, BrokenCycleIsReported) {
  GluingProblem cyc = testing::LoadProblem("6cycle.json");
  for (PointDecl& y : cyc.surface.points) {
    if (y.c_singular) std::swap(y.cycle[0], y.cycle[2]);
  }
  EXPECT_FALSE(validate_surface(cyc.surface).ok());
}

}  // namespace
}  // namespace abelcover
