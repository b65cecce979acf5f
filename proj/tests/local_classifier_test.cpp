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


#include <map>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "abelcover/local_classifier.hpp"
#include "test_support.hpp"

namespace abelcover {
namespace {

using Lines = std::vector<std::vector<Mask>>;

LocalConfig Smooth(int r, const Lines& lines) {
  LocalConfig c;
  c.r = r;
  for (const auto& l : lines) c.lines.push_back({0, l, ""});
  return c;
}

LocalConfig Dc(int r, Mask g0, const Lines& side1, const Lines& side2) {
  LocalConfig c;
  c.r = r;
  c.base = BaseKind::kDoubleCurve;
  c.g0 = g0;
  for (const auto& l : side1) c.lines.push_back({1, l, ""});
  for (const auto& l : side2) c.lines.push_back({2, l, ""});
  return c;
}

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInput;
}

TEST(RelationCode, ThreeLinesInKleinFour) {
  EXPECT_EQ(relation_code(Smooth(2, {{1}, {2}, {3}})).ToString(), "123");
}

TEST(RelationCode, DoubleCurvePairedLines) {
  EXPECT_EQ(relation_code(Dc(2, 0, {{1}, {2}}, {{1}, {2}})).ToString(), "13 24");
}

TEST(RelationCode, IndependentOfLineOrderWithinSymmetry) {
  RelationCode a = relation_code(Smooth(3, {{1}, {2}, {3}, {4}}));
  RelationCode b = relation_code(Smooth(3, {{4}, {3}, {1}, {2}}));
  EXPECT_EQ(a, b);
}

TEST(Classify, QuarterSingularity) {
  Classification c = classify(Smooth(2, {{1}, {2}, {3}}));
  EXPECT_EQ(c.row->label, "3.3");
  EXPECT_EQ(c.h_order, 4u);
  EXPECT_EQ(c.iota, 2);
  EXPECT_EQ(c.row->singularity, "1/4(1,1)");
}

TEST(Classify, DoubleCurveWithEqualLines) {
  Classification c = classify(Dc(2, 1, {{2}}, {{2}}));
  EXPECT_EQ(c.row->label, "R2.1");
  EXPECT_EQ(c.row->singularity, "d.c.");
  EXPECT_FALSE(c.chi.relevant);
  EXPECT_EQ(c.chi.Value(), 0u);
}

TEST(Classify, DegenerateCuspExponents) {
  // E4.2: g3 = g1, g4 = g2 but across the curve, relations 12 34.
  Classification e42 = classify(Dc(3, 0, {{1}, {1}}, {{2}, {2}}));
  EXPECT_EQ(e42.row->label, "E4.2");
  EXPECT_EQ(e42.chi.exponent, 3 - 2);
  EXPECT_EQ(e42.row->chi.ToString(), "2^{r-2}");
  Classification e44 = classify(Dc(3, 0, {{1}, {1}}, {{1}, {1}}));
  EXPECT_EQ(e44.row->label, "E4.4");
  EXPECT_EQ(e44.chi.exponent, 3 - 1);
}

TEST(Classify, IndexTwoDoubleCurvePointContributesNothing) {
  // R4.2: relations 1234 01, so g1 = g0 and both sides sum to 3.
  Classification c = classify(Dc(3, 1, {{1}, {2}}, {{4}, {7}}));
  ASSERT_EQ(c.row->label, "R4.2");
  EXPECT_EQ(c.iota, 2);
  EXPECT_EQ(c.chi.Value(), 0u);
}

TEST(Classify, InadmissibleAndMalformedConfigs) {
  EXPECT_EQ(KindOf([] { classify(Dc(2, 0, {{1}}, {{2}})); }), ErrorKind::kInconsistency);
  EXPECT_EQ(KindOf([] { classify(Smooth(2, {{0}, {1}})); }), ErrorKind::kShape);
  EXPECT_EQ(KindOf([] { classify(Dc(2, 0, {{1}, {2}, {3}}, {})); }), ErrorKind::kShape);
  EXPECT_EQ(KindOf([] { classify(Smooth(2, {{4}})); }), ErrorKind::kShape);
}

TEST(IotaIndex, ParityRuleExamples) {
  EXPECT_EQ(iota_index(Smooth(2, {{1}, {2}, {3}})), 2);
  EXPECT_EQ(iota_index(Smooth(3, {{1}, {2}, {4}, {7}})), 1);
  EXPECT_EQ(classify(Smooth(3, {{1}, {2}, {4}, {7}})).row->label, "4.4");
}

TEST(Normalization, DoubledLineGerm) {
  Normalization n = normalize_config(testing::LoadLocal("local_4p1.json"));
  ASSERT_EQ(n.pieces.size(), 1u);
  EXPECT_EQ(n.pieces[0].copies, 2u);
  EXPECT_EQ(n.pieces[0].label, "3.1");
}

TEST(Normalization, TwoDoubledLines) {
  Normalization n = normalize_config(Smooth(4, {{1, 2}, {4, 8}}));
  ASSERT_EQ(n.pieces.size(), 1u);
  EXPECT_EQ(n.ToString(), "4(2.1)");
  EXPECT_EQ(classify(Smooth(4, {{1, 2}, {4, 8}})).row->label, "4''.1");
}

TEST(Blowup, DoubledLineGermOfFullRank) {
  LocalConfig cfg = testing::LoadLocal("local_4p1.json");
  BlowupResult b = blowup_transform(cfg);
  ASSERT_EQ(b.exceptional.size(), 1u);
  EXPECT_EQ(b.exceptional[0], Mask{1 | 2 | 4 | 8});
  // Over the doubled line: g1, g2 on the line and the sum on E.
  const BlowupGerm& g = b.germs.front();
  ASSERT_EQ(g.cfg.lines.size(), 2u);
  EXPECT_EQ(g.cfg.lines[0].elements, (std::vector<Mask>{1, 2}));
  EXPECT_EQ(g.cfg.lines[1].elements, (std::vector<Mask>{15}));
}

TEST(Blowup, QuotientCaseHasFourNodes) {
  LocalConfig cfg = testing::LoadLocal("local_4p5.json");
  BlowupResult b = blowup_transform(cfg);
  ASSERT_EQ(b.exceptional.size(), 1u);
  // The representative's fourth line carries 4, which is also E.
  EXPECT_EQ(b.exceptional[0], cfg.lines.back().elements[0]);
  std::uint64_t a1 = 0;
  for (const BlowupGerm& g : b.germs) {
    if (classify(g.cfg).row->singularity == "A_1") a1 += g.copies;
  }
  EXPECT_EQ(a1, 4u);
}

TEST(Semiresolve, DoubledLineGerms) {
  auto r1 = semiresolve(testing::LoadLocal("local_4p1.json"));
  EXPECT_EQ(r1, (std::map<std::string, std::uint64_t>{{"2.1", 8}, {"3'.1", 2}}));
  auto r5 = semiresolve(testing::LoadLocal("local_4p5.json"));
  EXPECT_EQ(r5, (std::map<std::string, std::uint64_t>{{"1.1", 8}, {"2.1", 2}, {"3'.1", 1}}));
}

TEST(Semiresolve, DoubleCurveBaseIsUnsupported) {
  EXPECT_EQ(KindOf([] { semiresolve(Dc(3, 0, {{1}, {1}}, {{2}, {2}})); }),
            ErrorKind::kUnsupported);
}

TEST(Tables, EmbeddedRowCounts) {
  const std::vector<std::size_t> expected = {16, 22, 11, 6, 4, 4, 23, 25, 19};
  for (int t = 1; t <= kTableCount; ++t) {
    EXPECT_EQ(TableIndex::Get().Rows(t).size(), expected[t - 1]) << "table " << t;
  }
}

TEST(Tables, ErratumRowResolvesToItsTwin) {
  const TableRow* row = TableIndex::Get().FindLabel("R4'.17");
  ASSERT_NE(row, nullptr);
  EXPECT_TRUE(row->erratum);
  EXPECT_EQ(row->same_as, "R4'.1");
  EXPECT_EQ(row->h_order, 16u);
}

class RegenerateTable : public ::testing::TestWithParam<int> {};

TEST_P(RegenerateTable, EveryRowHitExactlyOnce) {
  int t = GetParam();
  RegenerationReport rep = regenerate(t);
  EXPECT_EQ(rep.classes, TableIndex::Get().Rows(t).size());
  for (const EnumeratedClass& ec : enumerate_table(t)) {
    const Classification& c = ec.classification;
    EXPECT_EQ(c.h_order, c.row->h_order) << c.row->label;
    if (c.row->same_as.empty()) {
      EXPECT_EQ(c.iota, c.row->iota) << c.row->label;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllTables, RegenerateTable, ::testing::Range(1, 10));

TEST(IotaIndex, ParityRuleMatchesResidualOnEveryRow) {
  for (int t : {1, 2, 3, 7, 8, 9}) {
    for (const EnumeratedClass& ec : enumerate_table(t)) {
      EXPECT_EQ(iota_parity(ec.classification.layout), iota_residual(ec.classification.layout))
          << ec.classification.row->label;
    }
  }
}

TEST(ChiContribution, MatchesPrintedColumn) {
  for (int t = 4; t <= 9; ++t) {
    for (const EnumeratedClass& ec : enumerate_table(t)) {
      const Classification& c = ec.classification;
      const TableRow* row = c.row->same_as.empty()
                                ? c.row
                                : TableIndex::Get().FindLabel(c.row->same_as);
      int r = ec.representative.r;
      std::uint64_t printed =
          row->chi.kind == ChiKind::kPower ? std::uint64_t{1} << (r - row->chi.offset) : 0;
      EXPECT_EQ(c.chi.Value(), printed) << c.row->label;
    }
  }
}

TEST(Normalization, MatchesPrintedColumn) {
  for (int t : {2, 3, 5, 6, 8, 9}) {
    for (const EnumeratedClass& ec : enumerate_table(t)) {
      const TableRow& row = *ec.classification.row;
      if (row.printed_normalization.empty()) continue;
      EXPECT_TRUE(NormalizationMatches(ec.classification.normalization,
                                       ec.classification.layout.shape,
                                       row.printed_normalization))
          << row.label << ": " << ec.classification.normalization.ToString();
    }
  }
}

}  // namespace
}  // namespace abelcover
