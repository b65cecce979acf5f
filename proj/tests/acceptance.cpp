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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abelcover/cli.hpp"
#include "test_support.hpp"

namespace {

using namespace abelcover;
using Clock = std::chrono::steady_clock;

constexpr int kCases = 10000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void Criterion(int id, const std::string& name, const std::function<Outcome()>& body,
               double limit_seconds = 0) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    o.detail += " (over the time limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome WorkedExample(const std::string& file) {
  GluingProblem p = testing::LoadProblem(file);
  InvariantReport rep = build_report(p);
  std::ostringstream d;
  d << "K^2=" << FormatQ(rep.k_square) << " chi=" << rep.chi.chi_OX;
  return {rep.k_square == 6 && rep.chi.chi_OX == 1, d.str()};
}

Outcome Regeneration() {
  const std::vector<std::size_t> expected = {16, 22, 11, 6, 4, 4, 23, 25, 19};
  std::ostringstream d;
  bool ok = true;
  for (int t = 1; t <= kTableCount; ++t) {
    RegenerationReport rep = regenerate(t);
    ok &= rep.classes == expected[t - 1] && rep.rows == expected[t - 1];
    for (const EnumeratedClass& ec : enumerate_table(t)) {
      const Classification& c = ec.classification;
      ok &= c.h_order == c.row->h_order;
      if (c.row->same_as.empty()) ok &= c.iota == c.row->iota;
    }
    d << (t > 1 ? "," : "") << rep.classes;
  }
  return {ok, "classes " + d.str()};
}

Outcome IndexOracle() {
  int rows = 0, disagree = 0;
  for (int t : {1, 2, 3, 7, 8, 9}) {
    for (const EnumeratedClass& ec : enumerate_table(t)) {
      ++rows;
      if (iota_parity(ec.classification.layout) != iota_residual(ec.classification.layout)) {
        ++disagree;
      }
    }
  }
  return {disagree == 0,
          std::to_string(rows) + " rows, " + std::to_string(disagree) + " disagreements"};
}

Outcome NormalizationColumnCheck() {
  int checked = 0, bad = 0;
  for (int t : {2, 3, 5, 6, 8, 9}) {
    for (const EnumeratedClass& ec : enumerate_table(t)) {
      const Classification& c = ec.classification;
      if (c.row->printed_normalization.empty()) continue;
      ++checked;
      if (!NormalizationMatches(c.normalization, c.layout.shape, c.row->printed_normalization)) {
        ++bad;
      }
    }
  }
  return {bad == 0 && checked > 0,
          std::to_string(checked) + " cells, " + std::to_string(bad) + " mismatches"};
}

Outcome ChiColumnCheck() {
  int checked = 0, bad = 0;
  for (int t = 4; t <= 9; ++t) {
    for (const EnumeratedClass& ec : enumerate_table(t)) {
      const Classification& c = ec.classification;
      const TableRow* row =
          c.row->same_as.empty() ? c.row : TableIndex::Get().FindLabel(c.row->same_as);
      ++checked;
      bool printed_power = row->chi.kind == ChiKind::kPower;
      bool ok = printed_power == c.chi.relevant &&
                (!printed_power || c.chi.exponent == ec.representative.r - row->chi.offset);
      if (!ok) ++bad;
    }
  }
  return {bad == 0, std::to_string(checked) + " rows, " + std::to_string(bad) + " mismatches"};
}

FiniteAbelianGroup RandomGroup(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank(1, 3), order(2, 6);
  std::vector<int> orders(rank(rng));
  for (int& n : orders) n = order(rng);
  return FiniteAbelianGroup(orders);
}

Outcome PropertySuite() {
  std::mt19937_64 rng(7);
  std::map<std::string, int> passed;
  auto element = [&](const FiniteAbelianGroup& g) {
    return g.FromIndex(std::uniform_int_distribution<std::uint64_t>(0, g.order() - 1)(rng));
  };
  auto pair = [&](const FiniteAbelianGroup& g) {
    while (true) {
      GroupElement h = element(g);
      if (g.ElementOrder(h) >= 2) return MakeCyclicPair(g, h);
    }
  };
  for (int i = 0; i < kCases; ++i) {
    FiniteAbelianGroup g = RandomGroup(rng);
    CyclicPair p = pair(g);
    Character a{element(g).coeffs}, b{element(g).coeffs}, c{element(g).coeffs};
    passed["epsilon symmetry"] += epsilon(g, a, b, p) == epsilon(g, b, a, p);
    passed["exponent additivity"] +=
        character_exponent(g, g.Multiply(a, b), p) ==
        character_exponent(g, a, p) + character_exponent(g, b, p) - p.order * epsilon(g, a, b, p);
    passed["cocycle identity"] +=
        epsilon(g, a, b, p) + epsilon(g, g.Multiply(a, b), c, p) ==
        epsilon(g, a, g.Multiply(b, c), p) + epsilon(g, b, c, p);
  }
  testing::GlueableGenerator gen(8);
  for (int i = 0; i < kCases; ++i) {
    GluingProblem p = gen.Next();
    bool roundtrip = true;
    for (const BuildingData& bd : p.data) {
      roundtrip &= check_fundamental_relations(p.surface, bd, solve_line_bundles(p.surface, bd)).ok;
    }
    passed["solve/check round trip"] += roundtrip;
    SideSets sets = incidence_sets(p);
    bool mdeg = true;
    for (const CurveCharSets& e : sets.entries) {
      try {
        m_degree(p, sets, e.curve, e.chi);
      } catch (const Error&) {
        mdeg = false;
      }
    }
    passed["two-sided m_degree"] += mdeg;
    long long sum = 0;
    for (const Character& chi : p.group.Characters()) sum += chi_eigensheaf(p, sets, chi).chi_F;
    passed["sum of chi(F_chi)"] += sum == chi_breakdown(p, sets).chi_OX;
  }
  std::ostringstream d;
  bool ok = true;
  for (const auto& [name, n] : passed) {
    ok &= n == kCases;
    d << name << " " << n << "/" << kCases << "; ";
  }
  std::string s = d.str();
  return {ok, s.substr(0, s.size() - 2)};
}

Outcome BlowupChecks() {
  LocalConfig c41 = testing::LoadLocal("local_4p1.json");
  Mask all = 0;
  for (const LocalLine& l : c41.lines) {
    for (Mask g : l.elements) all ^= g;
  }
  BlowupResult b41 = blowup_transform(c41);
  bool ok = b41.exceptional == std::vector<Mask>{all} &&
            b41.germs.front().cfg.lines.size() == 2 &&
            b41.germs.front().cfg.lines[0].elements.size() == 2 &&
            b41.germs.front().cfg.lines[1].elements == std::vector<Mask>{all};
  LocalConfig c45 = testing::LoadLocal("local_4p5.json");
  BlowupResult b45 = blowup_transform(c45);
  Mask g4 = c45.lines.back().elements[0];
  std::uint64_t a1 = 0;
  for (const BlowupGerm& g : b45.germs) {
    if (classify(g.cfg).row->singularity == "A_1") a1 += g.copies;
  }
  ok &= b45.exceptional == std::vector<Mask>{g4} && a1 == 4;
  return {ok, "4'.1 E=g1+g2+g3+g4, 4'.5 E=g4 with " + std::to_string(a1) + " A_1 points"};
}

Outcome CohomologyVanishing() {
  int exact = 0;
  bool ok = true;
  for (const char* file : {"ex1.json", "6cycle.json"}) {
    GluingProblem p = testing::LoadProblem(file);
    for (const Character& chi : p.group.Characters()) {
      EigensheafReport e = chi_eigensheaf(p, chi);
      bool v = e.F_h && e.F_h->h1 == 0 && e.F_h->h2 == 0;
      ok &= v;
      exact += v;
    }
  }
  return {ok, std::to_string(exact) + "/8 characters with h1=h2=0"};
}

}  // namespace

int main() {
  Criterion(1, "worked example ex1", [] { return WorkedExample("ex1.json"); }, 1.0);
  Criterion(2, "worked example 6-cycle", [] { return WorkedExample("6cycle.json"); }, 1.0);
  Criterion(3, "table regeneration", Regeneration, 10.0);
  Criterion(4, "index parity rule", IndexOracle);
  Criterion(5, "normalization column", NormalizationColumnCheck);
  Criterion(6, "chi column", ChiColumnCheck);
  Criterion(7, "property suite", PropertySuite);
  Criterion(8, "blow-up spot checks", BlowupChecks);
  Criterion(9, "cohomology vanishing", CohomologyVanishing);
  return failures == 0 ? 0 : 1;
}
