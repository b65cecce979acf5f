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


// The nine singularity tables, one record per printed row. Cells are kept
// as printed; "same as" rows leave their descriptor cells empty and name
// the row they share them with.

#ifndef ABELCOVER_TABLES_DATA_HPP_
#define ABELCOVER_TABLES_DATA_HPP_

#include <span>

namespace abelcover {

struct TableRowData {
  int table;
  const char* label;
  int h_order;
  const char* relations;  // generators, space separated, or "none"
  const char* iota;
  const char* chi;          // "0", "2^{r-c}", or empty
  const char* singularity;
  const char* normalization;  // the X-tilde column
  const char* curve_map;
  const char* sr_type;
  const char* same_as;
};

inline constexpr TableRowData kTableRows[] = {
    {1, "0.1", 1, "none", "1", "", "smooth", "", "", "", ""},
    {1, "1.1", 2, "none", "1", "", "smooth", "", "", "", ""},
    {1, "2.1", 4, "none", "1", "", "smooth", "", "", "", ""},
    {1, "2.2", 2, "12", "1", "", "A_1", "", "", "", ""},
    {1, "3.1", 8, "none", "1", "", "A_1", "", "", "", ""},
    {1, "3.2", 4, "12", "1", "", "A_3", "", "", "", ""},
    {1, "3.3", 4, "123", "2", "", "1/4(1,1)", "", "", "", ""},
    {1, "3.4", 2, "12 13", "1", "", "D_4", "", "", "", ""},
    {1, "4.1", 16, "none", "1", "", "elliptic, F^2=-4", "", "", "", ""},
    {1, "4.2", 8, "12", "1", "", "elliptic, F^2=-2", "", "", "", ""},
    {1, "4.3", 8, "123", "2", "", "T_{2,2,2,2}, F^2=-4", "", "", "", ""},
    {1, "4.4", 8, "1234", "1", "", "elliptic, F^2=-8", "", "", "", ""},
    {1, "4.5", 4, "12 13", "1", "", "elliptic, F^2=-1", "", "", "", ""},
    {1, "4.6", 4, "12 34", "1", "", "elliptic, F^2=-4", "", "", "", ""},
    {1, "4.7", 4, "12 134", "2", "", "T_{2,2,2,2}, F^2=-3", "", "", "", ""},
    {1, "4.8", 2, "12 13 14", "1", "", "elliptic, F^2=-2", "", "", "", ""},
    {2, "2'.1", 4, "none", "1", "", "semismooth", "2(1.1)", "2Δ → Δ → Δ", "d.c.", ""},
    {2, "2'.2", 2, "12", "1", "", "semismooth", "2(0.1)", "2Δ → Δ → Δ", "d.c.", ""},
    {2, "3'.1", 8, "none", "1", "", "semismooth", "2(2.1)", "2Δ → Δ →[2]Δ", "d.c.", ""},
    {2, "3'.2", 4, "12", "1", "", "semismooth", "2(1.1)", "2Δ → Δ →[2]Δ", "d.c.", ""},
    {2, "3'.3", 4, "13", "1", "", "semismooth", "(2.1)", "Δ →[2]Δ → Δ", "pinch", ""},
    {2, "3'.4", 4, "123", "2", "", "(3'.1)/Z_2", "2(2.2)", "2Δ → Δ → Δ", "d.c.", ""},
    {2, "3'.5", 2, "12 13", "1", "", "semismooth", "(1.1)", "Δ →[2]Δ → Δ", "pinch", ""},
    {2, "4'.1", 16, "none", "1", "", "deg.cusp(2)", "2(3.1)", "2Γ2 → Γ2 →[22]Δ", "d.c.", ""},
    {2, "4'.2", 8, "12", "1", "", "deg.cusp(2)", "2(2.1)", "2Γ2 → Γ2 →[22]Δ", "d.c.", ""},
    {2, "4'.3", 8, "13", "1", "", "deg.cusp(1)", "(3.1)", "Γ2 → Δ →[2]Δ", "d.c.", ""},
    {2, "4'.4", 8, "34", "1", "", "deg.cusp(6)", "2(3.2)", "2Γ2 → Γ2 → Δ", "d.c.", ""},
    {2, "4'.5", 8, "123", "2", "", "(4'.1)/Z_2", "2(3.2)", "2Δ → Δ →[2]Δ", "d.c.", ""},
    {2, "4'.6", 8, "134", "2", "", "(4'.1)/Z_2", "(3.1)", "Γ2 →[22]Γ2 → Δ", "pinch", ""},
    {2, "4'.7", 8, "1234", "1", "", "deg.cusp(2)", "2(3.3)", "2Γ2 → Γ2 → Δ", "d.c.", ""},
    {2, "4'.8", 4, "12 13", "1", "", "deg.cusp(1)", "(2.1)", "Γ2 → Δ →[2]Δ", "d.c.", ""},
    {2, "4'.9", 4, "13 14", "1", "", "deg.cusp(3)", "(3.2)", "Γ2 → Δ → Δ", "d.c.", ""},
    {2, "4'.10", 4, "12 34", "1", "", "deg.cusp(2)", "2(2.2)", "2Γ2 → Γ2 → Δ", "d.c.", ""},
    {2, "4'.11", 4, "13 24", "1", "", "deg.cusp(1)", "(3.3)", "Γ2 → Δ → Δ", "d.c.", ""},
    {2, "4'.12", 4, "12 134", "2", "", "(4'.2)/Z_2", "(2.1)", "Γ2 →[22]Γ2 → Δ", "pinch", ""},
    {2, "4'.13", 4, "13 124", "2", "", "(4'.3)/Z_2", "(3.2)", "Δ →[2]Δ → Δ", "pinch", ""},
    {2, "4'.14", 4, "123 34", "2", "", "(4'.4)/Z_2", "2(3.4)", "2Δ → Δ → Δ", "d.c.", ""},
    {2, "4'.15", 2, "12 13 14", "1", "", "deg.cusp(1)", "(2.2)", "Γ2 → Δ → Δ", "d.c.", ""},
    {3, "4''.1", 16, "none", "1", "", "deg.cusp(4)", "4(2.1)", "4Γ2 → Γ4 →[2222]Γ2", "d.c.", ""},
    {3, "4''.2", 8, "12", "1", "", "deg.cusp(4)", "4(1.1)", "4Γ2 → Γ4 →[2211]Γ2", "d.c.", ""},
    {3, "4''.3", 8, "13", "1", "", "deg.cusp(2)", "2(2.1)", "2Γ2 → Γ2 →[22]Γ2", "d.c.", ""},
    {3, "4''.4", 8, "123", "2", "", "(4''.1)/Z_2", "2(2.1)", "2Γ2 →[1122]Γ3 →[211]Γ2", "pinch", ""},
    {3, "4''.5", 8, "1234", "1", "", "deg.cusp(4)", "4(2.2)", "4Γ2 → Γ4 → Γ2", "d.c.", ""},
    {3, "4''.6", 4, "12 13", "1", "", "deg.cusp(2)", "2(1.1)", "2Γ2 → Γ2 →[21]Γ2", "d.c.", ""},
    {3, "4''.7", 4, "12 34", "1", "", "deg.cusp(4)", "4(0.1)", "4Γ2 → Γ4 → Γ2", "d.c.", ""},
    {3, "4''.8", 4, "13 24", "1", "", "deg.cusp(2)", "2(2.2)", "2Γ2 → Γ2 → Γ2", "d.c.", ""},
    {3, "4''.9", 4, "12 134", "2", "", "(4''.2)/Z_2", "2(1.1)", "2Γ2 →[2211]Γ3 → Γ2", "pinch", ""},
    {3, "4''.10", 4, "13 124", "2", "", "(4''.3)/Z_2", "(2.1)", "Γ2 →[22]Γ2 → Γ2", "pinch", ""},
    {3, "4''.11", 2, "12 13 14", "1", "", "deg.cusp(2)", "2(0.1)", "2Γ2 → Γ2 → Γ2", "d.c.", ""},
    {4, "E0.1", 1, "none", "1", "0", "d.c.", "(0.1) ⊔ (0.1)", "2Δ → Δ → Δ", "d.c.", ""},
    {4, "E2.1", 2, "12", "1", "0", "d.c.", "(1.1) ⊔ (1.1)", "2Δ → Δ →[2]Δ", "d.c.", ""},
    {4, "E4.1", 8, "1234", "1", "2^{r-3}", "deg.cusp(4)", "2(2.1) ⊔ 2(2.1)", "2Γ2 ⊔ 2Γ2 → Γ4 →[2222]Δ", "d.c.", ""},
    {4, "E4.2", 4, "12 34", "1", "2^{r-2}", "deg.cusp(4)", "2(2.2) ⊔ 2(2.2)", "2Γ2 ⊔ 2Γ2 → Γ4 → Δ", "d.c.", ""},
    {4, "E4.3", 4, "13 24", "1", "2^{r-2}", "deg.cusp(2)", "(2.1) ⊔ (2.1)", "Γ2 ⊔ Γ2 → Γ2 →[22]Δ", "d.c.", ""},
    {4, "E4.4", 2, "12 13 14", "1", "2^{r-1}", "deg.cusp(2)", "(2.2) ⊔ (2.2)", "Γ2 ⊔ Γ2 → Γ2 → Δ", "d.c.", ""},
    {5, "E4'.1", 8, "1234", "1", "2^{r-3}", "deg.cusp(6)", "4(1.1) ⊔ 2(2.1)", "4Γ2 ⊔ 2Γ2 → Γ6 →[112…2]Γ2", "d.c.", ""},
    {5, "E4'.2", 4, "12 34", "1", "2^{r-2}", "deg.cusp(6)", "4(0.1) ⊔ 2(2.2)", "4Γ2 ⊔ 2Γ2 → Γ6 → Γ2", "d.c.", ""},
    {5, "E4'.3", 4, "13 24", "1", "2^{r-2}", "deg.cusp(3)", "2(1.1) ⊔ (2.1)", "2Γ2 ⊔ Γ2 → Γ3 →[122]Γ2", "d.c.", ""},
    {5, "E4'.4", 2, "12 13 14", "1", "2^{r-1}", "deg.cusp(3)", "2(0.1) ⊔ (2.2)", "2Γ2 ⊔ Γ2 → Γ3 → Γ2", "d.c.", ""},
    {6, "E4''.1", 8, "1234", "1", "2^{r-3}", "deg.cusp(8)", "4(1.1) ⊔ 4(1.1)", "4Γ2 ⊔ 4Γ2 → Γ8 →[112…211]Γ3", "d.c.", ""},
    {6, "E4''.2", 4, "12 34", "1", "2^{r-2}", "deg.cusp(8)", "4(0.1) ⊔ 4(0.1)", "4Γ2 ⊔ 4Γ2 → Γ8 → Γ3", "d.c.", ""},
    {6, "E4''.3", 4, "13 24", "1", "2^{r-2}", "deg.cusp(4)", "2(1.1) ⊔ 2(1.1)", "2Γ2 ⊔ 2Γ2 → Γ4 →[1221]Γ3", "d.c.", ""},
    {6, "E4''.4", 2, "12 13 14", "1", "2^{r-1}", "deg.cusp(4)", "2(0.1) ⊔ 2(0.1)", "2Γ2 ⊔ 2Γ2 → Γ4 → Γ3", "d.c.", ""},
    {7, "R0.1", 2, "none", "1", "0", "d.c.", "(1.1) ⊔ (1.1)", "Δ ⊔ Δ → Δ → Δ", "d.c.", ""},
    {7, "R2.1", 4, "12", "1", "0", "d.c.", "(2.1) ⊔ (2.1)", "Δ ⊔ Δ → Δ →[2]Δ", "d.c.", ""},
    {7, "R2.3", 2, "12 01", "2", "0", "(R2.1)/Z_2", "(2.2) ⊔ (2.2)", "Δ ⊔ Δ → Δ → Δ", "d.c.", ""},
    {7, "R2.2", 4, "012", "", "", "", "", "", "", "R2.1"},
    {7, "R4.1", 16, "1234", "1", "2^{r-4}", "deg.cusp(4)", "2(3.1) ⊔ 2(3.1)", "2Γ2 ⊔ 2Γ2 → Γ4 →[2…2]Δ", "d.c.", ""},
    {7, "R4.2", 8, "1234 01", "2", "0", "(R4.1)/Z_2", "2(3.2) ⊔ (3.1)", "2Δ ⊔ Γ2 → Γ2 →[22]Δ", "d.c.", ""},
    {7, "R4.3", 8, "1234 012", "1", "2^{r-3}", "deg.cusp(4)", "2(3.3) ⊔ 2(3.3)", "2Γ2 ⊔ 2Γ2 → Γ4 → Δ", "d.c.", ""},
    {7, "R4.4", 8, "1234 013", "1", "2^{r-3}", "deg.cusp(2)", "(3.1) ⊔ (3.1)", "Γ2 ⊔ Γ2 → Γ2 →[22]Δ", "d.c.", ""},
    {7, "R4.5", 8, "12 34", "1", "2^{r-3}", "deg.cusp(12)", "2(3.2) ⊔ 2(3.2)", "2Γ2 ⊔ 2Γ2 → Γ4 → Δ", "d.c.", ""},
    {7, "R4.6", 4, "12 34 01", "2", "0", "(R4.5)/Z_2", "2(3.4) ⊔ (3.2)", "2Δ ⊔ Γ2 → Γ2 → Δ", "d.c.", ""},
    {7, "R4.7", 4, "12 34 013", "1", "2^{r-2}", "deg.cusp(6)", "(3.2) ⊔ (3.2)", "Γ2 ⊔ Γ2 → Γ2 → Δ", "d.c.", ""},
    {7, "R4.8", 8, "13 24", "", "", "", "", "", "", "R4.4"},
    {7, "R4.9", 4, "13 24 01", "2", "0", "(R4.8)/Z_2", "(3.2) ⊔ (3.2)", "Δ ⊔ Δ → Δ →[2]Δ", "d.c.", ""},
    {7, "R4.10", 4, "13 24 012", "1", "2^{r-2}", "deg.cusp(2)", "(3.3) ⊔ (3.3)", "Γ2 ⊔ Γ2 → Γ2 → Δ", "d.c.", ""},
    {7, "R4.11", 4, "12 13 14", "", "", "", "", "", "", "R4.7"},
    {7, "R4.12", 2, "12 13 14 01", "2", "0", "(R4.11)/Z_2", "(3.4) ⊔ (3.4)", "Δ ⊔ Δ → Δ", "d.c.", ""},
    {7, "R4.13", 16, "01234", "", "", "", "", "", "", "R4.1"},
    {7, "R4.14", 8, "12 034", "1", "2^{r-3}", "deg.cusp(8)", "2(3.2) ⊔ 2(3.3)", "2Γ2 ⊔ 2Γ2 → Γ4 → Δ", "d.c.", ""},
    {7, "R4.15", 8, "13 024", "", "", "", "", "", "", "R4.4"},
    {7, "R4.16", 8, "123 04", "", "", "", "", "", "", "R4.2"},
    {7, "R4.17", 4, "12 13 014", "1", "2^{r-2}", "deg.cusp(4)", "(3.2) ⊔ (3.3)", "Γ2 ⊔ Γ2 → Γ2 → Δ", "d.c.", ""},
    {7, "R4.18", 4, "12 134 01", "2", "0", "(R4.14)/Z_2", "2(3.4) ⊔ (3.3)", "2Δ ⊔ Γ2 → Γ2 → Δ", "d.c.", ""},
    {7, "R4.19", 4, "13 124 01", "", "", "", "", "", "", "R4.9"},
    {8, "R4'.1", 16, "1234", "1", "2^{r-4}", "deg.cusp(6)", "4(2.1) ⊔ 2(3.1)", "4Γ2 ⊔ 2Γ2 → Γ6 →[2…2]Γ2", "d.c.", ""},
    {8, "R4'.2", 8, "1234 01", "2", "0", "(R4'.1)/Z_2", "2(2.1) ⊔ (3.1)", "2Γ2 ⊔ Γ2 →[221111]Γ4 →[1122]Γ2", "pinch", ""},
    {8, "R4'.3", 8, "1234 03", "2", "0", "(R4'.1)/Z_2", "2(2.1) ⊔ 2(3.2)", "2Γ2 ⊔ 2Δ → Γ3 →[222]Γ2", "d.c.", ""},
    {8, "R4'.4", 8, "1234 012", "1", "2^{r-3}", "deg.cusp(6)", "4(2.2) ⊔ 2(3.3)", "4Γ2 ⊔ 2Γ2 → Γ6 → Γ2", "d.c.", ""},
    {8, "R4'.5", 8, "1234 013", "1", "2^{r-3}", "deg.cusp(3)", "2(2.1) ⊔ (3.1)", "2Γ2 ⊔ Γ2 → Γ3 →[222]Γ2", "d.c.", ""},
    {8, "R4'.6", 8, "12 34", "1", "2^{r-3}", "deg.cusp(10)", "4(1.1) ⊔ 2(3.2)", "4Γ2 ⊔ 2Γ2 → Γ6 →[221…1]Γ2", "d.c.", ""},
    {8, "R4'.7", 4, "12 34 01", "2", "0", "(R4'.6)/Z_2", "2(1.1) ⊔ (3.2)", "2Γ2 ⊔ Γ2 →[221…1]Γ4 → Γ2", "pinch", ""},
    {8, "R4'.8", 4, "12 34 03", "2", "0", "(R4'.6)/Z_2", "2(1.1) ⊔ 2(3.4)", "2Γ2 ⊔ 2Δ → Γ3 →[211]Γ2", "d.c.", ""},
    {8, "R4'.9", 4, "12 34 013", "1", "2^{r-2}", "deg.cusp(5)", "2(1.1) ⊔ (3.2)", "2Γ2 ⊔ Γ2 → Γ3 →[211]Γ2", "d.c.", ""},
    {8, "R4'.10", 8, "13 24", "", "", "", "", "", "", "R4'.5"},
    {8, "R4'.11", 4, "13 24 01", "2", "0", "(R4'.10)/Z_2", "(2.1) ⊔ (3.2)", "Γ2 ⊔ Δ →[211]Γ2 →[12]Γ2", "unspecified", ""},
    {8, "R4'.12", 4, "13 24 012", "1", "2^{r-2}", "deg.cusp(3)", "2(2.2) ⊔ (3.3)", "2Γ2 ⊔ Γ2 → Γ3 → Γ2", "d.c.", ""},
    {8, "R4'.13", 4, "12 13 14", "", "", "", "", "", "", "R4'.9"},
    {8, "R4'.14", 2, "12 13 14 01", "2", "0", "(R4'.13)/Z_2", "(1.1) ⊔ (3.4)", "Γ2 ⊔ Δ →[211]Γ2 → Γ2", "pinch", ""},
    {8, "R4'.15", 8, "13 024", "", "", "", "", "", "", "R4'.5"},
    {8, "R4'.16", 8, "12 034", "1", "2^{r-3}", "deg.cusp(6)", "4(1.1) ⊔ 2(3.3)", "4Γ2 ⊔ 2Γ2 → Γ6 →[221…1]Γ2", "d.c.", ""},
    {8, "R4'.17", 8, "13 024", "", "", "", "", "", "", "R4'.5"},
    {8, "R4'.18", 8, "34 012", "1", "2^{r-3}", "deg.cusp(10)", "4(2.2) ⊔ 2(3.2)", "4Γ2 ⊔ 2Γ2 → Γ6 → Γ2", "d.c.", ""},
    {8, "R4'.19", 8, "123 04", "", "", "", "", "", "", "R4'.3"},
    {8, "R4'.20", 8, "134 02", "", "", "", "", "", "", "R4'.2"},
    {8, "R4'.21", 4, "12 13 014", "1", "2^{r-2}", "deg.cusp(3)", "2(1.1) ⊔ (3.3)", "2Γ2 ⊔ Γ2 → Γ3 →[211]Γ2", "d.c.", ""},
    {8, "R4'.22", 4, "13 14 012", "1", "2^{r-2}", "deg.cusp(5)", "2(2.2) ⊔ (3.2)", "2Γ2 ⊔ Γ2 → Γ3 → Γ2", "d.c.", ""},
    {8, "R4'.23", 4, "12 134 01", "2", "0", "(R4'.16)/Z_2", "2(1.1) ⊔ (3.3)", "2Γ2 ⊔ Γ2 → Γ3 →[211]Γ2", "pinch", ""},
    {8, "R4'.24", 4, "13 124 01", "", "", "", "", "", "", "R4'.11"},
    {8, "R4'.25", 4, "34 123 03", "2", "0", "(R4'.18)/Z_2", "2(2.2) ⊔ 2(3.4)", "2Γ2 ⊔ 2Δ → Γ3 → Γ2", "d.c.", ""},
    {9, "R4''.1", 16, "1234", "1", "2^{r-4}", "deg.cusp(8)", "4(2.1) ⊔ 4(2.1)", "4Γ2 ⊔ 4Γ2 → Γ8 →[2…2]Γ3", "d.c.", ""},
    {9, "R4''.2", 8, "1234 01", "2", "0", "(R4''.1)/Z_2", "2(2.1) ⊔ 2(2.1)", "2Γ2 ⊔ 2Γ2 →[221…1]Γ5 →[11222]Γ3", "pinch", ""},
    {9, "R4''.3", 8, "1234 012", "1", "2^{r-3}", "deg.cusp(8)", "4(2.2) ⊔ 4(2.2)", "4Γ2 ⊔ 4Γ2 → Γ8 → Γ3", "d.c.", ""},
    {9, "R4''.4", 8, "1234 013", "1", "2^{r-3}", "deg.cusp(4)", "2(2.1) ⊔ 2(2.1)", "2Γ2 ⊔ 2Γ2 → Γ4 →[2222]Γ3", "d.c.", ""},
    {9, "R4''.5", 8, "12 34", "1", "2^{r-3}", "deg.cusp(8)", "4(1.1) ⊔ 4(1.1)", "4Γ2 ⊔ 4Γ2 → Γ8 →[22111122]Γ3", "d.c.", ""},
    {9, "R4''.6", 4, "12 34 01", "2", "0", "(R4''.5)/Z_2", "2(1.1) ⊔ 2(1.1)", "2Γ2 ⊔ 2Γ2 →[221…1]Γ5 →[11112]Γ3", "pinch", ""},
    {9, "R4''.7", 4, "12 34 013", "1", "2^{r-2}", "deg.cusp(4)", "2(1.1) ⊔ 2(1.1)", "2Γ2 ⊔ 2Γ2 → Γ4 →[2112]Γ3", "d.c.", ""},
    {9, "R4''.8", 8, "13 24", "", "", "", "", "", "", "R4''.4"},
    {9, "R4''.9", 4, "13 24 01", "2", "0", "(R4''.8)/Z_2", "(2.1) ⊔ (2.1)", "Γ2 ⊔ Γ2 →[212]Γ3 →[121]Γ3", "pinch", ""},
    {9, "R4''.10", 4, "13 24 012", "1", "2^{r-2}", "deg.cusp(4)", "2(2.2) ⊔ 2(2.2)", "2Γ2 ⊔ 2Γ2 → Γ4 → Γ3", "d.c.", ""},
    {9, "R4''.11", 4, "12 13 14", "", "", "", "", "", "", "R4''.7"},
    {9, "R4''.12", 2, "12 13 14 01", "2", "0", "(R4''.11)/Z_2", "(1.1) ⊔ (1.1)", "Γ2 ⊔ Γ2 →[2112]Γ3 → Γ3", "pinch", ""},
    {9, "R4''.13", 16, "01234", "", "", "", "", "", "", "R4''.1"},
    {9, "R4''.14", 8, "12 034", "1", "2^{r-3}", "deg.cusp(8)", "4(1.1) ⊔ 4(2.2)", "4Γ2 ⊔ 4Γ2 → Γ8 →[221…1]Γ3", "d.c.", ""},
    {9, "R4''.15", 8, "13 024", "", "", "", "", "", "", "R4''.4"},
    {9, "R4''.16", 8, "123 04", "", "", "", "", "", "", "R4''.2"},
    {9, "R4''.17", 4, "12 13 014", "1", "2^{r-2}", "deg.cusp(4)", "2(1.1) ⊔ 2(2.2)", "2Γ2 ⊔ 2Γ2 → Γ4 →[2111]Γ3", "d.c.", ""},
    {9, "R4''.18", 4, "12 134 01", "2", "0", "(R4''.14)/Z_2", "2(1.1) ⊔ 2(2.2)", "2Γ2 ⊔ 2Γ2 →[221…1]Γ5 → Γ3", "pinch", ""},
    {9, "R4''.19", 4, "13 124 01", "", "", "", "", "", "", "R4''.9"},
};

// Printed rows whose relation cell cannot be right. R4'.17 repeats the
// relations of R4'.15, while the class 01234 has no row of its own; the
// override mirrors R4.13 and R4''.13.
struct RowErratum {
  const char* label;
  int h_order;
  const char* relations;
  const char* same_as;
};

inline constexpr RowErratum kRowErrata[] = {
    {"R4'.17", 16, "01234", "R4'.1"},
};

inline constexpr int kTableCount = 9;

inline constexpr int kExpectedRowCounts[kTableCount] = {16, 22, 11, 6, 4,
                                                        4,  23, 25, 19};

inline std::span<const TableRowData> AllTableRows() { return kTableRows; }

}  // namespace abelcover

#endif  // ABELCOVER_TABLES_DATA_HPP_
