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


// Germ classification for Z_2^r covers.
//
// A configuration is laid out on index positions 0..k. Position 0 holds the
// inertia g0 of the double curve (R shapes only); positions 1..k hold the
// branch elements, duplicated lines first. The relation code is the set of
// index subsets whose elements sum to zero, written as bitmasks over the
// positions. Canonical codes key the embedded table rows.

#ifndef ABELCOVER_LOCAL_CLASSIFIER_HPP_
#define ABELCOVER_LOCAL_CLASSIFIER_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "abelcover/abelian_group.hpp"
#include "abelcover/errors.hpp"
#include "abelcover/local_config.hpp"
#include "abelcover/tables_data.hpp"

namespace abelcover {

inline constexpr int kMaxLocalRank = 16;
inline constexpr int kMaxSemiresolveDepth = 4;

struct Shape {
  int table = 0;
  BaseKind base = BaseKind::kSmooth;
  bool has_g0 = false;
  int k = 0;
  int dups = 0;

  auto operator<=>(const Shape&) const = default;

  // Bits of the positions in use.
  Mask Positions() const {
    Mask m = (Mask{1} << (k + 1)) - 1;
    return has_g0 ? m : (m & ~Mask{1});
  }
};

inline Shape ShapeForTable(int table, int k) {
  Shape s;
  s.table = table;
  s.k = k;
  switch (table) {
    case 1: break;
    case 2: s.dups = 1; break;
    case 3: s.dups = 2; break;
    case 4: s.base = BaseKind::kDoubleCurve; break;
    case 5: s.base = BaseKind::kDoubleCurve; s.dups = 1; break;
    case 6: s.base = BaseKind::kDoubleCurve; s.dups = 2; break;
    case 7: s.base = BaseKind::kDoubleCurve; s.has_g0 = true; break;
    case 8: s.base = BaseKind::kDoubleCurve; s.has_g0 = true; s.dups = 1; break;
    case 9: s.base = BaseKind::kDoubleCurve; s.has_g0 = true; s.dups = 2; break;
    default: throw Error(ErrorKind::kShape, "table id must be in 1..9");
  }
  return s;
}

// The k values each table covers.
inline std::vector<int> TableKs(int table) {
  switch (table) {
    case 1: return {0, 1, 2, 3, 4};
    case 2: return {2, 3, 4};
    case 4:
    case 7: return {0, 2, 4};
    default: return {4};
  }
}

struct Layout {
  Shape shape;
  int r = 0;
  std::vector<Mask> elems;  // size k + 1, elems[0] = g0
};

inline void CheckMask(Mask m, int r, const char* what) {
  if ((m >> r) != 0) {
    throw Error(ErrorKind::kShape, std::string(what) + " does not fit in Z_2^r");
  }
}

// Reorders a configuration into table layout.
inline Layout layout_of(const LocalConfig& cfg) {
  if (cfg.r < 0 || cfg.r > kMaxLocalRank) {
    throw Error(ErrorKind::kSize, "local rank must be in 0..16");
  }
  CheckMask(cfg.g0, cfg.r, "g0");
  for (const LocalLine& l : cfg.lines) {
    if (l.elements.empty() || l.elements.size() > 2) {
      throw Error(ErrorKind::kShape, "a line carries one or two elements");
    }
    for (Mask g : l.elements) {
      CheckMask(g, cfg.r, "line element");
      if (g == 0) throw Error(ErrorKind::kShape, "branch element is zero");
    }
  }
  Layout out;
  out.r = cfg.r;
  out.elems.push_back(0);
  if (cfg.base == BaseKind::kSmooth) {
    if (cfg.g0 != 0) throw Error(ErrorKind::kShape, "g0 on a smooth base");
    int dups = 0;
    for (const LocalLine& l : cfg.lines) {
      if (l.side != 0) throw Error(ErrorKind::kShape, "side given on a smooth base");
      if (l.elements.size() == 2) {
        ++dups;
        out.elems.insert(out.elems.end(), l.elements.begin(), l.elements.end());
      }
    }
    for (const LocalLine& l : cfg.lines) {
      if (l.elements.size() == 1) out.elems.push_back(l.elements[0]);
    }
    int k = static_cast<int>(out.elems.size()) - 1;
    if (k > 4) throw Error(ErrorKind::kShape, "more than four branch data at a point");
    if (dups == 1 && k < 2) throw Error(ErrorKind::kShape, "bad duplicate pattern");
    if (dups == 2 && k != 4) throw Error(ErrorKind::kShape, "bad duplicate pattern");
    out.shape = ShapeForTable(dups == 0 ? 1 : dups == 1 ? 2 : 3, k);
    return out;
  }
  int count[3] = {0, 0, 0};
  bool dup[3] = {false, false, false};
  for (const LocalLine& l : cfg.lines) {
    if (l.side != 1 && l.side != 2) {
      throw Error(ErrorKind::kShape, "d.c. lines need side 1 or 2");
    }
    count[l.side] += static_cast<int>(l.elements.size());
    if (l.elements.size() == 2) dup[l.side] = true;
  }
  if (count[1] != count[2]) {
    throw Error(ErrorKind::kShape, "sides carry different numbers of branch data");
  }
  if (count[1] > 2) throw Error(ErrorKind::kShape, "more than two branch data on a side");
  int first = (dup[2] && !dup[1]) ? 2 : 1;
  for (int side : {first, 3 - first}) {
    for (const LocalLine& l : cfg.lines) {
      if (l.side == side) {
        out.elems.insert(out.elems.end(), l.elements.begin(), l.elements.end());
      }
    }
  }
  int dups = (dup[1] ? 1 : 0) + (dup[2] ? 1 : 0);
  bool r_shape = cfg.g0 != 0;
  out.elems[0] = cfg.g0;
  int table = (r_shape ? 7 : 4) + dups;
  out.shape = ShapeForTable(table, 2 * count[1]);
  return out;
}

// Inverse of layout_of for a shape and element vector.
inline LocalConfig config_from_layout(const Shape& shape,
                                      const std::vector<Mask>& elems, int r) {
  LocalConfig cfg;
  cfg.r = r;
  cfg.base = shape.base;
  cfg.g0 = shape.has_g0 ? elems[0] : 0;
  int idx = 1;
  auto line = [&](int side, int n) {
    LocalLine l;
    l.side = side;
    for (int j = 0; j < n; ++j) l.elements.push_back(elems[idx++]);
    cfg.lines.push_back(l);
  };
  if (shape.base == BaseKind::kSmooth) {
    for (int d = 0; d < shape.dups; ++d) line(0, 2);
    while (idx <= shape.k) line(0, 1);
    return cfg;
  }
  int per_side = shape.k / 2;
  for (int side = 1; side <= 2; ++side) {
    bool side_dup = shape.dups == 2 || (shape.dups == 1 && side == 1);
    if (side_dup) {
      line(side, 2);
    } else {
      for (int j = 0; j < per_side; ++j) line(side, 1);
    }
  }
  return cfg;
}

inline Mask ToMask(const std::string& word) {
  Mask m = 0;
  for (char c : word) {
    if (c < '0' || c > '9') throw Error(ErrorKind::kInput, "bad relation word '" + word + "'");
    m |= Mask{1} << (c - '0');
  }
  return m;
}

inline std::string WordString(Mask w) {
  std::string s;
  for (int i = 0; i < 32; ++i) {
    if ((w >> i) & 1) s += static_cast<char>('0' + i);
  }
  return s;
}

// Closure of a set of words under symmetric difference, sorted.
inline std::vector<Mask> SpanWords(const std::vector<Mask>& gens) {
  std::set<Mask> s{0};
  for (Mask g : gens) {
    std::vector<Mask> add;
    for (Mask x : s) add.push_back(x ^ g);
    s.insert(add.begin(), add.end());
  }
  return {s.begin(), s.end()};
}

struct RelationCode {
  std::vector<Mask> words;  // sorted, includes 0

  auto operator<=>(const RelationCode&) const = default;

  int Dimension() const { return Log2(words.size()); }

  // A basis of least-weight words, or "none".
  std::string ToString() const {
    std::vector<Mask> nz(words.begin() + 1, words.end());
    std::sort(nz.begin(), nz.end(), [](Mask a, Mask b) {
      int wa = std::popcount(a), wb = std::popcount(b);
      if (wa != wb) return wa < wb;
      return WordString(a) < WordString(b);
    });
    std::vector<Mask> basis;
    for (Mask w : nz) {
      std::vector<Mask> trial = basis;
      trial.push_back(w);
      if (SpanOrder(trial) > SpanOrder(basis)) basis = std::move(trial);
    }
    if (basis.empty()) return "none";
    std::string s;
    for (Mask w : basis) s += (s.empty() ? "" : " ") + WordString(w);
    return s;
  }
};

inline std::vector<Mask> ParseRelationWords(const std::string& text) {
  std::vector<Mask> gens;
  std::istringstream in(text);
  std::string w;
  while (in >> w) {
    if (w != "none") gens.push_back(ToMask(w));
  }
  return SpanWords(gens);
}

using Perm = std::array<int, 5>;

inline Mask ApplyPerm(const Perm& p, Mask w) {
  Mask out = 0;
  for (int i = 0; i < 5; ++i) {
    if ((w >> i) & 1) out |= Mask{1} << p[i];
  }
  return out;
}

inline Perm Swap(std::initializer_list<std::pair<int, int>> cycles) {
  Perm p{0, 1, 2, 3, 4};
  for (auto [a, b] : cycles) std::swap(p[a], p[b]);
  return p;
}

inline std::vector<Perm> GenerateGroup(const std::vector<Perm>& gens) {
  std::set<Perm> g{Perm{0, 1, 2, 3, 4}};
  std::vector<Perm> frontier(g.begin(), g.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& a : frontier) {
      for (const Perm& b : gens) {
        Perm c;
        for (int i = 0; i < 5; ++i) c[i] = b[a[i]];
        if (g.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return {g.begin(), g.end()};
}

// Relabelings that preserve the geometric meaning of a layout. Index 0 is
// never moved.
inline std::vector<Perm> SymmetryGroup(const Shape& s) {
  std::vector<Perm> gens;
  if (s.table == 1) {
    for (int i = 1; i < s.k; ++i) gens.push_back(Swap({{i, i + 1}}));
  } else if (s.table == 2) {
    gens.push_back(Swap({{1, 2}}));
    if (s.k == 4) gens.push_back(Swap({{3, 4}}));
  } else if (s.base == BaseKind::kDoubleCurve && s.k == 2) {
    gens.push_back(Swap({{1, 2}}));
  } else if (s.k == 4) {
    gens.push_back(Swap({{1, 2}}));
    gens.push_back(Swap({{3, 4}}));
    if (s.dups != 1) gens.push_back(Swap({{1, 3}, {2, 4}}));
  }
  return GenerateGroup(gens);
}

inline RelationCode Canonicalize(const std::vector<Mask>& words,
                                 const Shape& shape) {
  RelationCode best;
  bool first = true;
  for (const Perm& p : SymmetryGroup(shape)) {
    std::vector<Mask> img;
    img.reserve(words.size());
    for (Mask w : words) img.push_back(ApplyPerm(p, w));
    std::sort(img.begin(), img.end());
    if (first || img < best.words) {
      best.words = std::move(img);
      first = false;
    }
  }
  return best;
}

inline std::vector<Mask> KernelWords(const Layout& lay) {
  Mask pos = lay.shape.Positions();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << (lay.shape.k + 1)); ++s) {
    if (s & ~pos) continue;
    Mask sum = 0;
    for (int i = 0; i <= lay.shape.k; ++i) {
      if ((s >> i) & 1) sum ^= lay.elems[i];
    }
    if (sum == 0) out.push_back(s);
  }
  return out;
}

// No zero elements, and on a double curve the sides agree modulo g0.
inline bool IsAdmissible(const std::vector<Mask>& words, const Shape& shape) {
  for (Mask w : words) {
    if (std::popcount(w) == 1) return false;
  }
  if (shape.base == BaseKind::kDoubleCurve && shape.k > 0) {
    Mask lines = shape.Positions() & ~Mask{1};
    bool forced = std::binary_search(words.begin(), words.end(), lines) ||
                  (shape.has_g0 &&
                   std::binary_search(words.begin(), words.end(), lines | 1));
    if (!forced) return false;
  }
  return true;
}

inline RelationCode relation_code(const LocalConfig& cfg) {
  Layout lay = layout_of(cfg);
  return Canonicalize(KernelWords(lay), lay.shape);
}

enum class ChiKind { kNone, kZero, kPower };

struct ChiColumn {
  ChiKind kind = ChiKind::kNone;
  int offset = 0;  // value 2^(r - offset)

  bool operator==(const ChiColumn&) const = default;

  std::string ToString() const {
    switch (kind) {
      case ChiKind::kNone: return "";
      case ChiKind::kZero: return "0";
      case ChiKind::kPower: return offset == 0 ? "2^{r}" : "2^{r-" + std::to_string(offset) + "}";
    }
    return "";
  }
};

inline ChiColumn ParseChi(const std::string& s) {
  if (s.empty()) return {};
  if (s == "0") return {ChiKind::kZero, 0};
  if (s.rfind("2^{r-", 0) == 0 && s.back() == '}') {
    return {ChiKind::kPower, std::stoi(s.substr(5, s.size() - 6))};
  }
  throw Error(ErrorKind::kInternalConsistency, "unreadable chi cell '" + s + "'");
}

struct TableRow {
  int table = 0;
  std::string label;
  int k = 0;
  std::uint64_t h_order = 0;
  std::string relations;          // effective
  std::string printed_relations;  // as printed
  int iota = 0;                   // effective
  ChiColumn chi;                  // effective
  std::string singularity;
  std::string normalization;
  std::string curve_map;
  std::string sr_type;
  std::string printed_normalization;  // empty on "same as" rows
  std::string same_as;
  bool erratum = false;
  RelationCode code;
};

// k of a row, read off its label.
inline int LabelK(const std::string& label) {
  std::size_t i = (label[0] == 'E' || label[0] == 'R') ? 1 : 0;
  return label.at(i) - '0';
}

class TableIndex {
 public:
  static const TableIndex& Get() {
    static const TableIndex index;
    return index;
  }

  const std::vector<TableRow>& rows() const { return rows_; }

  std::vector<const TableRow*> Rows(int table) const {
    std::vector<const TableRow*> out;
    for (const TableRow& r : rows_) {
      if (r.table == table) out.push_back(&r);
    }
    return out;
  }

  const TableRow* Find(int table, int k, const RelationCode& code) const {
    auto it = by_code_.find({table, k, code.words});
    return it == by_code_.end() ? nullptr : &rows_[it->second];
  }

  const TableRow* FindLabel(const std::string& label) const {
    auto it = by_label_.find(label);
    return it == by_label_.end() ? nullptr : &rows_[it->second];
  }

 private:
  TableIndex() {
    for (const TableRowData& d : kTableRows) {
      TableRow r;
      r.table = d.table;
      r.label = d.label;
      r.k = LabelK(r.label);
      r.h_order = static_cast<std::uint64_t>(d.h_order);
      r.relations = r.printed_relations = d.relations;
      r.same_as = d.same_as;
      r.printed_normalization = d.normalization;
      for (const RowErratum& e : kRowErrata) {
        if (r.label == e.label) {
          r.h_order = static_cast<std::uint64_t>(e.h_order);
          r.relations = e.relations;
          r.same_as = e.same_as;
          r.erratum = true;
        }
      }
      by_label_[r.label] = rows_.size();
      rows_.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      TableRow& r = rows_[i];
      const TableRowData* src = &kTableRows[i];
      std::string target = r.same_as;
      while (!target.empty()) {
        std::size_t j = by_label_.at(target);
        src = &kTableRows[j];
        target = rows_[j].same_as;
      }
      r.iota = std::stoi(src->iota);
      r.chi = ParseChi(src->chi);
      r.singularity = src->singularity;
      r.normalization = src->normalization;
      r.curve_map = src->curve_map;
      r.sr_type = src->sr_type;
      Shape shape = ShapeForTable(r.table, r.k);
      r.code = Canonicalize(ParseRelationWords(r.relations), shape);
      auto key = std::make_tuple(r.table, r.k, r.code.words);
      if (!by_code_.emplace(key, i).second) {
        throw Error(ErrorKind::kInternalConsistency,
                    "rows " + rows_[by_code_[key]].label + " and " + r.label +
                        " share a relation code");
      }
    }
  }

  std::vector<TableRow> rows_;
  std::map<std::string, std::size_t> by_label_;
  std::map<std::tuple<int, int, std::vector<Mask>>, std::size_t> by_code_;
};

inline std::uint64_t LayoutSpanOrder(const Layout& lay) {
  std::vector<Mask> gens;
  for (int i = lay.shape.has_g0 ? 0 : 1; i <= lay.shape.k; ++i) {
    gens.push_back(lay.elems[i]);
  }
  return SpanOrder(gens);
}

// Index 2 as soon as a relation has odd length once index 0 is dropped.
inline int iota_parity(const Layout& lay) {
  for (Mask w : KernelWords(lay)) {
    if (std::popcount(w & ~Mask{1}) % 2) return 2;
  }
  return 1;
}

// |N / (N cap ker chibar)| with chibar the product over the branch lines.
inline int iota_residual(const Layout& lay) {
  FiniteAbelianGroup group(std::vector<int>(lay.r, 2));
  std::vector<CyclicPair> pairs;
  std::vector<std::size_t> mask;
  for (int i = lay.shape.has_g0 ? 0 : 1; i <= lay.shape.k; ++i) {
    if (i > 0) mask.push_back(pairs.size());
    pairs.push_back(MakeCyclicPair(group, ElementFromMask(lay.elems[i], lay.r)));
  }
  if (pairs.empty()) return 1;
  return static_cast<int>(residual_index(component_sum_hom(group, pairs), mask));
}

inline int iota_index(const Layout& lay) {
  int a = iota_parity(lay);
  int b = iota_residual(lay);
  if (a != b) {
    throw Error(ErrorKind::kInternalConsistency,
                "parity rule gives " + std::to_string(a) +
                    " but the residual index is " + std::to_string(b));
  }
  return a;
}

inline int iota_index(const LocalConfig& cfg) { return iota_index(layout_of(cfg)); }

struct ChiContribution {
  bool relevant = false;
  int exponent = 0;  // contribution 2^exponent when relevant

  std::uint64_t Value() const {
    return relevant ? std::uint64_t{1} << exponent : 0;
  }
};

// Nonzero exactly at Gorenstein degenerate cusps over the double curve.
inline ChiContribution chi_contribution(const Layout& lay) {
  if (lay.shape.base != BaseKind::kDoubleCurve || lay.shape.k != 4) return {};
  if (iota_index(lay) != 1) return {};
  return {true, lay.r - Log2(LayoutSpanOrder(lay))};
}

inline ChiContribution chi_contribution(const LocalConfig& cfg) {
  return chi_contribution(layout_of(cfg));
}

// Table 1 lookup for a germ over a smooth base with reduced lines.
inline const TableRow& SmoothRow(const LocalConfig& cfg) {
  Layout lay = layout_of(cfg);
  std::vector<Mask> words = KernelWords(lay);
  RelationCode code = Canonicalize(words, lay.shape);
  const TableRow* row = TableIndex::Get().Find(lay.shape.table, lay.shape.k, code);
  if (!row) {
    throw Error(ErrorKind::kClassificationGap,
                "no row for relations " + code.ToString());
  }
  return *row;
}

struct NormalPiece {
  std::uint64_t copies = 1;
  std::string label;
  LocalConfig cfg;
};

struct Normalization {
  std::vector<NormalPiece> pieces;

  std::string ToString() const {
    std::string s;
    for (const NormalPiece& p : pieces) {
      if (!s.empty()) s += " ⊔ ";
      if (p.copies != 1) s += std::to_string(p.copies);
      s += "(" + p.label + ")";
    }
    return s;
  }
};

inline std::vector<std::pair<std::uint64_t, std::string>> ParseNormalization(
    const std::string& text) {
  std::vector<std::pair<std::uint64_t, std::string>> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t open = text.find('(', pos);
    if (open == std::string::npos) break;
    std::size_t close = text.find(')', open);
    std::string head = text.substr(pos, open - pos);
    std::string digits;
    for (char c : head) {
      if (c >= '0' && c <= '9') digits += c;
    }
    out.push_back({digits.empty() ? 1 : std::stoull(digits),
                   text.substr(open + 1, close - open - 1)});
    pos = close + 1;
  }
  return out;
}

// Replaces each doubled line by one line carrying the sum of its elements.
// Over a double curve the germ splits into one smooth germ per side, and g0
// becomes an ordinary branch line on both.
inline Normalization normalize_config(const LocalConfig& cfg) {
  Layout lay = layout_of(cfg);
  std::uint64_t h = LayoutSpanOrder(lay);
  auto piece = [&](const std::vector<const LocalLine*>& lines) {
    LocalConfig n;
    n.r = cfg.r;
    std::vector<Mask> gens;
    if (cfg.base == BaseKind::kDoubleCurve && cfg.g0) {
      n.lines.push_back({0, {cfg.g0}, "s0"});
      gens.push_back(cfg.g0);
    }
    for (const LocalLine* l : lines) {
      Mask sum = 0;
      for (Mask g : l->elements) sum ^= g;
      if (sum == 0) continue;
      n.lines.push_back({0, {sum}, l->symbol});
      gens.push_back(sum);
    }
    NormalPiece p;
    p.copies = h / SpanOrder(gens);
    p.label = SmoothRow(n).label;
    p.cfg = std::move(n);
    return p;
  };
  Normalization out;
  if (cfg.base == BaseKind::kSmooth) {
    std::vector<const LocalLine*> all;
    for (const LocalLine& l : cfg.lines) all.push_back(&l);
    out.pieces.push_back(piece(all));
    return out;
  }
  bool dup[3] = {false, false, false};
  for (const LocalLine& l : cfg.lines) {
    if (l.elements.size() == 2) dup[l.side] = true;
  }
  int first = (dup[2] && !dup[1]) ? 2 : 1;
  for (int side : {first, 3 - first}) {
    std::vector<const LocalLine*> lines;
    for (const LocalLine& l : cfg.lines) {
      if (l.side == side) lines.push_back(&l);
    }
    out.pieces.push_back(piece(lines));
  }
  return out;
}

// Whether a computed normalization matches a printed X-tilde cell. Sides are
// unordered unless exactly one side carries a doubled line.
inline bool NormalizationMatches(const Normalization& n, const Shape& shape,
                                 const std::string& printed) {
  auto want = ParseNormalization(printed);
  std::vector<std::pair<std::uint64_t, std::string>> got;
  for (const NormalPiece& p : n.pieces) got.push_back({p.copies, p.label});
  if (shape.base == BaseKind::kDoubleCurve && shape.dups != 1) {
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
  }
  return want == got;
}

struct Classification {
  const TableRow* row = nullptr;
  Layout layout;
  RelationCode code;
  std::uint64_t h_order = 0;
  int iota = 0;
  ChiContribution chi;
  Normalization normalization;
};

inline Classification classify(const LocalConfig& cfg) {
  Classification c;
  c.layout = layout_of(cfg);
  const Shape& shape = c.layout.shape;
  std::vector<Mask> words = KernelWords(c.layout);
  if (!IsAdmissible(words, shape)) {
    throw Error(ErrorKind::kInconsistency,
                "the sides do not agree modulo g0 at this point");
  }
  c.code = Canonicalize(words, shape);
  c.row = TableIndex::Get().Find(shape.table, shape.k, c.code);
  if (!c.row) {
    throw Error(ErrorKind::kClassificationGap,
                "table " + std::to_string(shape.table) + " has no row for relations " +
                    c.code.ToString());
  }
  c.h_order = LayoutSpanOrder(c.layout);
  c.iota = iota_index(c.layout);
  c.chi = chi_contribution(c.layout);
  const TableRow& row = *c.row;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::kInternalConsistency,
                "row " + row.label + ": computed " + what + " disagrees with the table");
  };
  if (c.h_order != row.h_order) fail("|H|");
  if (c.iota != row.iota) fail("iota");
  if (row.table >= 4) {
    int r_min = Log2(c.h_order);
    ChiColumn computed = c.chi.relevant
                             ? ChiColumn{ChiKind::kPower, r_min}
                             : ChiColumn{ChiKind::kZero, 0};
    if (!(computed == row.chi)) fail("chi contribution");
  }
  if (row.table == 1) {
    c.normalization.pieces.push_back({1, row.label, cfg});
  } else {
    c.normalization = normalize_config(cfg);
    if (!row.printed_normalization.empty() &&
        !NormalizationMatches(c.normalization, shape, row.printed_normalization)) {
      fail("normalization " + c.normalization.ToString());
    }
  }
  return c;
}

struct BlowupGerm {
  LocalConfig cfg;
  std::uint64_t copies = 1;
};

struct BlowupResult {
  std::vector<Mask> exceptional;  // one entry, or one per side over C
  std::vector<BlowupGerm> germs;
};

inline std::uint64_t ConfigSpanOrder(const LocalConfig& cfg) {
  std::vector<Mask> gens{cfg.g0};
  for (const LocalLine& l : cfg.lines) {
    gens.insert(gens.end(), l.elements.begin(), l.elements.end());
  }
  return SpanOrder(gens);
}

// Blows up the base at the point. The exceptional curve carries the sum of
// the elements through the point (plus g0 per side over C). New germs sit
// where it meets the strict transforms; copies count points over each.
inline BlowupResult blowup_transform(const LocalConfig& cfg) {
  layout_of(cfg);
  BlowupResult out;
  std::uint64_t h = ConfigSpanOrder(cfg);
  auto smooth_germs = [&](int side, Mask e) {
    for (const LocalLine& l : cfg.lines) {
      if (l.side != side) continue;
      LocalConfig g;
      g.r = cfg.r;
      g.lines.push_back({0, l.elements, l.symbol});
      if (e) g.lines.push_back({0, {e}, "e"});
      out.germs.push_back({g, h / ConfigSpanOrder(g)});
    }
  };
  if (cfg.base == BaseKind::kSmooth) {
    Mask e = 0;
    for (const LocalLine& l : cfg.lines) {
      for (Mask g : l.elements) e ^= g;
    }
    out.exceptional.push_back(e);
    smooth_germs(0, e);
    return out;
  }
  Mask e[3] = {0, cfg.g0, cfg.g0};
  for (const LocalLine& l : cfg.lines) {
    for (Mask g : l.elements) e[l.side] ^= g;
  }
  out.exceptional = {e[1], e[2]};
  smooth_germs(1, e[1]);
  smooth_germs(2, e[2]);
  LocalConfig c;
  c.r = cfg.r;
  c.base = BaseKind::kDoubleCurve;
  c.g0 = cfg.g0;
  if (e[1]) c.lines.push_back({1, {e[1]}, "e1"});
  if (e[2]) c.lines.push_back({2, {e[2]}, "e2"});
  out.germs.push_back({c, h / ConfigSpanOrder(c)});
  return out;
}

// Smooth and semismooth germs; everything else is blown up again.
inline bool IsTerminalLabel(const std::string& label) {
  static const std::set<std::string> kTerminal = {
      "0.1", "1.1", "2.1", "2'.1", "2'.2", "3'.1", "3'.2", "3'.3", "3'.5"};
  return kTerminal.count(label) > 0;
}

// Row label -> number of germs, after blowing up until every germ is
// smooth or semismooth. Smooth base only.
inline std::map<std::string, std::uint64_t> semiresolve(const LocalConfig& cfg) {
  if (cfg.base != BaseKind::kSmooth) {
    throw Error(ErrorKind::kUnsupported, "semiresolution is computed over a smooth base only");
  }
  std::map<std::string, std::uint64_t> out;
  struct Item {
    LocalConfig cfg;
    std::uint64_t copies;
    int depth;
  };
  std::vector<Item> work{{cfg, 1, 0}};
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    const std::string& label = classify(it.cfg).row->label;
    if (IsTerminalLabel(label)) {
      out[label] += it.copies;
      continue;
    }
    if (it.depth == kMaxSemiresolveDepth) {
      throw Error(ErrorKind::kInternalConsistency,
                  "semiresolution did not stop after " +
                      std::to_string(kMaxSemiresolveDepth) + " blow-ups");
    }
    for (BlowupGerm& g : blowup_transform(it.cfg).germs) {
      work.push_back({std::move(g.cfg), it.copies * g.copies, it.depth + 1});
    }
  }
  return out;
}

// All linear subspaces of Z_2^n, as sorted word lists.
inline std::vector<std::vector<Mask>> Subspaces(int n) {
  std::set<std::vector<Mask>> seen{{0}};
  std::vector<std::vector<Mask>> out, frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<Mask>> next;
    for (const auto& s : frontier) {
      out.push_back(s);
      for (Mask v = 1; v < (Mask{1} << n); ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        std::vector<Mask> gens(s.begin(), s.end());
        gens.push_back(v);
        std::vector<Mask> t = SpanWords(gens);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Elements realizing exactly the given code on the positions of a shape:
// coordinates are a basis of the dual code.
inline std::vector<Mask> RealizeCode(const std::vector<Mask>& words,
                                     const Shape& shape, int* rank) {
  Mask pos = shape.Positions();
  std::vector<Mask> basis;
  for (Mask x = 1; x < (Mask{1} << (shape.k + 1)); ++x) {
    if (x & ~pos) continue;
    bool orth = true;
    for (Mask w : words) {
      if (std::popcount(x & w) % 2) {
        orth = false;
        break;
      }
    }
    if (!orth) continue;
    std::vector<Mask> trial = basis;
    trial.push_back(x);
    if (SpanOrder(trial) > SpanOrder(basis)) basis = std::move(trial);
  }
  std::vector<Mask> elems(shape.k + 1, 0);
  for (int i = 0; i <= shape.k; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if ((basis[j] >> i) & 1) elems[i] |= Mask{1} << j;
    }
  }
  *rank = static_cast<int>(basis.size());
  return elems;
}

struct EnumeratedClass {
  int k = 0;
  RelationCode code;
  LocalConfig representative;
  Classification classification;
};

// Every admissible class of the table's shapes, canonicalized, each with a
// minimal-rank representative that has been classified.
inline std::vector<EnumeratedClass> enumerate_table(int table) {
  std::vector<EnumeratedClass> out;
  for (int k : TableKs(table)) {
    Shape shape = ShapeForTable(table, k);
    std::vector<int> positions;
    for (int i = 0; i <= k; ++i) {
      if ((shape.Positions() >> i) & 1) positions.push_back(i);
    }
    std::set<RelationCode> seen;
    for (const auto& local : Subspaces(static_cast<int>(positions.size()))) {
      std::vector<Mask> words;
      for (Mask x : local) {
        Mask w = 0;
        for (std::size_t j = 0; j < positions.size(); ++j) {
          if ((x >> j) & 1) w |= Mask{1} << positions[j];
        }
        words.push_back(w);
      }
      std::sort(words.begin(), words.end());
      if (!IsAdmissible(words, shape)) continue;
      RelationCode code = Canonicalize(words, shape);
      if (!seen.insert(code).second) continue;
      EnumeratedClass ec;
      ec.k = k;
      ec.code = code;
      int r = 0;
      std::vector<Mask> elems = RealizeCode(code.words, shape, &r);
      ec.representative = config_from_layout(shape, elems, r);
      ec.classification = classify(ec.representative);
      if (!(ec.classification.code == code)) {
        throw Error(ErrorKind::kInternalConsistency,
                    "representative does not realize relations " + code.ToString());
      }
      out.push_back(std::move(ec));
    }
  }
  return out;
}

struct RegenerationReport {
  int table = 0;
  std::size_t classes = 0;
  std::size_t rows = 0;
};

// Checks that enumeration hits every printed row of the table exactly once.
inline RegenerationReport regenerate(int table) {
  std::vector<EnumeratedClass> classes;
  try {
    classes = enumerate_table(table);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kClassificationGap) {
      throw Error(ErrorKind::kRegenerationFailure, e.what());
    }
    throw;
  }
  std::vector<const TableRow*> rows = TableIndex::Get().Rows(table);
  std::map<std::string, int> hits;
  for (const EnumeratedClass& ec : classes) ++hits[ec.classification.row->label];
  for (const TableRow* r : rows) {
    if (hits[r->label] != 1) {
      throw Error(ErrorKind::kRegenerationFailure,
                  "row " + r->label + " is hit " + std::to_string(hits[r->label]) +
                      " times");
    }
  }
  if (classes.size() != rows.size()) {
    throw Error(ErrorKind::kRegenerationFailure,
                "table " + std::to_string(table) + " enumerates " +
                    std::to_string(classes.size()) + " classes for " +
                    std::to_string(rows.size()) + " rows");
  }
  return {table, classes.size(), rows.size()};
}

}  // namespace abelcover

#endif  // ABELCOVER_LOCAL_CLASSIFIER_HPP_
