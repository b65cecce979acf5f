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

// The germ of a Z_2^r cover at a point, as a labeled line arrangement.
// Elements of Z_2^r are bitmasks: bit j is the j-th coordinate.

#ifndef ABELCOVER_LOCAL_CONFIG_HPP_
#define ABELCOVER_LOCAL_CONFIG_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "abelcover/abelian_group.hpp"

namespace abelcover {

using Mask = std::uint32_t;

enum class BaseKind { kSmooth, kDoubleCurve };

// One geometric line through the point. Two elements mean the line is a
// doubled branch line (D_i = D_j).
struct LocalLine {
  int side = 0;  // 0 on a smooth base, 1 or 2 on a d.c. base
  std::vector<Mask> elements;
  std::string symbol;
};

struct LocalConfig {
  int r = 0;
  BaseKind base = BaseKind::kSmooth;
  Mask g0 = 0;  // inertia of C; always 0 on a smooth base
  std::vector<LocalLine> lines;

  int DataCount(int side) const {
    int n = 0;
    for (const LocalLine& l : lines) {
      if (l.side == side) n += static_cast<int>(l.elements.size());
    }
    return n;
  }
  int DataCount() const {
    int n = 0;
    for (const LocalLine& l : lines) n += static_cast<int>(l.elements.size());
    return n;
  }
};

inline Mask MaskFromElement(const GroupElement& g) {
  Mask m = 0;
  for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
    if (g.coeffs[j] % 2) m |= Mask{1} << j;
  }
  return m;
}

inline GroupElement ElementFromMask(Mask m, int r) {
  GroupElement g{std::vector<int>(r, 0)};
  for (int j = 0; j < r; ++j) g.coeffs[j] = (m >> j) & 1;
  return g;
}

// Order of the subgroup of Z_2^r spanned by the masks.
inline std::uint64_t SpanOrder(const std::vector<Mask>& gens) {
  Mask pivot[32] = {};  // pivot[b] has top bit b
  int dim = 0;
  for (Mask v : gens) {
    for (int b = 31; b >= 0 && v; --b) {
      if (!((v >> b) & 1)) continue;
      if (!pivot[b]) {
        pivot[b] = v;
        ++dim;
        v = 0;
      } else {
        v ^= pivot[b];
      }
    }
  }
  return std::uint64_t{1} << dim;
}

inline int Log2(std::uint64_t n) { return std::countr_zero(n); }

}  // namespace abelcover

#endif  // ABELCOVER_LOCAL_CONFIG_HPP_
