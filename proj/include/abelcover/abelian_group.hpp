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

// Finite abelian groups G = Z_{n_1} x ... x Z_{n_s}, their characters with
// values in Q/Z, cyclic subgroup/character pairs, the epsilon carry and the
// kernel of the component sum map.

#ifndef ABELCOVER_ABELIAN_GROUP_HPP_
#define ABELCOVER_ABELIAN_GROUP_HPP_

#include <boost/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "abelcover/errors.hpp"

// Boost 1.74 mixed rational/integer equality recurses forever under C++20
// rewritten comparisons. Exact non-template overloads take precedence.
namespace boost {
#define ABELCOVER_Q_EQ(T)                                                     \
  inline bool operator==(const rational<long long>& a, T b) {                 \
    return a.denominator() == 1 && a.numerator() == static_cast<long long>(b); \
  }                                                                           \
  inline bool operator==(T b, const rational<long long>& a) { return a == b; } \
  inline bool operator!=(const rational<long long>& a, T b) { return !(a == b); } \
  inline bool operator!=(T b, const rational<long long>& a) { return !(a == b); }
ABELCOVER_Q_EQ(int)
ABELCOVER_Q_EQ(long)
ABELCOVER_Q_EQ(long long)
#undef ABELCOVER_Q_EQ
}  // namespace boost

namespace abelcover {

using Q = boost::rational<long long>;

inline constexpr std::size_t kMaxEnumeratedOrder = std::size_t{1} << 16;

struct GroupElement {
  std::vector<int> coeffs;
  auto operator<=>(const GroupElement&) const = default;
};

struct Character {
  std::vector<int> coeffs;
  auto operator<=>(const Character&) const = default;
};

// A value of Q/Z stored as a reduced fraction with 0 <= num < den.
struct Residue {
  long long num = 0;
  long long den = 1;

  static Residue FromRational(const Q& q) {
    long long n = q.numerator() % q.denominator();
    if (n < 0) n += q.denominator();
    Q r(n, q.denominator());
    return Residue{r.numerator(), r.denominator()};
  }
  Q ToRational() const { return Q(num, den); }
  bool IsZero() const { return num == 0; }
  Residue operator+(const Residue& o) const {
    return FromRational(ToRational() + o.ToRational());
  }
  auto operator<=>(const Residue&) const = default;
  std::string ToString() const {
    return num == 0 ? "0" : std::to_string(num) + "/" + std::to_string(den);
  }
};

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> orders)
      : orders_(std::move(orders)) {
    for (int n : orders_) {
      if (n < 2) throw Error(ErrorKind::kShape, "cyclic factor order < 2");
    }
  }

  const std::vector<int>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (int m : orders_) n *= static_cast<std::uint64_t>(m);
    return n;
  }

  long long exponent() const {
    long long e = 1;
    for (int m : orders_) e = std::lcm(e, static_cast<long long>(m));
    return e;
  }

  // True when every cyclic factor is Z_2.
  bool IsElementary2() const {
    for (int m : orders_) {
      if (m != 2) return false;
    }
    return true;
  }

  bool Contains(const GroupElement& g) const {
    if (g.coeffs.size() != orders_.size()) return false;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      if (g.coeffs[j] < 0 || g.coeffs[j] >= orders_[j]) return false;
    }
    return true;
  }

  void Check(const GroupElement& g) const {
    if (g.coeffs.size() != orders_.size()) {
      throw Error(ErrorKind::kShape,
                  "element has " + std::to_string(g.coeffs.size()) +
                      " coefficients, group has " +
                      std::to_string(orders_.size()) + " factors");
    }
    if (!Contains(g)) {
      throw Error(ErrorKind::kShape, "element coefficient out of range");
    }
  }

  void Check(const Character& chi) const {
    Check(GroupElement{chi.coeffs});
  }

  GroupElement Zero() const {
    return GroupElement{std::vector<int>(orders_.size(), 0)};
  }

  GroupElement Add(const GroupElement& a, const GroupElement& b) const {
    GroupElement c = Zero();
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      c.coeffs[j] = (a.coeffs[j] + b.coeffs[j]) % orders_[j];
    }
    return c;
  }

  GroupElement Negate(const GroupElement& a) const {
    GroupElement c = Zero();
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      c.coeffs[j] = (orders_[j] - a.coeffs[j]) % orders_[j];
    }
    return c;
  }

  GroupElement Multiple(const GroupElement& a, long long k) const {
    GroupElement c = Zero();
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      long long v = (static_cast<long long>(a.coeffs[j]) * k) % orders_[j];
      if (v < 0) v += orders_[j];
      c.coeffs[j] = static_cast<int>(v);
    }
    return c;
  }

  bool IsZero(const GroupElement& a) const { return a == Zero(); }

  int ElementOrder(const GroupElement& a) const {
    long long m = 1;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      long long n = orders_[j];
      m = std::lcm(m, n / std::gcd(n, static_cast<long long>(a.coeffs[j])));
    }
    return static_cast<int>(m);
  }

  // Mixed-radix index, used as a compact set key.
  std::uint64_t Index(const GroupElement& a) const {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      idx = idx * orders_[j] + a.coeffs[j];
    }
    return idx;
  }

  GroupElement FromIndex(std::uint64_t idx) const {
    GroupElement g = Zero();
    for (std::size_t j = orders_.size(); j-- > 0;) {
      g.coeffs[j] = static_cast<int>(idx % orders_[j]);
      idx /= orders_[j];
    }
    return g;
  }

  std::vector<GroupElement> Elements() const {
    if (order() > kMaxEnumeratedOrder) {
      throw Error(ErrorKind::kSize, "group of order " +
                                        std::to_string(order()) +
                                        " is too large to enumerate");
    }
    std::vector<GroupElement> out;
    out.reserve(order());
    for (std::uint64_t i = 0; i < order(); ++i) out.push_back(FromIndex(i));
    return out;
  }

  std::vector<Character> Characters() const {
    std::vector<Character> out;
    for (const GroupElement& g : Elements()) out.push_back(Character{g.coeffs});
    return out;
  }

  Character TrivialCharacter() const { return Character{Zero().coeffs}; }

  Character Multiply(const Character& a, const Character& b) const {
    return Character{Add(GroupElement{a.coeffs}, GroupElement{b.coeffs}).coeffs};
  }

  Residue Evaluate(const Character& chi, const GroupElement& g) const {
    Q v(0);
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      v += Q(static_cast<long long>(chi.coeffs[j]) * g.coeffs[j], orders_[j]);
    }
    return Residue::FromRational(v);
  }

  int CharacterOrder(const Character& chi) const {
    return ElementOrder(GroupElement{chi.coeffs});
  }

  auto operator<=>(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<int> orders_;
};

struct CyclicPair {
  GroupElement generator;
  int order = 1;
  int psi_exponent = 1;
};

// Validates a pair and returns it; the order is read off the generator.
inline CyclicPair MakeCyclicPair(const FiniteAbelianGroup& group,
                                 const GroupElement& h, int psi_exponent = 1) {
  group.Check(h);
  int m = group.ElementOrder(h);
  if (m < 2) throw Error(ErrorKind::kShape, "cyclic pair generator is zero");
  int a = ((psi_exponent % m) + m) % m;
  if (std::gcd(a, m) != 1) {
    throw Error(ErrorKind::kShape, "psi exponent is not a unit mod the order");
  }
  return CyclicPair{h, m, a};
}

inline void CheckPair(const FiniteAbelianGroup& group, const CyclicPair& p) {
  group.Check(p.generator);
  if (group.ElementOrder(p.generator) != p.order || p.order < 2) {
    throw Error(ErrorKind::kShape, "cyclic pair order does not match its generator");
  }
  if (std::gcd(p.psi_exponent, p.order) != 1 || p.psi_exponent < 0 ||
      p.psi_exponent >= p.order) {
    throw Error(ErrorKind::kShape, "cyclic pair psi exponent is not a unit");
  }
}

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<GroupElement> generators,
           std::vector<GroupElement> elements)
      : generators_(std::move(generators)), elements_(std::move(elements)) {}

  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool Contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

 private:
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;  // sorted
};

inline Subgroup subgroup_generated(const FiniteAbelianGroup& group,
                                   const std::vector<GroupElement>& gens) {
  for (const GroupElement& g : gens) group.Check(g);
  std::set<GroupElement> seen{group.Zero()};
  std::vector<GroupElement> frontier{group.Zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& x : frontier) {
      for (const GroupElement& g : gens) {
        GroupElement y = group.Add(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > kMaxEnumeratedOrder) {
            throw Error(ErrorKind::kSize, "subgroup exceeds 2^16 elements");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup(gens, std::vector<GroupElement>(seen.begin(), seen.end()));
}

// The a in [0, m) with chi(h) = a * psi(h).
inline int character_exponent(const FiniteAbelianGroup& group,
                              const Character& chi, const CyclicPair& pair) {
  Residue target = group.Evaluate(chi, pair.generator);
  Q step(pair.psi_exponent, pair.order);
  for (int a = 0; a < pair.order; ++a) {
    if (Residue::FromRational(step * a) == target) return a;
  }
  throw Error(ErrorKind::kInternalConsistency,
              "character value is not m-torsion; corrupted cyclic pair");
}

inline int epsilon(const FiniteAbelianGroup& group, const Character& chi,
                   const Character& chi_prime, const CyclicPair& pair) {
  int a = character_exponent(group, chi, pair);
  int b = character_exponent(group, chi_prime, pair);
  return (a + b) / pair.order;
}

// The evaluation map from the direct sum of the H_i onto H_y, with kernel N.
struct ComponentSumHom {
  FiniteAbelianGroup group;
  FiniteAbelianGroup source;  // product of Z_{m_i}
  std::vector<GroupElement> images;
  std::vector<int> psi_exponents;
  Subgroup kernel;
  Subgroup image;
};

inline ComponentSumHom component_sum_hom(const FiniteAbelianGroup& group,
                                         const std::vector<CyclicPair>& pairs) {
  if (pairs.empty()) {
    throw Error(ErrorKind::kShape, "component sum map needs at least one pair");
  }
  ComponentSumHom hom;
  hom.group = group;
  std::vector<int> orders;
  for (const CyclicPair& p : pairs) {
    CheckPair(group, p);
    orders.push_back(p.order);
    hom.images.push_back(p.generator);
    hom.psi_exponents.push_back(p.psi_exponent);
  }
  hom.source = FiniteAbelianGroup(orders);
  std::vector<GroupElement> kernel;
  for (const GroupElement& x : hom.source.Elements()) {
    GroupElement y = group.Zero();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      y = group.Add(y, group.Multiple(pairs[i].generator, x.coeffs[i]));
    }
    if (group.IsZero(y)) kernel.push_back(x);
  }
  std::sort(kernel.begin(), kernel.end());
  hom.kernel = Subgroup(kernel, kernel);
  hom.image = subgroup_generated(group, hom.images);
  return hom;
}

// |N / (N cap ker chibar)| where chibar is the product of the psi_i over the
// 0-based indices in mask.
inline long long residual_index(const ComponentSumHom& hom,
                                const std::vector<std::size_t>& mask) {
  std::set<Residue> values;
  for (const GroupElement& n : hom.kernel.elements()) {
    Q v(0);
    for (std::size_t i : mask) {
      if (i >= hom.psi_exponents.size()) {
        throw Error(ErrorKind::kShape, "mask index out of range");
      }
      v += Q(static_cast<long long>(n.coeffs[i]) * hom.psi_exponents[i],
             hom.source.orders()[i]);
    }
    values.insert(Residue::FromRational(v));
  }
  return static_cast<long long>(values.size());
}

inline std::string FormatQ(const Q& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

inline std::string FormatElement(const std::vector<int>& coeffs) {
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + ")";
}

}  // namespace abelcover

#endif  // ABELCOVER_ABELIAN_GROUP_HPP_
