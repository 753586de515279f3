#pragma once

// Test helpers: compact family literals and brute-force oracles written
// directly from the definitions, independent of the library internals.

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "uclab/core.hpp"

namespace uclab::test {

inline Mask m(const GroundSet& g, const std::string& s) { return g.parse(s); }

// fam(3, {"a", "abc", "{}"})
inline SetFamily fam(int n, std::initializer_list<const char*> members) {
  GroundSet g(n);
  std::vector<Mask> ms;
  for (const char* s : members) ms.push_back(g.parse(s));
  return SetFamily(g, ms);
}

inline std::set<Mask> asSet(const SetFamily& f) { return {f.begin(), f.end()}; }

inline std::set<Mask> masks(const GroundSet& g, std::initializer_list<const char*> members) {
  std::set<Mask> out;
  for (const char* s : members) out.insert(g.parse(s));
  return out;
}

// Every subfamily of 2^X for n <= 3, by counter.
inline std::vector<SetFamily> allFamilies(int n) {
  GroundSet g(n);
  std::vector<SetFamily> out;
  const unsigned size = 1U << n;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << size); ++k) {
    std::vector<Mask> ms;
    for (Mask x = 0; x < size; ++x)
      if ((k >> x) & 1U) ms.push_back(x);
    out.emplace_back(g, ms);
  }
  return out;
}

inline bool oracleUnionClosed(const std::set<Mask>& f) {
  for (Mask x : f)
    for (Mask y : f)
      if (!f.count(x | y)) return false;
  return true;
}

inline std::set<Mask> oracleClosure(std::set<Mask> f) {
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(f.begin(), f.end());
    for (Mask x : cur)
      for (Mask y : cur) grew = f.insert(x | y).second || grew;
  }
  return f;
}

inline std::set<Mask> oracleMinimal(const std::set<Mask>& f) {
  std::set<Mask> out;
  for (Mask x : f)
    if (std::none_of(f.begin(), f.end(), [x](Mask y) { return y != x && (y & ~x) == 0; })) out.insert(x);
  return out;
}

// Rising by the definition: each step maps z to z + a when z + a is absent
// from the current section. Returns images in input order.
inline std::vector<Mask> oracleRise(const std::vector<Mask>& f, const std::vector<int>& word) {
  std::vector<Mask> cur = f;
  for (int a : word) {
    std::set<Mask> section(cur.begin(), cur.end());
    for (Mask& z : cur)
      if (!section.count(z | (Mask{1} << a))) z |= Mask{1} << a;
  }
  return cur;
}

inline Mask oracleStar(const std::set<Mask>& f, Mask z) {
  Mask u = 0;
  for (Mask h : f)
    if ((h & ~z) == 0) u |= h;
  return u;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace uclab::test
