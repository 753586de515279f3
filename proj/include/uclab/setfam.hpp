#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uclab/core.hpp"

namespace uclab {

struct CoverPair {
  Mask lower;
  Mask upper;
  friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

struct Extremes {
  SetFamily min;
  SetFamily max;
};

// Throws "empty family" on empty input.
SetFamily closeUnderUnion(const SetFamily& generators);
bool isUnionClosed(const SetFamily& f);
bool isUpwardClosed(const SetFamily& f);
bool isAntichain(const SetFamily& f);

SetFamily minimal(const SetFamily& f);
SetFamily maximal(const SetFamily& f);
Extremes extremes(const SetFamily& f);

// Every mask of 2^X containing a member of s.
SetFamily upset(const SetFamily& s);
// Members of f containing a member of s.
SetFamily ideal(const SetFamily& f, const SetFamily& s);

// Members that are not the union of two members strictly below them.
SetFamily joinIrreducibles(const SetFamily& f);
bool isUnionIndependent(const SetFamily& s);
std::vector<CoverPair> coverPairs(const SetFamily& f);

// Drops the empty set and restricts the ground set to the union of members,
// keeping labels.
SetFamily normalize(const SetFamily& f);

SetFamily powerset(const GroundSet& ground);
SetFamily level(const GroundSet& ground, int k);
SetFamily atLeast(const GroundSet& ground, int k);

void requireUnionClosed(const SetFamily& f);

// .fam text: a "ground: a,b,c" header, then one subset per line.
SetFamily parseFam(std::string_view text);
std::string formatFam(const SetFamily& f);
SetFamily readFamFile(const std::string& path);

}  // namespace uclab
