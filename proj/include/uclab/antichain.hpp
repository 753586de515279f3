#pragma once

// Shade/shadow calculus on antichains, the augmentation maps that push an
// antichain toward the middle levels, and symmetric chain decompositions.

#include <cstdint>
#include <string>
#include <vector>

#include "uclab/core.hpp"

namespace uclab {

// Level-wise: all one-larger supersets (shade) or one-smaller subsets (shadow).
SetFamily shade(const SetFamily& a);
SetFamily shadow(const SetFamily& a);

// min(shade(A)); A must be an antichain.
SetFamily firstUpwardLevel(const SetFamily& a);
// foils[0] = A, foils[i] = firstUpwardLevel(foils[i-1]); stops before the
// first empty foil, or after depth entries when depth >= 0.
std::vector<SetFamily> foils(const SetFamily& a, int depth = -1);

struct AntichainState {
  SetFamily antichain;
  SetFamily nablaBar;
  long objective = 0;  // 2|A| + |nablaBar|
  int minLen = 0;
  int maxLen = 0;
  int nablaMaxLen = -1;  // -1 when nablaBar is empty

  static AntichainState of(const SetFamily& a);
};

// Members of a of size k.
SetFamily levelOf(const SetFamily& a, int k);

// Both closure properties used by the augmentation maps.
bool isAugmentable(const SetFamily& a);

// Adds h - {a} for violating pairs, smallest (h, a) first, until augmentable.
AntichainState augmentableClosure(const SetFamily& a);

enum class Direction { Up, Down };

// alpha+ (Up) or alpha- (Down); n must be even and the state augmentable.
AntichainState augmentStep(const AntichainState& s, Direction d);

struct AugmentRecord {
  std::string kind;  // "closure", "up" or "down"
  AntichainState before;
  AntichainState after;
};

struct MaximizeRun {
  SetFamily seed;
  std::vector<AugmentRecord> steps;
  AntichainState fixpoint;
  AntichainState best;
  std::uint64_t bound = 0;
};

// Runs the augmentation loop from the seed to its fixpoint; best is the
// middle-level antichain. 2 <= n <= 8.
MaximizeRun maximizeObjective(int n);
MaximizeRun maximizeObjective(const SetFamily& seed);

struct SymmetricChainDecomposition {
  int n = 0;
  std::vector<std::vector<Mask>> chains;
  // For every mask: (chain index, position in chain).
  std::vector<std::pair<int, int>> location;
};

SymmetricChainDecomposition symmetricChains(int n);
Mask specular(const SymmetricChainDecomposition& d, Mask z);

}  // namespace uclab
