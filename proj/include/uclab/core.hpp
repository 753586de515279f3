#pragma once

// Value types shared by every module: subsets as bitmasks, the labelled
// ground set, words (rising orders) and canonical set families.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uclab {

// Bit i set means element i is a member.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr int cardinality(Mask m) { return std::popcount(m); }
constexpr bool isSubset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr bool isProperSubset(Mask a, Mask b) { return a != b && isSubset(a, b); }
constexpr bool contains(Mask m, int i) { return (m >> i) & 1U; }

class GroundSet {
 public:
  // Elements labelled a, b, c, ...
  explicit GroundSet(int n);
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return n_; }
  Mask full() const { return n_ == 32 ? ~Mask{0} : bit(n_) - 1; }
  std::size_t powersetSize() const { return std::size_t{1} << n_; }
  const std::string& label(int i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::optional<int> indexOf(std::string_view label) const;
  bool singleCharLabels() const;

  // "{}" for the empty set, otherwise labels joined by ','.
  std::string format(Mask m) const;
  // Concatenated labels when all labels are one character, else comma-joined.
  std::string formatCompact(Mask m) const;
  // Accepts "{}", "a,b", or "ab" when every label is one character.
  Mask parse(std::string_view text) const;

  friend bool operator==(const GroundSet& x, const GroundSet& y);

 private:
  int n_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A permutation of element indices; order()[j] is risen at step j+1.
class Word {
 public:
  static Word identity(int n);
  explicit Word(std::vector<int> order);
  // Parses "acb" (single-character labels) or "a,c,b".
  static Word parse(const GroundSet& ground, std::string_view text);

  int size() const { return static_cast<int>(order_.size()); }
  int at(int step) const { return order_[step]; }
  const std::vector<int>& order() const { return order_; }
  // Advances to the lexicographically next permutation; false after the last.
  bool next();
  std::string format(const GroundSet& ground) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> order_;
};

// All n! words in lexicographic order. Requires n <= 8.
std::vector<Word> allWords(int n);

class SetFamily {
 public:
  explicit SetFamily(GroundSet ground);
  SetFamily(GroundSet ground, std::vector<Mask> members);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  std::span<const Mask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Mask operator[](std::size_t i) const { return members_[i]; }

  bool contains(Mask m) const;
  // Position of m in canonical order, if present.
  std::optional<std::size_t> indexOf(Mask m) const;

  SetFamily withElement(int a) const;     // F_a
  SetFamily withoutElement(int a) const;  // F_ā
  template <class Pred>
  SetFamily filter(Pred pred) const {
    std::vector<Mask> out;
    for (Mask m : members_)
      if (pred(m)) out.push_back(m);
    return fromCanonical(ground_, std::move(out));
  }
  // Union of all members.
  Mask span() const;
  std::size_t lengthSum() const;

  // Skips sorting and validation; members must already be canonical.
  static SetFamily fromCanonical(GroundSet ground, std::vector<Mask> members);

  friend bool operator==(const SetFamily& x, const SetFamily& y);

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
};

SetFamily familyUnion(const SetFamily& x, const SetFamily& y);
SetFamily familyIntersection(const SetFamily& x, const SetFamily& y);
SetFamily familyDifference(const SetFamily& x, const SetFamily& y);
bool isSubfamily(const SetFamily& x, const SetFamily& y);

// Dense membership table over 2^n, for inner loops.
class MembershipTable {
 public:
  explicit MembershipTable(int n) : bits_((std::size_t{1} << n) / 64 + 1, 0) {}
  explicit MembershipTable(const SetFamily& f);
  bool test(Mask m) const { return (bits_[m >> 6] >> (m & 63)) & 1U; }
  void set(Mask m) { bits_[m >> 6] |= std::uint64_t{1} << (m & 63); }
  void reset(Mask m) { bits_[m >> 6] &= ~(std::uint64_t{1} << (m & 63)); }

 private:
  std::vector<std::uint64_t> bits_;
};

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

}  // namespace uclab
