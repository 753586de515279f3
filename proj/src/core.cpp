#include "uclab/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace uclab {

namespace {

std::vector<std::string> defaultLabels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> splitComma(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(',');
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

GroundSet::GroundSet(int n) : GroundSet(n >= 1 && n <= kMaxGround ? defaultLabels(n)
                                                                   : std::vector<std::string>{}) {}

GroundSet::GroundSet(std::vector<std::string> labels) : n_(static_cast<int>(labels.size())) {
  if (n_ < 1 || n_ > kMaxGround)
    throw Error("ground set size must be between 1 and 16");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty() || l.find_first_of(",#{} \t") != std::string::npos)
      throw Error("invalid element label '" + l + "'");
    if (!seen.insert(l).second) throw Error("duplicate element label '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<int> GroundSet::indexOf(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if ((*labels_)[i] == label) return i;
  return std::nullopt;
}

bool GroundSet::singleCharLabels() const {
  return std::all_of(labels_->begin(), labels_->end(),
                     [](const std::string& l) { return l.size() == 1; });
}

std::string GroundSet::format(Mask m) const {
  if (m == 0) return "{}";
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (!contains(m, i)) continue;
    if (!out.empty()) out += ',';
    out += (*labels_)[i];
  }
  return out;
}

std::string GroundSet::formatCompact(Mask m) const {
  if (!singleCharLabels()) return format(m);
  if (m == 0) return "{}";
  std::string out;
  for (int i = 0; i < n_; ++i)
    if (contains(m, i)) out += (*labels_)[i];
  return out;
}

Mask GroundSet::parse(std::string_view text) const {
  text = trim(text);
  if (text == "{}") return 0;
  if (text.empty()) throw Error("empty subset text");
  Mask m = 0;
  auto add = [&](std::string_view label) {
    auto idx = indexOf(label);
    if (!idx) throw Error("unknown element '" + std::string(label) + "'");
    m |= bit(*idx);
  };
  if (text.find(',') == std::string_view::npos && !indexOf(text) && singleCharLabels()) {
    for (char c : text) add(std::string_view(&c, 1));
  } else {
    for (auto part : splitComma(text)) add(part);
  }
  return m;
}

bool operator==(const GroundSet& x, const GroundSet& y) {
  return x.n_ == y.n_ && (x.labels_ == y.labels_ || *x.labels_ == *y.labels_);
}

Word Word::identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Word(std::move(order));
}

Word::Word(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (int x : order_) {
    if (x < 0 || x >= static_cast<int>(order_.size()) || seen[x])
      throw Error("word is not a permutation of the ground set");
    seen[x] = true;
  }
}

Word Word::parse(const GroundSet& ground, std::string_view text) {
  text = trim(text);
  std::vector<int> order;
  if (text.find(',') != std::string_view::npos || !ground.singleCharLabels()) {
    for (auto part : splitComma(text)) {
      auto idx = ground.indexOf(part);
      if (!idx) throw Error("unknown element '" + std::string(part) + "' in word");
      order.push_back(*idx);
    }
  } else {
    for (char c : text) {
      auto idx = ground.indexOf(std::string_view(&c, 1));
      if (!idx) throw Error("unknown element '" + std::string(1, c) + "' in word");
      order.push_back(*idx);
    }
  }
  if (static_cast<int>(order.size()) != ground.size())
    throw Error("word length " + std::to_string(order.size()) + " does not match ground size " +
                std::to_string(ground.size()));
  return Word(std::move(order));
}

bool Word::next() { return std::next_permutation(order_.begin(), order_.end()); }

std::string Word::format(const GroundSet& ground) const {
  std::string out;
  bool compact = ground.singleCharLabels();
  for (std::size_t j = 0; j < order_.size(); ++j) {
    if (!compact && j > 0) out += ',';
    out += ground.label(order_[j]);
  }
  return out;
}

std::vector<Word> allWords(int n) {
  if (n > 8) throw Error("all-words sweep requires n <= 8");
  std::vector<Word> out;
  Word w = Word::identity(n);
  do out.push_back(w);
  while (w.next());
  return out;
}

SetFamily::SetFamily(GroundSet ground) : ground_(std::move(ground)) {}

SetFamily::SetFamily(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() > ground_.full())
    throw Error("member outside the ground set");
}

SetFamily SetFamily::fromCanonical(GroundSet ground, std::vector<Mask> members) {
  SetFamily f(std::move(ground));
  f.members_ = std::move(members);
  return f;
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::optional<std::size_t> SetFamily::indexOf(Mask m) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), m);
  if (it == members_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

SetFamily SetFamily::withElement(int a) const {
  return filter([a](Mask m) { return uclab::contains(m, a); });
}

SetFamily SetFamily::withoutElement(int a) const {
  return filter([a](Mask m) { return !uclab::contains(m, a); });
}

Mask SetFamily::span() const {
  Mask u = 0;
  for (Mask m : members_) u |= m;
  return u;
}

std::size_t SetFamily::lengthSum() const {
  std::size_t s = 0;
  for (Mask m : members_) s += cardinality(m);
  return s;
}

bool operator==(const SetFamily& x, const SetFamily& y) {
  return x.ground_ == y.ground_ && x.members_ == y.members_;
}

SetFamily familyUnion(const SetFamily& x, const SetFamily& y) {
  std::vector<Mask> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return SetFamily::fromCanonical(x.ground(), std::move(out));
}

SetFamily familyIntersection(const SetFamily& x, const SetFamily& y) {
  std::vector<Mask> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return SetFamily::fromCanonical(x.ground(), std::move(out));
}

SetFamily familyDifference(const SetFamily& x, const SetFamily& y) {
  std::vector<Mask> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return SetFamily::fromCanonical(x.ground(), std::move(out));
}

bool isSubfamily(const SetFamily& x, const SetFamily& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

MembershipTable::MembershipTable(const SetFamily& f) : MembershipTable(f.n()) {
  for (Mask m : f) set(m);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace uclab
