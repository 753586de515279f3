#include "uclab/setfam.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace uclab {

void requireUnionClosed(const SetFamily& f) {
  if (f.empty()) throw Error("empty family");
  if (!isUnionClosed(f)) throw Error("family not union-closed");
}

SetFamily closeUnderUnion(const SetFamily& generators) {
  if (generators.empty()) throw Error("empty family");
  MembershipTable seen(generators);
  std::vector<Mask> members(generators.begin(), generators.end());
  // Each new member is joined with every member found so far.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Mask u = members[i] | members[j];
      if (!seen.test(u)) {
        seen.set(u);
        members.push_back(u);
      }
    }
  }
  return SetFamily(generators.ground(), std::move(members));
}

bool isUnionClosed(const SetFamily& f) {
  MembershipTable table(f);
  auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!table.test(m[i] | m[j])) return false;
  return true;
}

bool isUpwardClosed(const SetFamily& f) {
  MembershipTable table(f);
  for (Mask m : f)
    for (int i = 0; i < f.n(); ++i)
      if (!table.test(m | bit(i))) return false;
  return true;
}

bool isAntichain(const SetFamily& f) {
  auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (isSubset(m[i], m[j]) || isSubset(m[j], m[i])) return false;
  return true;
}

SetFamily minimal(const SetFamily& f) {
  return f.filter([&](Mask g) {
    return std::none_of(f.begin(), f.end(), [g](Mask h) { return isProperSubset(h, g); });
  });
}

SetFamily maximal(const SetFamily& f) {
  return f.filter([&](Mask g) {
    return std::none_of(f.begin(), f.end(), [g](Mask h) { return isProperSubset(g, h); });
  });
}

Extremes extremes(const SetFamily& f) {
  if (f.empty()) throw Error("empty family");
  return {minimal(f), maximal(f)};
}

SetFamily upset(const SetFamily& s) {
  std::vector<Mask> out;
  Mask top = s.ground().full();
  for (Mask z = 0;; ++z) {
    if (std::any_of(s.begin(), s.end(), [z](Mask m) { return isSubset(m, z); }))
      out.push_back(z);
    if (z == top) break;
  }
  return SetFamily::fromCanonical(s.ground(), std::move(out));
}

SetFamily ideal(const SetFamily& f, const SetFamily& s) {
  return f.filter([&](Mask g) {
    return std::any_of(s.begin(), s.end(), [g](Mask m) { return isSubset(m, g); });
  });
}

SetFamily joinIrreducibles(const SetFamily& f) {
  requireUnionClosed(f);
  // In a union-closed family, g is a union of two members strictly below it
  // exactly when the members strictly below it already cover g. The empty
  // set is the one exception: it is the empty union but no union of two.
  return f.filter([&](Mask g) {
    if (g == 0) return true;
    Mask below = 0;
    for (Mask h : f)
      if (isProperSubset(h, g)) below |= h;
    return below != g;
  });
}

bool isUnionIndependent(const SetFamily& s) {
  for (Mask z : s) {
    Mask u = 0;
    bool any = false;
    for (Mask h : s) {
      if (h != z && isSubset(h, z)) {
        u |= h;
        any = true;
      }
    }
    if (any && u == z) return false;
  }
  return true;
}

std::vector<CoverPair> coverPairs(const SetFamily& f) {
  std::vector<CoverPair> out;
  for (Mask lo : f) {
    for (Mask hi : f) {
      if (!isProperSubset(lo, hi)) continue;
      bool between = std::any_of(f.begin(), f.end(), [&](Mask h) {
        return isProperSubset(lo, h) && isProperSubset(h, hi);
      });
      if (!between) out.push_back({lo, hi});
    }
  }
  return out;
}

SetFamily normalize(const SetFamily& f) {
  Mask used = f.span();
  if (used == 0) throw Error("empty family");
  std::vector<int> newIndex(f.n(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < f.n(); ++i) {
    if (contains(used, i)) {
      newIndex[i] = static_cast<int>(labels.size());
      labels.push_back(f.ground().label(i));
    }
  }
  std::vector<Mask> members;
  for (Mask m : f) {
    if (m == 0) continue;
    Mask r = 0;
    for (int i = 0; i < f.n(); ++i)
      if (contains(m, i)) r |= bit(newIndex[i]);
    members.push_back(r);
  }
  return SetFamily(GroundSet(std::move(labels)), std::move(members));
}

SetFamily powerset(const GroundSet& ground) {
  std::vector<Mask> out(ground.powersetSize());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Mask>(i);
  return SetFamily::fromCanonical(ground, std::move(out));
}

SetFamily level(const GroundSet& ground, int k) {
  return powerset(ground).filter([k](Mask m) { return cardinality(m) == k; });
}

SetFamily atLeast(const GroundSet& ground, int k) {
  return powerset(ground).filter([k](Mask m) { return cardinality(m) >= k; });
}

SetFamily parseFam(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<Mask> members;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::string_view body(line);
    body.remove_prefix(first);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t' || body.back() == '\r'))
      body.remove_suffix(1);
    if (!ground) {
      constexpr std::string_view kHeader = "ground:";
      if (body.substr(0, kHeader.size()) != kHeader)
        throw Error("line " + std::to_string(lineNo) + ": expected 'ground:' header");
      body.remove_prefix(kHeader.size());
      std::vector<std::string> labels;
      std::string item;
      std::istringstream items{std::string(body)};
      while (std::getline(items, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("empty label in ground header");
        labels.push_back(item.substr(b, e - b + 1));
      }
      ground.emplace(std::move(labels));
      continue;
    }
    try {
      // Lines always use comma-separated labels, so "ab" means the label ab.
      if (body == "{}") {
        members.push_back(0);
      } else {
        Mask m = 0;
        std::string item;
        std::istringstream items{std::string(body)};
        while (std::getline(items, item, ',')) {
          auto b = item.find_first_not_of(" \t");
          auto e = item.find_last_not_of(" \t");
          if (b == std::string::npos) throw Error("empty label");
          auto idx = ground->indexOf(item.substr(b, e - b + 1));
          if (!idx) throw Error("unknown element '" + item.substr(b, e - b + 1) + "'");
          m |= bit(*idx);
        }
        members.push_back(m);
      }
    } catch (const Error& e) {
      throw Error("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  if (!ground) throw Error("missing 'ground:' header");
  return SetFamily(*ground, std::move(members));
}

std::string formatFam(const SetFamily& f) {
  std::string out = "ground: ";
  for (int i = 0; i < f.n(); ++i) {
    if (i) out += ',';
    out += f.ground().label(i);
  }
  out += '\n';
  for (Mask m : f) out += f.ground().format(m) + '\n';
  return out;
}

SetFamily readFamFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseFam(buf.str());
}

}  // namespace uclab
