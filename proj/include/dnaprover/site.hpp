#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>

namespace dnaprover {

/// A (strand, position) coordinate, both 1-based. Position 1 is the 5' end.
/// Doubles as the occurrence locator of the process calculus and as the
/// site of a strand graph, so both engines share one adjacency test.
struct Site {
  std::size_t vertex = 0;
  std::size_t position = 0;

  friend auto operator<=>(const Site&, const Site&) = default;
  friend bool operator==(const Site&, const Site&) = default;
};

/// `(v,n)`
std::string to_string(const Site& s);

/// Unordered pair of distinct sites, stored with first < second.
struct SitePair {
  Site first;
  Site second;

  SitePair() = default;
  SitePair(Site a, Site b) : first(a < b ? a : b), second(a < b ? b : a) {}

  bool touches(const Site& s) const { return first == s || second == s; }
  /// The endpoint that is not s. Requires touches(s).
  const Site& other(const Site& s) const { return first == s ? second : first; }

  friend auto operator<=>(const SitePair&, const SitePair&) = default;
  friend bool operator==(const SitePair&, const SitePair&) = default;
};

/// `{(v,n),(w,m)}`
std::string to_string(const SitePair& e);

/// True when b lies next to a in antiparallel alignment: one endpoint moved
/// one position toward the 3' end and the other one toward the 5' end, on
/// the same strands. A strand paired with itself uses the same test.
inline bool antiparallel_adjacent(const SitePair& a, const SitePair& b) {
  for (int flip = 0; flip < 2; ++flip) {
    const Site& s = flip ? a.second : a.first;
    const Site& t = flip ? a.first : a.second;
    if (t.position < 2) continue;
    const SitePair shifted({s.vertex, s.position + 1}, {t.vertex, t.position - 1});
    if (shifted == b) return true;
  }
  return false;
}

}  // namespace dnaprover
