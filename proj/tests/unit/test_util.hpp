#ifndef MAPCENSUS_TEST_UTIL_HPP
#define MAPCENSUS_TEST_UTIL_HPP

#include <algorithm>
#include <functional>
#include <random>

#include "mapcensus/cayley.hpp"
#include "mapcensus/tutte_map.hpp"

namespace testutil {

using namespace mapcensus;

// Vertex g rotates through S in the given order; dart (g, s) uses sign(g, s).
inline Perm rotation_map(const FlagSpace& f, const std::function<Sign(Element, Element)>& sign,
                         const std::function<std::vector<Element>(Element)>& order = {}) {
  const auto& lab = *f.labeling();
  Perm p(f.flag_count());
  for (Element g = 0; g < lab.group->order(); ++g) {
    auto ss = order ? order(g) : lab.set.members;
    std::vector<std::uint32_t> c;
    for (auto s : ss) c.push_back(flag_id(f, g, s, sign(g, s)));
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::uint32_t a = c[i], b = c[(i + 1) % c.size()];
      p[a] = b;
      p[f.alpha(b)] = f.alpha(a);
    }
  }
  return p;
}

inline Perm all_plus(const FlagSpace& f) {
  return rotation_map(f, [](Element, Element) { return Sign::plus; });
}

// Opposite signs at the two ends of every edge: no twisted edges.
inline Perm untwisted(const FlagSpace& f) {
  const auto& g = *f.labeling()->group;
  return rotation_map(f, [&](Element x, Element s) { return x < g.mul(s, x) ? Sign::plus : Sign::minus; });
}

inline Perm random_map(const FlagSpace& f, std::mt19937& rng) {
  const auto& lab = *f.labeling();
  std::vector<std::vector<Element>> orders(lab.group->order());
  for (auto& o : orders) {
    o = lab.set.members;
    std::shuffle(o.begin(), o.end(), rng);
  }
  std::vector<std::uint8_t> bits(f.flag_count());
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return rotation_map(
      f, [&](Element g, Element s) { return bits[flag_id(f, g, s, Sign::plus)] ? Sign::minus : Sign::plus; },
      [&](Element g) { return orders[g]; });
}

}  // namespace testutil

#endif
