#pragma once

#include <string>
#include <vector>

#include "poscon/congruence.hpp"
#include "poscon/corpus.hpp"
#include "poscon/poset.hpp"
#include "poscon/random.hpp"

namespace testutil {

using poscon::ElementSet;
using poscon::Poset;

// Independent, loop-based re-implementations of the cone operators, kept
// deliberately naive so the bit-parallel versions are checked against
// something written a different way.
inline ElementSet naive_lower_cone(const Poset& p, ElementSet a) {
  ElementSet out;
  for (int z = 0; z < p.size(); ++z) {
    bool below_all = true;
    a.for_each([&](int x) {
      if (!p.leq(z, x)) below_all = false;
    });
    if (below_all) out.insert(z);
  }
  return out;
}

inline ElementSet naive_upper_cone(const Poset& p, ElementSet a) {
  ElementSet out;
  for (int z = 0; z < p.size(); ++z) {
    bool above_all = true;
    a.for_each([&](int x) {
      if (!p.leq(x, z)) above_all = false;
    });
    if (above_all) out.insert(z);
  }
  return out;
}

inline ElementSet naive_maximal(const Poset& p, ElementSet s) {
  ElementSet out;
  s.for_each([&](int z) {
    bool topmost = true;
    s.for_each([&](int w) {
      if (z != w && p.leq(z, w)) topmost = false;
    });
    if (topmost) out.insert(z);
  });
  return out;
}

inline ElementSet naive_minimal(const Poset& p, ElementSet s) {
  ElementSet out;
  s.for_each([&](int z) {
    bool lowest = true;
    s.for_each([&](int w) {
      if (z != w && p.leq(w, z)) lowest = false;
    });
    if (lowest) out.insert(z);
  });
  return out;
}

inline ElementSet set_of(const Poset& p, const std::vector<std::string>& labels) {
  ElementSet out;
  for (const std::string& l : labels) out.insert(p.element(l));
  return out;
}

inline std::vector<std::string> labels_of(const Poset& p, ElementSet s) {
  std::vector<std::string> out;
  s.for_each([&](int x) { out.push_back(p.label(x)); });
  return out;
}

inline poscon::Partition partition_of(const Poset& p,
                                      const std::vector<std::vector<std::string>>& classes) {
  std::vector<ElementSet> sets;
  for (const auto& c : classes) sets.push_back(set_of(p, c));
  return poscon::Partition::from_classes(p.size(), sets);
}

// A reproducible pool of small random posets for property-style tests.
inline std::vector<Poset> random_pool(std::uint64_t seed, int count, int min_n = 1,
                                      int max_n = 8) {
  poscon::Rng rng(seed);
  std::vector<Poset> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(poscon::random_poset(rng, min_n, max_n));
  return out;
}

}  // namespace testutil
