#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "poscon/boolean.hpp"
#include "poscon/poset.hpp"

namespace poscon {

using Rng = std::mt19937_64;

/// Random poset on up to max_n elements: sample i<j edges on a shuffled
/// index order and take the closure. Small and deterministic per seed.
inline Poset random_poset(Rng& rng, int min_n = 1, int max_n = 8) {
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<int> order;
  for (int i = 0; i < n; ++i) order.push_back(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<std::string, std::string>> covers;
  std::bernoulli_distribution edge(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng))
        covers.emplace_back(labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])],
                            labels[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
  return build_poset(std::move(labels), covers);
}

/// Random reflexive relation: the diagonal plus a sprinkling of pairs.
inline Relation random_reflexive_relation(Rng& rng, int n, double density) {
  Relation r = Relation::identity(n);
  std::bernoulli_distribution pick(density);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && pick(rng)) r.add(i, j);
  return r;
}

/// Random partition via a random restricted growth string.
inline Partition random_partition(Rng& rng, int n) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  int maxv = 0;
  for (int i = 1; i < n; ++i) {
    rgs[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(0, maxv + 1)(rng);
    maxv = std::max(maxv, rgs[static_cast<std::size_t>(i)]);
  }
  std::vector<ElementSet> classes(static_cast<std::size_t>(maxv + 1));
  for (int i = 0; i < n; ++i) classes[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].insert(i);
  return Partition::from_classes(n, std::move(classes));
}

/// Random Boolean poset: a power set of k generators with a random
/// complement-closed set of proper middle elements removed. Only emits
/// posets that verify as Boolean; falls back to the full cube.
inline Poset random_boolean_poset(Rng& rng, int k) {
  const int full = 1 << k;
  auto name = [&](int mask) -> std::string {
    if (mask == 0) return "0";
    if (mask == full - 1) return "1";
    std::string s;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) s += static_cast<char>('a' + i);
    return s;
  };
  auto realize = [&](const std::vector<bool>& removed) {
    std::vector<std::string> labels;
    std::vector<int> kept;
    for (int m = 0; m < full; ++m)
      if (!removed[static_cast<std::size_t>(m)]) {
        labels.push_back(name(m));
        kept.push_back(m);
      }
    std::vector<std::pair<std::string, std::string>> rel;
    for (int x : kept)
      for (int y : kept)
        if ((x & y) == x) rel.emplace_back(name(x), name(y));
    return Poset::build(std::move(labels), rel, Poset::RelationMode::FullOrder);
  };
  std::bernoulli_distribution drop(0.3);
  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<bool> removed(static_cast<std::size_t>(full), false);
    for (int m = 1; m < full - 1; ++m) {
      const int cm = (full - 1) & ~m;
      if (m < cm && drop(rng)) {
        removed[static_cast<std::size_t>(m)] = true;
        removed[static_cast<std::size_t>(cm)] = true;
      }
    }
    Poset p = realize(removed);
    if (is_boolean(p)) return p;
  }
  return realize(std::vector<bool>(static_cast<std::size_t>(full), false));  // full cube
}

}  // namespace poscon
