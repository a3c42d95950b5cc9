#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poscon/poset.hpp"

namespace poscon {
namespace corpus {

/// Six-element non-lattice poset: two atoms a, b under two coatoms c, d.
inline Poset fig1() {
  return build_poset({"0", "a", "b", "c", "d", "1"},
                     {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                      {"c", "1"}, {"d", "1"}});
}

/// Eight-element relatively pseudocomplemented poset: fig1 with one more
/// incomparable pair e, f spliced in below the top.
inline Poset fig3() {
  return build_poset({"0", "a", "b", "c", "d", "e", "f", "1"},
                     {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                      {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}, {"e", "1"}, {"f", "1"}});
}

/// Ten-element Boolean poset: four atoms, four coatoms, each atom x below
/// every coatom except x'.
inline Poset fig4() {
  return build_poset({"0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"},
                      {"a", "d'"}, {"a", "c'"}, {"a", "b'"},
                      {"b", "d'"}, {"b", "c'"}, {"b", "a'"},
                      {"c", "d'"}, {"c", "b'"}, {"c", "a'"},
                      {"d", "c'"}, {"d", "b'"}, {"d", "a'"},
                      {"d'", "1"}, {"c'", "1"}, {"b'", "1"}, {"a'", "1"}});
}

/// Twelve-element Boolean poset with two mid-layer elements e, e'.
inline Poset fig6() {
  return build_poset({"0", "a", "b", "c", "d", "e", "e'", "d'", "c'", "b'", "a'", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"},
                      {"a", "e"}, {"a", "b'"},
                      {"b", "e"}, {"b", "a'"},
                      {"c", "d'"}, {"c", "e'"},
                      {"d", "c'"}, {"d", "e'"},
                      {"e", "d'"}, {"e", "c'"},
                      {"e'", "b'"}, {"e'", "a'"},
                      {"d'", "1"}, {"c'", "1"}, {"b'", "1"}, {"a'", "1"}});
}

inline Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(std::to_string(i), std::to_string(i + 1));
  return build_poset(std::move(labels), covers);
}

inline Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return build_poset(std::move(labels), {});
}

/// Powerset of k letters ordered by inclusion; bottom "0", top "1",
/// proper subsets named by their letters.
inline Poset boolean_cube(int k) {
  if (k < 1 || k > 5) throw Error("boolean cube supported for 1..5 generators");
  const int n = 1 << k;
  auto name = [&](int mask) -> std::string {
    if (mask == 0) return "0";
    if (mask == n - 1) return "1";
    std::string s;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) s += static_cast<char>('a' + i);
    return s;
  };
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int m = 0; m < n; ++m) labels.push_back(name(m));
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < k; ++i)
      if (!((m >> i) & 1)) covers.emplace_back(name(m), name(m | (1 << i)));
  return build_poset(std::move(labels), covers);
}

/// The bundled example posets, by name.
inline std::vector<std::pair<std::string, Poset>> bundled() {
  std::vector<std::pair<std::string, Poset>> out;
  out.emplace_back("fig1", fig1());
  out.emplace_back("fig3", fig3());
  out.emplace_back("fig4", fig4());
  out.emplace_back("fig6", fig6());
  out.emplace_back("chain1", chain(1));
  out.emplace_back("chain2", chain(2));
  out.emplace_back("chain3", chain(3));
  out.emplace_back("chain4", chain(4));
  out.emplace_back("antichain2", antichain(2));
  out.emplace_back("antichain3", antichain(3));
  out.emplace_back("bool2", boolean_cube(2));
  out.emplace_back("bool3", boolean_cube(3));
  return out;
}

}  // namespace corpus
}  // namespace poscon
