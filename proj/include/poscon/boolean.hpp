#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poscon/congruence.hpp"
#include "poscon/poset.hpp"

namespace poscon {

inline ElementSet lower_of_upper(const Poset& p, ElementSet s) { return p.lower_cone(p.upper_cone(s)); }
inline ElementSet upper_of_lower(const Poset& p, ElementSet s) { return p.upper_cone(p.lower_cone(s)); }

/// The four cone identities, each equivalent to distributivity.
///   1:  L(U(x,y),z)  = LU(L(x,z), L(y,z))
///   2: UL(U(x,y),z)  =  U(L(x,z), L(y,z))
///   3:  U(L(x,y),z)  = UL(U(x,z), U(y,z))
///   4: LU(L(x,y),z)  =  L(U(x,z), U(y,z))
inline bool distributive_identity(const Poset& p, int which) {
  if (which < 1 || which > 4) throw Error("distributive identity index must be 1..4");
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      for (int z = 0; z < p.size(); ++z) {
        const ElementSet uxy_z = p.upper_cone(ElementSet::of({x, y})) | ElementSet::single(z);
        const ElementSet lxy_z = p.lower_cone(ElementSet::of({x, y})) | ElementSet::single(z);
        const ElementSet lxz = p.lower_cone(ElementSet::of({x, z}));
        const ElementSet lyz = p.lower_cone(ElementSet::of({y, z}));
        const ElementSet uxz = p.upper_cone(ElementSet::of({x, z}));
        const ElementSet uyz = p.upper_cone(ElementSet::of({y, z}));
        bool ok = true;
        switch (which) {
          case 1: ok = p.lower_cone(uxy_z) == lower_of_upper(p, lxz | lyz); break;
          case 2: ok = upper_of_lower(p, uxy_z) == p.upper_cone(lxz | lyz); break;
          case 3: ok = p.upper_cone(lxy_z) == upper_of_lower(p, uxz | uyz); break;
          case 4: ok = lower_of_upper(p, lxy_z) == p.lower_cone(uxz | uyz); break;
          default: break;
        }
        if (!ok) return false;
      }
  return true;
}

inline bool is_distributive(const Poset& p) { return distributive_identity(p, 1); }

/// All complements of x: U(x,y) = {1} and L(x,y) = {0}.
inline ElementSet complements_of(const Poset& p, int x) {
  if (!p.bounded()) throw Error("complements require a bounded poset");
  ElementSet out;
  for (int y = 0; y < p.size(); ++y)
    if ((p.up(x) & p.up(y)) == ElementSet::single(*p.top()) &&
        (p.down(x) & p.down(y)) == ElementSet::single(*p.bottom()))
      out.insert(y);
  return out;
}

struct Complementation {
  std::vector<int> map;  // element -> complement
  int at(int x) const { return map[static_cast<std::size_t>(x)]; }

  OpTable as_op() const {
    return OpTable::unary(static_cast<int>(map.size()),
                          [&](int x) { return ElementSet::single(at(x)); });
  }
};

/// A complementation, when every element has a complement. Picks the
/// lowest-index complement, which is the unique one on distributive
/// posets.
inline std::optional<Complementation> find_complementation(const Poset& p) {
  if (!p.bounded()) throw Error("complementation requires a bounded poset");
  Complementation c;
  c.map.reserve(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    const ElementSet cs = complements_of(p, x);
    if (cs.empty()) return std::nullopt;
    c.map.push_back(cs.first());
  }
  return c;
}

inline bool is_boolean(const Poset& p) {
  return p.bounded() && is_distributive(p) && find_complementation(p).has_value();
}

/// Congruence of (P, <=, ', 0, 1): a congruence also compatible with '.
inline bool is_boolean_congruence(const Poset& p, const Complementation& comp, const Partition& theta) {
  return is_congruence(p, theta) && compatible(theta.to_relation(), comp.as_op());
}

inline std::vector<Partition> enumerate_boolean_congruences(const Poset& p, const Complementation& comp) {
  std::vector<Partition> out;
  const OpTable op = comp.as_op();
  for (Partition& t : enumerate_congruences(p))
    if (compatible(t.to_relation(), op)) out.push_back(std::move(t));
  return out;
}

/// Ternary operator Min U(Max L(x,z), Max L(x,y',z'), Max L(x',y',z)):
/// minimal common upper bounds of the union of the three sets. Satisfies
/// the Pixley-style laws T(x,z,z) = {x}, T(x,y,x) = {x}, T(x,x,z) = {z}.
inline ElementSet pixley_term(const Poset& p, const Complementation& comp, int x, int y, int z) {
  auto max_lower3 = [&](int a, int b, int c) {
    return p.maximal(p.down(a) & p.down(b) & p.down(c));
  };
  const ElementSet support = p.max_lower(x, z) | max_lower3(x, comp.at(y), comp.at(z)) |
                             max_lower3(comp.at(x), comp.at(y), z);
  return p.min_upper(support);
}

struct KernelExclusionReport {
  bool first_applicable = false;   // needs a top element
  std::optional<int> first_witness;
  std::vector<int> first_witnesses;   // every b satisfying the first criterion
  bool second_applicable = false;  // needs a complementation
  std::optional<int> second_witness;
  std::vector<int> second_witnesses;  // every b satisfying the second criterion
  bool excluded() const { return first_witness || second_witness; }
};

/// Criteria certifying that the principal filter [a,1] is not the kernel
/// of any congruence compatible with the structure:
///   first:  some b such that every c in Max L(a,b) has d in U(c)\[a,1]
///           with b v d = 1,
///   second: some b such that every c in Min U(a',b) has d in U(b)\[a,1]
///           with c v d = 1.
inline KernelExclusionReport kernel_exclusion(const Poset& p,
                                              const std::optional<Complementation>& comp, int a) {
  KernelExclusionReport rep;
  if (!p.top()) return rep;
  const int one = *p.top();
  const ElementSet principal = p.up(a);

  rep.first_applicable = true;
  for (int b = 0; b < p.size(); ++b) {
    bool all = true;
    p.max_lower(a, b).for_each([&](int c) {
      if (!all) return;
      bool found = false;
      (p.up(c) - principal).for_each([&](int d) {
        if (!found && p.sup(b, d) == std::optional<int>(one)) found = true;
      });
      if (!found) all = false;
    });
    if (all) {
      rep.first_witnesses.push_back(b);
      if (!rep.first_witness) rep.first_witness = b;
    }
  }

  if (comp) {
    rep.second_applicable = true;
    const int ac = comp->at(a);
    for (int b = 0; b < p.size(); ++b) {
      bool all = true;
      p.min_upper(ac, b).for_each([&](int c) {
        if (!all) return;
        bool found = false;
        (p.up(b) - principal).for_each([&](int d) {
          if (!found && p.sup(c, d) == std::optional<int>(one)) found = true;
        });
        if (!found) all = false;
      });
      if (all) {
        rep.second_witnesses.push_back(b);
        if (!rep.second_witness) rep.second_witness = b;
      }
    }
  }
  return rep;
}

/// Family members whose kernel equals the given filter.
inline std::vector<int> members_with_kernel(const Poset& p, const ConFamily& fam, ElementSet f) {
  if (!is_filter(p, f)) throw Error("kernel candidates must be filters");
  if (!p.top()) throw Error("kernel requires a top element");
  std::vector<int> out;
  for (int i = 0; i < fam.count(); ++i)
    if (fam.members[static_cast<std::size_t>(i)].class_of(*p.top()) == f) out.push_back(i);
  return out;
}

struct KernelCharacterizationReport {
  bool first = true;   // related pairs reach the kernel via Min U(a,b')
  std::optional<std::pair<int, int>> first_witness;
  bool second = true;  // LU(a,b') meeting the kernel forces (a,b), for a <= b
  std::optional<std::pair<int, int>> second_witness;
  bool third = true;   // for a <= b with a v b' defined: (a,b) related iff a v b' in kernel
  std::optional<std::pair<int, int>> third_witness;
};

inline KernelCharacterizationReport kernel_characterization(const Poset& p, const Complementation& comp,
                                                            const Partition& theta) {
  if (!is_boolean_congruence(p, comp, theta))
    throw Error("kernel characterization requires a congruence compatible with complementation");
  KernelCharacterizationReport rep;
  const ElementSet ker = theta.class_of(*p.top());
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      const int bc = comp.at(b);
      if (theta.relates(a, b) && (p.min_upper(a, bc) & ker).empty()) {
        rep.first = false;
        if (!rep.first_witness) rep.first_witness = {a, b};
      }
      if (p.leq(a, b)) {
        const bool lu_meets = !(lower_of_upper(p, ElementSet::of({a, bc})) & ker).empty();
        if (lu_meets && !theta.relates(a, b)) {
          rep.second = false;
          if (!rep.second_witness) rep.second_witness = {a, b};
        }
        if (const auto j = p.sup(a, bc)) {
          if (theta.relates(a, b) != ker.contains(*j)) {
            rep.third = false;
            if (!rep.third_witness) rep.third_witness = {a, b};
          }
        }
      }
    }
  return rep;
}

struct WeakRegularityReport {
  bool assumption_first = true;   // LU(x,y') meets the kernel for all related x <= y
  bool assumption_second = true;
  bool kernels_equal = false;
  bool members_equal = false;
  bool applicable() const { return assumption_first && assumption_second && kernels_equal; }
  bool conclusion_holds() const { return !applicable() || members_equal; }
};

/// Weak regularity: two congruences satisfying the reachability
/// assumption and sharing a kernel must coincide.
inline WeakRegularityReport weak_regularity(const Poset& p, const Complementation& comp,
                                            const Partition& theta, const Partition& phi) {
  auto assumption = [&](const Partition& psi) {
    const ElementSet ker = psi.class_of(*p.top());
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        if (p.leq(x, y) && psi.relates(x, y) &&
            (lower_of_upper(p, ElementSet::of({x, comp.at(y)})) & ker).empty())
          return false;
    return true;
  };
  if (!p.top()) throw Error("weak regularity requires a top element");
  WeakRegularityReport rep;
  rep.assumption_first = assumption(theta);
  rep.assumption_second = assumption(phi);
  rep.kernels_equal = theta.class_of(*p.top()) == phi.class_of(*p.top());
  rep.members_equal = theta == phi;
  return rep;
}

/// Pairs (x,y) with x <= y whose join x v y' does not exist.
inline std::vector<std::pair<int, int>> undefined_join_pairs(const Poset& p, const Complementation& comp) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !p.sup(x, comp.at(y))) out.emplace_back(x, y);
  return out;
}

struct BooleanReflexiveCompatReport {
  bool compatible_max_lower = false;
  bool compatible_min_upper = false;
  bool compatible_complement = false;
  bool symmetric = false;
  bool transitive = false;

  bool premise() const { return compatible_max_lower && compatible_min_upper && compatible_complement; }
  bool congruence() const { return premise() && symmetric && transitive; }
  bool conclusion_holds() const { return !premise() || (symmetric && transitive); }
};

inline BooleanReflexiveCompatReport check_reflexive_compatible(const Poset& p,
                                                               const Complementation& comp,
                                                               const Relation& r) {
  if (!r.is_reflexive()) throw Error("relation must be reflexive");
  BooleanReflexiveCompatReport rep;
  rep.compatible_max_lower = compatible(r, p.max_lower_table());
  rep.compatible_min_upper = compatible(r, p.min_upper_table());
  rep.compatible_complement = compatible(r, comp.as_op());
  rep.symmetric = r.is_symmetric();
  rep.transitive = r.is_transitive();
  return rep;
}

}  // namespace poscon
