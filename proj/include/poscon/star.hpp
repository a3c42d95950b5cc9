#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poscon/congruence.hpp"
#include "poscon/poset.hpp"

namespace poscon {

/// Greatest z with L(x,z) below y, when it exists.
inline std::optional<int> rel_pseudocomplement(const Poset& p, int x, int y) {
  ElementSet candidates;
  for (int z = 0; z < p.size(); ++z)
    if ((p.down(x) & p.down(z)).subset_of(p.down(y))) candidates.insert(z);
  const ElementSet m = p.maximal(candidates);
  if (m.is_singleton()) return m.first();  // unique maximal = greatest, P finite
  return std::nullopt;
}

/// Total table for the binary operation x*y of a relatively
/// pseudocomplemented poset.
struct StarTable {
  int n = 0;
  std::vector<int> cell;  // row-major

  int at(int x, int y) const {
    return cell[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)];
  }

  /// The operation as a set-valued operator (singleton values), for
  /// compatibility tests.
  OpTable as_op() const {
    return OpTable::binary(n, [&](int x, int y) { return ElementSet::single(at(x, y)); });
  }
};

struct StarSearch {
  std::optional<StarTable> table;                 // present iff every x*y exists
  std::optional<std::pair<int, int>> failure;     // first (x,y) without a pseudocomplement
};

/// Try to equip P with relative pseudocomplementation.
inline StarSearch star_table(const Poset& p) {
  StarTable t;
  t.n = p.size();
  t.cell.reserve(static_cast<std::size_t>(p.size()) * static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      const auto z = rel_pseudocomplement(p, x, y);
      if (!z) return {std::nullopt, std::make_pair(x, y)};
      t.cell.push_back(*z);
    }
  return {std::move(t), std::nullopt};
}

inline bool is_relatively_pseudocomplemented(const Poset& p) { return star_table(p).table.has_value(); }

/// Congruence of (P, <=, *): a congruence also compatible with *.
inline bool is_star_congruence(const Poset& p, const StarTable& star, const Partition& theta) {
  return is_congruence(p, theta) && compatible(theta.to_relation(), star.as_op());
}

inline std::vector<Partition> enumerate_star_congruences(const Poset& p, const StarTable& star) {
  std::vector<Partition> out;
  const OpTable op = star.as_op();
  for (Partition& t : enumerate_congruences(p))
    if (compatible(t.to_relation(), op)) out.push_back(std::move(t));
  return out;
}

/// Ternary operator Max L((x*y)*z, (z*y)*x). Satisfies the Malcev-style
/// laws T(x,x,z) = {z} and T(x,z,z) = {x}.
inline ElementSet malcev_term(const Poset& p, const StarTable& star, int x, int y, int z) {
  const int left = star.at(star.at(x, y), z);
  const int right = star.at(star.at(z, y), x);
  return p.max_lower(left, right);
}

struct ReflexiveCompatReport {
  bool compatible_max_lower = false;
  bool compatible_min_upper = false;
  bool compatible_star = false;
  bool symmetric = false;
  bool transitive = false;

  bool premise() const { return compatible_max_lower && compatible_min_upper && compatible_star; }
  bool congruence() const { return premise() && symmetric && transitive; }
  /// A reflexive relation compatible with Max L, Min U and * must be a
  /// congruence; this is what the report certifies per instance.
  bool conclusion_holds() const { return !premise() || (symmetric && transitive); }
};

inline ReflexiveCompatReport check_reflexive_compatible(const Poset& p, const StarTable& star,
                                                        const Relation& r) {
  if (!r.is_reflexive()) throw Error("relation must be reflexive");
  ReflexiveCompatReport rep;
  rep.compatible_max_lower = compatible(r, p.max_lower_table());
  rep.compatible_min_upper = compatible(r, p.min_upper_table());
  rep.compatible_star = compatible(r, star.as_op());
  rep.symmetric = r.is_symmetric();
  rep.transitive = r.is_transitive();
  return rep;
}

/// Deductive system: contains the top and is closed under detachment
/// (x in D and x*y in D imply y in D).
inline bool is_deductive_system(const Poset& p, const StarTable& star, ElementSet d) {
  if (!p.top() || !d.contains(*p.top())) return false;
  bool ok = true;
  d.for_each([&](int x) {
    for (int y = 0; y < p.size() && ok; ++y)
      if (d.contains(star.at(x, y)) && !d.contains(y)) ok = false;
  });
  return ok;
}

/// t2(x, y1, y2) = (y1*(y2*x))*x; an ideal term: t2(x, 1, 1) = 1.
inline int ideal_term_t2(const StarTable& star, int x, int y1, int y2) {
  return star.at(star.at(y1, star.at(y2, x)), x);
}

struct IdealClosureReport {
  bool t1_closed = false;  // D contains the constant term 1
  bool t2_closed = false;  // t2(a, b1, b2) in D for all a in P, b1, b2 in D
  bool closed() const { return t1_closed && t2_closed; }
};

inline IdealClosureReport ideal_term_closure(const Poset& p, const StarTable& star, ElementSet d) {
  IdealClosureReport rep;
  rep.t1_closed = p.top() && d.contains(*p.top());
  rep.t2_closed = true;
  for (int a = 0; a < p.size() && rep.t2_closed; ++a)
    d.for_each([&](int b1) {
      d.for_each([&](int b2) {
        if (rep.t2_closed && !d.contains(ideal_term_t2(star, a, b1, b2))) rep.t2_closed = false;
      });
    });
  return rep;
}

/// (x,y) related iff some a,b in A give L(x,a,b) = L(y,a,b). Not an
/// equivalence in general.
inline Relation theta_from_subset(const Poset& p, ElementSet a_set) {
  if (a_set.empty()) throw Error("subset for the cone relation must be non-empty");
  Relation r(p.size());
  for (int x = 0; x < p.size(); ++x)
    for (int y = x; y < p.size(); ++y) {
      bool related = false;
      a_set.for_each([&](int a) {
        a_set.for_each([&](int b) {
          if (!related && (p.down(x) & p.down(a) & p.down(b)) == (p.down(y) & p.down(a) & p.down(b)))
            related = true;
        });
      });
      if (related) {
        r.add(x, y);
        r.add(y, x);
      }
    }
  return r;
}

/// Filter of (P, <=, *): an order filter closed under *.
inline bool is_star_filter(const Poset& p, const StarTable& star, ElementSet f) {
  if (!is_filter(p, f)) return false;
  bool ok = true;
  f.for_each([&](int x) {
    f.for_each([&](int y) {
      if (ok && !f.contains(star.at(x, y))) ok = false;
    });
  });
  return ok;
}

inline bool is_strong_star_filter(const Poset& p, const StarTable& star, ElementSet f) {
  return is_strong_filter(p, f) && is_star_filter(p, star, f);
}

/// What the cone relation of a strong *-closed filter actually delivers.
/// The membership characterization ((x,y) related iff x*y and y*x lie in
/// F) and kernel recovery hold for every strong filter; compatibility
/// with the poset operators has to be checked per instance and can fail.
struct FilterRelationReport {
  Relation relation;
  std::optional<Partition> partition;  // present iff the relation is an equivalence
  bool characterization_holds = false;
  bool equivalence = false;
  bool star_congruence = false;  // congruence of (P, <=, *)
  bool kernel_matches = false;   // class of 1 equals F
};

inline FilterRelationReport strong_filter_relation(const Poset& p, const StarTable& star, ElementSet f) {
  if (!is_strong_star_filter(p, star, f)) throw Error("subset is not a strong *-closed filter");
  FilterRelationReport rep;
  rep.relation = theta_from_subset(p, f);
  rep.characterization_holds = true;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      const bool by_star = f.contains(star.at(x, y)) && f.contains(star.at(y, x));
      if (rep.relation.has(x, y) != by_star) rep.characterization_holds = false;
    }
  rep.equivalence = rep.relation.is_equivalence();
  if (rep.equivalence) {
    rep.partition = *Partition::from_relation(rep.relation);
    rep.star_congruence = is_star_congruence(p, star, *rep.partition);
    rep.kernel_matches = p.top() && rep.partition->class_of(*p.top()) == f;
  }
  return rep;
}

struct KernelLinkReport {
  bool forward = true;   // related pairs put both quotients a*b, b*a in the kernel
  std::optional<std::pair<int, int>> forward_witness;
  bool backward = true;  // kernel membership of a*b, b*a plus the linked pair forces (a,b)
  std::optional<std::pair<int, int>> backward_witness;
};

/// For an equivalence compatible with *: (i) related pairs have both
/// star quotients in the kernel; (ii) conversely, if a*b and b*a are in
/// the kernel and ((a*b)*b, (b*a)*a) is related, then so is (a,b).
inline KernelLinkReport kernel_link(const Poset& p, const StarTable& star, const Partition& theta) {
  if (!compatible(theta.to_relation(), star.as_op()))
    throw Error("partition is not compatible with *");
  if (!p.top()) throw Error("kernel requires a top element");
  KernelLinkReport rep;
  const ElementSet ker = theta.class_of(*p.top());
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      const int ab = star.at(a, b);
      const int ba = star.at(b, a);
      if (theta.relates(a, b) && !(ker.contains(ab) && ker.contains(ba))) {
        rep.forward = false;
        if (!rep.forward_witness) rep.forward_witness = {a, b};
      }
      if (ker.contains(ab) && ker.contains(ba) && theta.relates(star.at(ab, b), star.at(ba, a)) &&
          !theta.relates(a, b)) {
        rep.backward = false;
        if (!rep.backward_witness) rep.backward_witness = {a, b};
      }
    }
  return rep;
}

}  // namespace poscon
