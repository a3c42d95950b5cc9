#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poscon/boolean.hpp"
#include "poscon/congruence.hpp"
#include "poscon/format.hpp"
#include "poscon/poset.hpp"
#include "poscon/random.hpp"
#include "poscon/star.hpp"

namespace poscon {
namespace checks {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string note;  // witness on failure, or a vacuous/summary remark
};

inline std::string render_check(const CheckResult& r) {
  std::string out = "CHECK " + r.name + (r.pass ? " PASS" : " FAIL");
  if (!r.note.empty()) out += (r.pass ? " [note: " : " [witness: ") + r.note + "]";
  return out;
}

namespace detail {

inline CheckResult ok(const std::string& name) { return {name, true, ""}; }
inline CheckResult vacuous(const std::string& name, const std::string& why) {
  return {name, true, "vacuous: " + why};
}
inline CheckResult failed(const std::string& name, const std::string& witness) {
  return {name, false, witness};
}
inline CheckResult verdict(const std::string& name, bool pass, const std::string& witness) {
  return pass ? ok(name) : failed(name, witness);
}

/// All subsets when feasible, otherwise a seeded sample.
template <class F>
void for_each_subset(const Poset& p, Rng& rng, F&& f) {
  const int n = p.size();
  if (n <= 12) {
    const std::uint64_t lim = ElementSet::universe(n).bits();
    for (std::uint64_t m = 0;; ++m) {
      f(ElementSet{m});
      if (m == lim) break;
    }
  } else {
    std::uniform_int_distribution<std::uint64_t> dist(0, ElementSet::universe(n).bits());
    for (int i = 0; i < 4096; ++i) f(ElementSet{dist(rng)});
  }
}

inline std::string pair_str(const Poset& p, int a, int b) {
  return "(" + p.label(a) + "," + p.label(b) + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Order/congruence checks: meaningful for every finite poset.
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> poset_suite(const Poset& p, std::uint64_t seed) {
  using namespace detail;
  std::vector<CheckResult> out;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);

  {  // closure laws of the cone maps
    CheckResult r = ok("order.cones_galois");
    for_each_subset(p, rng, [&](ElementSet a) {
      if (!r.pass) return;
      const ElementSet l = p.lower_cone(a);
      const ElementSet u = p.upper_cone(a);
      if (p.lower_cone(p.upper_cone(l)) != l || p.upper_cone(p.lower_cone(u)) != u)
        r = failed(r.name, "A=" + format_element_set(p, a));
    });
    out.push_back(r);
  }

  {  // larger sets have smaller cones
    CheckResult r = ok("order.cones_antitone");
    for_each_subset(p, rng, [&](ElementSet a) {
      if (!r.pass) return;
      ElementSet b = a;
      if (a != p.all()) b.insert((p.all() - a).first());
      if (!p.lower_cone(b).subset_of(p.lower_cone(a)) ||
          !p.upper_cone(b).subset_of(p.upper_cone(a)))
        r = failed(r.name, "A=" + format_element_set(p, a) + " B=" + format_element_set(p, b));
    });
    out.push_back(r);
  }

  out.push_back(verdict("order.cone_of_empty",
                        p.lower_cone(ElementSet{}) == p.all() && p.upper_cone(ElementSet{}) == p.all(),
                        "cone of the empty set is not all of P"));

  {  // cover relation regenerates the order
    std::vector<std::pair<std::string, std::string>> cov;
    for (const auto& [i, j] : p.covers()) cov.emplace_back(p.label(i), p.label(j));
    const Poset q = Poset::build(p.labels(), cov, Poset::RelationMode::Covers);
    bool same = true;
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (p.leq(i, j) != q.leq(i, j)) same = false;
    out.push_back(verdict("order.hasse_roundtrip", same, "closure of covers differs from the order"));
  }

  {  // the four distributivity identities agree
    const bool d1 = distributive_identity(p, 1);
    bool agree = true;
    for (int k = 2; k <= 4; ++k)
      if (distributive_identity(p, k) != d1) agree = false;
    out.push_back(verdict("order.distributive_identities_agree", agree,
                          "cone identities disagree about distributivity"));
  }

  const std::vector<Partition> cons = enumerate_congruences(p);

  {  // interval search vs. exhaustive partition scan
    if (p.size() <= 8) {
      const std::vector<Partition> ref = enumerate_congruences_bruteforce(p);
      out.push_back(verdict("congruence.enumeration_bruteforce_agreement", cons == ref,
                            "interval search found " + std::to_string(cons.size()) +
                                ", partition scan found " + std::to_string(ref.size())));
    } else {
      out.push_back(vacuous("congruence.enumeration_bruteforce_agreement",
                            "partition scan guarded to at most 8 elements"));
    }
  }

  {  // identity and full partitions are congruences on bounded posets
    if (p.bounded())
      out.push_back(verdict(
          "congruence.trivial_members",
          is_congruence(p, Partition::identity(p.size())) &&
              is_congruence(p, Partition::single_class(p.size())),
          "identity or full partition is not a congruence despite bounds"));
    else
      out.push_back(vacuous("congruence.trivial_members", "poset is not bounded"));
  }

  {  // classes are closed intervals (and in particular convex)
    CheckResult r = ok("congruence.classes_are_intervals");
    CheckResult rc = ok("congruence.classes_convex");
    for (const Partition& t : cons)
      for (const ElementSet& c : t.classes()) {
        const ElementSet lo = p.minimal(c);
        const ElementSet hi = p.maximal(c);
        if (!(lo.is_singleton() && hi.is_singleton() && p.interval(lo.first(), hi.first()) == c) &&
            r.pass)
          r = failed(r.name, "class " + format_element_set(p, c));
        if (!p.is_convex(c) && rc.pass) rc = failed(rc.name, "class " + format_element_set(p, c));
      }
    out.push_back(r);
    out.push_back(rc);
  }

  {  // related pairs have related operator witnesses inside the class
    CheckResult r = ok("congruence.operator_witnesses");
    for (const Partition& t : cons)
      for (int a = 0; a < p.size() && r.pass; ++a)
        for (int b = 0; b < p.size() && r.pass; ++b) {
          if (!t.relates(a, b)) continue;
          const ElementSet cls = t.class_of(a);
          if ((p.max_lower(a, b) & cls).empty() || (p.min_upper(a, b) & cls).empty())
            r = failed(r.name, class_list_string(p, t) + " pair " + pair_str(p, a, b));
        }
    out.push_back(r);
  }

  {  // membership via enclosing related intervals
    CheckResult r = ok("congruence.interval_pair_membership");
    for (const Partition& t : cons)
      for (int c = 0; c < p.size() && r.pass; ++c)
        for (int d = 0; d < p.size() && r.pass; ++d) {
          bool enclosed = false;
          for (int e = 0; e < p.size() && !enclosed; ++e)
            for (int f = 0; f < p.size() && !enclosed; ++f)
              if (t.relates(e, f) && p.leq(e, f) && p.interval(e, f).contains(c) &&
                  p.interval(e, f).contains(d))
                enclosed = true;
          if (t.relates(c, d) != enclosed)
            r = failed(r.name, class_list_string(p, t) + " pair " + pair_str(p, c, d));
        }
    out.push_back(r);
  }

  {  // congruences are determined by their comparable pairs
    CheckResult r = ok("congruence.determined_by_comparable_pairs");
    for (std::size_t i = 0; i < cons.size() && r.pass; ++i)
      for (std::size_t j = 0; j < cons.size() && r.pass; ++j)
        if (agree_on_comparable_pairs(p, cons[i], cons[j]) != (cons[i] == cons[j]))
          r = failed(r.name, class_list_string(p, cons[i]) + " vs " + class_list_string(p, cons[j]));
    out.push_back(r);
  }

  {  // least elements of classes are ordered like greatest elements
    CheckResult r = ok("congruence.class_bounds_aligned");
    for (const Partition& t : cons)
      for (const ElementSet& c1 : t.classes())
        for (const ElementSet& c2 : t.classes()) {
          if (!r.pass) break;
          const auto [a, b] = class_interval_bounds(p, t, c1.first());
          const auto [c, d] = class_interval_bounds(p, t, c2.first());
          if (p.leq(a, c) != p.leq(b, d))
            r = failed(r.name, class_list_string(p, t) + " classes " +
                                   format_element_set(p, c1) + " " + format_element_set(p, c2));
        }
    out.push_back(r);
  }

  {  // quotient by least class elements embeds back into P
    CheckResult r = ok("congruence.quotient_embeds");
    for (const Partition& t : cons) {
      if (!r.pass) break;
      const Quotient q = quotient_poset(p, t);
      for (int i = 0; i < q.poset.size() && r.pass; ++i)
        for (int j = 0; j < q.poset.size() && r.pass; ++j)
          if (q.poset.leq(i, j) !=
              p.leq(q.least[static_cast<std::size_t>(i)], q.least[static_cast<std::size_t>(j)]))
            r = failed(r.name, class_list_string(p, t));
    }
    out.push_back(r);
  }

  {  // transfer of operator witnesses between classes
    CheckResult r = ok("congruence.class_links");
    for (const Partition& t : cons)
      for (int a = 0; a < p.size() && r.pass; ++a)
        for (int c = 0; c < p.size() && r.pass; ++c) {
          if (!t.relates(a, c)) continue;
          for (int b = 0; b < p.size() && r.pass; ++b) {
            const ElementSet bc = t.class_of(b);
            const ElementSet cc = t.class_of(c);
            if (!(bc & p.up(c)).empty() && (p.max_lower(a, b) & cc).empty())
              r = failed(r.name, "down-witness " + pair_str(p, a, c) + " b=" + p.label(b));
            if (!(bc & p.down(c)).empty() && (p.min_upper(a, b) & cc).empty())
              r = failed(r.name, "up-witness " + pair_str(p, a, c) + " b=" + p.label(b));
          }
        }
    out.push_back(r);
  }

  {  // kernels are strong filters and absorb operator witnesses
    if (p.top()) {
      CheckResult r = ok("congruence.kernel_strong_filter");
      for (const Partition& t : cons) {
        if (!r.pass) break;
        const ElementSet f = kernel(p, t);
        if (!is_strong_filter(p, f)) {
          r = failed(r.name, "kernel " + format_element_set(p, f));
          break;
        }
        for (int a = 0; a < p.size() && r.pass; ++a)
          for (int b = 0; b < p.size() && r.pass; ++b) {
            if (f.contains(b) && (p.max_lower(a, b) & t.class_of(a)).empty())
              r = failed(r.name, "no lower witness for a=" + p.label(a) + ", b=" + p.label(b));
            if (f.contains(a) && (p.min_upper(a, b) & f).empty())
              r = failed(r.name, "no upper witness for a=" + p.label(a) + ", b=" + p.label(b));
          }
      }
      out.push_back(r);
    } else {
      out.push_back(vacuous("congruence.kernel_strong_filter", "poset has no top element"));
    }
  }

  {  // family order sanity: lattice meets refine intersections
    const ConFamily fam = con_poset(p, cons);
    CheckResult r = ok("family.meet_within_intersection");
    for (int i = 0; i < fam.count() && r.pass; ++i)
      for (int j = 0; j < fam.count() && r.pass; ++j) {
        const auto m = fam.meet(i, j);
        if (!m) continue;
        const Relation meet_rel = fam.members[static_cast<std::size_t>(*m)].to_relation();
        const Relation inter = fam.members[static_cast<std::size_t>(i)].to_relation() &
                               fam.members[static_cast<std::size_t>(j)].to_relation();
        if (!meet_rel.subset_of(inter))
          r = failed(r.name, fam.names[static_cast<std::size_t>(i)] + " ^ " +
                                 fam.names[static_cast<std::size_t>(j)]);
        // when the intersection itself is a congruence, it is the meet
        if (auto ip = Partition::from_relation(inter)) {
          if (is_congruence(p, *ip) && !(*ip == fam.members[static_cast<std::size_t>(*m)]))
            r = failed(r.name, "intersection congruence is not the meet of " +
                                   fam.names[static_cast<std::size_t>(i)] + ", " +
                                   fam.names[static_cast<std::size_t>(j)]);
        }
      }
    out.push_back(r);
  }

  return out;
}

// ---------------------------------------------------------------------------
// Relative pseudocomplementation checks. Vacuous when * does not exist.
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> star_suite(const Poset& p, std::uint64_t seed) {
  using namespace detail;
  std::vector<CheckResult> out;
  Rng rng(seed ^ 0xc2b2ae3d27d4eb4full);

  static const char* const names[] = {
      "star.defining_property",  "star.residuation",        "star.top_laws",
      "star.order_characterization", "star.right_absorption", "star.double_star_raise",
      "star.monotone",           "star.triple_collapse",    "star.exchange",
      "star.cone_absorption",    "malcev.identities",       "malcev.compatibility",
      "star.congruence_filter",  "theorem.reflexive_compatible_star",
      "kernel.deductive_system", "ideal.term_laws",         "ideal.closure_implies_deductive",
      "ideal.kernel_closed",     "kernel.link",             "filter.deductive_is_star_filter",
      "filter.cone_relation_characterization"};

  const StarSearch search = star_table(p);
  if (!search.table) {
    for (const char* n : names)
      out.push_back(vacuous(n, "not relatively pseudocomplemented (no " +
                                   pair_str(p, search.failure->first, search.failure->second) +
                                   " value)"));
    return out;
  }
  const StarTable& star = *search.table;
  const int n = p.size();
  const int one = *p.top();  // a*a is a greatest element, so top exists

  {  // z = x*y is the greatest z with L(x,z) below y
    CheckResult r = ok(names[0]);
    for (int x = 0; x < n && r.pass; ++x)
      for (int y = 0; y < n && r.pass; ++y) {
        const int z = star.at(x, y);
        if (!(p.down(x) & p.down(z)).subset_of(p.down(y))) r = failed(r.name, pair_str(p, x, y));
        for (int w = 0; w < n && r.pass; ++w)
          if ((p.down(x) & p.down(w)).subset_of(p.down(y)) && !p.leq(w, z))
            r = failed(r.name, pair_str(p, x, y) + " w=" + p.label(w));
      }
    out.push_back(r);
  }

  {  // a <= b*c iff L(a,b) below c iff b <= a*c
    CheckResult r = ok(names[1]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b)
        for (int c = 0; c < n && r.pass; ++c) {
          const bool lhs = p.leq(a, star.at(b, c));
          if (lhs != (p.down(a) & p.down(b)).subset_of(p.down(c)) || lhs != p.leq(b, star.at(a, c)))
            r = failed(r.name, "(a,b,c)=(" + p.label(a) + "," + p.label(b) + "," + p.label(c) + ")");
        }
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[2]);
    for (int a = 0; a < n && r.pass; ++a)
      if (star.at(a, a) != one || star.at(one, a) != a) r = failed(r.name, "a=" + p.label(a));
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[3]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b)
        if ((star.at(a, b) == one) != p.leq(a, b)) r = failed(r.name, pair_str(p, a, b));
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[4]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b)
        if (!p.leq(b, star.at(a, b))) r = failed(r.name, pair_str(p, a, b));
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[5]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b)
        if (!p.leq(a, star.at(star.at(a, b), b))) r = failed(r.name, pair_str(p, a, b));
    out.push_back(r);
  }

  {  // a <= b implies c*a <= c*b and b*c <= a*c
    CheckResult r = ok(names[6]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b) {
        if (!p.leq(a, b)) continue;
        for (int c = 0; c < n && r.pass; ++c)
          if (!p.leq(star.at(c, a), star.at(c, b)) || !p.leq(star.at(b, c), star.at(a, c)))
            r = failed(r.name, pair_str(p, a, b) + " c=" + p.label(c));
      }
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[7]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b)
        if (star.at(star.at(star.at(a, b), b), b) != star.at(a, b))
          r = failed(r.name, pair_str(p, a, b));
    out.push_back(r);
  }

  {  // the two exchange equivalences
    CheckResult r = ok(names[8]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b) {
        const int ab = star.at(a, b);
        if ((p.leq(ab, star.at(star.at(ab, a), b)) != p.leq(star.at(ab, a), star.at(ab, b))) ||
            (p.leq(ab, star.at(star.at(ab, b), a)) != p.leq(star.at(ab, b), star.at(ab, a))))
          r = failed(r.name, pair_str(p, a, b));
      }
    out.push_back(r);
  }

  {  // L(a, a*b) = L(a, b)
    CheckResult r = ok(names[9]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b)
        if ((p.down(a) & p.down(star.at(a, b))) != (p.down(a) & p.down(b)))
          r = failed(r.name, pair_str(p, a, b));
    out.push_back(r);
  }

  {  // T(a,a,c) = {c} and T(a,c,c) = {a}
    CheckResult r = ok(names[10]);
    for (int a = 0; a < n && r.pass; ++a)
      for (int c = 0; c < n && r.pass; ++c)
        if (malcev_term(p, star, a, a, c) != ElementSet::single(c) ||
            malcev_term(p, star, a, c, c) != ElementSet::single(a))
          r = failed(r.name, pair_str(p, a, c));
    out.push_back(r);
  }

  const std::vector<Partition> cons = enumerate_congruences(p);
  std::vector<Partition> star_cons;
  for (const Partition& t : cons)
    if (compatible(t.to_relation(), star.as_op())) star_cons.push_back(t);

  {  // congruences compatible with * are compatible with the ternary term
    CheckResult r = ok(names[11]);
    const OpTable t3 =
        OpTable::ternary(n, [&](int x, int y, int z) { return malcev_term(p, star, x, y, z); });
    for (const Partition& t : star_cons)
      if (r.pass && !compatible(t.to_relation(), t3)) r = failed(r.name, class_list_string(p, t));
    out.push_back(r);
  }

  out.push_back(verdict(names[12],
                        star_cons.size() == enumerate_star_congruences(p, star).size(),
                        "filtered enumeration mismatch"));

  {  // reflexive + compatible forces an equivalence
    CheckResult r = ok(names[13]);
    for (int i = 0; i < 120 && r.pass; ++i) {
      const double density = i % 3 == 0 ? 0.08 : (i % 3 == 1 ? 0.2 : 0.45);
      const Relation rel = random_reflexive_relation(rng, n, density);
      const auto rep = check_reflexive_compatible(p, star, rel);
      if (!rep.conclusion_holds()) r = failed(r.name, "seeded relation #" + std::to_string(i));
    }
    for (const Partition& t : star_cons) {  // premise-positive instances
      if (!r.pass) break;
      const auto rep = check_reflexive_compatible(p, star, t.to_relation());
      if (!rep.premise() || !rep.congruence()) r = failed(r.name, class_list_string(p, t));
    }
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[14]);
    for (const Partition& t : star_cons)
      if (r.pass && !is_deductive_system(p, star, t.class_of(one)))
        r = failed(r.name, "kernel " + format_element_set(p, t.class_of(one)));
    out.push_back(r);
  }

  {  // t2(a, 1, 1) = 1
    CheckResult r = ok(names[15]);
    for (int a = 0; a < n && r.pass; ++a)
      if (ideal_term_t2(star, a, one, one) != one) r = failed(r.name, "a=" + p.label(a));
    out.push_back(r);
  }

  {  // closure under the ideal terms forces a deductive system
    CheckResult r = ok(names[16]);
    for_each_subset(p, rng, [&](ElementSet d) {
      if (!r.pass) return;
      if (ideal_term_closure(p, star, d).closed() && !is_deductive_system(p, star, d))
        r = failed(r.name, "D=" + format_element_set(p, d));
    });
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[17]);
    for (const Partition& t : star_cons)
      if (r.pass && !ideal_term_closure(p, star, t.class_of(one)).closed())
        r = failed(r.name, "kernel " + format_element_set(p, t.class_of(one)));
    out.push_back(r);
  }

  {  // kernel membership of both star quotients almost recovers the pair
    CheckResult r = ok(names[18]);
    for (const Partition& t : star_cons) {
      if (!r.pass) break;
      const KernelLinkReport rep = kernel_link(p, star, t);
      if (!rep.forward)
        r = failed(r.name, "forward " + pair_str(p, rep.forward_witness->first,
                                                 rep.forward_witness->second));
      else if (!rep.backward)
        r = failed(r.name, "backward " + pair_str(p, rep.backward_witness->first,
                                                  rep.backward_witness->second));
    }
    out.push_back(r);
  }

  {  // deductive systems are *-closed filters; kernels are strong ones
    CheckResult r = ok(names[19]);
    for_each_subset(p, rng, [&](ElementSet d) {
      if (!r.pass) return;
      if (is_deductive_system(p, star, d) && !is_star_filter(p, star, d))
        r = failed(r.name, "D=" + format_element_set(p, d));
    });
    for (const Partition& t : star_cons)
      if (r.pass && !is_strong_star_filter(p, star, t.class_of(one)))
        r = failed(r.name, "kernel " + format_element_set(p, t.class_of(one)));
    out.push_back(r);
  }

  {  // cone relation of a strong *-closed filter: membership and kernel
    CheckResult r = ok(names[20]);
    if (n <= 18) {
      for (ElementSet f : all_filters(p)) {
        if (!r.pass) break;
        if (!is_strong_star_filter(p, star, f)) continue;
        const FilterRelationReport rep = strong_filter_relation(p, star, f);
        if (!rep.characterization_holds || !rep.equivalence || !rep.kernel_matches)
          r = failed(r.name, "F=" + format_element_set(p, f));
      }
    } else {
      r = vacuous(r.name, "filter enumeration guarded to at most 18 elements");
    }
    out.push_back(r);
  }

  return out;
}

// ---------------------------------------------------------------------------
// Boolean checks. Vacuous when P is not a Boolean poset.
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> boolean_suite(const Poset& p, std::uint64_t seed) {
  using namespace detail;
  std::vector<CheckResult> out;
  Rng rng(seed ^ 0x5851f42d4c957f2dull);

  static const char* const names[] = {
      "complement.defining_identities", "complement.involution", "complement.unique",
      "pixley.identities",              "pixley.compatibility",
      "theorem.reflexive_compatible_complement",
      "kernel.reachability",            "kernel.exclusion_consistency",
      "regularity.weak",                "boolean.congruence_filter"};

  std::optional<Complementation> comp;
  std::string why;
  if (!p.bounded())
    why = "poset is not bounded";
  else if (!is_distributive(p))
    why = "poset is not distributive";
  else if (!(comp = find_complementation(p)))
    why = "some element has no complement";
  if (!comp) {
    for (const char* nm : names) out.push_back(vacuous(nm, why));
    return out;
  }

  const int n = p.size();
  const int one = *p.top();
  const int zero = *p.bottom();

  {
    CheckResult r = ok(names[0]);
    for (int x = 0; x < n && r.pass; ++x)
      if ((p.up(x) & p.up(comp->at(x))) != ElementSet::single(one) ||
          (p.down(x) & p.down(comp->at(x))) != ElementSet::single(zero))
        r = failed(r.name, "x=" + p.label(x));
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[1]);
    for (int x = 0; x < n && r.pass; ++x)
      if (comp->at(comp->at(x)) != x) r = failed(r.name, "x=" + p.label(x));
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[2]);
    for (int x = 0; x < n && r.pass; ++x)
      if (!complements_of(p, x).is_singleton())
        r = failed(r.name, "x=" + p.label(x) + " complements " +
                               format_element_set(p, complements_of(p, x)));
    out.push_back(r);
  }

  {  // T(x,z,z)={x}, T(x,y,x)={x}, T(x,x,z)={z}
    CheckResult r = ok(names[3]);
    for (int x = 0; x < n && r.pass; ++x)
      for (int y = 0; y < n && r.pass; ++y) {
        if (pixley_term(p, *comp, x, y, y) != ElementSet::single(x) ||
            pixley_term(p, *comp, x, y, x) != ElementSet::single(x) ||
            pixley_term(p, *comp, x, x, y) != ElementSet::single(y))
          r = failed(r.name, pair_str(p, x, y));
      }
    out.push_back(r);
  }

  const std::vector<Partition> cons = enumerate_congruences(p);
  std::vector<Partition> bool_cons;
  for (const Partition& t : cons)
    if (compatible(t.to_relation(), comp->as_op())) bool_cons.push_back(t);

  {
    CheckResult r = ok(names[4]);
    const OpTable t3 =
        OpTable::ternary(n, [&](int x, int y, int z) { return pixley_term(p, *comp, x, y, z); });
    for (const Partition& t : bool_cons)
      if (r.pass && !compatible(t.to_relation(), t3)) r = failed(r.name, class_list_string(p, t));
    out.push_back(r);
  }

  {
    CheckResult r = ok(names[5]);
    for (int i = 0; i < 120 && r.pass; ++i) {
      const double density = i % 3 == 0 ? 0.08 : (i % 3 == 1 ? 0.2 : 0.45);
      const Relation rel = random_reflexive_relation(rng, n, density);
      const auto rep = check_reflexive_compatible(p, *comp, rel);
      if (!rep.conclusion_holds()) r = failed(r.name, "seeded relation #" + std::to_string(i));
    }
    for (const Partition& t : bool_cons) {
      if (!r.pass) break;
      const auto rep = check_reflexive_compatible(p, *comp, t.to_relation());
      if (!rep.premise() || !rep.congruence()) r = failed(r.name, class_list_string(p, t));
    }
    out.push_back(r);
  }

  {  // kernels describe congruences along comparable pairs
    CheckResult r = ok(names[6]);
    for (const Partition& t : bool_cons) {
      if (!r.pass) break;
      const KernelCharacterizationReport rep = kernel_characterization(p, *comp, t);
      if (!rep.first || !rep.second || !rep.third) r = failed(r.name, class_list_string(p, t));
    }
    out.push_back(r);
  }

  {  // exclusion criteria never fire for realized kernels
    CheckResult r = ok(names[7]);
    const ConFamily fam = con_poset(p, bool_cons);
    for (int a = 0; a < n && r.pass; ++a) {
      if (!kernel_exclusion(p, comp, a).excluded()) continue;
      if (!members_with_kernel(p, fam, p.up(a)).empty())
        r = failed(r.name, "[" + p.label(a) + ",1] excluded yet realized");
    }
    out.push_back(r);
  }

  {  // equal kernels force equal congruences under the reachability assumption
    CheckResult r = ok(names[8]);
    for (const Partition& t : bool_cons)
      for (const Partition& u : bool_cons) {
        if (!r.pass) break;
        if (!weak_regularity(p, *comp, t, u).conclusion_holds())
          r = failed(r.name, class_list_string(p, t) + " vs " + class_list_string(p, u));
      }
    out.push_back(r);
  }

  out.push_back(verdict(names[9],
                        bool_cons.size() == enumerate_boolean_congruences(p, *comp).size(),
                        "filtered enumeration mismatch"));

  return out;
}

inline std::vector<CheckResult> all_suites(const Poset& p, std::uint64_t seed) {
  std::vector<CheckResult> out = poset_suite(p, seed);
  for (CheckResult& r : star_suite(p, seed)) out.push_back(std::move(r));
  for (CheckResult& r : boolean_suite(p, seed)) out.push_back(std::move(r));
  return out;
}

}  // namespace checks
}  // namespace poscon
