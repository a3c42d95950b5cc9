#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "poscon/congruence.hpp"
#include "poscon/corpus.hpp"
#include "poscon/poset.hpp"
#include "poscon/star.hpp"

using namespace poscon;
using testutil::partition_of;
using testutil::set_of;

namespace {

// Frozen table for the six-element benchmark poset, row by row; columns
// follow element order 0, a, b, c, d, 1.
const std::vector<std::vector<std::string>> kStarSix = {
    {"1", "1", "1", "1", "1", "1"}, {"b", "1", "b", "1", "1", "1"},
    {"a", "a", "1", "1", "1", "1"}, {"0", "a", "b", "1", "d", "1"},
    {"0", "a", "b", "c", "1", "1"}, {"0", "a", "b", "c", "d", "1"}};

// Frozen table for the eight-element poset; columns 0, a, b, c, d, e, f, 1.
const std::vector<std::vector<std::string>> kStarEight = {
    {"1", "1", "1", "1", "1", "1", "1", "1"}, {"b", "1", "b", "1", "1", "1", "1", "1"},
    {"a", "a", "1", "1", "1", "1", "1", "1"}, {"0", "a", "b", "1", "d", "1", "1", "1"},
    {"0", "a", "b", "c", "1", "1", "1", "1"}, {"0", "a", "b", "c", "d", "1", "f", "1"},
    {"0", "a", "b", "c", "d", "e", "1", "1"}, {"0", "a", "b", "c", "d", "e", "f", "1"}};

void require_table_matches(const Poset& p, const StarTable& star,
                           const std::vector<std::vector<std::string>>& golden) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      INFO("cell (" << p.label(x) << ", " << p.label(y) << ")");
      REQUIRE(p.label(star.at(x, y)) ==
              golden[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
    }
}

}  // namespace

TEST_CASE("relative pseudocomplement tables match the frozen values cell for cell") {
  const Poset p6 = corpus::fig1();
  const StarSearch s6 = star_table(p6);
  REQUIRE(s6.table.has_value());
  require_table_matches(p6, *s6.table, kStarSix);

  const Poset p8 = corpus::fig3();
  const StarSearch s8 = star_table(p8);
  REQUIRE(s8.table.has_value());
  require_table_matches(p8, *s8.table, kStarEight);

  // Every cell independently satisfies the defining property: z = x*y is
  // the greatest element with L(x,z) inside L(y).
  for (const Poset* pp : {&p6, &p8}) {
    const StarTable st = *star_table(*pp).table;
    for (int x = 0; x < pp->size(); ++x)
      for (int y = 0; y < pp->size(); ++y) {
        const int z = st.at(x, y);
        REQUIRE(pp->lower_cone(ElementSet::of({x, z}))
                    .subset_of(pp->lower_cone(ElementSet::single(y))));
        for (int w = 0; w < pp->size(); ++w)
          if (pp->lower_cone(ElementSet::of({x, w}))
                  .subset_of(pp->lower_cone(ElementSet::single(y))))
            REQUIRE(pp->leq(w, z));
      }
  }
}

TEST_CASE("posets without the star operation report the first failing cell") {
  const Poset anti = corpus::antichain(2);
  const StarSearch s = star_table(anti);
  REQUIRE_FALSE(s.table.has_value());
  REQUIRE(s.failure.has_value());
  // At (a,a) every z qualifies, but the antichain has no greatest element.
  REQUIRE(s.failure->first == 0);
  REQUIRE(s.failure->second == 0);
  REQUIRE_FALSE(is_relatively_pseudocomplemented(anti));
  REQUIRE(is_relatively_pseudocomplemented(corpus::fig1()));
  REQUIRE(is_relatively_pseudocomplemented(corpus::chain(4)));
}

TEST_CASE("exactly the known congruences survive the star compatibility filter") {
  const Poset p = corpus::fig1();
  const StarTable star = *star_table(p).table;

  const std::vector<Partition> sc = enumerate_star_congruences(p, star);
  std::vector<Partition> want = {
      Partition::identity(6),
      partition_of(p, {{"0", "a"}, {"b", "c", "d", "1"}}),
      partition_of(p, {{"0", "b"}, {"a", "c", "d", "1"}}),
      Partition::single_class(6),
  };
  std::sort(want.begin(), want.end());
  REQUIRE(sc == want);
  for (const Partition& t : sc) REQUIRE(is_star_congruence(p, star, t));
  REQUIRE_FALSE(is_star_congruence(p, star, partition_of(p, {{"0", "a"}, {"b", "c"}, {"d", "1"}})));

  const Poset q = corpus::fig3();
  const StarTable qstar = *star_table(q).table;
  const std::vector<Partition> qsc = enumerate_star_congruences(q, qstar);
  std::vector<Partition> qwant = {
      Partition::identity(8),
      partition_of(q, {{"0", "a"}, {"b", "c", "d", "e", "f", "1"}}),
      partition_of(q, {{"0", "b"}, {"a", "c", "d", "e", "f", "1"}}),
      Partition::single_class(8),
  };
  std::sort(qwant.begin(), qwant.end());
  REQUIRE(qsc == qwant);
}

TEST_CASE("the ternary operator behaves like a Malcev operator") {
  for (const Poset& p : {corpus::fig1(), corpus::fig3(), corpus::chain(5)}) {
    const StarTable star = *star_table(p).table;
    for (int a = 0; a < p.size(); ++a)
      for (int c = 0; c < p.size(); ++c) {
        REQUIRE(malcev_term(p, star, a, a, c) == ElementSet::single(c));
        REQUIRE(malcev_term(p, star, a, c, c) == ElementSet::single(a));
      }
  }
}

TEST_CASE("reflexive relations compatible with the three operators are congruences") {
  const Poset p = corpus::fig1();
  const StarTable star = *star_table(p).table;

  // A relation that already is a star congruence satisfies the premise and
  // the conclusion.
  const Partition t5 = partition_of(p, {{"0", "a"}, {"b", "c", "d", "1"}});
  const ReflexiveCompatReport good = check_reflexive_compatible(p, star, t5.to_relation());
  REQUIRE(good.premise());
  REQUIRE(good.symmetric);
  REQUIRE(good.transitive);
  REQUIRE(good.congruence());
  REQUIRE(good.conclusion_holds());

  // A reflexive non-symmetric relation fails the premise, so the
  // implication holds vacuously.
  Relation skew = Relation::identity(p.size());
  skew.add(p.element("c"), p.element("d"));
  const ReflexiveCompatReport vac = check_reflexive_compatible(p, star, skew);
  REQUIRE_FALSE(vac.premise());
  REQUIRE(vac.conclusion_holds());

  REQUIRE_THROWS_AS(check_reflexive_compatible(p, star, Relation(p.size())), Error);
}

TEST_CASE("deductive systems of the benchmark poset are the expected seven") {
  const Poset p = corpus::fig1();
  const StarTable star = *star_table(p).table;

  const std::vector<std::vector<std::string>> deductive = {
      {"1"},      {"c", "1"},           {"d", "1"},      {"c", "d", "1"},
      {"a", "c", "d", "1"}, {"b", "c", "d", "1"}, {"0", "a", "b", "c", "d", "1"}};
  int found = 0;
  for (const ElementSet& f : all_filters(p)) {
    const bool expect = [&] {
      for (const auto& labels : deductive)
        if (set_of(p, labels) == f) return true;
      return false;
    }();
    REQUIRE(is_deductive_system(p, star, f) == expect);
    if (expect) ++found;
  }
  REQUIRE(found == 7);

  // Not up-closed sets are never deductive systems even when they contain 1.
  REQUIRE_FALSE(is_deductive_system(p, star, set_of(p, {"a", "1"})));
  // The up-set generated by a and b is not one: a*0 = b lies inside, 0 does not.
  REQUIRE_FALSE(is_deductive_system(p, star, set_of(p, {"a", "b", "c", "d", "1"})));

  // Deductive systems are exactly the star-closed filters here, and each
  // is closed with respect to both ideal terms.
  for (const ElementSet& f : all_filters(p)) {
    if (!is_deductive_system(p, star, f)) continue;
    REQUIRE(is_star_filter(p, star, f));
    const IdealClosureReport rep = ideal_term_closure(p, star, f);
    REQUIRE(rep.t1_closed);
    REQUIRE(rep.t2_closed);
    REQUIRE(rep.closed());
  }

  // Closure with respect to the ideal terms forces deductivity on any subset.
  for (std::uint64_t mask = 1; mask < (1u << 6); ++mask) {
    ElementSet d;
    for (int x = 0; x < 6; ++x)
      if (mask & (1u << x)) d.insert(x);
    const IdealClosureReport rep = ideal_term_closure(p, star, d);
    if (rep.closed()) REQUIRE(is_deductive_system(p, star, d));
  }
}

TEST_CASE("ideal terms evaluate to the top on top arguments") {
  const Poset p = corpus::fig3();
  const StarTable star = *star_table(p).table;
  const int top = *p.top();
  for (int x = 0; x < p.size(); ++x) REQUIRE(ideal_term_t2(star, x, top, top) == top);
}

TEST_CASE("cone relations of strong star-closed filters") {
  const Poset p = corpus::fig1();
  const StarTable star = *star_table(p).table;

  SECTION("the principal filter over b induces the known congruence") {
    const FilterRelationReport rep = strong_filter_relation(p, star, set_of(p, {"b", "c", "d", "1"}));
    REQUIRE(rep.characterization_holds);
    REQUIRE(rep.equivalence);
    REQUIRE(rep.star_congruence);
    REQUIRE(rep.kernel_matches);
    REQUIRE(*rep.partition == partition_of(p, {{"0", "a"}, {"b", "c", "d", "1"}}));
  }

  SECTION("the top singleton induces the identity") {
    const FilterRelationReport rep = strong_filter_relation(p, star, set_of(p, {"1"}));
    REQUIRE(rep.characterization_holds);
    REQUIRE(rep.partition->is_identity());
    REQUIRE(rep.star_congruence);
    REQUIRE(rep.kernel_matches);
  }

  SECTION("the whole poset induces the full relation") {
    const FilterRelationReport rep = strong_filter_relation(p, star, p.all());
    REQUIRE(rep.partition->is_full());
    REQUIRE(rep.star_congruence);
  }

  SECTION("a strong filter whose relation is not a congruence") {
    // {c,1} is a strong star-closed filter; its cone relation is an
    // equivalence with the right kernel, and the membership rule holds,
    // but the relation is not compatible with Max L.
    const FilterRelationReport rep = strong_filter_relation(p, star, set_of(p, {"c", "1"}));
    REQUIRE(rep.characterization_holds);
    REQUIRE(rep.equivalence);
    REQUIRE(*rep.partition == partition_of(p, {{"0"}, {"a"}, {"b"}, {"c", "1"}, {"d"}}));
    REQUIRE(rep.kernel_matches);
    REQUIRE_FALSE(rep.star_congruence);
    REQUIRE_FALSE(is_congruence(p, *rep.partition));
  }

  SECTION("non-strong or non-closed subsets are rejected") {
    REQUIRE_THROWS_AS(strong_filter_relation(p, star, set_of(p, {"c", "d", "1"})), Error);
    REQUIRE_THROWS_AS(strong_filter_relation(p, star, set_of(p, {"c", "d"})), Error);
  }

  SECTION("the eight-element poset recovers its larger congruence") {
    const Poset q = corpus::fig3();
    const StarTable qstar = *star_table(q).table;
    const FilterRelationReport rep =
        strong_filter_relation(q, qstar, set_of(q, {"a", "c", "d", "e", "f", "1"}));
    REQUIRE(rep.star_congruence);
    REQUIRE(*rep.partition == partition_of(q, {{"0", "b"}, {"a", "c", "d", "e", "f", "1"}}));
    REQUIRE(rep.kernel_matches);
  }
}

TEST_CASE("membership in a star congruence is linked to its kernel") {
  const Poset p = corpus::fig1();
  const StarTable star = *star_table(p).table;
  const Partition t5 = partition_of(p, {{"0", "a"}, {"b", "c", "d", "1"}});

  const KernelLinkReport rep = kernel_link(p, star, t5);
  REQUIRE(rep.forward);
  REQUIRE(rep.backward);

  // Concrete walk-through: (b,c) related, b*c = 1 and c*b = b lie in
  // the kernel, and ((b*c)*c, (c*b)*b) = (c,1) is related.
  const int b = p.element("b"), c = p.element("c"), one = p.element("1");
  const ElementSet ker = kernel(p, t5);
  REQUIRE(t5.relates(b, c));
  REQUIRE(star.at(b, c) == one);
  REQUIRE(ker.contains(star.at(b, c)));
  REQUIRE(ker.contains(star.at(c, b)));
  REQUIRE(star.at(c, b) == b);
  REQUIRE(star.at(star.at(b, c), c) == c);
  REQUIRE(star.at(star.at(c, b), b) == one);
  REQUIRE(t5.relates(c, one));

  // Kernels of star congruences are deductive systems and strong
  // star-closed filters.
  for (const Partition& t : enumerate_star_congruences(p, star)) {
    REQUIRE(is_deductive_system(p, star, kernel(p, t)));
    REQUIRE(is_strong_star_filter(p, star, kernel(p, t)));
    REQUIRE(kernel_link(p, star, t).forward);
    REQUIRE(kernel_link(p, star, t).backward);
  }

  REQUIRE_THROWS_AS(kernel_link(p, star, partition_of(p, {{"0", "a"}, {"b", "c"}, {"d", "1"}})),
                    Error);
}
