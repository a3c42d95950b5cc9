#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poscon/poset.hpp"

namespace poscon {

/// Equivalence relation in canonical form: classes are sorted by their
/// least element index, and class_of maps each element to its class.
class Partition {
 public:
  Partition() = default;

  static Partition identity(int n) {
    std::vector<ElementSet> cs;
    cs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cs.push_back(ElementSet::single(i));
    return from_classes(n, std::move(cs));
  }

  static Partition single_class(int n) { return from_classes(n, {ElementSet::universe(n)}); }

  static Partition from_classes(int n, std::vector<ElementSet> classes) {
    ElementSet seen;
    for (ElementSet c : classes) {
      if (c.empty()) throw Error("empty block in partition");
      if (!(c & seen).empty()) throw Error("overlapping blocks in partition");
      seen = seen | c;
    }
    if (seen != ElementSet::universe(n)) throw Error("partition does not cover all elements");
    std::sort(classes.begin(), classes.end(),
              [](ElementSet a, ElementSet b) { return a.first() < b.first(); });
    Partition p;
    p.n_ = n;
    p.classes_ = std::move(classes);
    p.class_of_.assign(static_cast<std::size_t>(n), -1);
    for (int ci = 0; ci < static_cast<int>(p.classes_.size()); ++ci)
      p.classes_[static_cast<std::size_t>(ci)].for_each(
          [&](int x) { p.class_of_[static_cast<std::size_t>(x)] = ci; });
    return p;
  }

  static std::optional<Partition> from_relation(const Relation& r) {
    if (!r.is_equivalence()) return std::nullopt;
    std::vector<ElementSet> cs;
    ElementSet seen;
    for (int i = 0; i < r.size(); ++i)
      if (!seen.contains(i)) {
        cs.push_back(r.row(i));
        seen = seen | r.row(i);
      }
    return from_classes(r.size(), std::move(cs));
  }

  int size() const { return n_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<ElementSet>& classes() const { return classes_; }
  int class_index(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  ElementSet class_of(int x) const { return classes_[static_cast<std::size_t>(class_index(x))]; }
  bool relates(int x, int y) const { return class_index(x) == class_index(y); }

  bool is_identity() const { return class_count() == n_; }
  bool is_full() const { return class_count() == 1; }

  Relation to_relation() const {
    Relation r(n_);
    for (ElementSet c : classes_)
      c.for_each([&](int x) { c.for_each([&](int y) { r.add(x, y); }); });
    return r;
  }

  /// Refinement order: every class here is contained in a class of `o`.
  bool refines(const Partition& o) const {
    for (ElementSet c : classes_)
      if (!c.subset_of(o.class_of(c.first()))) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.classes_ == b.classes_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.classes_ < b.classes_; }

 private:
  int n_ = 0;
  std::vector<ElementSet> classes_;
  std::vector<int> class_of_;
};

/// A congruence is an equivalence compatible with both Max L and Min U.
inline bool is_congruence(const Poset& p, const Partition& theta) {
  const Relation r = theta.to_relation();
  return compatible(r, p.max_lower_table()) && compatible(r, p.min_upper_table());
}

namespace detail {

/// Enumerate every partition of P into closed intervals. Any congruence
/// has interval classes, so searching interval partitions and filtering
/// is exhaustive. The recursion always extends from the lowest-index
/// minimal unassigned element, which makes each partition appear once.
template <class F>
void for_each_interval_partition(const Poset& p, F&& emit) {
  const int n = p.size();
  std::vector<ElementSet> acc;
  auto rec = [&](auto&& self, ElementSet unassigned) -> void {
    if (unassigned.empty()) {
      emit(acc);
      return;
    }
    int x = -1;
    unassigned.for_each([&](int i) {
      if (x < 0 && (p.down(i) & unassigned) == ElementSet::single(i)) x = i;
    });
    p.up(x).for_each([&](int c) {
      const ElementSet cls = p.interval(x, c);
      if (!cls.subset_of(unassigned)) return;
      acc.push_back(cls);
      self(self, unassigned - cls);
      acc.pop_back();
    });
  };
  rec(rec, ElementSet::universe(n));
}

/// Enumerate all set partitions of {0..n-1} via restricted growth strings.
template <class F>
void for_each_set_partition(int n, F&& emit) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> maxv(static_cast<std::size_t>(n), 0);  // maxv[i] = max(rgs[0..i-1])
  for (;;) {
    int blocks = 0;
    for (int i = 0; i < n; ++i) blocks = std::max(blocks, rgs[static_cast<std::size_t>(i)] + 1);
    std::vector<ElementSet> cs(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i) cs[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].insert(i);
    emit(cs);
    int i = n - 1;
    while (i > 0 && rgs[static_cast<std::size_t>(i)] == maxv[static_cast<std::size_t>(i)] + 1)
      --i;
    if (i == 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      maxv[static_cast<std::size_t>(j)] =
          std::max(maxv[static_cast<std::size_t>(j - 1)], rgs[static_cast<std::size_t>(j - 1)]);
      rgs[static_cast<std::size_t>(j)] = 0;
    }
  }
}

}  // namespace detail

/// All congruences of P, via the interval-partition search.
inline std::vector<Partition> enumerate_congruences(const Poset& p) {
  std::vector<Partition> out;
  const OpTable maxl = p.max_lower_table();
  const OpTable minu = p.min_upper_table();
  detail::for_each_interval_partition(p, [&](const std::vector<ElementSet>& cs) {
    Partition theta = Partition::from_classes(p.size(), cs);
    const Relation r = theta.to_relation();
    if (compatible(r, maxl) && compatible(r, minu)) out.push_back(std::move(theta));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Reference enumeration over every set partition. Exponential (Bell
/// numbers); guarded so it is only run on deliberately small posets.
inline std::vector<Partition> enumerate_congruences_bruteforce(const Poset& p, int max_elements = 10) {
  if (p.size() > max_elements)
    throw Error("poset too large for brute-force congruence enumeration");
  std::vector<Partition> out;
  const OpTable maxl = p.max_lower_table();
  const OpTable minu = p.min_upper_table();
  detail::for_each_set_partition(p.size(), [&](const std::vector<ElementSet>& cs) {
    Partition theta = Partition::from_classes(p.size(), cs);
    const Relation r = theta.to_relation();
    if (compatible(r, maxl) && compatible(r, minu)) out.push_back(std::move(theta));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Least and greatest element of the class of `a`. Congruence classes are
/// closed intervals; a class without a least or greatest element means the
/// partition was not a congruence in the first place.
inline std::pair<int, int> class_interval_bounds(const Poset& p, const Partition& theta, int a) {
  const ElementSet c = theta.class_of(a);
  const ElementSet lo = p.minimal(c);
  const ElementSet hi = p.maximal(c);
  if (!lo.is_singleton() || !hi.is_singleton() || p.interval(lo.first(), hi.first()) != c)
    throw Error("class of '" + p.label(a) + "' is not a closed interval; not a congruence class");
  return {lo.first(), hi.first()};
}

/// Kernel of a congruence: the class of the top element.
inline ElementSet kernel(const Poset& p, const Partition& theta) {
  if (!p.top()) throw Error("kernel requires a top element");
  return theta.class_of(*p.top());
}

struct Quotient {
  Poset poset;                 // labels are "[least,greatest]" per class
  std::vector<int> least;      // class index -> least element of the class in P
  std::vector<int> greatest;   // class index -> greatest element of the class in P
};

/// Quotient poset P/Theta, ordered by least class elements. For a
/// congruence this agrees with ordering by greatest class elements, and
/// the least elements embed the quotient back into P; both are checked.
inline Quotient quotient_poset(const Poset& p, const Partition& theta) {
  if (!is_congruence(p, theta)) throw Error("quotient requires a congruence");
  const int k = theta.class_count();
  std::vector<int> least, greatest;
  least.reserve(static_cast<std::size_t>(k));
  greatest.reserve(static_cast<std::size_t>(k));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    const auto [lo, hi] = class_interval_bounds(p, theta, theta.classes()[static_cast<std::size_t>(c)].first());
    least.push_back(lo);
    greatest.push_back(hi);
    labels.push_back("[" + p.label(lo) + "," + p.label(hi) + "]");
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const bool by_least = p.leq(least[static_cast<std::size_t>(a)], least[static_cast<std::size_t>(b)]);
      const bool by_greatest =
          p.leq(greatest[static_cast<std::size_t>(a)], greatest[static_cast<std::size_t>(b)]);
      if (by_least != by_greatest)
        throw Error("quotient order by least and greatest class elements disagree");
      if (by_least) rel.emplace_back(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
    }
  return Quotient{Poset::build(std::move(labels), rel, Poset::RelationMode::FullOrder),
                  std::move(least), std::move(greatest)};
}

/// A family of congruences ordered by inclusion, with canonical names:
/// "delta" and "nabla" for the trivial members, "theta1".."thetaK" for the
/// rest in their canonical (class-list) order. The inclusion matrix is
/// generic so families larger than the element cap are fine.
struct ConFamily {
  std::vector<Partition> members;            // sorted canonically
  std::vector<std::string> names;            // parallel to members
  std::vector<std::vector<bool>> inclusion;  // inclusion[i][j] = members[i] <= members[j]

  int count() const { return static_cast<int>(members.size()); }

  std::optional<int> index_of(const Partition& t) const {
    for (int i = 0; i < count(); ++i)
      if (members[static_cast<std::size_t>(i)] == t) return i;
    return std::nullopt;
  }

  std::optional<int> index_of_name(std::string_view name) const {
    for (int i = 0; i < count(); ++i)
      if (names[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
  }

  bool leq(int i, int j) const { return inclusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  /// Greatest member below both, if unique.
  std::optional<int> meet(int i, int j) const {
    std::vector<int> below;
    for (int k = 0; k < count(); ++k)
      if (leq(k, i) && leq(k, j)) below.push_back(k);
    for (int k : below) {
      bool greatest = true;
      for (int other : below)
        if (!leq(other, k)) greatest = false;
      if (greatest) return k;
    }
    return std::nullopt;
  }

  std::optional<int> join(int i, int j) const {
    std::vector<int> above;
    for (int k = 0; k < count(); ++k)
      if (leq(i, k) && leq(j, k)) above.push_back(k);
    for (int k : above) {
      bool least = true;
      for (int other : above)
        if (!leq(k, other)) least = false;
      if (least) return k;
    }
    return std::nullopt;
  }

  bool is_lattice() const {
    for (int i = 0; i < count(); ++i)
      for (int j = i + 1; j < count(); ++j)
        if (!meet(i, j) || !join(i, j)) return false;
    return true;
  }

  /// Cover pairs of the inclusion order (for drawing).
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < count(); ++i)
      for (int j = 0; j < count(); ++j) {
        if (i == j || !leq(i, j)) continue;
        bool direct = true;
        for (int k = 0; k < count() && direct; ++k)
          if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
        if (direct) out.emplace_back(i, j);
      }
    return out;
  }

  /// The inclusion order as a Poset (element labels are member names).
  /// Only available for families that fit the element cap.
  Poset order_poset() const {
    if (count() > Poset::kMaxElements) throw Error("congruence family too large to realize as a poset");
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < count(); ++i)
      for (int j = 0; j < count(); ++j)
        if (leq(i, j)) rel.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
    return Poset::build(names, rel, Poset::RelationMode::FullOrder);
  }
};

inline ConFamily con_poset(const Poset& p, std::vector<Partition> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ConFamily fam;
  fam.members = std::move(members);
  const int m = fam.count();
  fam.names.resize(static_cast<std::size_t>(m));
  int next = 1;
  for (int i = 0; i < m; ++i) {
    const Partition& t = fam.members[static_cast<std::size_t>(i)];
    if (t.is_identity())
      fam.names[static_cast<std::size_t>(i)] = "delta";
    else if (t.is_full() && p.size() > 1)
      fam.names[static_cast<std::size_t>(i)] = "nabla";
    else
      fam.names[static_cast<std::size_t>(i)] = "theta" + std::to_string(next++);
  }
  fam.inclusion.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      fam.inclusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          fam.members[static_cast<std::size_t>(i)].refines(fam.members[static_cast<std::size_t>(j)]);
  return fam;
}

/// Congruences are determined by their comparable pairs: restricting two
/// congruences to pairs (x,y) with x <= y loses nothing.
inline bool agree_on_comparable_pairs(const Poset& p, const Partition& a, const Partition& b) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && a.relates(x, y) != b.relates(x, y)) return false;
  return true;
}

/// Upward-closed nonempty subset.
inline bool is_filter(const Poset& p, ElementSet f) {
  if (f.empty()) return false;
  ElementSet closure;
  f.for_each([&](int x) { closure = closure | p.up(x); });
  return closure == f;
}

/// Strong filter: any two members have a common lower bound inside the
/// filter. For an up-closed set this is the same as meeting Max L(x, y).
inline bool is_strong_filter(const Poset& p, ElementSet f) {
  if (!is_filter(p, f)) return false;
  bool ok = true;
  f.for_each([&](int x) {
    f.for_each([&](int y) {
      if (ok && (p.max_lower(x, y) & f).empty()) ok = false;
    });
  });
  return ok;
}

/// All filters of P (exponential scan, for small posets only).
inline std::vector<ElementSet> all_filters(const Poset& p, int max_elements = 20) {
  if (p.size() > max_elements) throw Error("poset too large for filter enumeration");
  // A filter is a union of principal up-sets, so enumerate antichain
  // generators instead of all subsets when n is biggish; the plain subset
  // scan is fine at the sizes used here.
  std::vector<ElementSet> out;
  const std::uint64_t lim = ElementSet::universe(p.size()).bits();
  for (std::uint64_t m = 1; m <= lim; ++m) {
    ElementSet f{m};
    if (is_filter(p, f)) out.push_back(f);
    if (m == lim) break;
  }
  return out;
}

struct PermutabilityWitness {
  int first = -1, second = -1;     // family indices
  std::pair<int, int> pair{-1, -1};  // in first∘second but not second∘first
};

struct RegularityWitness {
  int first = -1, second = -1;
  ElementSet shared_class;  // class of both, yet the congruences differ
};

struct UniformityWitness {
  int member = -1;
  ElementSet small_class, large_class;
};

struct FamilyProperties {
  bool permutable = true;
  std::optional<PermutabilityWitness> permutability_witness;
  bool regular = true;
  std::optional<RegularityWitness> regularity_witness;
  bool uniform = true;
  std::optional<UniformityWitness> uniformity_witness;
};

/// Permutability, regularity and uniformity of a congruence family.
inline FamilyProperties family_properties(const ConFamily& fam) {
  FamilyProperties out;
  const int m = fam.count();
  std::vector<Relation> rels;
  rels.reserve(static_cast<std::size_t>(m));
  for (const Partition& t : fam.members) rels.push_back(t.to_relation());

  for (int i = 0; i < m && out.permutable; ++i)
    for (int j = 0; j < m && out.permutable; ++j) {
      const Relation ij = rels[static_cast<std::size_t>(i)].compose(rels[static_cast<std::size_t>(j)]);
      const Relation ji = rels[static_cast<std::size_t>(j)].compose(rels[static_cast<std::size_t>(i)]);
      if (ij != ji) {
        out.permutable = false;
        PermutabilityWitness w;
        w.first = i;
        w.second = j;
        for (int x = 0; x < ij.size() && w.pair.first < 0; ++x) {
          const ElementSet diff = ij.row(x) - ji.row(x);
          if (!diff.empty()) w.pair = {x, diff.first()};
        }
        if (w.pair.first < 0) {
          w.first = j;
          w.second = i;
          for (int x = 0; x < ij.size() && w.pair.first < 0; ++x) {
            const ElementSet diff = ji.row(x) - ij.row(x);
            if (!diff.empty()) w.pair = {x, diff.first()};
          }
        }
        out.permutability_witness = w;
      }
    }

  for (int i = 0; i < m && out.regular; ++i)
    for (int j = i + 1; j < m && out.regular; ++j) {
      if (fam.members[static_cast<std::size_t>(i)] == fam.members[static_cast<std::size_t>(j)]) continue;
      for (const ElementSet c : fam.members[static_cast<std::size_t>(i)].classes()) {
        bool shared = false;
        for (const ElementSet d : fam.members[static_cast<std::size_t>(j)].classes())
          if (c == d) shared = true;
        if (shared) {
          out.regular = false;
          out.regularity_witness = RegularityWitness{i, j, c};
          break;
        }
      }
    }

  for (int i = 0; i < m && out.uniform; ++i) {
    const auto& cs = fam.members[static_cast<std::size_t>(i)].classes();
    for (std::size_t a = 1; a < cs.size(); ++a)
      if (cs[a].size() != cs[0].size()) {
        out.uniform = false;
        UniformityWitness w;
        w.member = i;
        w.small_class = cs[0].size() < cs[a].size() ? cs[0] : cs[a];
        w.large_class = cs[0].size() < cs[a].size() ? cs[a] : cs[0];
        out.uniformity_witness = w;
        break;
      }
  }
  return out;
}

}  // namespace poscon
