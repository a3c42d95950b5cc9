#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace poscon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of the elements of a fixed finite poset, stored as a bitmask.
/// Iteration order is always ascending element index, so every operation
/// built on top of ElementSet is deterministic.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static ElementSet single(int i) { return ElementSet(std::uint64_t{1} << i); }

  static ElementSet of(std::initializer_list<int> elems) {
    ElementSet s;
    for (int e : elems) s.insert(e);
    return s;
  }

  static ElementSet universe(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(int i) const { return (bits_ >> i) & 1; }
  void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }

  /// Lowest element index; set must be nonempty.
  int first() const { return std::countr_zero(bits_); }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(ElementSet a, ElementSet b) { return a.bits_ != b.bits_; }
  friend bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Binary relation on {0, ..., n-1} as a row-indexed bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {}

  static Relation identity(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.add(i, i);
    return r;
  }

  static Relation full(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.rows_[static_cast<std::size_t>(i)] = ElementSet::universe(n).bits();
    return r;
  }

  int size() const { return n_; }
  bool has(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1; }
  void add(int i, int j) { rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j; }
  void remove(int i, int j) { rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j); }
  ElementSet row(int i) const { return ElementSet(rows_[static_cast<std::size_t>(i)]); }

  bool is_reflexive() const {
    for (int i = 0; i < n_; ++i)
      if (!has(i, i)) return false;
    return true;
  }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (has(i, j) != has(j, i)) return false;
    return true;
  }

  bool is_transitive() const {
    for (int i = 0; i < n_; ++i) {
      std::uint64_t reach = 0;
      row(i).for_each([&](int z) { reach |= rows_[static_cast<std::size_t>(z)]; });
      if ((reach & ~rows_[static_cast<std::size_t>(i)]) != 0) return false;
    }
    return true;
  }

  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) row(i).for_each([&](int j) { out.emplace_back(i, j); });
    return out;
  }

  int pair_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += row(i).size();
    return c;
  }

  /// (x,y) in result iff there is z with (x,z) here and (z,y) in `next`.
  Relation compose(const Relation& next) const {
    Relation out(n_);
    for (int x = 0; x < n_; ++x) {
      std::uint64_t acc = 0;
      row(x).for_each([&](int z) { acc |= next.rows_[static_cast<std::size_t>(z)]; });
      out.rows_[static_cast<std::size_t>(x)] = acc;
    }
    return out;
  }

  bool subset_of(const Relation& o) const {
    for (int i = 0; i < n_; ++i)
      if ((rows_[static_cast<std::size_t>(i)] & ~o.rows_[static_cast<std::size_t>(i)]) != 0) return false;
    return true;
  }

  friend Relation operator&(const Relation& a, const Relation& b) {
    Relation r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      r.rows_[static_cast<std::size_t>(i)] =
          a.rows_[static_cast<std::size_t>(i)] & b.rows_[static_cast<std::size_t>(i)];
    return r;
  }

  friend Relation operator|(const Relation& a, const Relation& b) {
    Relation r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      r.rows_[static_cast<std::size_t>(i)] =
          a.rows_[static_cast<std::size_t>(i)] | b.rows_[static_cast<std::size_t>(i)];
    return r;
  }

  friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Materialized n-ary set-valued operator: a total map P^arity -> 2^P.
struct OpTable {
  int arity = 0;
  int n = 0;
  std::vector<ElementSet> table;  // row-major, index = ((x1*n)+x2)*n+...

  const ElementSet& at(std::span<const int> args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
    return table[idx];
  }

  const ElementSet& at(int x) const { return table[static_cast<std::size_t>(x)]; }
  const ElementSet& at(int x, int y) const {
    return table[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)];
  }

  template <class F>
  static OpTable unary(int n, F&& f) {
    OpTable t{1, n, {}};
    t.table.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) t.table.push_back(f(x));
    return t;
  }

  template <class F>
  static OpTable binary(int n, F&& f) {
    OpTable t{2, n, {}};
    t.table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t.table.push_back(f(x, y));
    return t;
  }

  template <class F>
  static OpTable ternary(int n, F&& f) {
    OpTable t{3, n, {}};
    t.table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) t.table.push_back(f(x, y, z));
    return t;
  }
};

/// Finite poset over named elements. The order is kept as the full
/// reflexive-transitive boolean matrix; everything downstream is cone
/// arithmetic on bitmasks. Immutable after construction.
class Poset {
 public:
  static constexpr int kMaxElements = 64;

  enum class RelationMode { Covers, FullOrder };

  /// `relation` holds label pairs (x, y) meaning x < y (covers mode) or
  /// x <= y (full mode). Covers mode takes the reflexive-transitive
  /// closure; full mode requires the input to already be transitive.
  static Poset build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& relation,
                     RelationMode mode) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw Error("poset must be non-empty");
    if (n > kMaxElements) throw Error("poset too large (max " + std::to_string(kMaxElements) + " elements)");
    for (int i = 0; i < n; ++i) {
      if (labels[static_cast<std::size_t>(i)].empty()) throw Error("empty element label");
      for (int j = i + 1; j < n; ++j)
        if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)])
          throw Error("duplicate label '" + labels[static_cast<std::size_t>(i)] + "'");
    }
    auto find = [&](const std::string& s) {
      for (int i = 0; i < n; ++i)
        if (labels[static_cast<std::size_t>(i)] == s) return i;
      throw Error("unknown label '" + s + "' in relation");
    };

    std::vector<std::uint64_t> up(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] |= std::uint64_t{1} << i;
    for (const auto& [a, b] : relation) {
      const int i = find(a), j = find(b);
      if (mode == RelationMode::Covers && i == j)
        throw Error("cover relates '" + a + "' to itself");
      up[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }

    std::vector<std::uint64_t> closed = up;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if ((closed[static_cast<std::size_t>(i)] >> k) & 1) closed[static_cast<std::size_t>(i)] |= closed[static_cast<std::size_t>(k)];

    if (mode == RelationMode::FullOrder && closed != up)
      throw Error("full-mode relation is not transitive");

    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (((closed[static_cast<std::size_t>(i)] >> j) & 1) && ((closed[static_cast<std::size_t>(j)] >> i) & 1))
          throw Error("cycle detected between '" + labels[static_cast<std::size_t>(i)] + "' and '" +
                      labels[static_cast<std::size_t>(j)] + "'");

    return Poset(std::move(labels), std::move(closed));
  }

  int size() const { return n_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> index_of(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
  }

  /// Index lookup that throws on unknown labels.
  int element(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw Error("unknown element '" + std::string(name) + "'");
  }

  bool leq(int i, int j) const { return (up_[static_cast<std::size_t>(i)] >> j) & 1; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  ElementSet up(int i) const { return ElementSet(up_[static_cast<std::size_t>(i)]); }
  ElementSet down(int i) const { return ElementSet(down_[static_cast<std::size_t>(i)]); }
  ElementSet all() const { return ElementSet::universe(n_); }

  std::optional<int> top() const { return top_; }
  std::optional<int> bottom() const { return bottom_; }
  bool bounded() const { return top_ && bottom_; }

  /// L(A): common lower bounds; L(empty) is all of P.
  ElementSet lower_cone(ElementSet a) const {
    ElementSet acc = all();
    a.for_each([&](int x) { acc = acc & down(x); });
    return acc;
  }

  /// U(A): common upper bounds; U(empty) is all of P.
  ElementSet upper_cone(ElementSet a) const {
    ElementSet acc = all();
    a.for_each([&](int x) { acc = acc & up(x); });
    return acc;
  }

  ElementSet maximal(ElementSet s) const {
    ElementSet out;
    s.for_each([&](int x) {
      if ((up(x) & s) == ElementSet::single(x)) out.insert(x);
    });
    return out;
  }

  ElementSet minimal(ElementSet s) const {
    ElementSet out;
    s.for_each([&](int x) {
      if ((down(x) & s) == ElementSet::single(x)) out.insert(x);
    });
    return out;
  }

  ElementSet max_lower(ElementSet a) const { return maximal(lower_cone(a)); }
  ElementSet min_upper(ElementSet a) const { return minimal(upper_cone(a)); }

  /// Cached Max L(x,y) / Min U(x,y) for the binary operators.
  const ElementSet& max_lower(int x, int y) const {
    return maxl_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }
  const ElementSet& min_upper(int x, int y) const {
    return minu_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }

  OpTable max_lower_table() const {
    return OpTable::binary(n_, [&](int x, int y) { return max_lower(x, y); });
  }
  OpTable min_upper_table() const {
    return OpTable::binary(n_, [&](int x, int y) { return min_upper(x, y); });
  }
  OpTable lower_cone_table() const {
    return OpTable::binary(n_, [&](int x, int y) { return lower_cone(ElementSet::of({x, y})); });
  }
  OpTable upper_cone_table() const {
    return OpTable::binary(n_, [&](int x, int y) { return upper_cone(ElementSet::of({x, y})); });
  }

  /// [a,b] = {x | a <= x <= b}; empty when a is not below b.
  ElementSet interval(int a, int b) const { return up(a) & down(b); }

  bool is_convex(ElementSet s) const {
    ElementSet hull;
    s.for_each([&](int a) { s.for_each([&](int b) { hull = hull | interval(a, b); }); });
    return hull.subset_of(s);
  }

  /// Least upper bound, when Min U(a,b) is a singleton.
  std::optional<int> sup(int a, int b) const {
    ElementSet m = min_upper(a, b);
    if (m.is_singleton()) return m.first();
    return std::nullopt;
  }

  std::optional<int> inf(int a, int b) const {
    ElementSet m = max_lower(a, b);
    if (m.is_singleton()) return m.first();
    return std::nullopt;
  }

  /// Cover pairs (i,j): the transitive reduction of the order.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (lt(i, j) && interval(i, j) == ElementSet::of({i, j})) out.emplace_back(i, j);
    return out;
  }

 private:
  Poset(std::vector<std::string> labels, std::vector<std::uint64_t> up)
      : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), up_(std::move(up)) {
    down_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((up_[static_cast<std::size_t>(i)] >> j) & 1) down_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    const std::uint64_t everyone = ElementSet::universe(n_).bits();
    for (int i = 0; i < n_; ++i) {
      if (down_[static_cast<std::size_t>(i)] == everyone) top_ = i;
      if (up_[static_cast<std::size_t>(i)] == everyone) bottom_ = i;
    }
    maxl_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    minu_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        maxl_.push_back(maximal(ElementSet(down_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(y)])));
        minu_.push_back(minimal(ElementSet(up_[static_cast<std::size_t>(x)] & up_[static_cast<std::size_t>(y)])));
      }
  }

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> up_, down_;
  std::vector<ElementSet> maxl_, minu_;
  std::optional<int> top_, bottom_;
};

inline Poset build_poset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  return Poset::build(std::move(labels), covers, Poset::RelationMode::Covers);
}

/// Compatibility of a binary relation with a set-valued operator: every
/// arity-long sequence of related pairs must admit a related witness pair
/// picked from the two operator values. An empty operator value means no
/// witness is available, so compatibility fails.
inline bool compatible(const Relation& r, const OpTable& q) {
  const auto ps = r.pairs();
  const int m = static_cast<int>(ps.size());
  if (q.arity == 1) {
    for (const auto& [a, b] : ps) {
      bool found = false;
      q.at(a).for_each([&](int u) {
        if (!found && !(q.at(b) & r.row(u)).empty()) found = true;
      });
      if (!found) return false;
    }
    return true;
  }
  if (q.arity == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const ElementSet w1 = q.at(ps[static_cast<std::size_t>(i)].first, ps[static_cast<std::size_t>(j)].first);
        const ElementSet w2 = q.at(ps[static_cast<std::size_t>(i)].second, ps[static_cast<std::size_t>(j)].second);
        bool found = false;
        w1.for_each([&](int u) {
          if (!found && !(w2 & r.row(u)).empty()) found = true;
        });
        if (!found) return false;
      }
    return true;
  }
  // General arity: odometer over sequences of related pairs.
  std::vector<int> pick(static_cast<std::size_t>(q.arity), 0);
  std::vector<int> left(static_cast<std::size_t>(q.arity)), right(static_cast<std::size_t>(q.arity));
  if (m == 0) return true;
  for (;;) {
    for (int k = 0; k < q.arity; ++k) {
      left[static_cast<std::size_t>(k)] = ps[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])].first;
      right[static_cast<std::size_t>(k)] = ps[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])].second;
    }
    const ElementSet w1 = q.at(left);
    const ElementSet w2 = q.at(right);
    bool found = false;
    w1.for_each([&](int u) {
      if (!found && !(w2 & r.row(u)).empty()) found = true;
    });
    if (!found) return false;
    int k = q.arity - 1;
    while (k >= 0 && ++pick[static_cast<std::size_t>(k)] == m) {
      pick[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return true;
  }
}

/// Order isomorphism search by backtracking; candidates are pruned by
/// (down-set size, up-set size) signatures. Returns the index map from
/// `p` into `q` if one exists.
inline std::optional<std::vector<int>> order_isomorphism(const Poset& p, const Poset& q) {
  const int n = p.size();
  if (n != q.size()) return std::nullopt;
  std::vector<std::pair<int, int>> sig_p(static_cast<std::size_t>(n)), sig_q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sig_p[static_cast<std::size_t>(i)] = {p.down(i).size(), p.up(i).size()};
    sig_q[static_cast<std::size_t>(i)] = {q.down(i).size(), q.up(i).size()};
  }
  {
    auto a = sig_p;
    auto b = sig_q;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if ((used >> j) & 1) continue;
      if (sig_p[static_cast<std::size_t>(i)] != sig_q[static_cast<std::size_t>(j)]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        const int jk = map[static_cast<std::size_t>(k)];
        if (p.leq(i, k) != q.leq(j, jk) || p.leq(k, i) != q.leq(jk, j)) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(i)] = j;
      used |= std::uint64_t{1} << j;
      if (self(self, i + 1)) return true;
      used &= ~(std::uint64_t{1} << j);
      map[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

}  // namespace poscon
