#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poscon/congruence.hpp"
#include "poscon/poset.hpp"
#include "poscon/star.hpp"

namespace poscon {

/// Text format for posets:
///
///   # comment
///   poset fig1
///   elements: 0 a b c d 1
///   covers: 0<a 0<b a<c a<d b<c b<d c<1 d<1
///
/// The relation line is either `covers:` (x<y pairs; the order is their
/// reflexive-transitive closure) or `order: x<=y ...` (the full order,
/// which must already be transitive). A poset with no relation line is an
/// antichain. Labels may not contain whitespace or  < = # [ ] , "  .
struct PosetDocument {
  std::string name;
  Poset poset;
};

namespace detail {

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '<' || c == '=' || c == '#' || c == '[' || c == ']' || c == ',' || c == '"' ||
        std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline PosetDocument parse_poset_text(std::string_view text, std::string_view source) {
  auto fail = [&](int line, const std::string& msg) -> void {
    throw Error(std::string(source) + ":" + std::to_string(line) + ": " + msg);
  };

  std::optional<std::string> name;
  std::optional<std::vector<std::string>> labels;
  std::optional<Poset::RelationMode> mode;
  std::vector<std::pair<std::string, std::string>> rel;
  int rel_line = 0;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "poset") {
      if (name) fail(lineno, "duplicate 'poset' line");
      if (tokens.size() != 2) fail(lineno, "'poset' expects exactly one name");
      if (!detail::valid_label(tokens[1])) fail(lineno, "invalid poset name '" + tokens[1] + "'");
      name = tokens[1];
    } else if (tokens[0] == "elements:") {
      if (!name) fail(lineno, "'elements:' before 'poset' line");
      if (labels) fail(lineno, "duplicate 'elements:' line");
      if (tokens.size() < 2) fail(lineno, "'elements:' needs at least one element");
      std::vector<std::string> ls(tokens.begin() + 1, tokens.end());
      for (const std::string& l : ls)
        if (!detail::valid_label(l)) fail(lineno, "invalid element label '" + l + "'");
      labels = std::move(ls);
    } else if (tokens[0] == "covers:" || tokens[0] == "order:") {
      if (!labels) fail(lineno, "'" + tokens[0] + "' before 'elements:' line");
      if (mode) fail(lineno, "duplicate relation line");
      const bool is_covers = tokens[0] == "covers:";
      mode = is_covers ? Poset::RelationMode::Covers : Poset::RelationMode::FullOrder;
      rel_line = lineno;
      const std::string sep = is_covers ? "<" : "<=";
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& tok = tokens[t];
        const std::size_t cut = tok.find(sep);
        if (cut == std::string::npos || cut == 0 || cut + sep.size() >= tok.size())
          fail(lineno, "malformed pair '" + tok + "' (expected x" + sep + "y)");
        rel.emplace_back(tok.substr(0, cut), tok.substr(cut + sep.size()));
      }
    } else {
      fail(lineno, "unrecognized directive '" + tokens[0] + "'");
    }
  }

  if (!name) fail(lineno, "missing 'poset' line");
  if (!labels) fail(lineno, "missing 'elements:' line");
  try {
    Poset p = Poset::build(*labels, rel, mode.value_or(Poset::RelationMode::Covers));
    return {std::move(*name), std::move(p)};
  } catch (const Error& e) {
    fail(rel_line ? rel_line : lineno, e.what());
  }
  throw Error("unreachable");
}

/// Canonical emission (covers form). Parsing it back yields the same
/// poset, elements in the same order.
inline std::string emit_poset_text(const std::string& name, const Poset& p) {
  std::ostringstream out;
  out << "poset " << name << "\n";
  out << "elements:";
  for (int i = 0; i < p.size(); ++i) out << ' ' << p.label(i);
  out << "\n";
  const auto cov = p.covers();
  if (!cov.empty()) {
    out << "covers:";
    for (const auto& [i, j] : cov) out << ' ' << p.label(i) << '<' << p.label(j);
    out << "\n";
  }
  return out.str();
}

inline std::string format_element_set(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ", ";
    out += p.label(i);
    first = false;
  });
  return out + "}";
}

/// "[least,greatest]" for one congruence class.
inline std::string class_interval_string(const Poset& p, const Partition& theta, int member) {
  const auto [lo, hi] = class_interval_bounds(p, theta, member);
  return "[" + p.label(lo) + "," + p.label(hi) + "]";
}

/// All classes, in canonical order: "[0,a][b,1]".
inline std::string class_list_string(const Poset& p, const Partition& theta) {
  std::string out;
  for (const ElementSet& c : theta.classes()) out += class_interval_string(p, theta, c.first());
  return out;
}

inline std::string congruence_line(const Poset& p, const Partition& theta, const std::string& name) {
  return name + ": " + class_list_string(p, theta);
}

/// Parse "[x,y][u,v]..." into a partition: each bracket pair becomes the
/// closed interval [x,y]; elements not mentioned become singletons.
inline Partition parse_class_list(const Poset& p, std::string_view text) {
  std::vector<ElementSet> classes;
  ElementSet seen;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error("empty class list");
  while (i < text.size()) {
    if (text[i] != '[') throw Error("expected '[' in class list");
    const std::size_t comma = text.find(',', i);
    const std::size_t close = text.find(']', i);
    if (close == std::string_view::npos || comma == std::string_view::npos || comma > close)
      throw Error("malformed class '[x,y]' in class list");
    const std::string lo(text.substr(i + 1, comma - i - 1));
    const std::string hi(text.substr(comma + 1, close - comma - 1));
    const ElementSet cls = p.interval(p.element(lo), p.element(hi));
    if (cls.empty()) throw Error("interval [" + lo + "," + hi + "] is empty");
    if (!(cls & seen).empty()) throw Error("interval [" + lo + "," + hi + "] overlaps another class");
    seen = seen | cls;
    classes.push_back(cls);
    i = close + 1;
    skip_ws();
  }
  (p.all() - seen).for_each([&](int x) { classes.push_back(ElementSet::single(x)); });
  return Partition::from_classes(p.size(), classes);
}

/// Aligned table for the * operation, elements in poset order.
inline std::string star_table_text(const Poset& p, const StarTable& star) {
  std::size_t w = 1;
  for (int i = 0; i < p.size(); ++i) w = std::max(w, p.label(i).size());
  auto pad = [&](const std::string& s) {
    return std::string(w - s.size(), ' ') + s;
  };
  std::ostringstream out;
  out << pad("*");
  for (int j = 0; j < p.size(); ++j) out << ' ' << pad(p.label(j));
  out << '\n';
  for (int i = 0; i < p.size(); ++i) {
    out << pad(p.label(i));
    for (int j = 0; j < p.size(); ++j) out << ' ' << pad(p.label(star.at(i, j)));
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Like dot_quote, but newlines become the DOT line-break escape.
inline std::string dot_label(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Cover graph in DOT, bottom-up. Output is byte-deterministic: nodes in
/// element order, edges in cover order.
inline std::string dot_poset(const std::string& name, const Poset& p) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) out << "  " << detail::dot_quote(p.label(i)) << ";\n";
  for (const auto& [i, j] : p.covers())
    out << "  " << detail::dot_quote(p.label(i)) << " -> " << detail::dot_quote(p.label(j)) << ";\n";
  out << "}\n";
  return out.str();
}

/// Inclusion order of a congruence family in DOT (nodes carry the class
/// lists as tooltips via labels).
inline std::string dot_confamily(const std::string& name, const Poset& p, const ConFamily& fam) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (int i = 0; i < fam.count(); ++i)
    out << "  " << detail::dot_quote(fam.names[static_cast<std::size_t>(i)]) << " [label="
        << detail::dot_label(fam.names[static_cast<std::size_t>(i)] + "\n" +
                             class_list_string(p, fam.members[static_cast<std::size_t>(i)]))
        << "];\n";
  for (const auto& [i, j] : fam.covers())
    out << "  " << detail::dot_quote(fam.names[static_cast<std::size_t>(i)]) << " -> "
        << detail::dot_quote(fam.names[static_cast<std::size_t>(j)]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace poscon
