#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "poscon/boolean.hpp"
#include "poscon/checks.hpp"
#include "poscon/congruence.hpp"
#include "poscon/corpus.hpp"
#include "poscon/format.hpp"
#include "poscon/poset.hpp"
#include "poscon/star.hpp"

namespace poscon {
namespace cli {

inline PosetDocument load_poset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_text(buf.str(), std::filesystem::path(path).filename().string());
}

namespace detail {

/// A well-formed request that the poset cannot satisfy (no * table, no
/// complementation, no top element). Reported like a failed check: exit 1.
struct Unsatisfied {
  std::string message;
};

inline StarTable require_star(const Poset& p) {
  const StarSearch s = star_table(p);
  if (!s.table)
    throw Unsatisfied{"not relatively pseudocomplemented: no value at (" +
                      p.label(s.failure->first) + "," + p.label(s.failure->second) + ")"};
  return *s.table;
}

inline Complementation require_comp(const Poset& p) {
  if (!p.bounded()) throw Unsatisfied{"not complemented: poset is not bounded"};
  const auto c = find_complementation(p);
  if (!c) throw Unsatisfied{"not complemented: some element has no complement"};
  return *c;
}

struct FamilyRequest {
  bool star = false;
  bool comp = false;
  bool bruteforce = false;
};

inline ConFamily family_for(const Poset& p, const FamilyRequest& req) {
  std::vector<Partition> members =
      req.bruteforce ? enumerate_congruences_bruteforce(p) : enumerate_congruences(p);
  if (req.star) {
    const StarTable star = require_star(p);
    std::vector<Partition> kept;
    for (Partition& t : members)
      if (compatible(t.to_relation(), star.as_op())) kept.push_back(std::move(t));
    members = std::move(kept);
  }
  if (req.comp) {
    const Complementation comp = require_comp(p);
    std::vector<Partition> kept;
    for (Partition& t : members)
      if (compatible(t.to_relation(), comp.as_op())) kept.push_back(std::move(t));
    members = std::move(kept);
  }
  return con_poset(p, std::move(members));
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success
/// or all checks passing, 1 semantic failure (failed check, missing
/// structure), 2 usage or parse error.
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite poset congruence toolbox"};
  app.require_subcommand(1);

  std::string file, dir, quotient_arg, suite = "all";
  std::vector<std::string> elems;
  bool flag_star = false, flag_comp = false, flag_bruteforce = false, flag_dot = false;
  bool flag_strong = false, flag_deductive = false, expect_star = false;
  std::uint64_t seed = 20240920;

  CLI::App* validate = app.add_subcommand("validate", "parse a poset file and summarize it");
  validate->add_option("file", file)->required();
  validate->add_flag("--expect-star", expect_star, "fail unless * can be derived");

  CLI::App* cones = app.add_subcommand("cones", "cones and extremal bounds of a set of elements");
  cones->add_option("file", file)->required();
  cones->add_option("elems", elems, "element labels")->required();

  CLI::App* startab = app.add_subcommand("star-table", "print the derived * table");
  startab->add_option("file", file)->required();

  CLI::App* congruences = app.add_subcommand("congruences", "list congruences, one per line");
  congruences->add_option("file", file)->required();
  congruences->add_flag("--star", flag_star, "keep only congruences compatible with *");
  congruences->add_flag("--comp", flag_comp, "keep only congruences compatible with '");
  congruences->add_flag("--bruteforce", flag_bruteforce, "enumerate via the partition scan");

  CLI::App* conlat = app.add_subcommand("con-lattice", "inclusion order of the congruences");
  conlat->add_option("file", file)->required();
  conlat->add_flag("--star", flag_star, "restrict to congruences compatible with *");
  conlat->add_flag("--comp", flag_comp, "restrict to congruences compatible with '");
  conlat->add_flag("--dot", flag_dot, "emit DOT instead of text");

  CLI::App* quotient = app.add_subcommand("quotient", "quotient poset by a congruence");
  quotient->add_option("file", file)->required();
  quotient->add_option("congruence", quotient_arg, "canonical name or class list like [0,a][b,1]")
      ->required();

  CLI::App* filters = app.add_subcommand("filters", "list filters, one per line");
  filters->add_option("file", file)->required();
  filters->add_flag("--strong", flag_strong, "only strong filters");
  filters->add_flag("--deductive", flag_deductive, "only deductive systems (needs *)");

  CLI::App* kernels = app.add_subcommand("kernels", "kernels of congruences; non-kernel filters");
  kernels->add_option("file", file)->required();
  kernels->add_flag("--star", flag_star, "use congruences compatible with *");
  kernels->add_flag("--comp", flag_comp, "use congruences compatible with '");

  CLI::App* check = app.add_subcommand("check", "run the theorem checks against a poset");
  check->add_option("file", file)->required();
  check->add_option("--suite", suite)->check(CLI::IsMember({"all", "poset", "heyting", "boolean"}));
  check->add_option("--seed", seed, "seed for the randomized searches");

  CLI::App* examples = app.add_subcommand("examples", "list or write the bundled posets");
  examples->add_option("--write", dir, "write .poset files into this directory");

  CLI::App* dot = app.add_subcommand("dot", "emit the cover graph in DOT");
  dot->add_option("file", file)->required();

  try {
    std::vector<const char*> argv;
    static const std::string prog = "poscon";
    argv.push_back(prog.c_str());
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      const PosetDocument doc = load_poset_file(file);
      const Poset& p = doc.poset;
      out << "poset " << doc.name << ": " << p.size() << " elements, " << p.covers().size()
          << " cover pairs\n";
      out << "bounded: "
          << (p.bounded() ? "yes (bottom=" + p.label(*p.bottom()) + ", top=" + p.label(*p.top()) + ")"
                          : "no")
          << "\n";
      const StarSearch s = star_table(p);
      out << "relatively pseudocomplemented: " << (s.table ? "yes" : "no") << "\n";
      out << "boolean: " << (is_boolean(p) ? "yes" : "no") << "\n";
      if (expect_star && !s.table) {
        err << "error: not relatively pseudocomplemented: no value at ("
            << p.label(s.failure->first) << "," << p.label(s.failure->second) << ")\n";
        return 1;
      }
      return 0;
    }

    if (*cones) {
      const PosetDocument doc = load_poset_file(file);
      ElementSet a;
      for (const std::string& e : elems) a.insert(doc.poset.element(e));
      out << "A = " << format_element_set(doc.poset, a) << "\n";
      out << "L(A) = " << format_element_set(doc.poset, doc.poset.lower_cone(a)) << "\n";
      out << "U(A) = " << format_element_set(doc.poset, doc.poset.upper_cone(a)) << "\n";
      out << "Max L(A) = " << format_element_set(doc.poset, doc.poset.max_lower(a)) << "\n";
      out << "Min U(A) = " << format_element_set(doc.poset, doc.poset.min_upper(a)) << "\n";
      return 0;
    }

    if (*startab) {
      const PosetDocument doc = load_poset_file(file);
      out << star_table_text(doc.poset, detail::require_star(doc.poset));
      return 0;
    }

    if (*congruences) {
      const PosetDocument doc = load_poset_file(file);
      const ConFamily fam =
          detail::family_for(doc.poset, {flag_star, flag_comp, flag_bruteforce});
      for (int i = 0; i < fam.count(); ++i)
        out << congruence_line(doc.poset, fam.members[static_cast<std::size_t>(i)],
                               fam.names[static_cast<std::size_t>(i)])
            << "\n";
      return 0;
    }

    if (*conlat) {
      const PosetDocument doc = load_poset_file(file);
      const ConFamily fam = detail::family_for(doc.poset, {flag_star, flag_comp, false});
      if (flag_dot) {
        out << dot_confamily(doc.name + "_con", doc.poset, fam);
        return 0;
      }
      out << fam.count() << " congruences\n";
      out << "lattice: " << (fam.is_lattice() ? "yes" : "no") << "\n";
      for (const auto& [i, j] : fam.covers())
        out << fam.names[static_cast<std::size_t>(i)] << " < "
            << fam.names[static_cast<std::size_t>(j)] << "\n";
      return 0;
    }

    if (*quotient) {
      const PosetDocument doc = load_poset_file(file);
      const Poset& p = doc.poset;
      std::optional<Partition> theta;
      if (!quotient_arg.empty() && quotient_arg[0] == '[') {
        theta = parse_class_list(p, quotient_arg);
      } else {
        const ConFamily fam = con_poset(p, enumerate_congruences(p));
        if (const auto idx = fam.index_of_name(quotient_arg))
          theta = fam.members[static_cast<std::size_t>(*idx)];
        else
          throw Error("no congruence named '" + quotient_arg + "'");
      }
      const Quotient q = quotient_poset(p, *theta);  // validates the congruence
      out << "congruence: " << class_list_string(p, *theta) << "\n";
      out << q.poset.size() << " classes\n";
      for (int c = 0; c < q.poset.size(); ++c)
        out << q.poset.label(c) << " -> least " << p.label(q.least[static_cast<std::size_t>(c)])
            << ", greatest " << p.label(q.greatest[static_cast<std::size_t>(c)]) << "\n";
      std::vector<std::string> labels;
      std::vector<std::pair<std::string, std::string>> rel;
      for (int c = 0; c < q.poset.size(); ++c)
        labels.push_back(p.label(q.least[static_cast<std::size_t>(c)]));
      for (int x = 0; x < q.poset.size(); ++x)
        for (int y = 0; y < q.poset.size(); ++y)
          if (q.poset.leq(x, y))
            rel.emplace_back(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]);
      out << "embedded poset on least elements:\n"
          << emit_poset_text(doc.name + "_mod",
                             Poset::build(labels, rel, Poset::RelationMode::FullOrder));
      return 0;
    }

    if (*filters) {
      const PosetDocument doc = load_poset_file(file);
      const Poset& p = doc.poset;
      std::optional<StarTable> star;
      if (flag_deductive) star = detail::require_star(p);
      for (ElementSet f : all_filters(p)) {
        if (flag_strong && !is_strong_filter(p, f)) continue;
        if (star && !is_deductive_system(p, *star, f)) continue;
        out << format_element_set(p, f) << "\n";
      }
      return 0;
    }

    if (*kernels) {
      const PosetDocument doc = load_poset_file(file);
      const Poset& p = doc.poset;
      if (!p.top()) throw detail::Unsatisfied{"kernels require a top element"};
      const ConFamily fam = detail::family_for(p, {flag_star, flag_comp, false});
      for (int i = 0; i < fam.count(); ++i)
        out << fam.names[static_cast<std::size_t>(i)] << ": kernel "
            << format_element_set(p, fam.members[static_cast<std::size_t>(i)].class_of(*p.top()))
            << "\n";
      const auto comp = p.bounded() ? find_complementation(p) : std::nullopt;
      for (int a = 0; a < p.size(); ++a) {
        const auto realized = members_with_kernel(p, fam, p.up(a));
        if (!realized.empty()) continue;
        out << "[" << p.label(a) << "," << p.label(*p.top()) << "]: not a kernel";
        const KernelExclusionReport rep = kernel_exclusion(p, comp, a);
        if (rep.first_witness)
          out << " (first criterion, b=" << p.label(*rep.first_witness) << ")";
        else if (rep.second_witness)
          out << " (second criterion, b=" << p.label(*rep.second_witness) << ")";
        out << "\n";
      }
      return 0;
    }

    if (*check) {
      const PosetDocument doc = load_poset_file(file);
      std::vector<checks::CheckResult> results;
      if (suite == "all")
        results = checks::all_suites(doc.poset, seed);
      else if (suite == "poset")
        results = checks::poset_suite(doc.poset, seed);
      else if (suite == "heyting")
        results = checks::star_suite(doc.poset, seed);
      else
        results = checks::boolean_suite(doc.poset, seed);
      int passed = 0;
      for (const checks::CheckResult& r : results) {
        out << checks::render_check(r) << "\n";
        if (r.pass) ++passed;
      }
      out << passed << "/" << results.size() << " checks passed\n";
      return passed == static_cast<int>(results.size()) ? 0 : 1;
    }

    if (*examples) {
      const auto posets = corpus::bundled();
      if (dir.empty()) {
        for (const auto& [name, p] : posets) out << name << ": " << p.size() << " elements\n";
        return 0;
      }
      std::filesystem::create_directories(dir);
      for (const auto& [name, p] : posets) {
        const std::filesystem::path path = std::filesystem::path(dir) / (name + ".poset");
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("cannot write '" + path.string() + "'");
        f << emit_poset_text(name, p);
        out << "wrote " << path.string() << "\n";
      }
      return 0;
    }

    if (*dot) {
      const PosetDocument doc = load_poset_file(file);
      out << dot_poset(doc.name, doc.poset);
      return 0;
    }
  } catch (const detail::Unsatisfied& e) {
    err << "error: " << e.message << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cli
}  // namespace poscon
