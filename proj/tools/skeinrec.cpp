// skeinrec: framed HOMFLY / Kauffman invariants and recursion-functor checks.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skeinrec/functors.hpp"
#include "skeinrec/io.hpp"
#include "skeinrec/local_algebra.hpp"
#include "skeinrec/report.hpp"
#include "skeinrec/skein.hpp"

using namespace skeinrec;

namespace {

const MorseWord& pick(const LinkEntry& e, std::size_t presentation) {
  if (presentation >= e.presentations.size())
    throw ParseError("link '" + e.name + "' has only " + std::to_string(e.presentations.size()) +
                     " presentations");
  return e.presentations[presentation];
}

int run_invariant(const std::string& kind, const std::string& link, bool normalize, std::size_t pres) {
  const LinkEntry e = resolve_link(link);
  const MorseWord& w = pick(e, pres);
  Scalar v;
  if (kind == "homfly") {
    v = normalize ? normalize_unframed(w, Var::t) : eval_homfly(w, Var::t);
  } else {
    v = eval_kauffman(unoriented(w, Var::s), Var::s);
    if (normalize) v = Scalar::var(Var::s, -validate(w).total_writhe) * v;
  }
  std::cout << v << '\n';
  return 0;
}

int run_expand(const std::string& functor, const std::string& link, bool json, std::size_t pres) {
  const FunctorSpec& spec = FunctorSpec::by_name(functor);
  const LinkEntry e = resolve_link(link);
  const auto terms = expand(spec, pick(e, pres));
  if (json)
    std::cout << to_json(spec.name(), e.name, terms).dump(2) << '\n';
  else
    std::cout << to_text(terms);
  return 0;
}

int run_verify(const std::string& functor, const std::string& link, bool json, bool serial,
               bool no_timing, std::size_t pres) {
  const FunctorSpec& spec = FunctorSpec::by_name(functor);
  const LinkEntry e = resolve_link(link);
  RecursionReport r =
      verify_recursion(spec, pick(e, pres), serial ? Execution::serial : Execution::parallel, e.name);
  if (no_timing) r.elapsed_ms = 0;
  if (json)
    std::cout << to_json(r).dump(2) << '\n';
  else
    std::cout << to_text(r);
  return r.equal ? 0 : 1;
}

int run_check_relations(const std::string& functor, const std::string& relation, bool json,
                        bool verbose, bool no_timing) {
  const FunctorSpec& spec = FunctorSpec::by_name(functor);
  std::vector<Relation> rels = relation.empty() ? all_relations() : std::vector{parse_relation(relation)};
  bool all_hold = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Relation r : rels) {
    RelationReport rep = check_relation(spec, r);
    if (no_timing) rep.elapsed_ms = 0;
    all_hold = all_hold && rep.holds;
    if (json)
      arr.push_back(to_json(rep));
    else
      std::cout << to_text(rep, verbose);
  }
  if (json) std::cout << arr.dump(2) << '\n';
  return all_hold ? 0 : 1;
}

int run_table(bool verbose) {
  for (const auto& e : link_table()) {
    std::cout << e.name << "\tcomponents=" << e.components << "\twrithe=" << e.writhe
              << "\tpresentations=" << e.presentations.size() << "\t" << e.description << '\n';
    if (verbose) {
      for (std::size_t i = 0; i < e.presentations.size(); ++i)
        std::cout << "# presentation " << i << '\n' << render_morse(e.presentations[i]);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Framed HOMFLY and Kauffman invariants with recursion-functor verification"};
  app.require_subcommand(1);

  std::string kind = "homfly", link, functor, relation;
  bool normalize = false, json = false, serial = false, verbose = false, no_timing = false;
  std::size_t pres = 0;
  const std::vector<std::string> functors{"phi-tq", "phi-su", "psi", "chi",
                                          "phi_tq", "phi_su"};

  auto* inv = app.add_subcommand("invariant", "framed invariant of a link");
  inv->add_option("--kind", kind, "homfly or kauffman")->check(CLI::IsMember({"homfly", "kauffman"}));
  inv->add_option("--link", link, "table name, braid file or Morse file")->required();
  inv->add_flag("--normalize", normalize, "divide out the framing (writhe) factor");
  inv->add_option("--presentation", pres, "index of the table presentation");

  auto* exp = app.add_subcommand("expand", "weighted colored diagrams of a functor image");
  exp->add_option("--functor", functor)->required()->check(CLI::IsMember(functors));
  exp->add_option("--link", link)->required();
  exp->add_flag("--json", json);
  exp->add_option("--presentation", pres);

  auto* ver = app.add_subcommand("verify", "check the recursion identity on a link");
  ver->add_option("--functor", functor)->required()->check(CLI::IsMember(functors));
  ver->add_option("--link", link)->required();
  ver->add_flag("--json", json);
  ver->add_flag("--serial", serial, "evaluate expansion terms on one thread");
  ver->add_flag("--no-timing", no_timing, "report elapsed_ms as 0 for byte-stable output");
  ver->add_option("--presentation", pres);

  auto* rel = app.add_subcommand("check-relations", "check the defining relations of a functor");
  rel->add_option("--functor", functor)->required()->check(CLI::IsMember(functors));
  rel->add_option("--relation", relation, "skein, pos_twist, neg_twist, invertibility or zigzag");
  rel->add_flag("--json", json);
  rel->add_flag("--verbose", verbose, "print every block with its closure pairings");
  rel->add_flag("--no-timing", no_timing);

  auto* tab = app.add_subcommand("table", "list built-in links");
  tab->add_flag("--verbose", verbose, "print the Morse presentations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) return run_invariant(kind, link, normalize, pres);
    if (*exp) return run_expand(functor, link, json, pres);
    if (*ver) return run_verify(functor, link, json, serial, no_timing, pres);
    if (*rel) return run_check_relations(functor, relation, json, verbose, no_timing);
    if (*tab) return run_table(verbose);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
