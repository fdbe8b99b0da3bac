#include "skeinrec/report.hpp"

#include <sstream>

namespace skeinrec {

using nlohmann::ordered_json;

std::string boundary_token(const Boundary& b) {
  std::string s;
  for (const Strand& st : b) {
    if (!s.empty()) s += ' ';
    s += st.dir == Dir::up ? '+' : st.dir == Dir::down ? '-' : '0';
    s += var_name(st.color);
  }
  return s;
}

ordered_json to_json(const RecursionReport& r) {
  ordered_json j;
  j["functor"] = r.functor;
  j["link"] = r.link;
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["equal"] = r.equal;
  j["term_count"] = r.term_count;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

ordered_json to_json(const RelationReport& r) {
  ordered_json blocks = ordered_json::array();
  for (const Block& b : r.residual) {
    ordered_json jb;
    jb["label"] = b.label;
    jb["input"] = boundary_token(b.input);
    jb["output"] = boundary_token(b.output);
    jb["zero"] = b.is_zero();
    jb["term_count"] = b.terms.size();
    if (b.normal_form) jb["normal_form"] = algebra_to_string(*b.normal_form);
    ordered_json pairings = ordered_json::object();
    for (const auto& [name, v] : b.pairings) pairings[name] = v.to_string();
    jb["pairings"] = pairings;
    blocks.push_back(jb);
  }
  ordered_json j;
  j["functor"] = r.functor;
  j["relation"] = r.relation;
  j["holds"] = r.holds;
  j["instances"] = r.instances;
  j["blocks"] = blocks;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

ordered_json to_json(const std::string& functor, const std::string& link,
                     const std::vector<ExpansionTerm>& terms) {
  ordered_json list = ordered_json::array();
  for (const auto& t : terms)
    list.push_back(ordered_json{{"weight", t.weight.to_string()}, {"word", render_morse(t.word)}});
  return ordered_json{{"functor", functor}, {"link", link}, {"term_count", terms.size()}, {"terms", list}};
}

std::string to_text(const RecursionReport& r) {
  std::ostringstream os;
  os << "functor: " << r.functor << '\n'
     << "link: " << r.link << '\n'
     << "lhs: " << r.lhs << '\n'
     << "rhs: " << r.rhs << '\n'
     << "equal: " << (r.equal ? "true" : "false") << '\n'
     << "term_count: " << r.term_count << '\n';
  return os.str();
}

std::string to_text(const RelationReport& r, bool verbose) {
  std::ostringstream os;
  std::size_t nonzero = 0;
  for (const auto& b : r.residual) nonzero += b.is_zero() ? 0 : 1;
  os << r.functor << ' ' << r.relation << ": " << (r.holds ? "holds" : "FAILS") << " (" << r.instances
     << " configurations, " << r.residual.size() << " blocks, " << nonzero << " nonzero)\n";
  if (verbose) {
    for (const auto& b : r.residual) {
      os << "  [" << b.label << "] " << boundary_token(b.input) << " -> " << boundary_token(b.output)
         << (b.is_zero() ? "  zero" : "  NONZERO") << '\n';
      if (b.normal_form) os << "    normal form: " << algebra_to_string(*b.normal_form) << '\n';
      for (const auto& [name, v] : b.pairings) os << "    <" << name << "> " << v << '\n';
    }
  }
  return os.str();
}

std::string to_text(const std::vector<ExpansionTerm>& terms) {
  std::ostringstream os;
  os << "term_count: " << terms.size() << '\n';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    os << "\n[" << i + 1 << "] weight: " << terms[i].weight << '\n' << render_morse(terms[i].word);
  }
  return os.str();
}

}  // namespace skeinrec
