#pragma once

// Text front ends for link presentations and the built-in link table.
//
// Braid grammar: "n; k1 k2 ... km" with 0 < |k| < n; k > 0 is the positive
// generator on strands k, k+1.
//
// Morse grammar, one slice per line, read bottom to top:
//   src: <strand>*          strand = (+|-)<color> or 0<color>
//   cup <pos> <cw|ccw|un> [color]   color omitted when t (oriented) or s (un)
//   cap <pos> <cw|ccw|un>
//   x+ <pos> | x- <pos> | id
// Blank lines and text after '#' are ignored by the parser.

#include <stdexcept>
#include <string>
#include <vector>

#include "skeinrec/diagram.hpp"

namespace skeinrec {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct BraidWord {
  int strands = 0;
  std::vector<int> generators;
  int writhe() const;
};

BraidWord parse_braid(const std::string& text);
std::string render_braid(const BraidWord& b);

// right: closing arcs pass to the right of the braid (strands oriented up);
// left: closing arcs pass to the left (strands still oriented up).
enum class BraidClosure { right, left };

MorseWord braid_to_morse(const BraidWord& b, BraidClosure closure = BraidClosure::right,
                         Var color = Var::t);

MorseWord parse_morse(const std::string& text);
std::string render_morse(const MorseWord& word);

struct LinkEntry {
  std::string name;
  std::string description;
  std::vector<MorseWord> presentations;  // oriented, color t
  int components = 0;
  int writhe = 0;
  const MorseWord& primary() const { return presentations.front(); }
};

const std::vector<LinkEntry>& link_table();
const LinkEntry* find_link(const std::string& name);

// A table name, or a path to a file holding a braid ("n; ...") or Morse text.
LinkEntry resolve_link(const std::string& name_or_path);

}  // namespace skeinrec
