#include "skeinrec/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace skeinrec {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last || first == last)
    throw ParseError(std::string("malformed ") + what + " '" + tok + "'", line);
  return v;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

Var default_color(Chirality c) { return c == Chirality::none ? Var::s : Var::t; }

Chirality parse_chirality(const std::string& tok, int line) {
  if (tok == "cw") return Chirality::cw;
  if (tok == "ccw") return Chirality::ccw;
  if (tok == "un") return Chirality::none;
  throw ParseError("expected cw, ccw or un, got '" + tok + "'", line);
}

const char* chirality_token(Chirality c) {
  switch (c) {
    case Chirality::cw: return "cw";
    case Chirality::ccw: return "ccw";
    default: return "un";
  }
}

Var parse_color(const std::string& tok, int line) {
  if (tok.size() != 1) throw ParseError("bad color '" + tok + "'", line);
  try {
    return var_from_char(tok[0]);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad color '" + tok + "'", line);
  }
}

}  // namespace

int BraidWord::writhe() const {
  int w = 0;
  for (int k : generators) w += k > 0 ? 1 : -1;
  return w;
}

BraidWord parse_braid(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("braid needs the form 'n; k1 k2 ...'");
  const auto head = split_ws(text.substr(0, semi));
  if (head.size() != 1) throw ParseError("braid needs a single strand count before ';'");
  BraidWord b;
  b.strands = parse_int(head[0], 0, "strand count");
  if (b.strands < 2) throw ParseError("braid needs at least 2 strands");
  for (const auto& tok : split_ws(text.substr(semi + 1))) {
    const int k = parse_int(tok, 0, "generator");
    if (k == 0) throw ParseError("generator 0 is not allowed");
    if (std::abs(k) >= b.strands)
      throw ParseError("generator " + tok + " out of range for " + std::to_string(b.strands) +
                       " strands");
    b.generators.push_back(k);
  }
  return b;
}

std::string render_braid(const BraidWord& b) {
  std::string s = std::to_string(b.strands) + ";";
  for (int k : b.generators) s += " " + std::to_string(k);
  return s;
}

MorseWord braid_to_morse(const BraidWord& b, BraidClosure closure, Var color) {
  const int n = b.strands;
  MorseWord w;
  const bool right = closure == BraidClosure::right;
  const Chirality ch = right ? Chirality::cw : Chirality::ccw;
  const int offset = right ? 0 : n;
  for (int i = 0; i < n; ++i) w.slices.push_back(Slice::cup(i, ch, color));
  for (int k : b.generators) w.slices.push_back(Slice::cross(offset + std::abs(k) - 1, k > 0));
  for (int i = n - 1; i >= 0; --i) w.slices.push_back(Slice::cap(i, ch));
  return w;
}

MorseWord parse_morse(const std::string& text) {
  std::istringstream is(text);
  MorseWord w;
  std::vector<int> slice_line;
  bool have_header = false;
  int lineno = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++lineno;
    const auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks[0] != "src:") throw ParseError("expected 'src:' header", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t.size() != 2) throw ParseError("bad boundary strand '" + t + "'", lineno);
        Strand st;
        switch (t[0]) {
          case '+': st.dir = Dir::up; break;
          case '-': st.dir = Dir::down; break;
          case '0': st.dir = Dir::none; break;
          default: throw ParseError("bad boundary strand '" + t + "'", lineno);
        }
        st.color = parse_color(t.substr(1), lineno);
        w.source.push_back(st);
      }
      have_header = true;
      continue;
    }
    const std::string& op = toks[0];
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (toks.size() < lo || toks.size() > hi)
        throw ParseError("wrong number of fields for '" + op + "'", lineno);
    };
    Slice sl;
    if (op == "id") {
      need(1, 1);
    } else if (op == "cup") {
      need(3, 4);
      const Chirality c = parse_chirality(toks[2], lineno);
      const Var color = toks.size() == 4 ? parse_color(toks[3], lineno) : default_color(c);
      sl = Slice::cup(parse_int(toks[1], lineno, "position"), c, color);
    } else if (op == "cap") {
      need(3, 3);
      sl = Slice::cap(parse_int(toks[1], lineno, "position"), parse_chirality(toks[2], lineno));
    } else if (op == "x+" || op == "x-") {
      need(2, 2);
      sl = Slice::cross(parse_int(toks[1], lineno, "position"), op == "x+");
    } else {
      throw ParseError("unknown slice '" + op + "'", lineno);
    }
    w.slices.push_back(sl);
    slice_line.push_back(lineno);
  }
  if (!have_header) throw ParseError("missing 'src:' header");
  try {
    validate(w);
  } catch (const DiagramError& e) {
    const int line = e.slice() >= 0 ? slice_line[e.slice()] : 0;
    std::string msg = e.what();
    if (e.slice() >= 0) msg = msg.substr(msg.find(": ") + 2);
    throw ParseError(msg, line);
  }
  return w;
}

std::string render_morse(const MorseWord& word) {
  std::string out = "src:";
  for (const Strand& st : word.source) {
    out += ' ';
    out += st.dir == Dir::up ? '+' : st.dir == Dir::down ? '-' : '0';
    out += var_name(st.color);
  }
  out += '\n';
  for (const Slice& sl : word.slices) {
    switch (sl.kind) {
      case SliceKind::identity: out += "id"; break;
      case SliceKind::cup:
        out += "cup " + std::to_string(sl.pos) + " " + chirality_token(sl.chirality);
        if (sl.color != default_color(sl.chirality)) out += std::string(" ") + var_name(sl.color);
        break;
      case SliceKind::cap:
        out += "cap " + std::to_string(sl.pos) + " " + chirality_token(sl.chirality);
        break;
      case SliceKind::pos_cross: out += "x+ " + std::to_string(sl.pos); break;
      case SliceKind::neg_cross: out += "x- " + std::to_string(sl.pos); break;
    }
    out += '\n';
  }
  return out;
}

namespace {

LinkEntry make_entry(std::string name, std::string description, std::vector<MorseWord> words) {
  LinkEntry e{std::move(name), std::move(description), std::move(words), 0, 0};
  for (std::size_t i = 0; i < e.presentations.size(); ++i) {
    const ComponentMap cm = validate(e.presentations[i]);
    const int comps = static_cast<int>(cm.components.size());
    if (i == 0) {
      e.components = comps;
      e.writhe = cm.total_writhe;
    } else if (comps != e.components || cm.total_writhe != e.writhe) {
      throw DiagramError("presentations of " + e.name + " disagree on components or writhe");
    }
  }
  return e;
}

MorseWord circle(Chirality c) {
  return MorseWord{{}, {Slice::cup(0, c, Var::t), Slice::cap(0, c)}};
}

MorseWord closure(const char* braid, BraidClosure side = BraidClosure::right) {
  return braid_to_morse(parse_braid(braid), side);
}

std::vector<LinkEntry> build_table() {
  std::vector<LinkEntry> t;
  t.push_back(make_entry("unknot", "round circle", {circle(Chirality::ccw), circle(Chirality::cw)}));
  t.push_back(make_entry("unknot+curl", "circle with one positive curl",
                         {add_curl(circle(Chirality::ccw), 1, true, 1), closure("2; 1")}));
  t.push_back(make_entry("unknot-curl", "circle with one negative curl",
                         {add_curl(circle(Chirality::ccw), 1, false, 1), closure("2; -1")}));
  t.push_back(make_entry("unlink2", "two split circles",
                         {disjoint_union(circle(Chirality::ccw), circle(Chirality::ccw)),
                          closure("2;")}));
  t.push_back(make_entry("hopf", "positive Hopf link, closure of s1^2",
                         {closure("2; 1 1"), closure("2; 1 1", BraidClosure::left)}));
  t.push_back(make_entry("trefoil", "positive trefoil, closure of s1^3",
                         {closure("2; 1 1 1"), closure("2; 1 1 1", BraidClosure::left)}));
  t.push_back(make_entry("figure8", "figure-eight knot, closure of s1 s2^-1 s1 s2^-1",
                         {closure("3; 1 -2 1 -2"), closure("3; -2 1 -2 1")}));
  return t;
}

}  // namespace

const std::vector<LinkEntry>& link_table() {
  static const std::vector<LinkEntry> table = build_table();
  return table;
}

const LinkEntry* find_link(const std::string& name) {
  for (const auto& e : link_table())
    if (e.name == name) return &e;
  return nullptr;
}

LinkEntry resolve_link(const std::string& name_or_path) {
  if (const LinkEntry* e = find_link(name_or_path)) return *e;
  std::ifstream in(name_or_path);
  if (!in) throw ParseError("unknown link '" + name_or_path + "' (not a table name or readable file)");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::string first;
  {
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
      if (!split_ws(strip_comment(line)).empty()) {
        first = strip_comment(line);
        break;
      }
    }
  }
  MorseWord w;
  if (first.find(';') != std::string::npos) {
    w = braid_to_morse(parse_braid(first));
  } else {
    w = parse_morse(text);
  }
  if (!is_closed(w)) throw ParseError("link file '" + name_or_path + "' is not a closed diagram");
  return make_entry(name_or_path, "from file", {w});
}

}  // namespace skeinrec
