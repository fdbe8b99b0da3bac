#include "skeinrec/local_algebra.hpp"

#include <chrono>

namespace skeinrec {

namespace {

Scalar zed() { return Scalar(Scalar::z()); }

}  // namespace

// ------------------------------------------------------------------ algebras

Hecke2 Hecke2::X_inverse() { return {-zed(), Scalar(1)}; }

BMW2 BMW2::X_inverse(Var framing) { return {-zed(), Scalar(1), zed(), framing}; }

Hecke2 operator*(const Hecke2& x, const Hecke2& y) {
  const Scalar xx = x.c_X * y.c_X;
  return {x.c_id * y.c_id + xx, x.c_id * y.c_X + x.c_X * y.c_id + zed() * xx};
}

BMW2 operator*(const BMW2& x, const BMW2& y) {
  if (x.framing != y.framing) throw FunctorError("BMW2 elements with different framing variables");
  const Scalar s_inv = Scalar::var(x.framing, -1);
  const Scalar delta = constants::kauffman_loop(x.framing);
  const Scalar xx = x.c_X * y.c_X;
  BMW2 r;
  r.framing = x.framing;
  r.c_id = x.c_id * y.c_id + xx;
  r.c_X = x.c_id * y.c_X + x.c_X * y.c_id + zed() * xx;
  r.c_e = x.c_id * y.c_e + x.c_e * y.c_id + s_inv * (x.c_X * y.c_e + x.c_e * y.c_X) +
          delta * x.c_e * y.c_e - zed() * s_inv * xx;
  return r;
}

MixedPair2 operator*(const MixedPair2& x, const MixedPair2& y) { return {x.c_id * y.c_id}; }

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.index() != y.index()) throw FunctorError("algebra type mismatch in product");
  return std::visit(
      [&](const auto& a) -> AlgebraElement {
        using T = std::decay_t<decltype(a)>;
        return a * std::get<T>(y);
      },
      x);
}

AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.index() != y.index()) throw FunctorError("algebra type mismatch in sum");
  if (auto* h = std::get_if<Hecke2>(&x)) {
    const auto& k = std::get<Hecke2>(y);
    return Hecke2{h->c_id + k.c_id, h->c_X + k.c_X};
  }
  if (auto* b = std::get_if<BMW2>(&x)) {
    const auto& c = std::get<BMW2>(y);
    if (b->framing != c.framing) throw FunctorError("BMW2 elements with different framing variables");
    return BMW2{b->c_id + c.c_id, b->c_X + c.c_X, b->c_e + c.c_e, b->framing};
  }
  return MixedPair2{std::get<MixedPair2>(x).c_id + std::get<MixedPair2>(y).c_id};
}

AlgebraElement algebra_scale(const Scalar& c, const AlgebraElement& x) {
  if (auto* h = std::get_if<Hecke2>(&x)) return Hecke2{c * h->c_id, c * h->c_X};
  if (auto* b = std::get_if<BMW2>(&x)) return BMW2{c * b->c_id, c * b->c_X, c * b->c_e, b->framing};
  return MixedPair2{c * std::get<MixedPair2>(x).c_id};
}

bool algebra_is_zero(const AlgebraElement& x) {
  if (auto* h = std::get_if<Hecke2>(&x)) return h->c_id.is_zero() && h->c_X.is_zero();
  if (auto* b = std::get_if<BMW2>(&x)) return b->c_id.is_zero() && b->c_X.is_zero() && b->c_e.is_zero();
  return std::get<MixedPair2>(x).c_id.is_zero();
}

std::string algebra_to_string(const AlgebraElement& x) {
  if (auto* h = std::get_if<Hecke2>(&x))
    return "Hecke2{id: " + h->c_id.to_string() + ", X: " + h->c_X.to_string() + "}";
  if (auto* b = std::get_if<BMW2>(&x))
    return "BMW2{id: " + b->c_id.to_string() + ", X: " + b->c_X.to_string() +
           ", e: " + b->c_e.to_string() + "}";
  return "MixedPair2{id: " + std::get<MixedPair2>(x).c_id.to_string() + "}";
}

bool Block::is_zero() const {
  if (normal_form && !algebra_is_zero(*normal_form)) return false;
  for (const auto& [name, v] : pairings)
    if (!v.is_zero()) return false;
  return true;
}

// ------------------------------------------------------------------ closures

MorseWord trace_closure(const MorseWord& endo) {
  const Boundary& src = endo.source;
  if (target(endo) != src) throw DiagramError("trace closure needs an endomorphism word");
  MorseWord w;
  std::vector<Chirality> ch;
  for (const Strand& st : src)
    ch.push_back(st.dir == Dir::none ? Chirality::none : chirality_of(st.dir, reversed(st.dir)));
  for (std::size_t i = 0; i < src.size(); ++i)
    w.slices.push_back(Slice::cup(static_cast<int>(i), ch[i], src[i].color));
  w.slices.insert(w.slices.end(), endo.slices.begin(), endo.slices.end());
  for (std::size_t i = src.size(); i-- > 0;) w.slices.push_back(Slice::cap(static_cast<int>(i), ch[i]));
  return w;
}

namespace {

enum class RowType { hecke, bmw, mixed, other };

RowType row_type(const Boundary& row) {
  if (row.size() != 2) return RowType::other;
  if (row[0].color != row[1].color) return RowType::mixed;
  if (row[0].dir == Dir::none && row[1].dir == Dir::none) return RowType::bmw;
  if (row[0].dir == row[1].dir) return RowType::hecke;
  return RowType::other;
}

// Product of generators along a two-strand word, if it stays in one algebra.
std::optional<AlgebraElement> word_element(const MorseWord& w, RowType type, Var color) {
  AlgebraElement acc = type == RowType::hecke ? AlgebraElement(Hecke2::one())
                       : type == RowType::bmw ? AlgebraElement(BMW2::one(color))
                                              : AlgebraElement(MixedPair2{Scalar(1)});
  Boundary row = w.source;
  for (std::size_t i = 0; i < w.slices.size(); ++i) {
    const Slice& s = w.slices[i];
    if (s.kind == SliceKind::identity) continue;
    AlgebraElement gen = acc;
    if (s.is_crossing() && s.pos == 0) {
      const bool pos = s.kind == SliceKind::pos_cross;
      if (type == RowType::hecke) gen = pos ? Hecke2::X() : Hecke2::X_inverse();
      if (type == RowType::bmw) gen = pos ? BMW2::X(color) : BMW2::X_inverse(color);
      if (type == RowType::mixed) gen = MixedPair2{Scalar(1)};
      std::swap(row[0], row[1]);
    } else if (type == RowType::bmw && s.kind == SliceKind::cap && s.pos == 0 &&
               i + 1 < w.slices.size() && w.slices[i + 1].kind == SliceKind::cup &&
               w.slices[i + 1].pos == 0 && w.slices[i + 1].color == color) {
      gen = BMW2::e(color);
      ++i;
    } else {
      return std::nullopt;
    }
    if (row_type(row) != type) return std::nullopt;
    acc = algebra_mul(gen, acc);
  }
  return acc;
}

std::optional<AlgebraElement> block_normal_form(const FunctorSpec& spec, const Block& b) {
  const RowType type = row_type(b.input);
  if (type == RowType::other || row_type(b.output) != type) return std::nullopt;
  std::optional<AlgebraElement> sum;
  for (const auto& t : b.terms) {
    auto el = word_element(t.word, type, b.input[0].color);
    if (!el) return std::nullopt;
    AlgebraElement scaled = algebra_scale(t.weight, *el);
    sum = sum ? algebra_add(*sum, scaled) : scaled;
  }
  if (!sum) return std::nullopt;
  const Bindings& tb = spec.target_binding();
  if (!tb.empty()) {
    if (auto* h = std::get_if<Hecke2>(&*sum)) {
      h->c_id = h->c_id.substitute(tb);
      h->c_X = h->c_X.substitute(tb);
    } else if (auto* m = std::get_if<BMW2>(&*sum)) {
      // Relations of the algebra are applied before eliminating the framing variable.
      m->c_id = m->c_id.substitute(tb);
      m->c_X = m->c_X.substitute(tb);
      m->c_e = m->c_e.substitute(tb);
    } else {
      auto& p = std::get<MixedPair2>(*sum);
      p.c_id = p.c_id.substitute(tb);
    }
  }
  return sum;
}

Chirality pair_chirality_or_throw(const Strand& l, const Strand& r) {
  if (l.color != r.color) throw DiagramError("turnback across colors");
  if (l.dir == Dir::none && r.dir == Dir::none) return Chirality::none;
  return chirality_of(l.dir, r.dir);
}

// Test fragments mapping `from` to `to`.
std::vector<std::pair<std::string, MorseWord>> test_fragments(const Boundary& from, const Boundary& to) {
  std::vector<std::pair<std::string, MorseWord>> cands;
  cands.emplace_back("id", MorseWord{from, {}});
  if (from.size() == 2) {
    cands.emplace_back("x+", MorseWord{from, {Slice::cross(0, true)}});
    cands.emplace_back("x-", MorseWord{from, {Slice::cross(0, false)}});
    try {
      const Chirality c_in = pair_chirality_or_throw(from[0], from[1]);
      const Chirality c_out = pair_chirality_or_throw(to[0], to[1]);
      cands.emplace_back("turnback",
                         MorseWord{from, {Slice::cap(0, c_in), Slice::cup(0, c_out, to[0].color)}});
    } catch (const DiagramError&) {
    }
  }
  std::vector<std::pair<std::string, MorseWord>> valid;
  for (auto& [name, w] : cands) {
    try {
      if (target(w) == to) valid.emplace_back(name, std::move(w));
    } catch (const DiagramError&) {
    }
  }
  return valid;
}

void fill_pairings(const FunctorSpec& spec, const SkeinContext& ctx, Block& b) {
  for (const auto& [name, frag] : test_fragments(b.output, b.input)) {
    Scalar total;
    for (const auto& t : b.terms) {
      const MorseWord closed = trace_closure(compose(frag, t.word));
      total += t.weight * ctx.evaluate(closed).substitute(spec.target_binding());
    }
    b.pairings.emplace_back(name, total);
  }
  b.normal_form = block_normal_form(spec, b);
}

std::vector<Boundary> input_states(const FunctorSpec& spec, const Boundary& source) {
  std::vector<Boundary> out{{}};
  for (const Strand& st : source) {
    std::vector<Boundary> next;
    for (const auto& prefix : out) {
      for (const Strand& s : spec.states(st)) {
        Boundary b = prefix;
        b.push_back(s);
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

MorseWord prepare_open(const FunctorSpec& spec, const MorseWord& w) {
  return spec.source_oriented() ? upward_crossings(w) : w;
}

// Linear combination of source words sharing one boundary.
struct SourceCombination {
  std::string label;
  Boundary source;
  std::vector<std::pair<Scalar, MorseWord>> words;
};

BlockMatrix image_blocks(const FunctorSpec& spec, const SkeinContext& ctx, const SourceCombination& sc) {
  BlockMatrix out;
  for (const Boundary& in : input_states(spec, sc.source)) {
    std::map<Boundary, std::vector<ExpansionTerm>> acc;
    for (const auto& [coeff, word] : sc.words) {
      for (auto& [outb, terms] : expand_open(spec, prepare_open(spec, word), in))
        for (auto& t : terms) acc[outb].push_back({coeff * t.weight, std::move(t.word)});
    }
    for (auto& [outb, terms] : acc) {
      Block b{sc.label, in, outb, std::move(terms), std::nullopt, {}};
      fill_pairings(spec, ctx, b);
      out.push_back(std::move(b));
    }
  }
  return out;
}

Strand source_strand(const FunctorSpec& spec, Dir d) {
  return spec.source_oriented() ? Strand{spec.source_color(), d} : Strand{spec.source_color(), Dir::none};
}

std::vector<Dir> source_dirs(const FunctorSpec& spec) {
  if (spec.source_oriented()) return {Dir::up, Dir::down};
  return {Dir::none};
}

Chirality extremum(Dir left, Dir right) {
  return left == Dir::none ? Chirality::none : chirality_of(left, right);
}

Dir opposite(Dir d) { return d == Dir::none ? Dir::none : reversed(d); }

// Turnback on an antiparallel (or unoriented) pair.
MorseWord turnback_word(const FunctorSpec& spec) {
  const Dir l = spec.source_oriented() ? Dir::up : Dir::none;
  const Chirality c = extremum(l, opposite(l));
  return MorseWord{{source_strand(spec, l), source_strand(spec, opposite(l))},
                   {Slice::cap(0, c), Slice::cup(0, c, spec.source_color())}};
}

Boundary parallel_pair(const FunctorSpec& spec) {
  return {source_strand(spec, Dir::up), source_strand(spec, Dir::up)};
}

Scalar framing_image(const FunctorSpec& spec, int power) {
  const Var v = spec.source_oriented() ? Var::t : Var::s;
  return Scalar(spec.source_binding().at(v)).pow(power);
}

std::vector<SourceCombination> relation_instances(const FunctorSpec& spec, Relation r) {
  std::vector<SourceCombination> out;
  const Scalar z = zed();
  switch (r) {
    case Relation::skein: {
      const Boundary b = parallel_pair(spec);
      SourceCombination sc{"X+ - X-", b, {}};
      sc.words.push_back({Scalar(1), MorseWord{b, {Slice::cross(0, true)}}});
      sc.words.push_back({Scalar(-1), MorseWord{b, {Slice::cross(0, false)}}});
      sc.words.push_back({-z, MorseWord{b, {}}});
      if (!spec.source_oriented()) sc.words.push_back({z, turnback_word(spec)});
      out.push_back(std::move(sc));
      break;
    }
    case Relation::pos_twist:
    case Relation::neg_twist: {
      const bool positive = r == Relation::pos_twist;
      for (Dir d : source_dirs(spec)) {
        for (bool right : {true, false}) {
          const MorseWord id{{source_strand(spec, d)}, {}};
          SourceCombination sc{std::string(positive ? "positive" : "negative") + " curl, cup " +
                                   (right ? "right" : "left") +
                                   (d == Dir::down ? ", strand down" : d == Dir::up ? ", strand up" : ""),
                               id.source, {}};
          sc.words.push_back({Scalar(1), add_curl(id, 0, positive, 0, right)});
          sc.words.push_back({-framing_image(spec, positive ? 1 : -1), id});
          out.push_back(std::move(sc));
        }
      }
      break;
    }
    case Relation::invertibility: {
      const Boundary b = parallel_pair(spec);
      for (bool pos_first : {true, false}) {
        SourceCombination sc{pos_first ? "X- X+ = 1" : "X+ X- = 1", b, {}};
        sc.words.push_back({Scalar(1), MorseWord{b, {Slice::cross(0, pos_first), Slice::cross(0, !pos_first)}}});
        sc.words.push_back({Scalar(-1), MorseWord{b, {}}});
        out.push_back(std::move(sc));
      }
      break;
    }
    case Relation::zigzag: {
      for (Dir d : source_dirs(spec)) {
        const MorseWord id{{source_strand(spec, d)}, {}};
        const std::string dir = d == Dir::up ? ", strand up" : d == Dir::down ? ", strand down" : "";
        // cup to the right, cap on the left
        SourceCombination right{"cup right" + dir, id.source, {}};
        right.words.push_back({Scalar(1), MorseWord{id.source,
                                                     {Slice::cup(1, extremum(opposite(d), d), spec.source_color()),
                                                      Slice::cap(0, extremum(d, opposite(d)))}}});
        right.words.push_back({Scalar(-1), id});
        out.push_back(std::move(right));
        SourceCombination left{"cup left" + dir, id.source, {}};
        left.words.push_back({Scalar(1), MorseWord{id.source,
                                                    {Slice::cup(0, extremum(d, opposite(d)), spec.source_color()),
                                                     Slice::cap(1, extremum(opposite(d), d))}}});
        left.words.push_back({Scalar(-1), id});
        out.push_back(std::move(left));
      }
      break;
    }
  }
  return out;
}

}  // namespace

BlockMatrix functor_block(const FunctorSpec& spec, Generator g) {
  const SkeinContext ctx = spec.target_context();
  const Boundary b = parallel_pair(spec);
  SourceCombination sc{"", b, {}};
  switch (g) {
    case Generator::pos_cross:
      sc.label = "X+";
      sc.words.push_back({Scalar(1), MorseWord{b, {Slice::cross(0, true)}}});
      break;
    case Generator::neg_cross:
      sc.label = "X-";
      sc.words.push_back({Scalar(1), MorseWord{b, {Slice::cross(0, false)}}});
      break;
    case Generator::identity:
      sc.label = "id";
      sc.words.push_back({Scalar(1), MorseWord{b, {}}});
      break;
    case Generator::turnback:
      sc.label = "turnback";
      sc.words.push_back({Scalar(1), turnback_word(spec)});
      sc.source = sc.words.back().second.source;
      break;
  }
  return image_blocks(spec, ctx, sc);
}

const std::vector<Relation>& all_relations() {
  static const std::vector<Relation> rs{Relation::skein, Relation::pos_twist, Relation::neg_twist,
                                        Relation::invertibility, Relation::zigzag};
  return rs;
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::skein: return "skein";
    case Relation::pos_twist: return "pos_twist";
    case Relation::neg_twist: return "neg_twist";
    case Relation::invertibility: return "invertibility";
    case Relation::zigzag: return "zigzag";
  }
  return "";
}

Relation parse_relation(const std::string& name) {
  for (Relation r : all_relations())
    if (relation_name(r) == name) return r;
  throw FunctorError("unknown relation '" + name + "'");
}

RelationReport check_relation(const FunctorSpec& spec, Relation r) {
  const auto start = std::chrono::steady_clock::now();
  const SkeinContext ctx = spec.target_context();
  RelationReport rep;
  rep.functor = spec.name();
  rep.relation = relation_name(r);
  rep.holds = true;
  for (const auto& sc : relation_instances(spec, r)) {
    ++rep.instances;
    for (auto& b : image_blocks(spec, ctx, sc)) {
      if (!b.is_zero()) rep.holds = false;
      rep.residual.push_back(std::move(b));
    }
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

RelationReport check_identity(const FunctorSpec& spec, const std::string& label,
                              const std::vector<std::pair<Scalar, MorseWord>>& combination) {
  if (combination.empty()) throw FunctorError("empty combination");
  const auto start = std::chrono::steady_clock::now();
  const SkeinContext ctx = spec.target_context();
  SourceCombination sc{label, combination.front().second.source, combination};
  for (const auto& [c, w] : combination)
    if (w.source != sc.source) throw FunctorError("combination mixes source boundaries");
  RelationReport rep;
  rep.functor = spec.name();
  rep.relation = label;
  rep.instances = 1;
  rep.residual = image_blocks(spec, ctx, sc);
  rep.holds = true;
  for (const auto& b : rep.residual)
    if (!b.is_zero()) rep.holds = false;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace skeinrec
