#include "skeinrec/functors.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

#include "skeinrec/io.hpp"

namespace skeinrec {

namespace {

Scalar mono(std::initializer_list<std::pair<Var, int>> powers) {
  Exponents e{};
  for (auto [v, n] : powers) e[static_cast<std::size_t>(v)] += n;
  return Scalar(LaurentPoly::monomial(e));
}

Scalar zed() { return Scalar(Scalar::z()); }

const Strand kPlus{Var::t, Dir::up};
const Strand kMinus{Var::t, Dir::down};
const Strand kZero{Var::s, Dir::none};

Slice cap0(Chirality c) { return Slice::cap(0, c); }
Slice cup0(Chirality c, Var color) { return Slice::cup(0, c, color); }

Chirality pair_chirality(const Strand& l, const Strand& r) {
  if (l.dir == Dir::none || r.dir == Dir::none) return Chirality::none;
  return chirality_of(l.dir, r.dir);
}

// Turnback: cap on `in`, then cup producing `out`.
std::vector<Slice> turnback(const Boundary& in, const Boundary& out) {
  return {cap0(pair_chirality(in[0], in[1])), cup0(pair_chirality(out[0], out[1]), out[0].color)};
}

LocalTerm crossing_through(const Slice& s, const Boundary& in) {
  return {Scalar(1), {Slice{s.kind, 0, Chirality::none, Var::t}}, {in[1], in[0]}};
}

// ------------------------------------------------------------- phi family

struct PhiColors {
  Var a, b;
};

std::vector<LocalTerm> phi_image(PhiColors pc, const Slice& s, const Boundary& in) {
  const Var A = pc.a, B = pc.b;
  std::vector<LocalTerm> out;
  switch (s.kind) {
    case SliceKind::cup: {
      if (s.chirality == Chirality::none) throw FunctorError("phi functors need oriented cups");
      auto [dl, dr] = extremum_dirs(s.chirality);
      for (Var x : {A, B}) {
        Scalar c = s.chirality == Chirality::cw ? Scalar(1)
                   : x == A                     ? mono({{B, 1}})
                                                : mono({{A, -1}});
        out.push_back({c, {cup0(s.chirality, x)}, {Strand{x, dl}, Strand{x, dr}}});
      }
      break;
    }
    case SliceKind::cap: {
      if (in[0].color != in[1].color) break;
      const Var x = in[0].color;
      Scalar c = s.chirality == Chirality::ccw ? Scalar(1)
                 : x == A                      ? mono({{B, -1}})
                                               : mono({{A, 1}});
      out.push_back({c, {cap0(s.chirality)}, {}});
      break;
    }
    case SliceKind::pos_cross:
    case SliceKind::neg_cross: {
      if (in[0].dir != Dir::up || in[1].dir != Dir::up)
        throw FunctorError("phi functors act on upward crossings; rewrite the source first");
      const bool positive = s.kind == SliceKind::pos_cross;
      out.push_back(crossing_through(s, in));
      if (positive && in[0].color == A && in[1].color == B) out.push_back({zed(), {}, in});
      if (!positive && in[0].color == B && in[1].color == A) out.push_back({-zed(), {}, in});
      break;
    }
    case SliceKind::identity:
      out.push_back({Scalar(1), {}, in});
      break;
  }
  return out;
}

// --------------------------------------------------------------------- psi

std::vector<LocalTerm> psi_image(const Slice& s, const Boundary& in) {
  std::vector<LocalTerm> out;
  const Boundary pm{kPlus, kMinus}, mp{kMinus, kPlus};
  switch (s.kind) {
    case SliceKind::cup:
      out.push_back({Scalar(1), {cup0(Chirality::cw, Var::t)}, pm});
      out.push_back({mono({{Var::t, 1}, {Var::q, -1}}), {cup0(Chirality::ccw, Var::t)}, mp});
      break;
    case SliceKind::cap:
      if (in == pm) out.push_back({mono({{Var::t, -1}, {Var::q, 1}}), {cap0(Chirality::cw)}, {}});
      if (in == mp) out.push_back({Scalar(1), {cap0(Chirality::ccw)}, {}});
      break;
    case SliceKind::pos_cross:
      out.push_back(crossing_through(s, in));
      if (in == pm) {
        out.push_back({zed(), {}, pm});
        out.push_back({-zed() * mono({{Var::t, -1}, {Var::q, 1}}), turnback(pm, pm), pm});
      }
      break;
    case SliceKind::neg_cross:
      out.push_back(crossing_through(s, in));
      if (in == mp) {
        out.push_back({-zed(), {}, mp});
        out.push_back({zed() * mono({{Var::t, 1}, {Var::q, -1}}), turnback(mp, mp), mp});
      }
      break;
    case SliceKind::identity:
      out.push_back({Scalar(1), {}, in});
      break;
  }
  return out;
}

// --------------------------------------------------------------------- chi

std::vector<LocalTerm> chi_image(const Slice& s, const Boundary& in) {
  std::vector<LocalTerm> out;
  const Boundary pm{kPlus, kMinus}, mp{kMinus, kPlus}, zz{kZero, kZero};
  const Scalar z = zed();
  switch (s.kind) {
    case SliceKind::cup:
      out.push_back({mono({{Var::t, -1}, {Var::a, -1}}), {cup0(Chirality::cw, Var::t)}, pm});
      out.push_back({mono({{Var::a, 1}, {Var::q, -1}}), {cup0(Chirality::ccw, Var::t)}, mp});
      out.push_back({mono({{Var::t, -1}}), {cup0(Chirality::none, Var::s)}, zz});
      break;
    case SliceKind::cap:
      if (in == pm) out.push_back({mono({{Var::a, -1}, {Var::q, 1}}), {cap0(Chirality::cw)}, {}});
      if (in == mp) out.push_back({mono({{Var::t, 1}, {Var::a, 1}}), {cap0(Chirality::ccw)}, {}});
      if (in == zz) out.push_back({mono({{Var::t, 1}}), {cap0(Chirality::none)}, {}});
      break;
    case SliceKind::pos_cross:
      out.push_back(crossing_through(s, in));
      if (in == pm) {
        out.push_back({z, {}, pm});
        // s^-1 t^-1 = a^-2 q t^-1
        out.push_back({-z * mono({{Var::a, -2}, {Var::q, 1}, {Var::t, -1}}), turnback(pm, pm), pm});
        out.push_back({-z * mono({{Var::t, -1}, {Var::a, -1}, {Var::q, 1}}), turnback(pm, zz), zz});
      }
      if (in == Boundary{kPlus, kZero} || in == Boundary{kZero, kMinus}) out.push_back({z, {}, in});
      if (in == zz) out.push_back({-z * mono({{Var::a, -1}}), turnback(zz, pm), pm});
      break;
    case SliceKind::neg_cross:
      out.push_back(crossing_through(s, in));
      if (in == mp) {
        out.push_back({-z, {}, mp});
        // s t = a^2 q^-1 t
        out.push_back({z * mono({{Var::a, 2}, {Var::q, -1}, {Var::t, 1}}), turnback(mp, mp), mp});
        out.push_back({z * mono({{Var::a, 1}}), turnback(mp, zz), zz});
      }
      if (in == Boundary{kZero, kPlus} || in == Boundary{kMinus, kZero}) out.push_back({-z, {}, in});
      if (in == zz)
        out.push_back({z * mono({{Var::t, 1}, {Var::a, 1}, {Var::q, -1}}), turnback(zz, mp), mp});
      break;
    case SliceKind::identity:
      out.push_back({Scalar(1), {}, in});
      break;
  }
  return out;
}

LaurentPoly lp_mono(std::initializer_list<std::pair<Var, int>> powers) { return mono(powers).num(); }

}  // namespace

FunctorSpec::FunctorSpec(FunctorId id) : id_(id) {
  switch (id) {
    case FunctorId::phi_tq:
      name_ = "phi-tq";
      source_color_ = Var::t;
      source_oriented_ = true;
      target_kinds_ = {{Var::t, SkeinKind::homfly}, {Var::q, SkeinKind::homfly}};
      source_binding_ = {{Var::t, lp_mono({{Var::t, 1}, {Var::q, 1}})}};
      break;
    case FunctorId::phi_su:
      name_ = "phi-su";
      source_color_ = Var::t;
      source_oriented_ = true;
      target_kinds_ = {{Var::s, SkeinKind::homfly}, {Var::u, SkeinKind::homfly}};
      source_binding_ = {{Var::t, lp_mono({{Var::s, 1}, {Var::u, 1}})}};
      break;
    case FunctorId::psi:
      name_ = "psi";
      source_color_ = Var::s;
      source_oriented_ = false;
      target_kinds_ = {{Var::t, SkeinKind::homfly}};
      source_binding_ = {{Var::s, lp_mono({{Var::t, 2}, {Var::q, -1}})}};
      break;
    case FunctorId::chi:
      name_ = "chi";
      source_color_ = Var::s;
      source_oriented_ = false;
      target_kinds_ = {{Var::t, SkeinKind::homfly}, {Var::s, SkeinKind::kauffman}};
      source_binding_ = {{Var::s, lp_mono({{Var::a, 2}, {Var::q, -1}, {Var::t, 2}})}};
      target_binding_ = {{Var::s, lp_mono({{Var::a, 2}, {Var::q, -1}})}};
      break;
  }
}

const FunctorSpec& FunctorSpec::get(FunctorId id) {
  static const FunctorSpec specs[] = {FunctorSpec(FunctorId::phi_tq), FunctorSpec(FunctorId::phi_su),
                                      FunctorSpec(FunctorId::psi), FunctorSpec(FunctorId::chi)};
  return specs[static_cast<int>(id)];
}

const std::vector<FunctorId>& FunctorSpec::all() {
  static const std::vector<FunctorId> ids{FunctorId::phi_tq, FunctorId::phi_su, FunctorId::psi,
                                          FunctorId::chi};
  return ids;
}

const FunctorSpec& FunctorSpec::by_name(const std::string& name) {
  std::string n = name;
  for (char& c : n)
    if (c == '_') c = '-';
  for (FunctorId id : all())
    if (get(id).name() == n) return get(id);
  throw FunctorError("unknown functor '" + name + "' (expected phi-tq, phi-su, psi or chi)");
}

std::vector<Strand> FunctorSpec::states(const Strand& source) const {
  switch (id_) {
    case FunctorId::phi_tq: return {{Var::t, source.dir}, {Var::q, source.dir}};
    case FunctorId::phi_su: return {{Var::s, source.dir}, {Var::u, source.dir}};
    case FunctorId::psi: return {kPlus, kMinus};
    case FunctorId::chi: return {kPlus, kMinus, kZero};
  }
  return {};
}

std::vector<LocalTerm> FunctorSpec::local_image(const Slice& slice, const Boundary& input) const {
  const std::size_t arity = slice.kind == SliceKind::cup ? 0 : slice.kind == SliceKind::identity ? input.size() : 2;
  if (input.size() != arity) throw FunctorError("wrong number of input states for slice");
  if (slice.kind == SliceKind::cup && slice.color != source_color_)
    throw FunctorError(std::string("source cup must have color ") + var_name(source_color_));
  switch (id_) {
    case FunctorId::phi_tq: return phi_image({Var::t, Var::q}, slice, input);
    case FunctorId::phi_su: return phi_image({Var::s, Var::u}, slice, input);
    case FunctorId::psi: return psi_image(slice, input);
    case FunctorId::chi: return chi_image(slice, input);
  }
  return {};
}

std::vector<LocalTerm> FunctorSpec::local_image(const Slice& slice, const Boundary& input,
                                                const Boundary& output) const {
  std::vector<LocalTerm> all = local_image(slice, input);
  std::vector<LocalTerm> out;
  for (auto& t : all)
    if (t.output == output) out.push_back(std::move(t));
  return out;
}

SkeinContext FunctorSpec::target_context(PivotOrder pivot) const {
  return SkeinContext::mixed(target_kinds_, pivot);
}

Scalar FunctorSpec::source_invariant(const MorseWord& word) const {
  if (source_oriented_) return eval_homfly(recolored(word, source_color_), Var::t);
  return eval_kauffman(unoriented(word, Var::s), Var::s);
}

MorseWord prepare_source(const FunctorSpec& spec, const MorseWord& word) {
  if (!spec.source_oriented()) return unoriented(word, spec.source_color());
  for (const auto& c : validate(word).components)
    if (!c.oriented) throw FunctorError(spec.name() + " needs an oriented source diagram");
  return upward_crossings(recolored(word, spec.source_color()));
}

namespace {

void encode_slices(std::string& key, const std::vector<Slice>& slices) {
  for (const Slice& s : slices) {
    key.push_back(static_cast<char>('0' + static_cast<int>(s.kind)));
    key.push_back(static_cast<char>(s.pos));
    if (s.kind == SliceKind::cup || s.kind == SliceKind::cap)
      key.push_back(static_cast<char>('0' + static_cast<int>(s.chirality)));
    if (s.kind == SliceKind::cup) key.push_back(var_name(s.color));
  }
}

struct Branch {
  Boundary row;
  std::vector<Slice> slices;
  Scalar weight;
};

std::string row_key(const Boundary& row) {
  std::string k;
  for (const Strand& st : row) {
    k.push_back(var_name(st.color));
    k.push_back(static_cast<char>('1' + static_cast<int>(st.dir)));
  }
  return k;
}

}  // namespace

ExpansionBlocks expand_open(const FunctorSpec& spec, const MorseWord& word, const Boundary& input) {
  validate(word);
  if (input.size() != word.source.size()) throw FunctorError("input states do not match the source boundary");
  for (std::size_t i = 0; i < input.size(); ++i) {
    const Strand& src = word.source[i];
    if (src.color != spec.source_color() || (src.dir != Dir::none) != spec.source_oriented())
      throw FunctorError("source boundary strand does not match " + spec.name());
    const auto st = spec.states(src);
    if (std::find(st.begin(), st.end(), input[i]) == st.end())
      throw FunctorError("input state is not a valid state for " + spec.name());
  }

  std::map<std::string, Branch> cur;
  cur.emplace(row_key(input), Branch{input, {}, Scalar(1)});
  for (const Slice& s : word.slices) {
    if (s.kind == SliceKind::identity) continue;
    std::map<std::string, Branch> next;
    for (const auto& [key, br] : cur) {
      Boundary in;
      if (s.kind != SliceKind::cup) in = {br.row[s.pos], br.row[s.pos + 1]};
      for (const LocalTerm& lt : spec.local_image(s, in)) {
        Branch nb{br.row, br.slices, br.weight * lt.coeff};
        const auto at = nb.row.begin() + s.pos;
        if (s.kind == SliceKind::cup) {
          nb.row.insert(at, lt.output.begin(), lt.output.end());
        } else if (s.kind == SliceKind::cap) {
          nb.row.erase(at, at + 2);
        } else {
          nb.row[s.pos] = lt.output[0];
          nb.row[s.pos + 1] = lt.output[1];
        }
        for (Slice f : lt.fragment) {
          f.pos += s.pos;
          nb.slices.push_back(f);
        }
        std::string k = row_key(nb.row) + "|";
        encode_slices(k, nb.slices);
        auto [it, inserted] = next.try_emplace(std::move(k), std::move(nb));
        if (!inserted) it->second.weight += nb.weight;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.weight.is_zero() ? next.erase(it) : std::next(it);
    cur = std::move(next);
  }

  ExpansionBlocks blocks;
  for (auto& [key, br] : cur)
    blocks[br.row].push_back({br.weight, MorseWord{input, std::move(br.slices)}});
  return blocks;
}

std::vector<ExpansionTerm> expand(const FunctorSpec& spec, const MorseWord& word) {
  if (!is_closed(word)) throw FunctorError("expand needs a closed source diagram");
  const MorseWord src = prepare_source(spec, word);
  auto blocks = expand_open(spec, src, {});
  if (blocks.empty()) return {};
  auto terms = std::move(blocks.begin()->second);
  for (const auto& t : terms) {
    const ComponentMap cm = validate(t.word);
    for (const auto& c : cm.components)
      if (!spec.target_kinds().contains(c.color))
        throw FunctorError("expansion produced a component of unexpected color");
  }
  std::vector<std::pair<std::string, ExpansionTerm>> keyed;
  keyed.reserve(terms.size());
  for (auto& t : terms) keyed.emplace_back(render_morse(t.word), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  terms.clear();
  for (auto& [k, t] : keyed) terms.push_back(std::move(t));
  return terms;
}

RecursionReport verify_recursion(const FunctorSpec& spec, const MorseWord& word, Execution exec,
                                 const std::string& link_name) {
  const auto start = std::chrono::steady_clock::now();
  RecursionReport rep;
  rep.functor = spec.name();
  rep.link = link_name;
  rep.lhs = spec.source_invariant(word).substitute(spec.source_binding());

  const std::vector<ExpansionTerm> terms = expand(spec, word);
  rep.term_count = terms.size();
  const SkeinContext ctx = spec.target_context();
  std::vector<Scalar> values(terms.size());
  auto eval_term = [&](std::size_t i) {
    values[i] = terms[i].weight * ctx.evaluate(terms[i].word).substitute(spec.target_binding());
  };
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < terms.size(); ++i) eval_term(i);
  } else {
    std::exception_ptr error;
    const auto n = static_cast<std::int64_t>(terms.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        eval_term(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  for (const Scalar& v : values) rep.rhs += v;
  rep.equal = rep.lhs == rep.rhs;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace skeinrec
