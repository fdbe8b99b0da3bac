#include "skeinrec/skein.hpp"

#include <array>
#include <cstdlib>
#include <mutex>
#include <unordered_map>

namespace skeinrec {

namespace {

constexpr std::array<std::array<int, 2>, 4> kSlotVec{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};

bool on_under_strand(const PlanarDiagram& pd, int slot) {
  const bool odd = (slot % 4) % 2 == 1;
  return pd.over13[slot / 4] ? !odd : odd;
}

// Crossing sign given the entry slot of each strand.
int sign_from_entries(int over_entry, int under_entry) {
  auto dir = [](int entry) {
    const auto& a = kSlotVec[entry % 4];
    const auto& b = kSlotVec[(entry ^ 2) % 4];
    return std::array<int, 2>{b[0] - a[0], b[1] - a[1]};
  };
  const auto o = dir(over_entry);
  const auto u = dir(under_entry);
  return o[0] * u[1] - o[1] * u[0] > 0 ? 1 : -1;
}

std::pair<int, int> strand_slots(const PlanarDiagram& pd, int c, bool over) {
  const bool odd_pair = pd.over13[c] == over;
  const int base = 4 * c + (odd_pair ? 1 : 0);
  return {base, base + 2};
}

int oriented_sign(const PlanarDiagram& pd, int c) {
  auto [o1, o2] = strand_slots(pd, c, true);
  auto [u1, u2] = strand_slots(pd, c, false);
  return sign_from_entries(pd.out[o1] ? o2 : o1, pd.out[u1] ? u2 : u1);
}

// Replaces crossing c by the two slot pairings (local slot indices) and
// removes it, relabeling the last crossing into its place.
PlanarDiagram smooth(const PlanarDiagram& pd, int c, std::array<int, 2> p1, std::array<int, 2> p2) {
  PlanarDiagram r = pd;
  auto join = [&](int x, int y) {
    const int px = r.next[x], py = r.next[y];
    if (px == y) {
      ++r.free_loops;
      return;
    }
    r.next[px] = py;
    r.next[py] = px;
  };
  join(4 * c + p1[0], 4 * c + p1[1]);
  join(4 * c + p2[0], 4 * c + p2[1]);

  const int last = pd.crossings() - 1;
  auto remap = [&](int x) { return x / 4 == last ? 4 * c + x % 4 : x; };
  PlanarDiagram out;
  out.free_loops = r.free_loops;
  out.next.assign(4 * last, -1);
  out.out.assign(4 * last, 0);
  out.over13.assign(last, 0);
  for (int x = 0; x < 4 * pd.crossings(); ++x) {
    if (x / 4 == c) continue;
    out.next[remap(x)] = remap(r.next[x]);
    out.out[remap(x)] = r.out[x];
  }
  for (int k = 0; k <= last; ++k)
    if (k != c) out.over13[remap(4 * k) / 4] = r.over13[k];
  return out;
}

PlanarDiagram switched(const PlanarDiagram& pd, int c) {
  PlanarDiagram r = pd;
  r.over13[c] = !r.over13[c];
  return r;
}

}  // namespace

std::string PlanarDiagram::key(bool with_orientation) const {
  std::string k;
  k.reserve(next.size() * 3 + over13.size() + 1);
  for (int x : next) {
    k.push_back(static_cast<char>(x & 0xff));
    k.push_back(static_cast<char>(x >> 8));
  }
  k.push_back('|');
  for (char o : over13) k.push_back(o ? '1' : '0');
  if (with_orientation)
    for (char o : out) k.push_back(o ? '1' : '0');
  return k;
}

PlanarDiagram to_planar(const MorseWord& word) {
  const Trace tr = trace(word);
  if (!tr.source_segments.empty() || !tr.target_segments.empty())
    throw SkeinError("evaluation requires a closed diagram");

  // Segment s has bottom end 2s and top end 2s+1.
  const int ends = 2 * tr.segment_count;
  std::vector<int> join(ends, -1), slot_of_end(ends, -1), end_of_slot;
  for (auto [l, r] : tr.cups) {
    join[2 * l] = 2 * r;
    join[2 * r] = 2 * l;
  }
  for (auto [l, r] : tr.caps) {
    join[2 * l + 1] = 2 * r + 1;
    join[2 * r + 1] = 2 * l + 1;
  }
  PlanarDiagram pd;
  const int n = static_cast<int>(tr.crossings.size());
  end_of_slot.resize(4 * n);
  pd.over13.resize(n);
  pd.out.resize(4 * n);
  for (int c = 0; c < n; ++c) {
    const auto& x = tr.crossings[c];
    const std::array<int, 4> e{2 * x.bottom_left + 1, 2 * x.bottom_right + 1, 2 * x.top_right,
                               2 * x.top_left};
    const std::array<int, 4> seg{x.bottom_left, x.bottom_right, x.top_right, x.top_left};
    for (int k = 0; k < 4; ++k) {
      end_of_slot[4 * c + k] = e[k];
      slot_of_end[e[k]] = 4 * c + k;
      const bool upward = tr.orientation[seg[k]] == 1;
      pd.out[4 * c + k] = k < 2 ? !upward : upward;
    }
    pd.over13[c] = !x.positive_kind;
  }

  std::vector<char> visited(tr.segment_count, 0);
  pd.next.assign(4 * n, -1);
  for (int k = 0; k < 4 * n; ++k) {
    int e = end_of_slot[k];
    for (;;) {
      e ^= 1;
      visited[e / 2] = 1;
      if (slot_of_end[e] >= 0) break;
      e = join[e];
    }
    pd.next[k] = slot_of_end[e];
  }
  for (int s = 0; s < tr.segment_count; ++s) {
    if (visited[s]) continue;
    ++pd.free_loops;
    int e = 2 * s;
    do {
      visited[e / 2] = 1;
      e = join[e ^ 1];
    } while (e / 2 != s);
  }
  return pd;
}

int max_crossings_from_env() {
  if (const char* v = std::getenv("SKEIN_MAX_CROSSINGS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n <= 0 || n > 64)
      throw SkeinError(std::string("SKEIN_MAX_CROSSINGS must be an integer in 1..64, got '") + v + "'");
    return static_cast<int>(n);
  }
  return 12;
}

// Descending-diagram recursion for one skein on monochromatic diagrams.
class SkeinContext::Engine {
 public:
  Engine(SkeinKind kind, Var framing, PivotOrder pivot)
      : kind_(kind),
        framing_(framing),
        pivot_(pivot),
        loop_(kind == SkeinKind::homfly ? constants::homfly_loop(framing)
                                        : constants::kauffman_loop(framing)) {}

  SkeinKind kind() const { return kind_; }

  Scalar eval(const PlanarDiagram& pd) {
    if (pd.free_loops > 0) {
      PlanarDiagram core = pd;
      core.free_loops = 0;
      return loop_.pow(pd.free_loops) * eval(core);
    }
    if (pd.crossings() == 0) return Scalar(1);
    const std::string key = pd.key(kind_ == SkeinKind::homfly);
    {
      std::lock_guard lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Scalar v = compute(pd);
    std::lock_guard lock(mu_);
    memo_.emplace(key, v);
    return v;
  }

  std::size_t memo_size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
  }

 private:
  Scalar compute(const PlanarDiagram& pd) {
    const int n = pd.crossings();
    const bool oriented = kind_ == SkeinKind::homfly;
    std::vector<int> comp(4 * n, -1);
    std::vector<char> entered(4 * n, 0), seen(n, 0);
    int components = 0, bad = -1;
    auto walk = [&](int start) {
      if (comp[start] >= 0 || (oriented && pd.out[start])) return;
      const int id = components++;
      int k = start;
      do {
        entered[k] = 1;
        comp[k] = comp[k ^ 2] = id;
        const int c = k / 4;
        if (!seen[c]) {
          seen[c] = 1;
          if (bad < 0 && on_under_strand(pd, k)) bad = c;
        }
        k = pd.next[k ^ 2];
      } while (k != start);
    };
    if (pivot_ == PivotOrder::forward) {
      for (int k = 0; k < 4 * n; ++k) walk(k);
    } else {
      for (int k = 4 * n - 1; k >= 0; --k) walk(k);
    }

    if (bad < 0) {
      int writhe = 0;
      for (int c = 0; c < n; ++c) {
        auto [o1, o2] = strand_slots(pd, c, true);
        auto [u1, u2] = strand_slots(pd, c, false);
        if (comp[o1] != comp[u1]) continue;
        writhe += sign_from_entries(entered[o1] ? o1 : o2, entered[u1] ? u1 : u2);
      }
      return loop_.pow(components) * Scalar::var(framing_, writhe);
    }

    const Scalar z(Scalar::z());
    const int c = bad;
    Scalar result = eval(switched(pd, c));
    if (oriented) {
      const int sign = oriented_sign(pd, c);
      const bool horizontal = pd.out[4 * c] != pd.out[4 * c + 1];
      PlanarDiagram l0 = horizontal ? smooth(pd, c, {0, 1}, {2, 3}) : smooth(pd, c, {0, 3}, {1, 2});
      Scalar term = z * eval(l0);
      result += sign > 0 ? term : -term;
    } else {
      std::array<int, 4> ck{};
      for (int k = 0; k < 4; ++k) ck[k] = pd.over13[c] ? k : (k + 1) % 4;
      result += z * eval(smooth(pd, c, {ck[0], ck[1]}, {ck[2], ck[3]}));
      result -= z * eval(smooth(pd, c, {ck[0], ck[3]}, {ck[1], ck[2]}));
    }
    return result;
  }

  SkeinKind kind_;
  Var framing_;
  PivotOrder pivot_;
  Scalar loop_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, Scalar> memo_;
};

SkeinContext SkeinContext::homfly(Var framing, PivotOrder pivot) {
  SkeinContext ctx;
  ctx.single_framing_ = framing;
  ctx.kinds_[framing] = SkeinKind::homfly;
  ctx.engines_[framing] = std::make_shared<Engine>(SkeinKind::homfly, framing, pivot);
  return ctx;
}

SkeinContext SkeinContext::kauffman(Var framing, PivotOrder pivot) {
  SkeinContext ctx;
  ctx.single_framing_ = framing;
  ctx.kinds_[framing] = SkeinKind::kauffman;
  ctx.engines_[framing] = std::make_shared<Engine>(SkeinKind::kauffman, framing, pivot);
  return ctx;
}

SkeinContext SkeinContext::mixed(const std::map<Var, SkeinKind>& kinds, PivotOrder pivot) {
  if (kinds.empty()) throw SkeinError("mixed context needs at least one color");
  SkeinContext ctx;
  ctx.mixed_ = true;
  ctx.kinds_ = kinds;
  for (auto [color, kind] : kinds) ctx.engines_[color] = std::make_shared<Engine>(kind, color, pivot);
  return ctx;
}

std::size_t SkeinContext::memo_size() const {
  std::size_t n = 0;
  for (const auto& [v, e] : engines_) n += e->memo_size();
  return n;
}

namespace {

void check_strand_kinds(const MorseWord& word, SkeinKind kind) {
  const ComponentMap cm = validate(word);
  for (const auto& comp : cm.components) {
    if (kind == SkeinKind::homfly && !comp.oriented)
      throw SkeinError(std::string("unoriented component of color ") + var_name(comp.color) +
                       " in a HOMFLY evaluation");
    if (kind == SkeinKind::kauffman && comp.oriented)
      throw SkeinError(std::string("oriented component of color ") + var_name(comp.color) +
                       " in a Kauffman evaluation");
  }
}

}  // namespace

Scalar SkeinContext::evaluate(const MorseWord& word) const {
  if (!is_closed(word)) throw SkeinError("evaluation requires a closed diagram");
  const std::vector<Var> colors = colors_of(word);
  if (colors.empty()) return Scalar(1);
  if (!mixed_) {
    if (colors.size() > 1) throw SkeinError("mixed colors present in a single-skein evaluation");
    const auto& engine = engines_.begin()->second;
    check_strand_kinds(word, engine->kind());
    const PlanarDiagram pd = to_planar(word);
    if (pd.crossings() > max_crossings)
      throw SkeinError("diagram has " + std::to_string(pd.crossings()) +
                       " crossings, above the SKEIN_MAX_CROSSINGS limit " + std::to_string(max_crossings));
    return engine->eval(pd);
  }
  Scalar result(1);
  for (Var color : colors) {
    auto it = engines_.find(color);
    if (it == engines_.end())
      throw SkeinError(std::string("no skein registered for color ") + var_name(color));
    const MorseWord sub = subdiagram_by_color(word, color);
    check_strand_kinds(sub, it->second->kind());
    const PlanarDiagram pd = to_planar(sub);
    if (pd.crossings() > max_crossings)
      throw SkeinError("color " + std::string(1, var_name(color)) + " has " +
                       std::to_string(pd.crossings()) + " crossings, above the SKEIN_MAX_CROSSINGS limit " +
                       std::to_string(max_crossings));
    result *= it->second->eval(pd);
  }
  return result;
}

Scalar eval_homfly(const MorseWord& word, Var framing) {
  return SkeinContext::homfly(framing).evaluate(word);
}

Scalar eval_kauffman(const MorseWord& word, Var framing) {
  return SkeinContext::kauffman(framing).evaluate(word);
}

Scalar eval_mixed(const MorseWord& word, const SkeinContext& ctx) { return ctx.evaluate(word); }

Scalar normalize_unframed(const MorseWord& word, Var framing) {
  const int w = validate(word).total_writhe;
  return Scalar::var(framing, -w) * eval_homfly(word, framing);
}

}  // namespace skeinrec
