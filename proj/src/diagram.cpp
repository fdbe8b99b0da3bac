#include "skeinrec/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skeinrec {

bool operator==(const Slice& a, const Slice& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SliceKind::identity: return true;
    case SliceKind::cup: return a.pos == b.pos && a.chirality == b.chirality && a.color == b.color;
    case SliceKind::cap: return a.pos == b.pos && a.chirality == b.chirality;
    default: return a.pos == b.pos;
  }
}

std::pair<Dir, Dir> extremum_dirs(Chirality c) {
  switch (c) {
    case Chirality::cw: return {Dir::up, Dir::down};
    case Chirality::ccw: return {Dir::down, Dir::up};
    default: return {Dir::none, Dir::none};
  }
}

Chirality chirality_of(Dir left, Dir right) {
  if (left == Dir::none && right == Dir::none) return Chirality::none;
  if (left == Dir::up && right == Dir::down) return Chirality::cw;
  if (left == Dir::down && right == Dir::up) return Chirality::ccw;
  throw DiagramError("strand orientations cannot meet at an extremum");
}

namespace {

// Union-find carrying the relative orientation parity of each segment.
class ParityUnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    parity_.push_back(0);
    return parent_.back();
  }
  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // path compression
    int acc = p;
    while (parent_[x] != x) {
      const int next = parent_[x];
      const int px = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {r, p};
  }
  // Records orientation(a) == orientation(b) (flip = 0) or opposite (flip = 1).
  void unite(int a, int b, int flip) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return;
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ flip;
  }

 private:
  std::vector<int> parent_, parity_;
};

}  // namespace

Trace trace(const MorseWord& word) {
  Trace tr;
  ParityUnionFind uf;
  std::vector<int> cur;
  auto new_segment = [&](Strand st) {
    tr.segment.push_back(st);
    return uf.add();
  };
  for (const Strand& st : word.source) {
    const int id = new_segment(st);
    cur.push_back(id);
    tr.source_segments.push_back(id);
  }
  for (std::size_t k = 0; k < word.slices.size(); ++k) {
    const Slice& sl = word.slices[k];
    const int slice = static_cast<int>(k);
    const int width = static_cast<int>(cur.size());
    switch (sl.kind) {
      case SliceKind::identity:
        break;
      case SliceKind::cup: {
        if (sl.pos < 0 || sl.pos > width) throw DiagramError("cup position out of range", slice);
        auto [dl, dr] = extremum_dirs(sl.chirality);
        const int l = new_segment({sl.color, dl});
        const int r = new_segment({sl.color, dr});
        uf.unite(l, r, 1);
        tr.cups.emplace_back(l, r);
        cur.insert(cur.begin() + sl.pos, {l, r});
        break;
      }
      case SliceKind::cap: {
        if (sl.pos < 0 || sl.pos + 1 >= width) throw DiagramError("cap position out of range", slice);
        const int l = cur[sl.pos], r = cur[sl.pos + 1];
        const Strand& sll = tr.segment[l];
        const Strand& slr = tr.segment[r];
        if (sll.color != slr.color) throw DiagramError("cap joins strands of different colors", slice);
        auto [dl, dr] = extremum_dirs(sl.chirality);
        if (sll.dir != dl || slr.dir != dr) throw DiagramError("cap orientation mismatch", slice);
        uf.unite(l, r, 1);
        tr.caps.emplace_back(l, r);
        cur.erase(cur.begin() + sl.pos, cur.begin() + sl.pos + 2);
        break;
      }
      case SliceKind::pos_cross:
      case SliceKind::neg_cross: {
        if (sl.pos < 0 || sl.pos + 1 >= width) throw DiagramError("crossing position out of range", slice);
        const int bl = cur[sl.pos], br = cur[sl.pos + 1];
        const int tl = new_segment(tr.segment[br]);
        const int trr = new_segment(tr.segment[bl]);
        uf.unite(bl, trr, 0);
        uf.unite(br, tl, 0);
        tr.crossings.push_back({slice, sl.kind == SliceKind::pos_cross, bl, br, tl, trr});
        cur[sl.pos] = tl;
        cur[sl.pos + 1] = trr;
        break;
      }
    }
  }
  tr.segment_count = static_cast<int>(tr.segment.size());
  tr.target_segments = cur;
  for (int id : cur) tr.target.push_back(tr.segment[id]);

  // Components and resolved orientations.
  std::vector<int> root_index(tr.segment_count, -1);
  std::vector<int> root_orient(tr.segment_count, 0);
  for (int i = 0; i < tr.segment_count; ++i) {
    auto [r, p] = uf.find(i);
    if (root_orient[r] == 0 && tr.segment[i].dir != Dir::none)
      root_orient[r] = static_cast<int>(tr.segment[i].dir) * (p ? -1 : 1);
  }
  tr.component.resize(tr.segment_count);
  tr.orientation.resize(tr.segment_count);
  for (int i = 0; i < tr.segment_count; ++i) {
    auto [r, p] = uf.find(i);
    if (root_index[r] < 0) root_index[r] = tr.component_count++;
    tr.component[i] = root_index[r];
    const int o = root_orient[r] == 0 ? 1 : root_orient[r];
    tr.orientation[i] = p ? -o : o;
  }
  return tr;
}

Boundary target(const MorseWord& word) { return trace(word).target; }

bool is_closed(const MorseWord& word) { return word.source.empty() && target(word).empty(); }

int crossing_count(const MorseWord& word) {
  return static_cast<int>(std::count_if(word.slices.begin(), word.slices.end(),
                                        [](const Slice& s) { return s.is_crossing(); }));
}

ComponentMap validate(const MorseWord& word) {
  const Trace tr = trace(word);
  ComponentMap map;
  map.segment_component = tr.component;
  map.components.resize(tr.component_count);
  std::vector<bool> seen(tr.component_count, false);
  for (int i = 0; i < tr.segment_count; ++i) {
    auto& c = map.components[tr.component[i]];
    if (!seen[tr.component[i]]) {
      c = {tr.segment[i].color, tr.segment[i].dir != Dir::none, true, 0};
      seen[tr.component[i]] = true;
    } else if (c.color != tr.segment[i].color) {
      throw DiagramError("color changes along a component");
    }
  }
  for (int id : tr.source_segments) map.components[tr.component[id]].closed = false;
  for (int id : tr.target_segments) map.components[tr.component[id]].closed = false;
  for (const auto& x : tr.crossings) {
    const int sign = crossing_sign(x.positive_kind, tr.orientation[x.bottom_left],
                                   tr.orientation[x.bottom_right]);
    map.total_writhe += sign;
    if (tr.component[x.bottom_left] == tr.component[x.bottom_right])
      map.components[tr.component[x.bottom_left]].self_writhe += sign;
  }
  return map;
}

MorseWord identity_word(const Boundary& b) { return MorseWord{b, {}}; }

MorseWord compose(const MorseWord& top, const MorseWord& bottom) {
  if (target(bottom) != top.source) throw DiagramError("boundary mismatch in composition");
  MorseWord w = bottom;
  w.slices.insert(w.slices.end(), top.slices.begin(), top.slices.end());
  trace(w);
  return w;
}

MorseWord mirror(const MorseWord& word) {
  MorseWord w = word;
  for (auto& s : w.slices) {
    if (s.kind == SliceKind::pos_cross)
      s.kind = SliceKind::neg_cross;
    else if (s.kind == SliceKind::neg_cross)
      s.kind = SliceKind::pos_cross;
  }
  return w;
}

MorseWord disjoint_union(const MorseWord& a, const MorseWord& b) {
  if (!is_closed(a) || !is_closed(b)) throw DiagramError("disjoint union needs closed words");
  MorseWord w = a;
  w.slices.insert(w.slices.end(), b.slices.begin(), b.slices.end());
  return w;
}

MorseWord unoriented(const MorseWord& word, Var color) {
  MorseWord w = word;
  for (auto& st : w.source) st = {color, Dir::none};
  for (auto& s : w.slices) {
    if (s.kind == SliceKind::cup || s.kind == SliceKind::cap) s.chirality = Chirality::none;
    if (s.kind == SliceKind::cup) s.color = color;
  }
  return w;
}

MorseWord recolored(const MorseWord& word, Var color) {
  MorseWord w = word;
  for (auto& st : w.source) st.color = color;
  for (auto& s : w.slices)
    if (s.kind == SliceKind::cup) s.color = color;
  return w;
}

namespace {

// Running strand states after the first `count` slices.
Boundary states_after(const MorseWord& word, std::size_t count) {
  MorseWord prefix{word.source, {word.slices.begin(), word.slices.begin() + count}};
  return target(prefix);
}

Dir opposite_or_none(Dir d) { return d == Dir::none ? Dir::none : reversed(d); }

}  // namespace

MorseWord add_curl(const MorseWord& word, int pos, bool positive, std::size_t after_slice,
                   bool cup_right) {
  if (after_slice > word.slices.size()) throw DiagramError("curl level out of range");
  const Boundary row = states_after(word, after_slice);
  if (pos < 0 || pos >= static_cast<int>(row.size())) throw DiagramError("curl strand out of range");
  const Strand st = row[pos];
  const Dir d = st.dir;
  std::vector<Slice> curl;
  if (cup_right) {
    const Chirality c = chirality_of(d, opposite_or_none(d));
    curl = {Slice::cup(pos + 1, c, st.color), Slice::cross(pos, positive), Slice::cap(pos + 1, c)};
  } else {
    const Chirality c = chirality_of(opposite_or_none(d), d);
    curl = {Slice::cup(pos, c, st.color), Slice::cross(pos + 1, positive), Slice::cap(pos, c)};
  }
  MorseWord w = word;
  w.slices.insert(w.slices.begin() + static_cast<std::ptrdiff_t>(after_slice), curl.begin(),
                  curl.end());
  return w;
}

MorseWord upward_crossings(const MorseWord& word) {
  MorseWord out{word.source, {}};
  Boundary row = word.source;
  auto apply = [&](const Slice& s) {
    out.slices.push_back(s);
    switch (s.kind) {
      case SliceKind::cup: {
        auto [l, r] = extremum_dirs(s.chirality);
        row.insert(row.begin() + s.pos, {Strand{s.color, l}, Strand{s.color, r}});
        break;
      }
      case SliceKind::cap:
        row.erase(row.begin() + s.pos, row.begin() + s.pos + 2);
        break;
      case SliceKind::pos_cross:
      case SliceKind::neg_cross:
        std::swap(row[s.pos], row[s.pos + 1]);
        break;
      default:
        break;
    }
  };
  trace(word);
  for (const Slice& s : word.slices) {
    if (!s.is_crossing()) {
      apply(s);
      continue;
    }
    const int i = s.pos;
    const Strand a = row[i], b = row[i + 1];
    if (a.dir == Dir::none || b.dir == Dir::none)
      throw DiagramError("upward rewrite needs oriented strands");
    const bool positive = s.kind == SliceKind::pos_cross;
    if (a.dir == Dir::up && b.dir == Dir::up) {
      apply(s);
    } else if (a.dir == Dir::down && b.dir == Dir::up) {
      apply(Slice::cup(i + 2, Chirality::cw, a.color));
      apply(Slice::cross(i + 1, !positive));
      apply(Slice::cap(i, Chirality::ccw));
    } else if (a.dir == Dir::up && b.dir == Dir::down) {
      apply(Slice::cup(i, Chirality::ccw, b.color));
      apply(Slice::cross(i + 1, !positive));
      apply(Slice::cap(i + 2, Chirality::cw));
    } else {
      apply(Slice::cup(i + 2, Chirality::cw, a.color));
      apply(Slice::cup(i + 3, Chirality::cw, b.color));
      apply(Slice::cross(i + 2, positive));
      apply(Slice::cap(i + 1, Chirality::ccw));
      apply(Slice::cap(i, Chirality::ccw));
    }
  }
  return out;
}

MorseWord subdiagram_by_color(const MorseWord& word, Var color) {
  trace(word);
  MorseWord out;
  std::vector<char> keep;
  for (const Strand& st : word.source) {
    keep.push_back(st.color == color);
    if (st.color == color) out.source.push_back(st);
  }
  Boundary row = word.source;
  auto kept_index = [&](int p) {
    return static_cast<int>(std::count(keep.begin(), keep.begin() + p, char{1}));
  };
  for (const Slice& s : word.slices) {
    switch (s.kind) {
      case SliceKind::identity:
        break;
      case SliceKind::cup: {
        auto [l, r] = extremum_dirs(s.chirality);
        const bool k = s.color == color;
        if (k) out.slices.push_back(Slice::cup(kept_index(s.pos), s.chirality, s.color));
        keep.insert(keep.begin() + s.pos, {k, k});
        row.insert(row.begin() + s.pos, {Strand{s.color, l}, Strand{s.color, r}});
        break;
      }
      case SliceKind::cap: {
        if (keep[s.pos]) out.slices.push_back(Slice::cap(kept_index(s.pos), s.chirality));
        keep.erase(keep.begin() + s.pos, keep.begin() + s.pos + 2);
        row.erase(row.begin() + s.pos, row.begin() + s.pos + 2);
        break;
      }
      default: {
        const bool kl = keep[s.pos], kr = keep[s.pos + 1];
        if (kl && kr)
          out.slices.push_back(Slice{s.kind, kept_index(s.pos), Chirality::none, Var::t});
        else if (kl || kr)
          out.slices.push_back(Slice::identity());
        std::swap(keep[s.pos], keep[s.pos + 1]);
        std::swap(row[s.pos], row[s.pos + 1]);
        break;
      }
    }
  }
  return out;
}

std::vector<Var> colors_of(const MorseWord& word) {
  const Trace tr = trace(word);
  std::set<Var> colors;
  for (const Strand& st : tr.segment) colors.insert(st.color);
  return {colors.begin(), colors.end()};
}

}  // namespace skeinrec
