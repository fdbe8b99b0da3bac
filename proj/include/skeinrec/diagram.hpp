#pragma once

// Morse presentations of framed tangles. A word is read bottom to top: the
// source boundary is the bottom row of strand ends and every slice acts on
// the running row of strands.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinrec/scalar.hpp"

namespace skeinrec {

class DiagramError : public std::runtime_error {
 public:
  DiagramError(const std::string& what, int slice = -1)
      : std::runtime_error(slice >= 0 ? "slice " + std::to_string(slice) + ": " + what : what),
        slice_(slice) {}
  int slice() const { return slice_; }

 private:
  int slice_;
};

// Orientation of a strand segment; none marks an unoriented (Kauffman) strand.
enum class Dir : std::int8_t { down = -1, none = 0, up = 1 };

inline Dir reversed(Dir d) { return static_cast<Dir>(-static_cast<int>(d)); }

// A boundary point or running strand: its color (the component's variable
// tag) and orientation.
struct Strand {
  Var color = Var::t;
  Dir dir = Dir::up;
  friend auto operator<=>(const Strand&, const Strand&) = default;
};

using Boundary = std::vector<Strand>;

enum class SliceKind : std::uint8_t { identity, cup, cap, pos_cross, neg_cross };

// cw: left end oriented up and right end oriented down (for both cups and
// caps); ccw: the reverse; none: unoriented.
enum class Chirality : std::uint8_t { none, cw, ccw };

// pos_cross passes the strand entering at the lower left over the other one.
struct Slice {
  SliceKind kind = SliceKind::identity;
  int pos = 0;
  Chirality chirality = Chirality::none;
  Var color = Var::t;  // cups only: color of the new component arc

  static Slice identity() { return {}; }
  static Slice cup(int pos, Chirality c, Var color) { return {SliceKind::cup, pos, c, color}; }
  static Slice cap(int pos, Chirality c) { return {SliceKind::cap, pos, c, Var::t}; }
  static Slice cross(int pos, bool positive) {
    return {positive ? SliceKind::pos_cross : SliceKind::neg_cross, pos, Chirality::none, Var::t};
  }
  bool is_crossing() const { return kind == SliceKind::pos_cross || kind == SliceKind::neg_cross; }

  friend bool operator==(const Slice& a, const Slice& b);
};

struct MorseWord {
  Boundary source;
  std::vector<Slice> slices;
  friend bool operator==(const MorseWord&, const MorseWord&) = default;
};

// Strand directions created by a cup / required by a cap of given chirality.
std::pair<Dir, Dir> extremum_dirs(Chirality c);
Chirality chirality_of(Dir left, Dir right);  // throws if the pair cannot be capped

// Segment-level trace of a word. Segments are maximal strand pieces between
// slices; every crossing records the four segments meeting at it.
struct Trace {
  struct Crossing {
    int slice;
    bool positive_kind;  // pos_cross
    int bottom_left, bottom_right, top_left, top_right;
  };
  int segment_count = 0;
  std::vector<Strand> segment;     // declared color and orientation
  std::vector<int> orientation;    // +1 up / -1 down; assigned for unoriented strands
  std::vector<int> component;      // component index of each segment
  int component_count = 0;
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> cups, caps;  // (left, right) segments
  std::vector<int> source_segments, target_segments;
  Boundary target;
};

// Throws DiagramError on any ill-formed slice; the message names it.
Trace trace(const MorseWord& word);
Boundary target(const MorseWord& word);
bool is_closed(const MorseWord& word);
int crossing_count(const MorseWord& word);

struct ComponentMap {
  struct Component {
    Var color;
    bool oriented;
    bool closed;      // false for arcs ending on the boundary
    int self_writhe;  // signed count of crossings of the component with itself
  };
  std::vector<int> segment_component;
  std::vector<Component> components;
  int total_writhe = 0;  // signed crossing sum; orientation-dependent between components
};

ComponentMap validate(const MorseWord& word);

// Sign of a crossing for the given strand directions (+1/-1 for up/down).
inline int crossing_sign(bool positive_kind, int left_dir, int right_dir) {
  return (positive_kind ? 1 : -1) * left_dir * right_dir;
}

MorseWord identity_word(const Boundary& b);
// top after bottom; requires top.source == target(bottom).
MorseWord compose(const MorseWord& top, const MorseWord& bottom);
MorseWord mirror(const MorseWord& word);
// Split union of two closed words: b is stacked above a.
MorseWord disjoint_union(const MorseWord& a, const MorseWord& b);
// Drops orientation and recolors every strand.
MorseWord unoriented(const MorseWord& word, Var color = Var::s);
MorseWord recolored(const MorseWord& word, Var color);
// Inserts a curl of the given sign on the strand at `pos`, right after
// `after_slice` slices. The cup sits to the right of the strand when
// `cup_right`, else to its left.
MorseWord add_curl(const MorseWord& word, int pos, bool positive, std::size_t after_slice,
                   bool cup_right = true);
// Rewrites every crossing whose strands are not both oriented upward by an
// isotopic fragment made of an upward crossing wrapped in extrema.
MorseWord upward_crossings(const MorseWord& word);

// Keeps the components of one color; crossings with other colors become
// identity slices. Empty word when the color is absent.
MorseWord subdiagram_by_color(const MorseWord& word, Var color);
std::vector<Var> colors_of(const MorseWord& word);

}  // namespace skeinrec
