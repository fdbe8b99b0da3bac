#pragma once

// Evaluation of closed colored Morse words in the framed HOMFLY skein, the
// framed (Dubrovnik) Kauffman skein, and the mixed category in which
// differently colored strands cross transparently.
//
// HOMFLY (framing variable v, z = q - q^-1):
//   X+ - X- = z * (oriented smoothing),  positive curl = v,  loop = (v - v^-1)/z
// Kauffman (framing variable s):
//   X - X' = z * (vertical - horizontal smoothing) for X = pos_cross,
//   positive curl = s,  loop = 1 + (s - s^-1)/z

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinrec/diagram.hpp"
#include "skeinrec/scalar.hpp"

namespace skeinrec {

class SkeinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SkeinKind { homfly, kauffman };

// Crossing-level planar diagram of a closed monochromatic word.
//
// Crossing c owns slots 4c..4c+3 in counterclockwise order SW, SE, NE, NW.
// One strand runs through slots 0-2, the other through 1-3; over13 marks the
// 1-3 strand as the upper one. next[] is the perfect matching of slots along
// diagram edges; out[] marks slots where the oriented strand leaves.
struct PlanarDiagram {
  std::vector<int> next;
  std::vector<char> over13;
  std::vector<char> out;
  int free_loops = 0;

  int crossings() const { return static_cast<int>(over13.size()); }
  // Memo key; free_loops is not part of it.
  std::string key(bool with_orientation) const;
};

PlanarDiagram to_planar(const MorseWord& closed_word);

// Order in which components and base points are chosen by the descending
// recursion. The value never depends on it.
enum class PivotOrder { forward, reverse };

// SKEIN_MAX_CROSSINGS, default 12; throws SkeinError when malformed.
int max_crossings_from_env();

class SkeinContext {
 public:
  static SkeinContext homfly(Var framing, PivotOrder pivot = PivotOrder::forward);
  static SkeinContext kauffman(Var framing = Var::s, PivotOrder pivot = PivotOrder::forward);
  static SkeinContext mixed(const std::map<Var, SkeinKind>& kinds,
                            PivotOrder pivot = PivotOrder::forward);

  // Closed word; monochromatic unless the context is mixed. Safe to call
  // concurrently: each color engine guards its memo with a mutex.
  Scalar evaluate(const MorseWord& closed_word) const;

  bool is_mixed() const { return mixed_; }
  const std::map<Var, SkeinKind>& kinds() const { return kinds_; }
  std::size_t memo_size() const;

  int max_crossings = max_crossings_from_env();

  class Engine;

 private:
  SkeinContext() = default;
  bool mixed_ = false;
  Var single_framing_ = Var::t;
  std::map<Var, SkeinKind> kinds_;
  std::map<Var, std::shared_ptr<Engine>> engines_;
};

Scalar eval_homfly(const MorseWord& word, Var framing = Var::t);
Scalar eval_kauffman(const MorseWord& word, Var framing = Var::s);
Scalar eval_mixed(const MorseWord& word, const SkeinContext& ctx);
// framing^(-writhe) * eval_homfly(word, framing)
Scalar normalize_unframed(const MorseWord& word, Var framing = Var::t);

}  // namespace skeinrec
