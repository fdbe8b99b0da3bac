#pragma once

// The four recursion functors as local state-sum tables, the expansion engine
// turning a source diagram into weighted colored target diagrams, and the
// verifier of the global identity
//
//   source_invariant(D) |binding  =  sum_D' w(D, D') * mixed_invariant(D').
//
// Target strand states:
//   phi_tq: colors t, q (HOMFLY each), orientation inherited from the source.
//   phi_su: colors s, u (HOMFLY each), orientation inherited from the source.
//   psi:    color t (HOMFLY), state + = up, - = down; source is Kauffman.
//   chi:    + = (t, up), - = (t, down), 0 = (s, unoriented Kauffman);
//           weights live in {q, t, a} with s = a^2 q^-1.

#include <map>
#include <string>
#include <vector>

#include "skeinrec/diagram.hpp"
#include "skeinrec/scalar.hpp"
#include "skeinrec/skein.hpp"

namespace skeinrec {

class FunctorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FunctorId { phi_tq, phi_su, psi, chi };

// One entry of a local table: a coefficient, the target fragment replacing
// the slice (positions relative to the slice position; empty = identity),
// and the states of the strands leaving the fragment at the top.
struct LocalTerm {
  Scalar coeff;
  std::vector<Slice> fragment;
  Boundary output;
};

class FunctorSpec {
 public:
  static const FunctorSpec& get(FunctorId id);
  // Accepts "phi-tq", "phi_tq", "phi-su", "psi", "chi".
  static const FunctorSpec& by_name(const std::string& name);
  static const std::vector<FunctorId>& all();

  FunctorId id() const { return id_; }
  const std::string& name() const { return name_; }

  // Strand type of source diagrams.
  Var source_color() const { return source_color_; }
  bool source_oriented() const { return source_oriented_; }

  // Target states a source strand of the given type may carry.
  std::vector<Strand> states(const Strand& source) const;

  // Table entries of a slice for the given input states (empty for cups,
  // two states for caps and crossings). Crossings of oriented sources must
  // be upward.
  std::vector<LocalTerm> local_image(const Slice& slice, const Boundary& input) const;
  std::vector<LocalTerm> local_image(const Slice& slice, const Boundary& input,
                                     const Boundary& output) const;

  // Skein type of each target color.
  const std::map<Var, SkeinKind>& target_kinds() const { return target_kinds_; }
  // Applied to the source invariant before comparison.
  const Bindings& source_binding() const { return source_binding_; }
  // Applied to target evaluations (eliminates s for chi).
  const Bindings& target_binding() const { return target_binding_; }

  SkeinContext target_context(PivotOrder pivot = PivotOrder::forward) const;
  // Source invariant of a closed source word, before source_binding.
  Scalar source_invariant(const MorseWord& word) const;

 private:
  explicit FunctorSpec(FunctorId id);
  FunctorId id_;
  std::string name_;
  Var source_color_;
  bool source_oriented_;
  std::map<Var, SkeinKind> target_kinds_;
  Bindings source_binding_, target_binding_;
};

struct ExpansionTerm {
  Scalar weight;
  MorseWord word;
};

// Output boundary -> terms, for a source word with the given input states.
using ExpansionBlocks = std::map<Boundary, std::vector<ExpansionTerm>>;

ExpansionBlocks expand_open(const FunctorSpec& spec, const MorseWord& word, const Boundary& input);

// Closed source word; terms with equal target words are merged and the list
// is sorted by rendered target word.
std::vector<ExpansionTerm> expand(const FunctorSpec& spec, const MorseWord& word);

// Brings a closed oriented word into the source form expected by the functor:
// stripped of orientation (color s) for psi and chi, upward crossings for phi.
MorseWord prepare_source(const FunctorSpec& spec, const MorseWord& word);

enum class Execution { serial, parallel };

struct RecursionReport {
  std::string functor;
  std::string link;
  Scalar lhs;
  Scalar rhs;
  bool equal = false;
  std::size_t term_count = 0;
  double elapsed_ms = 0;
};

RecursionReport verify_recursion(const FunctorSpec& spec, const MorseWord& word,
                                 Execution exec = Execution::parallel,
                                 const std::string& link_name = "");

}  // namespace skeinrec
