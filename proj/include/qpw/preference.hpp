#pragma once

#include <span>
#include <vector>

#include "qpw/act.hpp"
#include "qpw/bit_matrix.hpp"
#include "qpw/event.hpp"

namespace qpw {

enum class PairClass { StrictlyPreferredSecond, StrictlyPreferredFirst, Indifferent, Undecided };

std::string_view to_string(PairClass c);

// One relation f <=_A g per event A over an explicit act set.
//
// The act set must contain every two-valued act w_A^{c,d}; the relation at
// each event is a |acts| x |acts| bit matrix with (f, g) set iff f <=_A g.
class ConditionalPreferenceStructure {
 public:
  ConditionalPreferenceStructure(StateSpace space, ConsequenceScale scale, ActSet acts,
                                 std::vector<BitMatrix> relation);

  const StateSpace& space() const { return space_; }
  const ConsequenceScale& scale() const { return scale_; }
  const ActSet& acts() const { return acts_; }
  const BitMatrix& relation(Event a) const { return relation_[a.index()]; }

  bool leq(Event a, ActId f, ActId g) const { return relation_[a.index()].test(f, g); }
  bool less(Event a, ActId f, ActId g) const { return leq(a, f, g) && !leq(a, g, f); }
  bool indifferent(Event a, ActId f, ActId g) const { return leq(a, f, g) && leq(a, g, f); }

  ActId constant(Consequence c) const { return constants_[c]; }
  ActId two_valued(Event a, Consequence c, Consequence d) const;

  // Copy with a single pair forced present or absent; no closure is applied.
  ConditionalPreferenceStructure with_pair(Event a, ActId f, ActId g, bool present) const;

  friend bool operator==(const ConditionalPreferenceStructure&,
                         const ConditionalPreferenceStructure&) = default;

 private:
  StateSpace space_;
  ConsequenceScale scale_;
  ActSet acts_;
  std::vector<BitMatrix> relation_;
  std::vector<ActId> constants_;
  // [event][c][d] -> id of w_A^{c,d}
  std::vector<ActId> two_valued_;
};

PairClass classify_pair(const ConditionalPreferenceStructure& p, Event a, ActId f, ActId g);
// Throws PreconditionError if either act is unregistered.
PairClass classify_pair(const ConditionalPreferenceStructure& p, Event a, const Act& f,
                        const Act& g);

struct Generator {
  Event event;
  ActId first;   // first <=_event second
  ActId second;
};

// Smallest structure containing the generators that is reflexive, contains
// every indifference forced by agreement on the event, and is transitive
// per event. No closure under the cross-event postulates is attempted.
ConditionalPreferenceStructure saturate(StateSpace space, ConsequenceScale scale, ActSet acts,
                                        std::span<const Generator> generators);

}  // namespace qpw
