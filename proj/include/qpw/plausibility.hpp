#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qpw/bit_matrix.hpp"
#include "qpw/check_report.hpp"
#include "qpw/event.hpp"
#include "qpw/preference.hpp"

namespace qpw {

// Binary relation A <= B on all events of a space.
class EventRelation {
 public:
  explicit EventRelation(StateSpace space);
  EventRelation(StateSpace space, std::span<const std::pair<Event, Event>> pairs);

  const StateSpace& space() const { return space_; }
  std::size_t event_count() const { return space_.event_count(); }
  const BitMatrix& matrix() const { return pairs_; }

  bool leq(Event a, Event b) const { return pairs_.test(a.index(), b.index()); }
  bool less(Event a, Event b) const { return leq(a, b) && !leq(b, a); }
  bool equivalent(Event a, Event b) const { return leq(a, b) && leq(b, a); }
  void set(Event a, Event b, bool value = true) { pairs_.set(a.index(), b.index(), value); }

  bool is_total() const;
  bool contains(const EventRelation& other) const;
  EventRelation reflexive_transitive_closure() const;
  std::size_t pair_count() const { return pairs_.count(); }

  friend bool operator==(const EventRelation&, const EventRelation&) = default;

 private:
  StateSpace space_;
  BitMatrix pairs_;
};

// A <= B iff w_A^{c,d} <=_{A u B} w_B^{c,d} for every strict constant pair d < c.
// Throws PreconditionError when the constants are ordered inconsistently
// across non-null events or have no strict pair.
EventRelation derive_plausibility(const ConditionalPreferenceStructure& p);

// Reflexivity, transitivity and the four generalized-qualitative-probability
// conditions. Witness conditions: "reflexive", "transitive", "condition 1".."condition 4".
CheckReport check_gqp(const EventRelation& r);

// A << B iff B is not <= the empty event and A u B <= B - A.
bool is_ll(const EventRelation& r, Event a, Event b);

// Property suite of a generalized qualitative probability, one report per
// property. When `source` is given, the properties linking the relation to
// null events and negligibility of the source structure are included.
std::vector<CheckReport> check_gqp_lemmas(const EventRelation& r,
                                          const ConditionalPreferenceStructure* source = nullptr);

// Compares << with two readings of its informal description
// ("ll-gloss-literal", "ll-gloss-reversed"). Diagnostic only.
std::vector<CheckReport> check_ll_gloss(const EventRelation& r);

// Re-evaluates a witness of check_gqp, check_gqp_lemmas, check_ll_gloss or the
// equipartition checks. Source-linked subjects need `source`.
bool replay_witness(const EventRelation& r, std::string_view subject, const Witness& w,
                    const ConditionalPreferenceStructure* source = nullptr);

struct FamilyFlags {
  bool total = false;
  bool standard = false;
  bool purely_nonstandard = false;
  // A <= B implies complement(B) <= complement(A).
  bool complement_criterion = false;

  bool criterion_agrees() const { return standard == complement_criterion; }
};

FamilyFlags classify_family(const EventRelation& r);

// With phi_z, psi_z the parts of A where f resp. g yield z: if every
// phi_z ~ psi_z in `derived`, then f ~_A g must hold in p. The report
// passes when the hypothesis fails or the conclusion holds.
CheckReport check_equipartition_equivalence(const ConditionalPreferenceStructure& p,
                                            const EventRelation& derived, Event a, ActId f,
                                            ActId g);
CheckReport check_equipartition_equivalence(const ConditionalPreferenceStructure& p, Event a,
                                            ActId f, ActId g);
// Every (A, f, g) of the structure.
CheckReport check_equipartition_all(const ConditionalPreferenceStructure& p);
CheckReport check_equipartition_all(const ConditionalPreferenceStructure& p,
                                    const EventRelation& derived);

// A total preorder rendered as a chain "∅ < {a} < {b} ∼ {a,b}"; empty
// string for anything else.
std::string format_chain(const EventRelation& r);

}  // namespace qpw
