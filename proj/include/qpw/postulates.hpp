#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qpw/check_report.hpp"
#include "qpw/error.hpp"
#include "qpw/preference.hpp"

namespace qpw {

enum class Postulate { Q0, Q1, Q2, Q3, Q4, Q4Strong, Q5, Q6, Q7, R };

inline constexpr Postulate kAllPostulates[] = {
    Postulate::Q0, Postulate::Q1, Postulate::Q2,       Postulate::Q3, Postulate::Q4,
    Postulate::Q4Strong, Postulate::Q5, Postulate::Q6, Postulate::Q7, Postulate::R};

// "Q0" .. "Q7", "Q'4", "R".
std::string_view postulate_name(Postulate p);
std::optional<Postulate> parse_postulate(std::string_view name);

struct PostulateOptions {
  // Condition Q5 on non-empty events rather than on non-null ones.
  bool q5_nonempty = false;
};

CheckReport check_postulate(const ConditionalPreferenceStructure& p, Postulate id,
                            const PostulateOptions& options = {});

// The eleven consequences of Q0-Q6 on preferences between acts, one report each.
// Subjects: equivalent-acts, empty-event-trivial, indifference-union,
// indifference-split, strict-union, strict-split, weak-union, strict-both-union,
// sure-thing, bet-extension, losing-bets.
std::vector<CheckReport> check_derived_lemmas(const ConditionalPreferenceStructure& p);

// Re-evaluates a witness of check_postulate or check_derived_lemmas directly
// against the structure. True iff the binding still violates `subject`.
bool replay_witness(const ConditionalPreferenceStructure& p, std::string_view subject,
                    const Witness& w, const PostulateOptions& options = {});

// Every ordered act pair is related at A.
bool is_null_event(const ConditionalPreferenceStructure& p, Event a);

// A is negligible compared to B: <=_{A u B} and <=_B coincide on the act set.
// Throws PreconditionError unless A and B are disjoint.
bool is_negligible(const ConditionalPreferenceStructure& p, Event a, Event b);

// Preference between constant acts, read off the non-null events.
class ConsequenceOrder {
 public:
  explicit ConsequenceOrder(int size) : size_(size), leq_(size * size, false) {}

  int size() const { return size_; }
  bool leq(Consequence c, Consequence d) const { return leq_[c * size_ + d]; }
  bool less(Consequence c, Consequence d) const { return leq(c, d) && !leq(d, c); }
  void set(Consequence c, Consequence d, bool value) { leq_[c * size_ + d] = value; }
  bool has_strict_pair() const;

  friend bool operator==(const ConsequenceOrder&, const ConsequenceOrder&) = default;

 private:
  int size_;
  std::vector<bool> leq_;
};

struct ConstantsDisagreement : PreconditionError {
  ConstantsDisagreement(const std::string& what, Event first, Event second, Consequence c,
                        Consequence d)
      : PreconditionError(what), first(first), second(second), c(c), d(d) {}
  Event first, second;
  Consequence c, d;
};

// Throws ConstantsDisagreement if two non-null events order some constant
// pair differently. With every event null the result is the total relation.
ConsequenceOrder constants_order(const ConditionalPreferenceStructure& p);

}  // namespace qpw
