#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qpw/event.hpp"
#include "qpw/rational.hpp"

namespace qpw {

// Index of a consequence within its scale.
using Consequence = int;
using ActId = std::uint32_t;

inline constexpr std::size_t kDefaultActCap = 10'000;

// Finite set of consequences, optionally carrying an exact value each.
// Values are only consumed by the model generators.
class ConsequenceScale {
 public:
  explicit ConsequenceScale(std::vector<std::string> ids,
                            std::optional<std::vector<Rational>> values = std::nullopt);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(Consequence c) const { return ids_.at(c); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Consequence> find(std::string_view id) const;
  // Throws PreconditionError on an unknown identifier.
  Consequence at(std::string_view id) const;

  bool has_values() const { return values_.has_value(); }
  const Rational& value(Consequence c) const;

  friend bool operator==(const ConsequenceScale&, const ConsequenceScale&) = default;

 private:
  std::vector<std::string> ids_;
  std::optional<std::vector<Rational>> values_;
};

// Total map from states to consequences.
class Act {
 public:
  Act() = default;
  explicit Act(std::vector<Consequence> outcome) : outcome_(std::move(outcome)) {}

  int size() const { return static_cast<int>(outcome_.size()); }
  Consequence operator[](int state) const { return outcome_[state]; }
  const std::vector<Consequence>& outcome() const { return outcome_; }

  friend bool operator==(const Act&, const Act&) = default;

 private:
  std::vector<Consequence> outcome_;
};

// w_A^{c,d}: c on A, d elsewhere.
Act two_valued_act(const StateSpace& space, Event a, Consequence c, Consequence d);
Act two_valued_act(const StateSpace& space, const ConsequenceScale& scale, Event a,
                   std::string_view c, std::string_view d);
Act constant_act(const StateSpace& space, Consequence c);

// f and g agree on every state of A.
bool equal_on(const Act& f, const Act& g, Event a);

// f with its values on A replaced by c.
Act splice(const Act& f, Event a, Consequence c);

// An explicit, finite, duplicate-free act universe with per-event
// agreement classes (f and g share a class on A iff they agree on A).
class ActSet {
 public:
  // Every act in F^S. Throws GuardExceeded above `cap`.
  static ActSet all(const StateSpace& space, const ConsequenceScale& scale,
                    std::size_t cap = kDefaultActCap);
  // Every w_A^{c,d} (constants included), in canonical order.
  static ActSet two_valued(const StateSpace& space, const ConsequenceScale& scale);
  static ActSet from_acts(const StateSpace& space, const ConsequenceScale& scale,
                          std::vector<Act> acts);

  std::size_t size() const { return acts_.size(); }
  const Act& operator[](ActId id) const { return acts_[id]; }
  const std::vector<Act>& acts() const { return acts_; }
  int state_count() const { return states_; }
  int consequence_count() const { return consequences_; }

  std::optional<ActId> find(const Act& act) const;
  // Throws PreconditionError if the act is not registered.
  ActId id_of(const Act& act) const;

  std::uint32_t class_of(Event a, ActId f) const { return classes_[a.index() * acts_.size() + f]; }
  std::uint32_t class_count(Event a) const { return class_counts_[a.index()]; }
  bool agree_on(Event a, ActId f, ActId g) const { return class_of(a, f) == class_of(a, g); }

  friend bool operator==(const ActSet& x, const ActSet& y) { return x.acts_ == y.acts_; }

 private:
  ActSet(int states, int consequences, std::vector<Act> acts);
  std::uint64_t code(const Act& act) const;

  int states_ = 0;
  int consequences_ = 0;
  std::vector<Act> acts_;
  std::unordered_map<std::uint64_t, ActId> index_;
  std::vector<std::uint32_t> classes_;
  std::vector<std::uint32_t> class_counts_;
};

std::string format_act(const StateSpace& space, const ConsequenceScale& scale, const Act& act);

}  // namespace qpw
