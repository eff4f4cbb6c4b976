#pragma once

#include <vector>

#include "qpw/act.hpp"
#include "qpw/hyperreal.hpp"
#include "qpw/preference.hpp"

namespace qpw {

// Per-state (possibly non-standard) probability weights summing exactly to 1.
// Every weight is strictly positive, so only the empty event has probability 0.
class ProbabilityModel {
 public:
  ProbabilityModel(StateSpace space, std::vector<Hyperreal> weights);
  // Standard weights, degree 0.
  static ProbabilityModel standard(StateSpace space, std::vector<Rational> weights);
  static ProbabilityModel uniform(StateSpace space);

  const StateSpace& space() const { return space_; }
  const std::vector<Hyperreal>& weights() const { return weights_; }
  int degree() const { return weights_.front().degree(); }
  bool is_standard() const;
  Hyperreal probability(Event a) const;

 private:
  StateSpace space_;
  std::vector<Hyperreal> weights_;
};

// States in ascending plausibility; the last one dominates any event holding it.
class RankedModel {
 public:
  RankedModel(StateSpace space, std::vector<int> ascending);

  const StateSpace& space() const { return space_; }
  const std::vector<int>& ascending() const { return ascending_; }
  // Maximal state of a non-empty event.
  int top(Event a) const;

 private:
  StateSpace space_;
  std::vector<int> ascending_;
  std::vector<int> rank_;
};

// f <=_A g iff the A-weighted value sum of f is <= that of g; <=_∅ total.
// Requires standard weights and valued consequences.
ConditionalPreferenceStructure expectation_structure(const ProbabilityModel& model,
                                                     const ConsequenceScale& scale);
ConditionalPreferenceStructure expectation_structure(const ProbabilityModel& model,
                                                     const ConsequenceScale& scale, ActSet acts);

// f <_A g iff N_f(A) < N_g(A) and the difference has the order of P(A), i.e.
// the conditional expectations differ by a non-infinitesimal amount.
// f <=_A g iff not g <_A f.
ConditionalPreferenceStructure hyperreal_structure(const ProbabilityModel& model,
                                                   const ConsequenceScale& scale);
ConditionalPreferenceStructure hyperreal_structure(const ProbabilityModel& model,
                                                   const ConsequenceScale& scale, ActSet acts);

// f <=_A g iff value(f(top A)) <= value(g(top A)); <=_∅ total.
ConditionalPreferenceStructure ranked_structure(const RankedModel& model,
                                                const ConsequenceScale& scale);
ConditionalPreferenceStructure ranked_structure(const RankedModel& model,
                                                const ConsequenceScale& scale, ActSet acts);

}  // namespace qpw
