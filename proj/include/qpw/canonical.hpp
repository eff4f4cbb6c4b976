#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpw/check_report.hpp"
#include "qpw/plausibility.hpp"
#include "qpw/preference.hpp"

namespace qpw {

// Two consequences low < high, acts w_A for every event A (act id == mask),
// and w_A <=_D w_B iff (D n A) << D or A n D <= B n D.
// Throws PreconditionError unless `r` is a generalized qualitative probability.
ConditionalPreferenceStructure canonical_structure(const EventRelation& r);

// derive_plausibility(canonical_structure(r)) == r, pair by pair.
// Witness condition "missing" (in r only) or "extra" (derived only).
CheckReport roundtrip_check(const EventRelation& r);

enum class ExtensionMode {
  // T contains R and every strict pair of R stays strict in T.
  StrictPreserving,
  // T contains R.
  Superset,
};

struct ExtensionSet {
  EventRelation base;
  std::vector<EventRelation> extensions;
};

inline constexpr int kMaxExtensionStates = 4;
inline constexpr std::size_t kMaxExtensions = 1'000'000;

// All total generalized qualitative probabilities extending `r`.
// Throws PreconditionError if r is not one, GuardExceeded above 4 states.
ExtensionSet enumerate_total_extensions(const EventRelation& r,
                                        ExtensionMode mode = ExtensionMode::StrictPreserving);

enum class ConjectureOutcome { Holds, Fails, NoExtensions };

struct ConjectureResult {
  ConjectureOutcome outcome = ConjectureOutcome::Holds;
  std::size_t extension_count = 0;
  // Witness conditions: "extra" (pair in every extension but not in the
  // base), "no-total-extension".
  CheckReport report;
};

// Does the intersection of all total extensions equal r? Per-instance only.
ConjectureResult conjecture_check(const EventRelation& r,
                                  ExtensionMode mode = ExtensionMode::StrictPreserving);
bool replay_conjecture_witness(const EventRelation& r, const Witness& w, ExtensionMode mode);

// Every generalized qualitative probability on the given space (at most 2 states).
std::vector<EventRelation> enumerate_all_gqp(const StateSpace& space);

enum class SearchTarget {
  // Structures satisfying Q1-Q6 where the equipartition conclusion fails.
  EquipartitionWithoutQ7,
};

struct SearchBounds {
  int n_max = 2;
  int f_max = 2;
  // Exhaustive below `exhaustive_limit` candidates per (n, |F|), sampled above.
  bool exhaustive = true;
  std::uint64_t exhaustive_limit = 200'000;
  std::uint64_t seed = 0;
  std::size_t samples = 2'000;
};

struct Counterexample {
  ConditionalPreferenceStructure structure;
  Event event;
  ActId f;
  ActId g;
  bool satisfies_q7 = false;
};

struct SearchSegment {
  int states = 0;
  int consequences = 0;
  bool exhaustive = false;
  std::uint64_t candidates = 0;
  std::uint64_t models = 0;  // candidates passing Q1-Q6
  std::uint64_t with_q7 = 0;
};

struct SearchOutcome {
  std::optional<Counterexample> witness;
  std::vector<SearchSegment> segments;
  std::uint64_t seed = 0;
  bool exhausted() const { return !witness.has_value(); }
};

SearchOutcome search_counterexample(const SearchBounds& bounds,
                                    SearchTarget target = SearchTarget::EquipartitionWithoutQ7);

}  // namespace qpw
