#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpw/act.hpp"
#include "qpw/event.hpp"

namespace qpw {

inline constexpr std::size_t kMaxWitnesses = 8;

// Variable bindings instantiating a violated implication.
struct Witness {
  std::string condition;
  std::vector<std::pair<std::string, Event>> events;
  std::vector<std::pair<std::string, ActId>> acts;
  std::vector<std::pair<std::string, Consequence>> consequences;

  Witness& event(std::string name, Event e) {
    events.emplace_back(std::move(name), e);
    return *this;
  }
  Witness& act(std::string name, ActId f) {
    acts.emplace_back(std::move(name), f);
    return *this;
  }
  Witness& consequence(std::string name, Consequence c) {
    consequences.emplace_back(std::move(name), c);
    return *this;
  }

  // Throw PreconditionError when the binding is absent.
  Event event(std::string_view name) const;
  ActId act(std::string_view name) const;
  Consequence consequence(std::string_view name) const;
};

// passed <=> no witness and no error. Only the first kMaxWitnesses
// violations (canonical order) are kept; violation_count counts all.
struct CheckReport {
  std::string subject;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::uint64_t checked_count = 0;
  std::uint64_t violation_count = 0;
  std::optional<std::string> error;
  std::vector<std::pair<std::string, std::string>> notes;

  explicit CheckReport(std::string subject_id = {}) : subject(std::move(subject_id)) {}

  void record(Witness w) {
    passed = false;
    ++violation_count;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }
  void fail_with(std::string message) {
    passed = false;
    error = std::move(message);
  }
  void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }
};

}  // namespace qpw
