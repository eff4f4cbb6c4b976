#include "qpw/event.hpp"

#include <algorithm>

#include "qpw/error.hpp"

namespace qpw {

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("state space must be non-empty");
  if (names_.size() > kMaxStates)
    throw GuardExceeded("state space has " + std::to_string(names_.size()) + " states; at most " +
                        std::to_string(kMaxStates) + " supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw PreconditionError("duplicate state \"" + names_[i] + "\"");
}

std::optional<int> StateSpace::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

Event StateSpace::event(std::span<const std::string> members) const {
  Event::Mask mask = 0;
  for (const auto& m : members) {
    const auto s = find(m);
    if (!s) throw ParseError("", "unknown state \"" + m + "\"");
    mask |= Event::Mask{1} << *s;
  }
  return Event(mask);
}

Event StateSpace::event(std::initializer_list<std::string_view> members) const {
  std::vector<std::string> names;
  for (auto m : members) names.emplace_back(m);
  return event(names);
}

std::string StateSpace::format(Event a) const {
  if (a.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (int s = 0; s < size(); ++s) {
    if (!a.contains(s)) continue;
    if (!first) out += ',';
    out += names_[s];
    first = false;
  }
  return out + "}";
}

}  // namespace qpw
