#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpw {

inline constexpr int kMaxStates = 8;

// A subset of a finite state space, stored as a bitmask over the state ordering.
// Bit i is state i. The mask doubles as the canonical event index.
class Event {
 public:
  using Mask = std::uint32_t;

  constexpr Event() = default;
  constexpr explicit Event(Mask mask) : mask_(mask) {}

  constexpr Mask mask() const { return mask_; }
  constexpr std::size_t index() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int state) const { return (mask_ >> state) & 1u; }
  constexpr bool subset_of(Event other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint(Event other) const { return (mask_ & other.mask_) == 0; }

  friend constexpr Event operator|(Event a, Event b) { return Event(a.mask_ | b.mask_); }
  friend constexpr Event operator&(Event a, Event b) { return Event(a.mask_ & b.mask_); }
  // Set difference.
  friend constexpr Event operator-(Event a, Event b) { return Event(a.mask_ & ~b.mask_); }

  friend constexpr auto operator<=>(Event, Event) = default;

 private:
  Mask mask_ = 0;
};

class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  std::size_t event_count() const { return std::size_t{1} << names_.size(); }
  Event full() const { return Event((Event::Mask{1} << names_.size()) - 1); }
  Event complement(Event a) const { return full() - a; }
  Event singleton(int state) const { return Event(Event::Mask{1} << state); }

  const std::string& name(int state) const { return names_.at(state); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  // Throws ParseError on an unknown state name.
  Event event(std::span<const std::string> members) const;
  Event event(std::initializer_list<std::string_view> members) const;

  // "{a,b}" or "∅".
  std::string format(Event a) const;

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

 private:
  std::vector<std::string> names_;
};

// All events of a space of `n` states in canonical (mask) order.
inline std::vector<Event> all_events(const StateSpace& space) {
  std::vector<Event> out;
  out.reserve(space.event_count());
  for (Event::Mask m = 0; m < space.event_count(); ++m) out.emplace_back(m);
  return out;
}

}  // namespace qpw
