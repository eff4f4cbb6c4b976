#include "qpw/act.hpp"

#include <algorithm>

#include "qpw/error.hpp"

namespace qpw {

ConsequenceScale::ConsequenceScale(std::vector<std::string> ids,
                                   std::optional<std::vector<Rational>> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
  if (ids_.empty()) throw PreconditionError("consequence scale must be non-empty");
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (ids_[i] == ids_[j]) throw PreconditionError("duplicate consequence \"" + ids_[i] + "\"");
  if (values_ && values_->size() != ids_.size())
    throw PreconditionError("consequence values do not match the consequence list");
}

std::optional<Consequence> ConsequenceScale::find(std::string_view id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<Consequence>(it - ids_.begin());
}

Consequence ConsequenceScale::at(std::string_view id) const {
  if (auto c = find(id)) return *c;
  throw PreconditionError("unknown consequence \"" + std::string(id) + "\"");
}

const Rational& ConsequenceScale::value(Consequence c) const {
  if (!values_) throw PreconditionError("consequence scale carries no values");
  return values_->at(c);
}

Act two_valued_act(const StateSpace& space, Event a, Consequence c, Consequence d) {
  std::vector<Consequence> out(space.size());
  for (int s = 0; s < space.size(); ++s) out[s] = a.contains(s) ? c : d;
  return Act(std::move(out));
}

Act two_valued_act(const StateSpace& space, const ConsequenceScale& scale, Event a,
                   std::string_view c, std::string_view d) {
  return two_valued_act(space, a, scale.at(c), scale.at(d));
}

Act constant_act(const StateSpace& space, Consequence c) {
  return Act(std::vector<Consequence>(space.size(), c));
}

bool equal_on(const Act& f, const Act& g, Event a) {
  for (int s = 0; s < f.size(); ++s)
    if (a.contains(s) && f[s] != g[s]) return false;
  return true;
}

Act splice(const Act& f, Event a, Consequence c) {
  auto out = f.outcome();
  for (int s = 0; s < f.size(); ++s)
    if (a.contains(s)) out[s] = c;
  return Act(std::move(out));
}

ActSet::ActSet(int states, int consequences, std::vector<Act> acts)
    : states_(states), consequences_(consequences), acts_(std::move(acts)) {
  for (ActId id = 0; id < acts_.size(); ++id) {
    const auto& act = acts_[id];
    if (act.size() != states_) throw PreconditionError("act defined on the wrong number of states");
    for (int s = 0; s < states_; ++s)
      if (act[s] < 0 || act[s] >= consequences_)
        throw PreconditionError("act refers to an unknown consequence");
    if (!index_.emplace(code(act), id).second) throw PreconditionError("duplicate act in act set");
  }

  const std::size_t events = std::size_t{1} << states_;
  classes_.resize(events * acts_.size());
  class_counts_.resize(events);
  std::unordered_map<std::uint64_t, std::uint32_t> dense;
  for (std::size_t m = 0; m < events; ++m) {
    dense.clear();
    const Event a(static_cast<Event::Mask>(m));
    for (ActId id = 0; id < acts_.size(); ++id) {
      std::uint64_t key = 0;
      for (int s = states_ - 1; s >= 0; --s)
        key = key * (consequences_ + 1) + (a.contains(s) ? acts_[id][s] + 1 : 0);
      const auto [it, inserted] = dense.emplace(key, static_cast<std::uint32_t>(dense.size()));
      classes_[m * acts_.size() + id] = it->second;
    }
    class_counts_[m] = static_cast<std::uint32_t>(dense.size());
  }
}

std::uint64_t ActSet::code(const Act& act) const {
  std::uint64_t key = 0;
  for (int s = states_ - 1; s >= 0; --s) key = key * consequences_ + act[s];
  return key;
}

ActSet ActSet::all(const StateSpace& space, const ConsequenceScale& scale, std::size_t cap) {
  const int n = space.size();
  const int k = scale.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k;
    if (total > cap)
      throw GuardExceeded("full act set exceeds the cap of " + std::to_string(cap) + " acts");
  }
  std::vector<Act> acts;
  acts.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Consequence> out(n);
    auto rest = code;
    for (int s = 0; s < n; ++s) {
      out[s] = static_cast<Consequence>(rest % k);
      rest /= k;
    }
    acts.emplace_back(std::move(out));
  }
  return ActSet(n, k, std::move(acts));
}

ActSet ActSet::two_valued(const StateSpace& space, const ConsequenceScale& scale) {
  std::vector<Act> acts;
  for (Event::Mask m = 0; m < space.event_count(); ++m)
    for (Consequence c = 0; c < scale.size(); ++c)
      for (Consequence d = 0; d < scale.size(); ++d)
        acts.push_back(two_valued_act(space, Event(m), c, d));
  const int k = scale.size();
  auto code = [k](const Act& a) {
    std::uint64_t key = 0;
    for (int s = a.size() - 1; s >= 0; --s) key = key * k + a[s];
    return key;
  };
  std::sort(acts.begin(), acts.end(), [&](const Act& x, const Act& y) { return code(x) < code(y); });
  acts.erase(std::unique(acts.begin(), acts.end()), acts.end());
  return ActSet(space.size(), k, std::move(acts));
}

ActSet ActSet::from_acts(const StateSpace& space, const ConsequenceScale& scale,
                         std::vector<Act> acts) {
  return ActSet(space.size(), scale.size(), std::move(acts));
}

std::optional<ActId> ActSet::find(const Act& act) const {
  if (act.size() != states_) return std::nullopt;
  const auto it = index_.find(code(act));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ActId ActSet::id_of(const Act& act) const {
  if (auto id = find(act)) return *id;
  throw PreconditionError("act is not in the registered act set");
}

std::string format_act(const StateSpace& space, const ConsequenceScale& scale, const Act& act) {
  std::string out = "{";
  for (int s = 0; s < space.size(); ++s) {
    if (s) out += ", ";
    out += space.name(s) + "↦" + scale.id(act[s]);
  }
  return out + "}";
}

}  // namespace qpw
