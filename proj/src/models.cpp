#include "qpw/models.hpp"

#include <algorithm>

#include "qpw/error.hpp"

namespace qpw {

ProbabilityModel::ProbabilityModel(StateSpace space, std::vector<Hyperreal> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != static_cast<std::size_t>(space_.size()))
    throw PreconditionError("one weight per state required");
  Hyperreal total(weights_.front().degree());
  for (int s = 0; s < space_.size(); ++s) {
    if (weights_[s].degree() != total.degree()) throw PreconditionError("weights must share one truncation degree");
    if (weights_[s].sign() <= 0)
      throw PreconditionError("state " + space_.name(s) + " has non-positive weight " + to_string(weights_[s]) +
                              "; only the empty event may have probability zero");
    total += weights_[s];
  }
  if (total != Hyperreal::standard(1, total.degree()))
    throw PreconditionError("weights sum to " + to_string(total) + ", not 1");
}

ProbabilityModel ProbabilityModel::standard(StateSpace space, std::vector<Rational> weights) {
  std::vector<Hyperreal> hw;
  hw.reserve(weights.size());
  for (auto& w : weights) hw.push_back(Hyperreal::standard(std::move(w), 0));
  return ProbabilityModel(std::move(space), std::move(hw));
}

ProbabilityModel ProbabilityModel::uniform(StateSpace space) {
  const int n = space.size();
  return standard(std::move(space), std::vector<Rational>(n, Rational(1, n)));
}

bool ProbabilityModel::is_standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Hyperreal& w) {
    const auto k = w.order();
    return k && *k == 0 && w == Hyperreal::standard(w.standard_part(), w.degree());
  });
}

Hyperreal ProbabilityModel::probability(Event a) const {
  Hyperreal total(degree());
  for (int s = 0; s < space_.size(); ++s)
    if (a.contains(s)) total += weights_[s];
  return total;
}

RankedModel::RankedModel(StateSpace space, std::vector<int> ascending)
    : space_(std::move(space)), ascending_(std::move(ascending)), rank_(space_.size(), -1) {
  if (ascending_.size() != static_cast<std::size_t>(space_.size()))
    throw PreconditionError("ranking must list every state exactly once");
  for (std::size_t i = 0; i < ascending_.size(); ++i) {
    const int s = ascending_[i];
    if (s < 0 || s >= space_.size() || rank_[s] >= 0)
      throw PreconditionError("ranking must list every state exactly once");
    rank_[s] = static_cast<int>(i);
  }
}

int RankedModel::top(Event a) const {
  if (a.empty()) throw PreconditionError("the empty event has no maximal state");
  for (auto it = ascending_.rbegin(); it != ascending_.rend(); ++it)
    if (a.contains(*it)) return *it;
  return -1;
}

namespace {

void require_values(const ConsequenceScale& scale) {
  if (!scale.has_values()) throw PreconditionError("model generators need a value for every consequence");
}

std::vector<BitMatrix> empty_relation(const StateSpace& space, const ActSet& acts) {
  std::vector<BitMatrix> rel(space.event_count(), BitMatrix(acts.size(), acts.size()));
  rel[0].fill(true);
  return rel;
}

// Value-weighted sum of f over A: sum over s in A of value(f(s)) * P(s).
Hyperreal weighted_sum(const ProbabilityModel& model, const ConsequenceScale& scale, const Act& f, Event a) {
  Hyperreal total(model.degree());
  for (int s = 0; s < model.space().size(); ++s)
    if (a.contains(s)) total += model.weights()[s] * scale.value(f[s]);
  return total;
}

// Order of x - y, i.e. the first index where the coefficients differ.
std::optional<int> order_of_difference(const Hyperreal& x, const Hyperreal& y) {
  for (int i = 0; i <= x.degree(); ++i)
    if (x.coefficient(i) != y.coefficient(i)) return i;
  return std::nullopt;
}

}  // namespace

ConditionalPreferenceStructure expectation_structure(const ProbabilityModel& model,
                                                     const ConsequenceScale& scale) {
  return expectation_structure(model, scale, ActSet::all(model.space(), scale));
}

ConditionalPreferenceStructure expectation_structure(const ProbabilityModel& model,
                                                     const ConsequenceScale& scale, ActSet acts) {
  require_values(scale);
  if (!model.is_standard()) throw PreconditionError("expectation model needs standard weights");
  const auto& space = model.space();
  auto rel = empty_relation(space, acts);
  std::vector<Rational> sums(acts.size());
  for (Event::Mask m = 1; m < space.event_count(); ++m) {
    const Event a(m);
    for (ActId f = 0; f < acts.size(); ++f) sums[f] = weighted_sum(model, scale, acts[f], a).standard_part();
    for (ActId f = 0; f < acts.size(); ++f)
      for (ActId g = 0; g < acts.size(); ++g) rel[m].set(f, g, sums[f] <= sums[g]);
  }
  return ConditionalPreferenceStructure(space, scale, std::move(acts), std::move(rel));
}

ConditionalPreferenceStructure hyperreal_structure(const ProbabilityModel& model,
                                                   const ConsequenceScale& scale) {
  return hyperreal_structure(model, scale, ActSet::all(model.space(), scale));
}

ConditionalPreferenceStructure hyperreal_structure(const ProbabilityModel& model,
                                                   const ConsequenceScale& scale, ActSet acts) {
  require_values(scale);
  const auto& space = model.space();
  auto rel = empty_relation(space, acts);
  std::vector<Hyperreal> sums(acts.size());
  for (Event::Mask m = 1; m < space.event_count(); ++m) {
    const Event a(m);
    const int scale_order = *model.probability(a).order();
    for (ActId f = 0; f < acts.size(); ++f) sums[f] = weighted_sum(model, scale, acts[f], a);
    auto& r = rel[m];
    for (ActId f = 0; f < acts.size(); ++f) {
      r.set(f, f);
      for (ActId g = f + 1; g < acts.size(); ++g) {
        // Strict iff the difference is nonzero of the same order as P(A):
        // the conditional expectations then differ by a standard amount.
        const auto k = order_of_difference(sums[g], sums[f]);
        const bool significant = k && *k == scale_order;
        const bool f_below = significant && sums[f].coefficient(*k) < sums[g].coefficient(*k);
        const bool g_below = significant && !f_below;
        r.set(f, g, !g_below);
        r.set(g, f, !f_below);
      }
    }
  }
  return ConditionalPreferenceStructure(space, scale, std::move(acts), std::move(rel));
}

ConditionalPreferenceStructure ranked_structure(const RankedModel& model, const ConsequenceScale& scale) {
  return ranked_structure(model, scale, ActSet::all(model.space(), scale));
}

ConditionalPreferenceStructure ranked_structure(const RankedModel& model, const ConsequenceScale& scale,
                                                ActSet acts) {
  require_values(scale);
  const auto& space = model.space();
  auto rel = empty_relation(space, acts);
  for (Event::Mask m = 1; m < space.event_count(); ++m) {
    const int top = model.top(Event(m));
    for (ActId f = 0; f < acts.size(); ++f)
      for (ActId g = 0; g < acts.size(); ++g)
        rel[m].set(f, g, scale.value(acts[f][top]) <= scale.value(acts[g][top]));
  }
  return ConditionalPreferenceStructure(space, scale, std::move(acts), std::move(rel));
}

}  // namespace qpw
