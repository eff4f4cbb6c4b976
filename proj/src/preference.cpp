#include "qpw/preference.hpp"

#include "qpw/error.hpp"

namespace qpw {

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::StrictlyPreferredSecond: return "strictly-preferred-second";
    case PairClass::StrictlyPreferredFirst: return "strictly-preferred-first";
    case PairClass::Indifferent: return "indifferent";
    case PairClass::Undecided: return "undecided";
  }
  return "?";
}

ConditionalPreferenceStructure::ConditionalPreferenceStructure(StateSpace space,
                                                               ConsequenceScale scale, ActSet acts,
                                                               std::vector<BitMatrix> relation)
    : space_(std::move(space)),
      scale_(std::move(scale)),
      acts_(std::move(acts)),
      relation_(std::move(relation)) {
  if (acts_.state_count() != space_.size() || acts_.consequence_count() != scale_.size())
    throw PreconditionError("act set does not match the state space and consequence scale");
  if (relation_.size() != space_.event_count())
    throw PreconditionError("relation must be given for every event");
  for (const auto& m : relation_)
    if (m.rows() != acts_.size() || m.cols() != acts_.size())
      throw PreconditionError("relation matrix does not match the act set");

  const int k = scale_.size();
  two_valued_.resize(space_.event_count() * k * k);
  for (Event::Mask m = 0; m < space_.event_count(); ++m)
    for (Consequence c = 0; c < k; ++c)
      for (Consequence d = 0; d < k; ++d) {
        const auto id = acts_.find(two_valued_act(space_, Event(m), c, d));
        if (!id)
          throw PreconditionError("act set lacks the two-valued act w_" + space_.format(Event(m)) +
                                  "^{" + scale_.id(c) + "," + scale_.id(d) + "}");
        two_valued_[(m * k + c) * k + d] = *id;
      }
  constants_.resize(k);
  for (Consequence c = 0; c < k; ++c) constants_[c] = two_valued(space_.full(), c, c);
}

ActId ConditionalPreferenceStructure::two_valued(Event a, Consequence c, Consequence d) const {
  const std::size_t k = scale_.size();
  return two_valued_[(a.index() * k + c) * k + d];
}

ConditionalPreferenceStructure ConditionalPreferenceStructure::with_pair(Event a, ActId f, ActId g,
                                                                         bool present) const {
  auto copy = *this;
  copy.relation_[a.index()].set(f, g, present);
  return copy;
}

PairClass classify_pair(const ConditionalPreferenceStructure& p, Event a, ActId f, ActId g) {
  const bool fg = p.leq(a, f, g);
  const bool gf = p.leq(a, g, f);
  if (fg && gf) return PairClass::Indifferent;
  if (fg) return PairClass::StrictlyPreferredSecond;
  if (gf) return PairClass::StrictlyPreferredFirst;
  return PairClass::Undecided;
}

PairClass classify_pair(const ConditionalPreferenceStructure& p, Event a, const Act& f,
                        const Act& g) {
  return classify_pair(p, a, p.acts().id_of(f), p.acts().id_of(g));
}

ConditionalPreferenceStructure saturate(StateSpace space, ConsequenceScale scale, ActSet acts,
                                        std::span<const Generator> generators) {
  const std::size_t n = acts.size();
  std::vector<BitMatrix> relation(space.event_count(), BitMatrix(n, n));
  for (Event::Mask m = 0; m < space.event_count(); ++m) {
    const Event a(m);
    auto& rel = relation[m];
    for (ActId f = 0; f < n; ++f)
      for (ActId g = 0; g < n; ++g)
        if (acts.agree_on(a, f, g)) rel.set(f, g);
  }
  for (const auto& gen : generators) {
    if (gen.event.index() >= space.event_count() || gen.first >= n || gen.second >= n)
      throw PreconditionError("generator refers to an unregistered act");
    relation[gen.event.index()].set(gen.first, gen.second);
  }
  for (auto& rel : relation) rel.transitive_closure();
  return ConditionalPreferenceStructure(std::move(space), std::move(scale), std::move(acts),
                                        std::move(relation));
}

}  // namespace qpw
