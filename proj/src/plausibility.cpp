#include "qpw/plausibility.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "qpw/error.hpp"
#include "qpw/postulates.hpp"

namespace qpw {

EventRelation::EventRelation(StateSpace space)
    : space_(std::move(space)), pairs_(space_.event_count(), space_.event_count()) {}

EventRelation::EventRelation(StateSpace space, std::span<const std::pair<Event, Event>> pairs)
    : EventRelation(std::move(space)) {
  for (const auto& [a, b] : pairs) {
    if (a.index() >= event_count() || b.index() >= event_count())
      throw PreconditionError("event outside the state space");
    set(a, b);
  }
}

bool EventRelation::is_total() const {
  for (std::size_t a = 0; a < event_count(); ++a)
    for (std::size_t b = 0; b < event_count(); ++b)
      if (!pairs_.test(a, b) && !pairs_.test(b, a)) return false;
  return true;
}

bool EventRelation::contains(const EventRelation& other) const {
  for (std::size_t a = 0; a < event_count(); ++a)
    for (std::size_t b = 0; b < event_count(); ++b)
      if (other.pairs_.test(a, b) && !pairs_.test(a, b)) return false;
  return true;
}

EventRelation EventRelation::reflexive_transitive_closure() const {
  EventRelation out = *this;
  for (std::size_t a = 0; a < event_count(); ++a) out.pairs_.set(a, a);
  out.pairs_.transitive_closure();
  return out;
}

EventRelation derive_plausibility(const ConditionalPreferenceStructure& p) {
  const auto order = constants_order(p);
  const int k = p.scale().size();
  std::vector<std::pair<Consequence, Consequence>> strict;  // (high, low)
  for (Consequence c = 0; c < k; ++c)
    for (Consequence d = 0; d < k; ++d)
      if (order.less(d, c)) strict.emplace_back(c, d);
  if (strict.empty()) throw PreconditionError("no strictly ordered pair of constants");

  EventRelation r(p.space());
  const auto events = p.space().event_count();
  for (Event::Mask a = 0; a < events; ++a)
    for (Event::Mask b = 0; b < events; ++b) {
      const Event ea(a), eb(b);
      const bool leq = std::all_of(strict.begin(), strict.end(), [&](const auto& cd) {
        return p.leq(ea | eb, p.two_valued(ea, cd.first, cd.second),
                     p.two_valued(eb, cd.first, cd.second));
      });
      r.set(ea, eb, leq);
    }
  return r;
}

bool is_ll(const EventRelation& r, Event a, Event b) {
  return !r.leq(b, Event()) && r.leq(a | b, b - a);
}

namespace {

// A universally quantified property over a tuple of events.
struct Property {
  std::string_view subject;
  std::vector<std::string_view> vars;
  // True iff the tuple violates the property.
  std::function<bool(const EventRelation&, const Event*)> violated;
};

bool disjoint3(Event a, Event b, Event d) { return a.disjoint(d) && b.disjoint(d); }

const std::vector<Property>& gqp_properties() {
  static const std::vector<Property> props = {
      {"preorder", {"A", "B", "C"},
       [](const EventRelation& r, const Event* x) {
         if (x[0] == x[1] && x[1] == x[2] && !r.leq(x[0], x[0])) return true;
         return r.leq(x[0], x[1]) && r.leq(x[1], x[2]) && !r.leq(x[0], x[2]);
       }},
      {"union-monotone", {"A", "B", "D"},
       [](const EventRelation& r, const Event* x) {
         return disjoint3(x[0], x[1], x[2]) && r.leq(x[0], x[1]) && !r.leq(x[0] | x[2], x[1] | x[2]);
       }},
      {"union-cancel", {"A", "B", "D"},
       [](const EventRelation& r, const Event* x) {
         return disjoint3(x[0], x[1], x[2]) && r.leq(x[0] | x[2], x[1] | x[2]) &&
                !r.leq(x[2] | x[1], x[2]) && !r.leq(x[0], x[1]);
       }},
      {"sum-exceeds-part", {"A", "B"},
       [](const EventRelation& r, const Event* x) {
         return x[0].disjoint(x[1]) && r.leq(x[0], x[1]) && r.leq(x[0] | x[1], x[0]) &&
                !(r.leq(x[0], Event()) && r.leq(x[1], Event()));
       }},
      {"empty-least", {"A"},
       [](const EventRelation& r, const Event* x) { return !r.leq(Event(), x[0]); }},
      {"all1-inclusion", {"A", "B"},
       [](const EventRelation& r, const Event* x) { return x[0].subset_of(x[1]) && !r.leq(x[0], x[1]); }},
      {"all1-strict-cancel", {"A", "B", "D"},
       [](const EventRelation& r, const Event* x) {
         return disjoint3(x[0], x[1], x[2]) && r.less(x[0] | x[2], x[1] | x[2]) && !r.less(x[0], x[1]);
       }},
      {"all1-strict-augment", {"A", "B", "D"},
       [](const EventRelation& r, const Event* x) {
         return disjoint3(x[0], x[1], x[2]) && r.less(x[0], x[1]) && r.less(x[2], x[1] | x[2]) &&
                !r.less(x[0] | x[2], x[1] | x[2]);
       }},
      {"all1-disjoint-union-monotone", {"A", "B", "A'", "B'"},
       [](const EventRelation& r, const Event* x) {
         return x[0].disjoint(x[1]) && r.leq(x[2], x[0]) && r.leq(x[3], x[1]) &&
                !r.leq(x[2] | x[3], x[0] | x[1]);
       }},
      {"all1-sum-dominates-part", {"A", "B"},
       [](const EventRelation& r, const Event* x) {
         const Event u = x[0] | x[1];
         return x[0].disjoint(x[1]) && r.less(Event(), u) && !r.less(x[0], u) && !r.less(x[1], u);
       }},
      {"all2-ll-subset-left", {"A", "B", "C"},
       [](const EventRelation& r, const Event* x) {
         return x[0].subset_of(x[1]) && is_ll(r, x[1], x[2]) && !is_ll(r, x[0], x[2]);
       }},
      {"all2-ll-superset-right", {"A", "B", "C"},
       [](const EventRelation& r, const Event* x) {
         return is_ll(r, x[0], x[1]) && x[1].subset_of(x[2]) && !is_ll(r, x[0], x[2]);
       }},
      {"all2-ll-strict", {"A", "B"},
       [](const EventRelation& r, const Event* x) { return is_ll(r, x[0], x[1]) && !r.less(x[0], x[1]); }},
      {"all2-ll-modular-subset", {"A", "B", "C"},
       [](const EventRelation& r, const Event* x) {
         return x[1].subset_of(x[2]) && is_ll(r, x[0], x[2]) && !is_ll(r, x[0], x[1]) &&
                !is_ll(r, x[1], x[2]);
       }},
      {"all2-ll-modular-disjoint", {"A", "B", "C"},
       [](const EventRelation& r, const Event* x) {
         return x[1].disjoint(x[2]) && is_ll(r, x[0], x[2]) && !is_ll(r, x[0], x[1]) &&
                !is_ll(r, x[1], x[2]);
       }},
      {"all2-ll-modular", {"A", "B", "C"},
       [](const EventRelation& r, const Event* x) {
         return is_ll(r, x[0], x[2]) && !is_ll(r, x[0], x[1]) && !is_ll(r, x[1], x[2]);
       }},
      {"all2-ll-sandwich", {"A", "B", "C", "D"},
       [](const EventRelation& r, const Event* x) {
         return r.leq(x[0], x[1]) && is_ll(r, x[1], x[2]) && r.leq(x[2], x[3]) && !is_ll(r, x[0], x[3]);
       }},
      {"all2-ll-union-left", {"A", "A'", "B"},
       [](const EventRelation& r, const Event* x) {
         return is_ll(r, x[0], x[2]) && is_ll(r, x[1], x[2]) && !is_ll(r, x[0] | x[1], x[2]);
       }},
      {"all2-ll-split-right", {"A", "B", "B'"},
       [](const EventRelation& r, const Event* x) {
         return is_ll(r, x[0], x[1] | x[2]) && !is_ll(r, x[0], x[1]) && !is_ll(r, x[0], x[2]);
       }},
      {"all2-cancel-or-ll-union", {"A", "B", "D"},
       [](const EventRelation& r, const Event* x) {
         return disjoint3(x[0], x[1], x[2]) && r.leq(x[0] | x[2], x[1] | x[2]) && !r.leq(x[0], x[1]) &&
                !is_ll(r, x[0], x[1] | x[2]);
       }},
      {"all2-cancel-or-ll-common", {"A", "B", "D"},
       [](const EventRelation& r, const Event* x) {
         return disjoint3(x[0], x[1], x[2]) && r.leq(x[0] | x[2], x[1] | x[2]) && !r.leq(x[0], x[1]) &&
                !is_ll(r, x[0] | x[1], x[2]);
       }},
      {"all2-cancel-or-ll-overlap", {"A", "B", "D"},
       [](const EventRelation& r, const Event* x) {
         return x[0].disjoint(x[2]) && r.leq(x[0] | x[2], x[1] | x[2]) && !r.leq(x[0], x[1]) &&
                !is_ll(r, x[0] | x[1], x[2]);
       }},
      {"all2-exchange", {"A", "B", "A'", "B'"},
       [](const EventRelation& r, const Event* x) {
         return x[0].disjoint(x[1]) && r.leq(x[0] | x[1], x[2] | x[3]) && r.leq(x[3], x[1]) &&
                !r.leq(x[0], x[2]) && !is_ll(r, x[0] | x[2], x[3]);
       }},
  };
  return props;
}

bool gloss_literal(const EventRelation& r, Event a, Event b) {
  return !r.leq(b, Event()) && r.leq(b, b - (a & b)) && r.leq(b, b | (a - b));
}

bool gloss_reversed(const EventRelation& r, Event a, Event b) {
  return !r.leq(b, Event()) && r.leq(b, b - (a & b)) && r.leq(b | (a - b), b);
}

const std::vector<Property>& gloss_properties() {
  static const std::vector<Property> props = {
      {"ll-gloss-literal", {"A", "B"},
       [](const EventRelation& r, const Event* x) { return is_ll(r, x[0], x[1]) != gloss_literal(r, x[0], x[1]); }},
      {"ll-gloss-reversed", {"A", "B"},
       [](const EventRelation& r, const Event* x) { return is_ll(r, x[0], x[1]) != gloss_reversed(r, x[0], x[1]); }},
  };
  return props;
}

CheckReport run_property(const EventRelation& r, const Property& prop) {
  CheckReport report(std::string(prop.subject));
  const std::size_t arity = prop.vars.size();
  const std::size_t events = r.event_count();
  std::array<Event, 4> tuple{};
  std::array<std::size_t, 4> idx{};
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= events;
  for (std::size_t t = 0; t < total; ++t) {
    // Last variable varies fastest.
    auto rest = t;
    for (std::size_t i = arity; i-- > 0;) {
      idx[i] = rest % events;
      rest /= events;
      tuple[i] = Event(static_cast<Event::Mask>(idx[i]));
    }
    ++report.checked_count;
    if (!prop.violated(r, tuple.data())) continue;
    Witness w;
    for (std::size_t i = 0; i < arity; ++i) w.event(std::string(prop.vars[i]), tuple[i]);
    report.record(std::move(w));
  }
  return report;
}

const Property* find_property(const std::vector<Property>& props, std::string_view subject) {
  for (const auto& p : props)
    if (p.subject == subject) return &p;
  return nullptr;
}

bool replay_property(const EventRelation& r, const Property& prop, const Witness& w) {
  std::array<Event, 4> tuple{};
  for (std::size_t i = 0; i < prop.vars.size(); ++i) tuple[i] = w.event(prop.vars[i]);
  return prop.violated(r, tuple.data());
}

// --- plain g.q.p. axioms ---

bool gqp_violated(const EventRelation& r, std::string_view condition, Event a, Event b, Event d) {
  if (condition == "reflexive") return !r.leq(a, a);
  if (condition == "transitive") return r.leq(a, b) && r.leq(b, d) && !r.leq(a, d);
  if (condition == "condition 1")
    return disjoint3(a, b, d) && r.leq(a, b) && !r.leq(a | d, b | d);
  if (condition == "condition 2")
    return disjoint3(a, b, d) && r.leq(a | d, b | d) && !r.leq(d | b, d) && !r.leq(a, b);
  if (condition == "condition 3")
    return a.disjoint(b) && r.leq(a, b) && r.leq(a | b, a) && !r.leq(b, Event());
  if (condition == "condition 4") return !r.leq(Event(), a);
  throw PreconditionError("unknown condition \"" + std::string(condition) + "\"");
}

// --- links to a source preference structure ---

bool null_link_violated(const EventRelation& r, const ConditionalPreferenceStructure& p, Event a) {
  return is_null_event(p, a) != r.leq(a, Event());
}

bool negligible_link_violated(const EventRelation& r, const ConditionalPreferenceStructure& p,
                              Event a, Event b) {
  return a.disjoint(b) && is_negligible(p, a, b) != r.leq(b | a, b);
}

// --- equipartition ---

std::vector<Event> value_events(const ConditionalPreferenceStructure& p, Event a, ActId f) {
  std::vector<Event> out(p.scale().size());
  const auto& act = p.acts()[f];
  for (int s = 0; s < p.space().size(); ++s)
    if (a.contains(s)) out[act[s]] = out[act[s]] | p.space().singleton(s);
  return out;
}

bool equipartition_violated(const ConditionalPreferenceStructure& p, const EventRelation& derived,
                            Event a, ActId f, ActId g) {
  const auto phi = value_events(p, a, f);
  const auto psi = value_events(p, a, g);
  for (std::size_t z = 0; z < phi.size(); ++z)
    if (!derived.equivalent(phi[z], psi[z])) return false;
  return !p.indifferent(a, f, g);
}

}  // namespace

CheckReport check_gqp(const EventRelation& r) {
  CheckReport report("gqp");
  const auto events = r.event_count();
  auto visit = [&](std::string_view condition, Event a, Event b, Event d, std::initializer_list<std::string_view> vars) {
    ++report.checked_count;
    if (!gqp_violated(r, condition, a, b, d)) return;
    Witness w;
    w.condition = std::string(condition);
    const Event bound[] = {a, b, d};
    std::size_t i = 0;
    for (auto v : vars) w.event(std::string(v), bound[i++]);
    report.record(std::move(w));
  };
  for (Event::Mask a = 0; a < events; ++a) visit("reflexive", Event(a), Event(a), Event(a), {"A"});
  for (Event::Mask a = 0; a < events; ++a)
    for (Event::Mask b = 0; b < events; ++b)
      for (Event::Mask c = 0; c < events; ++c) visit("transitive", Event(a), Event(b), Event(c), {"A", "B", "C"});
  for (auto cond : {"condition 1", "condition 2"})
    for (Event::Mask a = 0; a < events; ++a)
      for (Event::Mask b = 0; b < events; ++b)
        for (Event::Mask d = 0; d < events; ++d) visit(cond, Event(a), Event(b), Event(d), {"A", "B", "D"});
  for (Event::Mask a = 0; a < events; ++a)
    for (Event::Mask b = 0; b < events; ++b) visit("condition 3", Event(a), Event(b), Event(), {"A", "B"});
  for (Event::Mask a = 0; a < events; ++a) visit("condition 4", Event(a), Event(), Event(), {"A"});
  return report;
}

std::vector<CheckReport> check_gqp_lemmas(const EventRelation& r,
                                          const ConditionalPreferenceStructure* source) {
  std::vector<CheckReport> out;
  for (const auto& prop : gqp_properties()) out.push_back(run_property(r, prop));
  if (!source) return out;

  CheckReport null_link("null-iff-below-empty");
  CheckReport negligible_link("negligible-iff-absorbed");
  const auto events = r.event_count();
  for (Event::Mask a = 0; a < events; ++a) {
    ++null_link.checked_count;
    if (null_link_violated(r, *source, Event(a))) null_link.record(Witness{}.event("A", Event(a)));
    for (Event::Mask b = 0; b < events; ++b) {
      if (a & b) continue;
      ++negligible_link.checked_count;
      if (negligible_link_violated(r, *source, Event(a), Event(b)))
        negligible_link.record(Witness{}.event("A", Event(a)).event("B", Event(b)));
    }
  }
  out.push_back(std::move(null_link));
  out.push_back(std::move(negligible_link));
  return out;
}

std::vector<CheckReport> check_ll_gloss(const EventRelation& r) {
  std::vector<CheckReport> out;
  for (const auto& prop : gloss_properties()) out.push_back(run_property(r, prop));
  return out;
}

bool replay_witness(const EventRelation& r, std::string_view subject, const Witness& w,
                    const ConditionalPreferenceStructure* source) {
  if (const auto* prop = find_property(gqp_properties(), subject)) return replay_property(r, *prop, w);
  if (const auto* prop = find_property(gloss_properties(), subject)) return replay_property(r, *prop, w);
  if (subject == "gqp") {
    const auto get = [&](std::string_view name) {
      for (const auto& [key, e] : w.events)
        if (key == name) return e;
      return Event();
    };
    const Event third = w.condition == "transitive" ? get("C") : get("D");
    return gqp_violated(r, w.condition, get("A"), get("B"), third);
  }
  if (!source) throw PreconditionError("subject \"" + std::string(subject) + "\" needs a source structure");
  if (subject == "null-iff-below-empty") return null_link_violated(r, *source, w.event("A"));
  if (subject == "negligible-iff-absorbed")
    return negligible_link_violated(r, *source, w.event("A"), w.event("B"));
  if (subject == "equipartition")
    return equipartition_violated(*source, r, w.event("A"), w.act("f"), w.act("g"));
  throw PreconditionError("no replay rule for subject \"" + std::string(subject) + "\"");
}

FamilyFlags classify_family(const EventRelation& r) {
  FamilyFlags flags;
  flags.total = r.is_total();
  flags.standard = true;
  flags.purely_nonstandard = true;
  flags.complement_criterion = true;
  const auto& space = r.space();
  const auto events = r.event_count();
  for (Event::Mask am = 0; am < events; ++am)
    for (Event::Mask bm = 0; bm < events; ++bm) {
      const Event a(am), b(bm);
      if (a.disjoint(b) && !a.empty() && !r.less(b, a | b)) flags.standard = false;
      if (r.less(a, b) && !r.equivalent(b - a, a | b)) flags.purely_nonstandard = false;
      if (r.leq(a, b) && !r.leq(space.complement(b), space.complement(a))) flags.complement_criterion = false;
    }
  return flags;
}

CheckReport check_equipartition_equivalence(const ConditionalPreferenceStructure& p,
                                            const EventRelation& derived, Event a, ActId f,
                                            ActId g) {
  CheckReport report("equipartition");
  report.checked_count = 1;
  if (equipartition_violated(p, derived, a, f, g)) report.record(Witness{}.event("A", a).act("f", f).act("g", g));
  return report;
}

CheckReport check_equipartition_equivalence(const ConditionalPreferenceStructure& p, Event a,
                                            ActId f, ActId g) {
  return check_equipartition_equivalence(p, derive_plausibility(p), a, f, g);
}

CheckReport check_equipartition_all(const ConditionalPreferenceStructure& p,
                                    const EventRelation& derived) {
  CheckReport report("equipartition");
  const auto n = p.acts().size();
  std::uint64_t qualifying = 0;
  for (Event::Mask m = 0; m < p.space().event_count(); ++m) {
    const Event a(m);
    std::vector<std::vector<Event>> parts(n);
    for (ActId f = 0; f < n; ++f) parts[f] = value_events(p, a, f);
    for (ActId f = 0; f < n; ++f)
      for (ActId g = 0; g < n; ++g) {
        ++report.checked_count;
        bool hypothesis = true;
        for (std::size_t z = 0; z < parts[f].size() && hypothesis; ++z)
          hypothesis = derived.equivalent(parts[f][z], parts[g][z]);
        if (!hypothesis) continue;
        ++qualifying;
        if (!p.indifferent(a, f, g)) report.record(Witness{}.event("A", a).act("f", f).act("g", g));
      }
  }
  report.note("qualifying", std::to_string(qualifying));
  return report;
}

CheckReport check_equipartition_all(const ConditionalPreferenceStructure& p) {
  return check_equipartition_all(p, derive_plausibility(p));
}

std::string format_chain(const EventRelation& r) {
  if (!r.is_total()) return {};
  const auto events = r.event_count();
  for (std::size_t a = 0; a < events; ++a)
    for (std::size_t b = 0; b < events; ++b)
      for (std::size_t c = 0; c < events; ++c)
        if (r.matrix().test(a, b) && r.matrix().test(b, c) && !r.matrix().test(a, c)) return {};

  // In a total preorder, the number of events below A ranks A's class.
  std::vector<std::pair<std::size_t, Event::Mask>> ranked;
  for (Event::Mask a = 0; a < events; ++a) {
    std::size_t below = 0;
    for (Event::Mask b = 0; b < events; ++b) below += r.leq(Event(b), Event(a));
    ranked.emplace_back(below, a);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string out;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i) out += ranked[i].first == ranked[i - 1].first ? " ∼ " : " < ";
    out += r.space().format(Event(ranked[i].second));
  }
  return out;
}

}  // namespace qpw
