#include "qpw/postulates.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "qpw/plausibility.hpp"

namespace qpw {

namespace {

// Read-only view with lazily filled null and negligibility tables.
class View {
 public:
  explicit View(const ConditionalPreferenceStructure& p)
      : p(p),
        events_(p.space().event_count()),
        null_(events_, -1),
        negligible_(events_ * events_, -1) {}

  const ConditionalPreferenceStructure& p;

  std::size_t events() const { return events_; }
  std::size_t acts() const { return p.acts().size(); }

  bool leq(Event a, ActId f, ActId g) const { return p.leq(a, f, g); }
  bool less(Event a, ActId f, ActId g) const { return p.less(a, f, g); }
  bool sim(Event a, ActId f, ActId g) const { return p.indifferent(a, f, g); }
  bool agree(Event a, ActId f, ActId g) const { return p.acts().agree_on(a, f, g); }

  bool null(Event a) const {
    auto& slot = null_[a.index()];
    if (slot < 0) slot = p.relation(a).all() ? 1 : 0;
    return slot == 1;
  }
  bool negligible(Event a, Event b) const {
    auto& slot = negligible_[a.index() * events_ + b.index()];
    if (slot < 0) slot = p.relation(a | b) == p.relation(b) ? 1 : 0;
    return slot == 1;
  }

 private:
  std::size_t events_;
  mutable std::vector<signed char> null_;
  mutable std::vector<signed char> negligible_;
};

template <class Fn>
void for_disjoint_pairs(std::size_t events, Fn&& fn) {
  for (Event::Mask a = 0; a < events; ++a)
    for (Event::Mask b = 0; b < events; ++b)
      if ((a & b) == 0) fn(Event(a), Event(b));
}

Witness pair_witness(Event a, Event b, ActId f, ActId g) {
  Witness w;
  w.event("A", a).event("B", b).act("f", f).act("g", g);
  return w;
}

// Checks of the shape "A n B = ∅, premise(A, B, f, g) => conclusion" over
// every disjoint (A, B) and act pair.
using PairPredicate = std::function<bool(const View&, Event, Event, ActId, ActId)>;

CheckReport check_disjoint_pairs(const View& v, std::string subject, const PairPredicate& violated) {
  CheckReport report(std::move(subject));
  for_disjoint_pairs(v.events(), [&](Event a, Event b) {
    for (ActId f = 0; f < v.acts(); ++f)
      for (ActId g = 0; g < v.acts(); ++g) {
        ++report.checked_count;
        if (violated(v, a, b, f, g)) report.record(pair_witness(a, b, f, g));
      }
  });
  return report;
}

// --- individual implications; each returns true iff the binding violates it ---

bool q0_violated(const View& v, Event a, ActId f) { return !v.leq(a, f, f); }

bool q1_violated(const View& v, Event a, ActId f, ActId g, ActId h) {
  return v.leq(a, f, g) && v.leq(a, g, h) && !v.leq(a, f, h);
}

bool q2_violated(const View& v, Event a, ActId f, ActId g) {
  return v.agree(a, f, g) && !v.sim(a, f, g);
}

bool q3_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.leq(a, f, g) && v.sim(b, f, g) && !v.leq(a | b, f, g);
}

bool q4_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.leq(a | b, f, g) && v.sim(b, f, g) && !v.leq(a, f, g) &&
         !v.negligible(a, b);
}

bool q4_strong_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.leq(a | b, f, g) && v.sim(b, f, g) && !v.leq(a, f, g);
}

bool q5_violated(const View& v, Event a, Event b, Consequence c, Consequence d, bool nonempty) {
  const bool conditioned = nonempty ? !a.empty() : !v.null(a);
  const ActId cc = v.p.constant(c);
  const ActId dd = v.p.constant(d);
  return conditioned && v.leq(a, cc, dd) && !v.leq(b, cc, dd);
}

bool has_strict_constant_pair(const View& v) {
  const int k = v.p.scale().size();
  for (Event::Mask m = 0; m < v.events(); ++m) {
    if (v.null(Event(m))) continue;
    for (Consequence c = 0; c < k; ++c)
      for (Consequence d = 0; d < k; ++d)
        if (v.less(Event(m), v.p.constant(d), v.p.constant(c))) return true;
  }
  return false;
}

struct Q7Binding {
  Event a, b, d;
  Consequence hi, lo;
  ActId f, g, fs, gs;
};

bool q7_violated(const View& v, const Q7Binding& x) {
  const auto& acts = v.p.acts();
  const auto lo = v.p.constant(x.lo);
  const auto hi = v.p.constant(x.hi);
  return x.a.disjoint(x.b) && (x.a | x.b).subset_of(x.d) &&
         v.leq(x.a | x.b, v.p.two_valued(x.a, x.hi, x.lo), v.p.two_valued(x.b, x.hi, x.lo)) &&
         acts.agree_on(x.a, x.f, lo) && acts.agree_on(x.b, x.g, lo) &&
         acts.agree_on(x.a, x.fs, hi) && acts.agree_on(x.b, x.gs, hi) &&
         acts.agree_on(x.d - x.a, x.fs, x.f) && acts.agree_on(x.d - x.b, x.gs, x.g) &&
         v.leq(x.d, x.f, x.g) && !v.leq(x.d, x.fs, x.gs);
}

bool r_violated(const View& v, const ConsequenceOrder& order, Event a, Event b, Consequence c,
                Consequence d, Consequence c2, Consequence d2) {
  return order.less(d, c) && order.less(d2, c2) &&
         v.leq(a | b, v.p.two_valued(a, c, d), v.p.two_valued(b, c, d)) &&
         !v.leq(a | b, v.p.two_valued(a, c2, d2), v.p.two_valued(b, c2, d2));
}

// --- postulate checks ---

CheckReport check_q0(const View& v) {
  CheckReport report("Q0");
  for (Event::Mask m = 0; m < v.events(); ++m)
    for (ActId f = 0; f < v.acts(); ++f) {
      ++report.checked_count;
      if (q0_violated(v, Event(m), f)) report.record(Witness{}.event("A", Event(m)).act("f", f));
    }
  return report;
}

CheckReport check_q1(const View& v) {
  CheckReport report("Q1");
  const auto n = v.acts();
  for (Event::Mask m = 0; m < v.events(); ++m) {
    const Event a(m);
    const auto& rel = v.p.relation(a);
    for (ActId f = 0; f < n; ++f)
      for (ActId g = 0; g < n; ++g) {
        report.checked_count += n;
        if (!rel.test(f, g) || rel.row_subset(g, f)) continue;
        for (ActId h = 0; h < n; ++h)
          if (q1_violated(v, a, f, g, h))
            report.record(Witness{}.event("A", a).act("f", f).act("g", g).act("h", h));
      }
  }
  return report;
}

CheckReport check_q2(const View& v) {
  CheckReport report("Q2");
  for (Event::Mask m = 0; m < v.events(); ++m)
    for (ActId f = 0; f < v.acts(); ++f)
      for (ActId g = 0; g < v.acts(); ++g) {
        ++report.checked_count;
        if (q2_violated(v, Event(m), f, g))
          report.record(Witness{}.event("A", Event(m)).act("f", f).act("g", g));
      }
  return report;
}

CheckReport check_q5(const View& v, bool nonempty) {
  CheckReport report("Q5");
  report.note("condition", nonempty ? "non-empty" : "non-null");
  const int k = v.p.scale().size();
  for (Event::Mask a = 0; a < v.events(); ++a)
    for (Event::Mask b = 0; b < v.events(); ++b)
      for (Consequence c = 0; c < k; ++c)
        for (Consequence d = 0; d < k; ++d) {
          ++report.checked_count;
          if (q5_violated(v, Event(a), Event(b), c, d, nonempty))
            report.record(Witness{}.event("A", Event(a)).event("B", Event(b)).consequence("c", c).consequence("d", d));
        }
  return report;
}

CheckReport check_q6(const View& v) {
  CheckReport report("Q6");
  const int k = v.p.scale().size();
  report.checked_count = v.events() * k * k;
  if (!has_strict_constant_pair(v)) report.record(Witness{"no strict constant pair", {}, {}, {}});
  return report;
}

// First (f', g') with f' agreeing with f and g' with g on D and f' not <=_D g'.
// The caller knows such a pair exists.
std::pair<ActId, ActId> unrelated_pair(const View& v, Event d, ActId f, ActId g) {
  const auto& acts = v.p.acts();
  for (ActId f2 = 0; f2 < acts.size(); ++f2) {
    if (!acts.agree_on(d, f2, f)) continue;
    for (ActId g2 = 0; g2 < acts.size(); ++g2)
      if (acts.agree_on(d, g2, g) && !v.leq(d, f2, g2)) return {f2, g2};
  }
  throw std::logic_error("no unrelated pair in D-classes");
}

CheckReport check_q7(const View& v) {
  CheckReport report("Q7");
  const auto& acts = v.p.acts();
  const auto n = acts.size();
  const int k = v.p.scale().size();
  const auto events = v.events();

  // related[D][cf * cc + cg]: every act of D-class cf is <=_D every act of D-class cg.
  std::vector<std::vector<char>> related(events);
  for (Event::Mask m = 0; m < events; ++m) {
    const Event dd(m);
    const auto cc = acts.class_count(dd);
    auto& table = related[m];
    table.assign(std::size_t{cc} * cc, 1);
    for (ActId f = 0; f < n; ++f)
      for (ActId g = 0; g < n; ++g)
        if (!v.leq(dd, f, g)) table[std::size_t{acts.class_of(dd, f)} * cc + acts.class_of(dd, g)] = 0;
  }

  // spliced[(E * k + c) * n + f]: id of f with c written over E, or n if unregistered.
  std::vector<ActId> spliced(events * k * n);
  for (Event::Mask m = 0; m < events; ++m)
    for (Consequence c = 0; c < k; ++c)
      for (ActId f = 0; f < n; ++f) {
        const auto id = acts.find(splice(acts[f], Event(m), c));
        spliced[(m * k + c) * n + f] = id ? *id : static_cast<ActId>(n);
      }

  std::optional<std::string> missing;
  for_disjoint_pairs(events, [&](Event a, Event b) {
    if (missing) return;
    const Event ab = a | b;
    for (Event::Mask dm = 0; dm < events; ++dm) {
      const Event dd(dm);
      if (!ab.subset_of(dd)) continue;
      const auto cc = acts.class_count(dd);
      for (Consequence hi = 0; hi < k; ++hi)
        for (Consequence lo = 0; lo < k; ++lo) {
          if (!v.leq(ab, v.p.two_valued(a, hi, lo), v.p.two_valued(b, hi, lo))) continue;
          const ActId lo_const = v.p.constant(lo);
          for (ActId f = 0; f < n; ++f) {
            if (!acts.agree_on(a, f, lo_const)) continue;
            const ActId fs = spliced[(a.index() * k + hi) * n + f];
            for (ActId g = 0; g < n; ++g) {
              if (!acts.agree_on(b, g, lo_const) || !v.leq(dd, f, g)) continue;
              ++report.checked_count;
              const ActId gs = spliced[(b.index() * k + hi) * n + g];
              if (fs == n || gs == n) {
                missing = "spliced act " + format_act(v.p.space(), v.p.scale(), acts[fs == n ? f : g]) +
                          " with " + v.p.scale().id(hi) + " on " + v.p.space().format(fs == n ? a : b) +
                          " is not in the act set";
                return;
              }
              if (related[dm][std::size_t{acts.class_of(dd, fs)} * cc + acts.class_of(dd, gs)]) continue;
              const auto [f2, g2] = unrelated_pair(v, dd, fs, gs);
              Witness w;
              w.event("A", a).event("B", b).event("D", dd);
              w.consequence("c", hi).consequence("d", lo);
              w.act("f", f).act("g", g).act("f'", f2).act("g'", g2);
              report.record(std::move(w));
            }
          }
        }
    }
  });
  if (missing) {
    report.witnesses.clear();
    report.violation_count = 0;
    report.fail_with(*missing);
  }
  return report;
}

CheckReport check_r(const View& v) {
  CheckReport report("R");
  ConsequenceOrder order(0);
  try {
    order = constants_order(v.p);
  } catch (const ConstantsDisagreement& e) {
    report.fail_with(std::string("constant order undefined: ") + e.what());
    return report;
  }
  const int k = v.p.scale().size();
  bool disjoint_passed = true;
  for (Event::Mask a = 0; a < v.events(); ++a)
    for (Event::Mask b = 0; b < v.events(); ++b)
      for (Consequence c = 0; c < k; ++c)
        for (Consequence d = 0; d < k; ++d)
          for (Consequence c2 = 0; c2 < k; ++c2)
            for (Consequence d2 = 0; d2 < k; ++d2) {
              ++report.checked_count;
              if (!r_violated(v, order, Event(a), Event(b), c, d, c2, d2)) continue;
              if ((a & b) == 0) disjoint_passed = false;
              Witness w;
              w.condition = "general";
              w.event("A", Event(a)).event("B", Event(b));
              w.consequence("c", c).consequence("d", d).consequence("c'", c2).consequence("d'", d2);
              report.record(std::move(w));
            }
  report.note("general", report.passed ? "pass" : "fail");
  report.note("disjoint", disjoint_passed ? "pass" : "fail");
  return report;
}

// --- derived lemmas ---

bool sure_thing_violated(const View& v, Event a, Event b, ActId f, ActId g, ActId f2, ActId g2) {
  return a.disjoint(b) && v.agree(a, f, f2) && v.agree(a, g, g2) && v.agree(b, f, g) &&
         v.agree(b, f2, g2) && v.leq(a | b, f, g) && !v.leq(a | b, f2, g2);
}

bool equivalent_acts_violated(const View& v, Event a, ActId f, ActId g, ActId f2, ActId g2) {
  return v.agree(a, f, f2) && v.agree(a, g, g2) && v.leq(a, f, g) && !v.leq(a, f2, g2);
}

bool bet_extension_violated(const View& v, Event a, Event b, Event d, Consequence c, Consequence e) {
  const auto wa = v.p.two_valued(a, c, e);
  const auto wb = v.p.two_valued(b, c, e);
  return (a | b).subset_of(d) && v.leq(a | b, wa, wb) && !v.leq(d, wa, wb);
}

bool losing_bets_violated(const View& v, const EventRelation& r, const ConsequenceOrder& order,
                          Event a, Event b, Consequence c, Consequence d) {
  return r.leq(a, b) && order.leq(c, d) &&
         !v.leq(a | b, v.p.two_valued(b, c, d), v.p.two_valued(a, c, d));
}

// Within groups of act pairs keyed by `group`, relatedness must be all-or-none.
// Emits (f, g) related and (f', g') unrelated from the same group.
struct GroupScan {
  std::vector<std::int64_t> related, unrelated;
  explicit GroupScan(std::size_t groups) : related(groups, -1), unrelated(groups, -1) {}
  void add(std::size_t group, ActId f, ActId g, bool rel, std::size_t n) {
    auto& slot = rel ? related[group] : unrelated[group];
    if (slot < 0) slot = static_cast<std::int64_t>(f) * n + g;
  }
};

CheckReport check_equivalent_acts(const View& v) {
  CheckReport report("equivalent-acts");
  const auto& acts = v.p.acts();
  const auto n = acts.size();
  for (Event::Mask m = 0; m < v.events(); ++m) {
    const Event a(m);
    const std::size_t cc = acts.class_count(a);
    GroupScan scan(cc * cc);
    for (ActId f = 0; f < n; ++f)
      for (ActId g = 0; g < n; ++g) {
        ++report.checked_count;
        scan.add(std::size_t{acts.class_of(a, f)} * cc + acts.class_of(a, g), f, g, v.leq(a, f, g), n);
      }
    for (std::size_t grp = 0; grp < cc * cc; ++grp) {
      if (scan.related[grp] < 0 || scan.unrelated[grp] < 0) continue;
      Witness w;
      w.event("A", a);
      w.act("f", static_cast<ActId>(scan.related[grp] / n)).act("g", static_cast<ActId>(scan.related[grp] % n));
      w.act("f'", static_cast<ActId>(scan.unrelated[grp] / n)).act("g'", static_cast<ActId>(scan.unrelated[grp] % n));
      report.record(std::move(w));
    }
  }
  return report;
}

CheckReport check_empty_event_trivial(const View& v) {
  CheckReport report("empty-event-trivial");
  for (ActId f = 0; f < v.acts(); ++f)
    for (ActId g = 0; g < v.acts(); ++g) {
      ++report.checked_count;
      if (!v.leq(Event(), f, g)) report.record(Witness{}.act("h", f).act("h'", g));
    }
  return report;
}

CheckReport check_sure_thing(const View& v) {
  CheckReport report("sure-thing");
  const auto& acts = v.p.acts();
  const auto n = acts.size();
  for_disjoint_pairs(v.events(), [&](Event a, Event b) {
    const Event ab = a | b;
    const std::size_t cc = acts.class_count(a);
    GroupScan scan(cc * cc);
    for (ActId f = 0; f < n; ++f)
      for (ActId g = 0; g < n; ++g) {
        if (!acts.agree_on(b, f, g)) continue;
        ++report.checked_count;
        scan.add(std::size_t{acts.class_of(a, f)} * cc + acts.class_of(a, g), f, g, v.leq(ab, f, g), n);
      }
    for (std::size_t grp = 0; grp < cc * cc; ++grp) {
      if (scan.related[grp] < 0 || scan.unrelated[grp] < 0) continue;
      Witness w;
      w.event("A", a).event("B", b);
      w.act("f", static_cast<ActId>(scan.related[grp] / n)).act("g", static_cast<ActId>(scan.related[grp] % n));
      w.act("f'", static_cast<ActId>(scan.unrelated[grp] / n)).act("g'", static_cast<ActId>(scan.unrelated[grp] % n));
      report.record(std::move(w));
    }
  });
  return report;
}

CheckReport check_bet_extension(const View& v) {
  CheckReport report("bet-extension");
  const int k = v.p.scale().size();
  for (Event::Mask a = 0; a < v.events(); ++a)
    for (Event::Mask b = 0; b < v.events(); ++b)
      for (Event::Mask d = 0; d < v.events(); ++d) {
        if (!Event(a | b).subset_of(Event(d))) continue;
        for (Consequence c = 0; c < k; ++c)
          for (Consequence e = 0; e < k; ++e) {
            ++report.checked_count;
            if (bet_extension_violated(v, Event(a), Event(b), Event(d), c, e)) {
              Witness w;
              w.event("A", Event(a)).event("B", Event(b)).event("D", Event(d));
              w.consequence("c", c).consequence("d", e);
              report.record(std::move(w));
            }
          }
      }
  return report;
}

CheckReport check_losing_bets(const View& v) {
  CheckReport report("losing-bets");
  std::optional<EventRelation> r;
  ConsequenceOrder order(0);
  try {
    order = constants_order(v.p);
    r = derive_plausibility(v.p);
  } catch (const PreconditionError& e) {
    report.fail_with(std::string("plausibility undefined: ") + e.what());
    return report;
  }
  const int k = v.p.scale().size();
  for (Event::Mask a = 0; a < v.events(); ++a)
    for (Event::Mask b = 0; b < v.events(); ++b)
      for (Consequence c = 0; c < k; ++c)
        for (Consequence d = 0; d < k; ++d) {
          ++report.checked_count;
          if (losing_bets_violated(v, *r, order, Event(a), Event(b), c, d))
            report.record(Witness{}.event("A", Event(a)).event("B", Event(b)).consequence("c", c).consequence("d", d));
        }
  return report;
}

bool indifference_union_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.sim(a, f, g) && v.sim(b, f, g) && !v.sim(a | b, f, g);
}
bool indifference_split_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.sim(a | b, f, g) && v.sim(b, f, g) && !v.sim(a, f, g) && !v.negligible(a, b);
}
bool strict_union_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.less(a, f, g) && v.sim(b, f, g) && !v.less(a | b, f, g) && !v.negligible(a, b);
}
bool strict_split_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.less(a | b, f, g) && v.sim(b, f, g) && !v.less(a, f, g);
}
bool weak_union_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.leq(a, f, g) && v.leq(b, f, g) && !v.leq(a | b, f, g);
}
bool strict_both_union_violated(const View& v, Event a, Event b, ActId f, ActId g) {
  return a.disjoint(b) && v.less(a, f, g) && v.less(b, f, g) && !v.less(a | b, f, g);
}

const std::map<std::string_view, bool (*)(const View&, Event, Event, ActId, ActId)>& pair_predicates() {
  static const std::map<std::string_view, bool (*)(const View&, Event, Event, ActId, ActId)> table = {
      {"Q3", q3_violated},
      {"Q4", q4_violated},
      {"Q'4", q4_strong_violated},
      {"indifference-union", indifference_union_violated},
      {"indifference-split", indifference_split_violated},
      {"strict-union", strict_union_violated},
      {"strict-split", strict_split_violated},
      {"weak-union", weak_union_violated},
      {"strict-both-union", strict_both_union_violated},
  };
  return table;
}

}  // namespace

std::string_view postulate_name(Postulate p) {
  switch (p) {
    case Postulate::Q0: return "Q0";
    case Postulate::Q1: return "Q1";
    case Postulate::Q2: return "Q2";
    case Postulate::Q3: return "Q3";
    case Postulate::Q4: return "Q4";
    case Postulate::Q4Strong: return "Q'4";
    case Postulate::Q5: return "Q5";
    case Postulate::Q6: return "Q6";
    case Postulate::Q7: return "Q7";
    case Postulate::R: return "R";
  }
  return "?";
}

std::optional<Postulate> parse_postulate(std::string_view name) {
  for (auto p : kAllPostulates)
    if (postulate_name(p) == name) return p;
  if (name == "Q4'" || name == "Qp4") return Postulate::Q4Strong;
  return std::nullopt;
}

bool ConsequenceOrder::has_strict_pair() const {
  for (Consequence c = 0; c < size_; ++c)
    for (Consequence d = 0; d < size_; ++d)
      if (less(c, d)) return true;
  return false;
}

bool is_null_event(const ConditionalPreferenceStructure& p, Event a) { return p.relation(a).all(); }

bool is_negligible(const ConditionalPreferenceStructure& p, Event a, Event b) {
  if (!a.disjoint(b))
    throw PreconditionError("negligibility needs disjoint events, got " + p.space().format(a) +
                            " and " + p.space().format(b));
  return p.relation(a | b) == p.relation(b);
}

ConsequenceOrder constants_order(const ConditionalPreferenceStructure& p) {
  const int k = p.scale().size();
  ConsequenceOrder order(k);
  std::optional<Event> reference;
  for (Event::Mask m = 0; m < p.space().event_count(); ++m) {
    const Event a(m);
    if (is_null_event(p, a)) continue;
    if (!reference) {
      reference = a;
      for (Consequence c = 0; c < k; ++c)
        for (Consequence d = 0; d < k; ++d) order.set(c, d, p.leq(a, p.constant(c), p.constant(d)));
      continue;
    }
    for (Consequence c = 0; c < k; ++c)
      for (Consequence d = 0; d < k; ++d)
        if (order.leq(c, d) != p.leq(a, p.constant(c), p.constant(d)))
          throw ConstantsDisagreement("non-null events " + p.space().format(*reference) + " and " +
                                          p.space().format(a) + " disagree on " + p.scale().id(c) +
                                          " <= " + p.scale().id(d),
                                      *reference, a, c, d);
  }
  if (!reference)
    for (Consequence c = 0; c < k; ++c)
      for (Consequence d = 0; d < k; ++d) order.set(c, d, true);
  return order;
}

CheckReport check_postulate(const ConditionalPreferenceStructure& p, Postulate id,
                            const PostulateOptions& options) {
  const View v(p);
  switch (id) {
    case Postulate::Q0: return check_q0(v);
    case Postulate::Q1: return check_q1(v);
    case Postulate::Q2: return check_q2(v);
    case Postulate::Q3: return check_disjoint_pairs(v, "Q3", q3_violated);
    case Postulate::Q4: return check_disjoint_pairs(v, "Q4", q4_violated);
    case Postulate::Q4Strong: return check_disjoint_pairs(v, "Q'4", q4_strong_violated);
    case Postulate::Q5: return check_q5(v, options.q5_nonempty);
    case Postulate::Q6: return check_q6(v);
    case Postulate::Q7: return check_q7(v);
    case Postulate::R: return check_r(v);
  }
  throw PreconditionError("unknown postulate");
}

std::vector<CheckReport> check_derived_lemmas(const ConditionalPreferenceStructure& p) {
  const View v(p);
  std::vector<CheckReport> out;
  out.push_back(check_equivalent_acts(v));
  out.push_back(check_empty_event_trivial(v));
  for (auto name : {"indifference-union", "indifference-split", "strict-union", "strict-split",
                    "weak-union", "strict-both-union"})
    out.push_back(check_disjoint_pairs(v, name, pair_predicates().at(name)));
  out.push_back(check_sure_thing(v));
  out.push_back(check_bet_extension(v));
  out.push_back(check_losing_bets(v));
  return out;
}

bool replay_witness(const ConditionalPreferenceStructure& p, std::string_view subject,
                    const Witness& w, const PostulateOptions& options) {
  const View v(p);
  if (const auto it = pair_predicates().find(subject); it != pair_predicates().end())
    return it->second(v, w.event("A"), w.event("B"), w.act("f"), w.act("g"));
  if (subject == "Q0") return q0_violated(v, w.event("A"), w.act("f"));
  if (subject == "Q1") return q1_violated(v, w.event("A"), w.act("f"), w.act("g"), w.act("h"));
  if (subject == "Q2") return q2_violated(v, w.event("A"), w.act("f"), w.act("g"));
  if (subject == "Q5")
    return q5_violated(v, w.event("A"), w.event("B"), w.consequence("c"), w.consequence("d"),
                       options.q5_nonempty);
  if (subject == "Q6") return !has_strict_constant_pair(v);
  if (subject == "Q7")
    return q7_violated(v, {w.event("A"), w.event("B"), w.event("D"), w.consequence("c"),
                           w.consequence("d"), w.act("f"), w.act("g"), w.act("f'"), w.act("g'")});
  if (subject == "R")
    return r_violated(v, constants_order(p), w.event("A"), w.event("B"), w.consequence("c"),
                      w.consequence("d"), w.consequence("c'"), w.consequence("d'"));
  if (subject == "equivalent-acts")
    return equivalent_acts_violated(v, w.event("A"), w.act("f"), w.act("g"), w.act("f'"), w.act("g'"));
  if (subject == "empty-event-trivial") return !v.leq(Event(), w.act("h"), w.act("h'"));
  if (subject == "sure-thing")
    return sure_thing_violated(v, w.event("A"), w.event("B"), w.act("f"), w.act("g"), w.act("f'"),
                               w.act("g'"));
  if (subject == "bet-extension")
    return bet_extension_violated(v, w.event("A"), w.event("B"), w.event("D"), w.consequence("c"),
                                  w.consequence("d"));
  if (subject == "losing-bets")
    return losing_bets_violated(v, derive_plausibility(p), constants_order(p), w.event("A"),
                                w.event("B"), w.consequence("c"), w.consequence("d"));
  throw PreconditionError("no replay rule for subject \"" + std::string(subject) + "\"");
}

}  // namespace qpw
