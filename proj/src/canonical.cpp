#include "qpw/canonical.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "qpw/error.hpp"
#include "qpw/postulates.hpp"

namespace qpw {

namespace {

void require_gqp(const EventRelation& r) {
  const auto report = check_gqp(r);
  if (!report.passed) {
    std::string msg = "relation is not a generalized qualitative probability";
    if (!report.witnesses.empty()) msg += " (" + report.witnesses.front().condition + " fails)";
    throw PreconditionError(msg);
  }
}

}  // namespace

ConditionalPreferenceStructure canonical_structure(const EventRelation& r) {
  require_gqp(r);
  const auto& space = r.space();
  ConsequenceScale scale({"low", "high"});
  std::vector<Act> acts;
  for (Event::Mask m = 0; m < space.event_count(); ++m) acts.push_back(two_valued_act(space, Event(m), 1, 0));
  ActSet set = ActSet::from_acts(space, scale, std::move(acts));

  const auto events = space.event_count();
  std::vector<BitMatrix> rel(events, BitMatrix(events, events));
  for (Event::Mask dm = 0; dm < events; ++dm) {
    const Event d(dm);
    for (Event::Mask am = 0; am < events; ++am) {
      const Event a(am);
      const bool ll = is_ll(r, d & a, d);
      for (Event::Mask bm = 0; bm < events; ++bm)
        rel[dm].set(am, bm, ll || r.leq(a & d, Event(bm) & d));
    }
  }
  return ConditionalPreferenceStructure(space, std::move(scale), std::move(set), std::move(rel));
}

CheckReport roundtrip_check(const EventRelation& r) {
  CheckReport report("roundtrip");
  EventRelation derived(r.space());
  try {
    derived = derive_plausibility(canonical_structure(r));
  } catch (const PreconditionError& e) {
    report.fail_with(e.what());
    return report;
  }
  for (Event::Mask a = 0; a < r.event_count(); ++a)
    for (Event::Mask b = 0; b < r.event_count(); ++b) {
      ++report.checked_count;
      const bool in_r = r.leq(Event(a), Event(b));
      const bool in_derived = derived.leq(Event(a), Event(b));
      if (in_r != in_derived)
        report.record(Witness{in_r ? "missing" : "extra", {}, {}, {}}.event("A", Event(a)).event("B", Event(b)));
    }
  return report;
}

// --- total extensions ---

namespace {

// Events are placed one at a time (mask order) into an ordered list of
// indifference blocks. Every g.q.p. condition is checked as soon as all
// events it mentions are placed, so dead branches are cut early.
class ExtensionSearch {
 public:
  ExtensionSearch(const EventRelation& base, ExtensionMode mode)
      : base_(base), mode_(mode), n_(base.space().size()), events_(base.event_count()), block_(events_, -1) {
    // Triples (A, B, D) with D disjoint from A and B: each state goes to
    // none, A only, B only, both A and B, or D.
    std::vector<int> assign(n_, 0);
    std::function<void(int)> gen = [&](int s) {
      if (s == n_) {
        Event::Mask a = 0, b = 0, d = 0;
        for (int i = 0; i < n_; ++i) {
          if (assign[i] == 1 || assign[i] == 3) a |= 1u << i;
          if (assign[i] == 2 || assign[i] == 3) b |= 1u << i;
          if (assign[i] == 4) d |= 1u << i;
        }
        triples_[std::max(a | d, b | d)].push_back({Event(a), Event(b), Event(d)});
        if (d == 0 && (a & b) == 0) pairs_[a | b].push_back({Event(a), Event(b), Event()});
        return;
      }
      for (int v = 0; v < 5; ++v) {
        assign[s] = v;
        gen(s + 1);
      }
    };
    triples_.resize(events_);
    pairs_.resize(events_);
    gen(0);
  }

  std::vector<EventRelation> run() {
    place(0);
    return std::move(found_);
  }

 private:
  struct Triple {
    Event a, b, d;
  };

  bool t_leq(Event x, Event y) const { return block_[x.index()] <= block_[y.index()]; }

  bool consistent(Event::Mask e) const {
    const Event ev(e);
    for (Event::Mask x = 0; x <= e; ++x) {
      const Event ex(x);
      const bool le = t_leq(ex, ev), ge = t_leq(ev, ex);
      if (base_.leq(ex, ev) && !le) return false;
      if (base_.leq(ev, ex) && !ge) return false;
      if (mode_ == ExtensionMode::StrictPreserving) {
        if (base_.less(ex, ev) && ge) return false;
        if (base_.less(ev, ex) && le) return false;
      }
    }
    for (const auto& t : triples_[e]) {
      const Event a = t.a, b = t.b, d = t.d;
      if (t_leq(a, b) && !t_leq(a | d, b | d)) return false;
      if (t_leq(a | d, b | d) && !t_leq(d | b, d) && !t_leq(a, b)) return false;
    }
    for (const auto& t : pairs_[e])
      if (t_leq(t.a, t.b) && t_leq(t.a | t.b, t.a) && !t_leq(t.b, Event())) return false;
    return t_leq(Event(), ev);
  }

  void place(Event::Mask e) {
    if (e == events_) {
      emit();
      return;
    }
    const int blocks = block_count_;
    // Even slots open a new block at slot/2, odd slots join block slot/2.
    for (int slot = 0; slot <= 2 * blocks; ++slot) {
      const bool open = slot % 2 == 0;
      const int pos = slot / 2;
      if (open) {
        for (std::size_t x = 0; x < e; ++x)
          if (block_[x] >= pos) ++block_[x];
        ++block_count_;
      }
      block_[e] = pos;
      if (consistent(e)) place(e + 1);
      block_[e] = -1;
      if (open) {
        --block_count_;
        for (std::size_t x = 0; x < e; ++x)
          if (block_[x] > pos) --block_[x];
      }
    }
  }

  void emit() {
    EventRelation t(base_.space());
    for (Event::Mask x = 0; x < events_; ++x)
      for (Event::Mask y = 0; y < events_; ++y) t.set(Event(x), Event(y), block_[x] <= block_[y]);
    if (!check_gqp(t).passed) return;
    if (found_.size() >= kMaxExtensions)
      throw GuardExceeded("more than " + std::to_string(kMaxExtensions) + " total extensions");
    found_.push_back(std::move(t));
  }

  const EventRelation& base_;
  ExtensionMode mode_;
  int n_;
  Event::Mask events_;
  std::vector<int> block_;
  int block_count_ = 0;
  // Condition 1/2 triples keyed by their largest event; condition 3 pairs by A u B.
  std::vector<std::vector<Triple>> triples_;
  std::vector<std::vector<Triple>> pairs_;
  std::vector<EventRelation> found_;
};

}  // namespace

ExtensionSet enumerate_total_extensions(const EventRelation& r, ExtensionMode mode) {
  if (r.space().size() > kMaxExtensionStates)
    throw GuardExceeded("extension enumeration is limited to " + std::to_string(kMaxExtensionStates) + " states");
  require_gqp(r);
  ExtensionSearch search(r, mode);
  auto extensions = search.run();
  std::sort(extensions.begin(), extensions.end(), [](const EventRelation& x, const EventRelation& y) {
    const auto n = x.event_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (x.matrix().test(a, b) != y.matrix().test(a, b)) return y.matrix().test(a, b);
    return false;
  });
  return ExtensionSet{r, std::move(extensions)};
}

namespace {

EventRelation intersection(const EventRelation& base, const std::vector<EventRelation>& extensions) {
  EventRelation out(base.space());
  for (Event::Mask a = 0; a < base.event_count(); ++a)
    for (Event::Mask b = 0; b < base.event_count(); ++b)
      out.set(Event(a), Event(b),
              std::all_of(extensions.begin(), extensions.end(),
                          [&](const EventRelation& t) { return t.leq(Event(a), Event(b)); }));
  return out;
}

}  // namespace

ConjectureResult conjecture_check(const EventRelation& r, ExtensionMode mode) {
  ConjectureResult result;
  result.report = CheckReport("conjecture");
  const auto set = enumerate_total_extensions(r, mode);
  result.extension_count = set.extensions.size();
  result.report.note("extensions", std::to_string(set.extensions.size()));
  result.report.note("mode", mode == ExtensionMode::StrictPreserving ? "strict" : "superset");
  if (set.extensions.empty()) {
    result.outcome = ConjectureOutcome::NoExtensions;
    result.report.record(Witness{"no-total-extension", {}, {}, {}});
    return result;
  }
  const auto meet = intersection(r, set.extensions);
  for (Event::Mask a = 0; a < r.event_count(); ++a)
    for (Event::Mask b = 0; b < r.event_count(); ++b) {
      ++result.report.checked_count;
      if (meet.leq(Event(a), Event(b)) && !r.leq(Event(a), Event(b)))
        result.report.record(Witness{"extra", {}, {}, {}}.event("A", Event(a)).event("B", Event(b)));
    }
  result.outcome = result.report.passed ? ConjectureOutcome::Holds : ConjectureOutcome::Fails;
  return result;
}

bool replay_conjecture_witness(const EventRelation& r, const Witness& w, ExtensionMode mode) {
  const auto set = enumerate_total_extensions(r, mode);
  if (w.condition == "no-total-extension") return set.extensions.empty();
  if (w.condition == "extra") {
    const Event a = w.event("A"), b = w.event("B");
    if (set.extensions.empty() || r.leq(a, b)) return false;
    return std::all_of(set.extensions.begin(), set.extensions.end(),
                       [&](const EventRelation& t) { return t.leq(a, b); });
  }
  throw PreconditionError("no replay rule for conjecture condition \"" + w.condition + "\"");
}

std::vector<EventRelation> enumerate_all_gqp(const StateSpace& space) {
  if (space.size() > 2) throw GuardExceeded("exhaustive g.q.p. enumeration is limited to 2 states");
  const auto events = space.event_count();
  const std::size_t cells = events * events;
  std::vector<EventRelation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    EventRelation r(space);
    bool reflexive = true;
    for (std::size_t i = 0; i < cells; ++i) {
      const bool on = (bits >> i) & 1;
      const auto a = i / events, b = i % events;
      if (a == b && !on) reflexive = false;
      r.set(Event(static_cast<Event::Mask>(a)), Event(static_cast<Event::Mask>(b)), on);
    }
    if (reflexive && check_gqp(r).passed) out.push_back(std::move(r));
  }
  return out;
}

// --- counterexample search ---

namespace {

constexpr Postulate kBasePostulates[] = {Postulate::Q1, Postulate::Q2, Postulate::Q3,
                                         Postulate::Q4, Postulate::Q5, Postulate::Q6};

// All preorders (reflexive, transitive) on k labeled points, k <= 5.
const std::vector<BitMatrix>& preorders(int k) {
  static std::vector<std::vector<BitMatrix>> cache(6);
  auto& out = cache.at(k);
  if (!out.empty()) return out;
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) off.emplace_back(i, j);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    BitMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.set(i, i);
    for (std::size_t b = 0; b < off.size(); ++b)
      if ((bits >> b) & 1) m.set(off[b].first, off[b].second);
    BitMatrix closed = m;
    closed.transitive_closure();
    if (closed == m) out.push_back(std::move(m));
  }
  return out;
}

StateSpace search_space(int n) {
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) names.push_back(std::string(1, static_cast<char>('a' + s)));
  return StateSpace(names);
}

ConsequenceScale search_scale(int k) {
  std::vector<std::string> ids;
  for (int c = 0; c < k; ++c) ids.push_back("c" + std::to_string(c));
  return ConsequenceScale(ids);
}

// Builds the relation of each event from a preorder on its agreement classes.
ConditionalPreferenceStructure from_class_orders(const StateSpace& space, const ConsequenceScale& scale,
                                                 const ActSet& acts, const std::vector<BitMatrix>& orders) {
  std::vector<BitMatrix> rel(space.event_count(), BitMatrix(acts.size(), acts.size()));
  rel[0].fill(true);
  for (Event::Mask m = 1; m < space.event_count(); ++m) {
    const Event a(m);
    for (ActId f = 0; f < acts.size(); ++f)
      for (ActId g = 0; g < acts.size(); ++g) rel[m].set(f, g, orders[m].test(acts.class_of(a, f), acts.class_of(a, g)));
  }
  return ConditionalPreferenceStructure(space, scale, acts, std::move(rel));
}

// Returns true when the candidate is a witness; fills `hit`.
bool examine(const ConditionalPreferenceStructure& p, SearchSegment& seg, std::optional<Counterexample>& hit) {
  ++seg.candidates;
  for (const auto q : kBasePostulates)
    if (!check_postulate(p, q).passed) return false;
  ++seg.models;
  const bool q7 = check_postulate(p, Postulate::Q7).passed;
  if (q7) ++seg.with_q7;
  const auto report = check_equipartition_all(p);
  if (report.passed) return false;
  if (report.witnesses.empty()) return false;
  const auto& w = report.witnesses.front();
  hit = Counterexample{p, w.event("A"), w.act("f"), w.act("g"), q7};
  return true;
}

// Random structures close to the model families: per event, f <= g iff
// every one of a few random priors agrees (Bewley-style unanimity), with a
// shared random utility. Partial whenever the priors disagree.
std::vector<BitMatrix> sample_orders(const StateSpace& space, const ActSet& acts, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> prior_count(1, 3);
  std::uniform_int_distribution<int> weight(1, 6);
  std::uniform_int_distribution<int> step(1, 3);
  const int n = space.size();
  std::vector<long> utility(k);
  long u = 0;
  for (int c = 0; c < k; ++c) utility[c] = (u += step(rng));
  std::vector<std::vector<long>> priors(prior_count(rng), std::vector<long>(n));
  for (auto& p : priors)
    for (auto& w : p) w = weight(rng);

  std::vector<BitMatrix> orders(space.event_count());
  for (Event::Mask m = 1; m < space.event_count(); ++m) {
    const Event a(m);
    const auto classes = acts.class_count(a);
    std::vector<ActId> rep(classes);
    for (ActId f = acts.size(); f-- > 0;) rep[acts.class_of(a, f)] = f;
    BitMatrix o(classes, classes);
    for (std::uint32_t x = 0; x < classes; ++x)
      for (std::uint32_t y = 0; y < classes; ++y) {
        bool all = true;
        for (const auto& p : priors) {
          long fx = 0, gy = 0;
          for (int s = 0; s < n; ++s)
            if (a.contains(s)) {
              fx += p[s] * utility[acts[rep[x]][s]];
              gy += p[s] * utility[acts[rep[y]][s]];
            }
          all = all && fx <= gy;
        }
        o.set(x, y, all);
      }
    orders[m] = std::move(o);
  }
  return orders;
}

}  // namespace

SearchOutcome search_counterexample(const SearchBounds& bounds, SearchTarget) {
  if (bounds.n_max < 1 || bounds.f_max < 2) throw PreconditionError("search needs n_max >= 1 and f_max >= 2");
  SearchOutcome outcome;
  outcome.seed = bounds.seed;
  std::mt19937_64 rng(bounds.seed);

  for (int n = 1; n <= bounds.n_max; ++n)
    for (int k = 2; k <= bounds.f_max; ++k) {
      const auto space = search_space(n);
      const auto scale = search_scale(k);
      const auto acts = ActSet::all(space, scale);
      SearchSegment seg;
      seg.states = n;
      seg.consequences = k;

      // Candidate count of the exhaustive sweep; 0 when some event has too
      // many classes to enumerate its preorders.
      std::uint64_t total = 1;
      for (Event::Mask m = 1; m < space.event_count() && total; ++m) {
        const auto classes = acts.class_count(Event(m));
        if (classes > 5) {
          total = 0;
          break;
        }
        const auto count = preorders(static_cast<int>(classes)).size();
        total = total > bounds.exhaustive_limit / count + 1 ? bounds.exhaustive_limit + 1 : total * count;
      }
      seg.exhaustive = bounds.exhaustive && total > 0 && total <= bounds.exhaustive_limit;

      if (seg.exhaustive) {
        std::vector<std::size_t> digit(space.event_count(), 0);
        std::vector<BitMatrix> orders(space.event_count());
        for (;;) {
          for (Event::Mask m = 1; m < space.event_count(); ++m)
            orders[m] = preorders(static_cast<int>(acts.class_count(Event(m))))[digit[m]];
          if (examine(from_class_orders(space, scale, acts, orders), seg, outcome.witness)) break;
          Event::Mask m = static_cast<Event::Mask>(space.event_count() - 1);
          while (m >= 1) {
            if (++digit[m] < preorders(static_cast<int>(acts.class_count(Event(m)))).size()) break;
            digit[m] = 0;
            --m;
          }
          if (m == 0) break;
        }
      } else {
        for (std::size_t i = 0; i < bounds.samples; ++i)
          if (examine(from_class_orders(space, scale, acts, sample_orders(space, acts, k, rng)), seg,
                      outcome.witness))
            break;
      }
      outcome.segments.push_back(seg);
      if (outcome.witness) return outcome;
    }
  return outcome;
}

}  // namespace qpw
