#include <random>

#include "doctest.h"
#include "grid.hpp"
#include "oracles.hpp"
#include "qpw/error.hpp"
#include "qpw/postulates.hpp"

using namespace qpw;

namespace {

const ConsequenceScale& binary() {
  static const ConsequenceScale f({"0", "1"}, std::vector<Rational>{0, 1});
  return f;
}

// Reflexive pairs, empty event below all, D <= D u B, plus extra pairs; closed.
EventRelation closed_with(const StateSpace& s, std::vector<std::pair<Event, Event>> extra) {
  EventRelation r(s);
  for (auto a : all_events(s)) {
    r.set(a, a);
    r.set(Event(), a);
    for (auto b : all_events(s))
      if (a.disjoint(b)) r.set(a, a | b);
  }
  for (auto [a, b] : extra) r.set(a, b);
  return r.reflexive_transitive_closure();
}

EventRelation subset_order(const StateSpace& s) {
  EventRelation r(s);
  for (auto a : all_events(s))
    for (auto b : all_events(s)) r.set(a, b, a.subset_of(b));
  return r;
}

EventRelation oracle_plausibility(const grid::Instance& inst) {
  switch (inst.kind) {
    case grid::Kind::Expectation: return oracle::expectation_plausibility(inst.model());
    case grid::Kind::Hyperreal: return oracle::hyperreal_plausibility(inst.model());
    case grid::Kind::Ranked: return oracle::ranked_plausibility(inst.space, inst.ascending);
  }
  throw std::logic_error("unknown kind");
}

}  // namespace

TEST_CASE("derived plausibility matches probability and maxima oracles on the grid") {
  for (const auto& inst : grid::full_grid()) {
    CAPTURE(inst.label);
    const auto p = inst.build();
    const auto r = derive_plausibility(p);
    CHECK(r == oracle_plausibility(inst));
    if (inst.space.size() <= 3) CHECK(r == oracle::plausibility(p));
  }
}

TEST_CASE("plausibility examples") {
  const auto s3 = grid::space(3);
  const auto u = derive_plausibility(expectation_structure(ProbabilityModel::uniform(s3), binary()));
  CHECK(u.equivalent(s3.event({"a"}), s3.event({"b"})));
  CHECK(u.equivalent(s3.event({"b"}), s3.event({"c"})));
  CHECK(u.less(s3.event({"a"}), s3.event({"a", "b"})));
  CHECK(u.less(Event(), s3.event({"a"})));
  CHECK(u.is_total());
  for (auto a : all_events(s3))
    for (auto b : all_events(s3)) CHECK(u.leq(a, b) == (a.size() <= b.size()));

  const auto s2 = grid::space(2);
  const auto ranked = derive_plausibility(ranked_structure(RankedModel(s2, {0, 1}), binary()));
  CHECK(format_chain(ranked) == "∅ < {a} < {b} ∼ {a,b}");

  const ProbabilityModel m(s3, {grid::hr({1, -1, -1}, 6), grid::hr({0, 1}, 6), grid::hr({0, 0, 1}, 6)});
  const auto h = derive_plausibility(hyperreal_structure(m, binary()));
  CHECK(h.leq(s3.event({"b", "c"}), s3.event({"a"})));
  CHECK(!h.leq(s3.event({"a"}), s3.event({"b", "c"})));
  CHECK(h.equivalent(s3.event({"a"}), s3.event({"a", "b"})));
  CHECK(is_ll(h, s3.event({"b"}), s3.event({"a"})));
  CHECK(!is_ll(u, s3.event({"a"}), s3.event({"b"})));

  const auto s4 = grid::space(4);
  CHECK(format_chain(derive_plausibility(ranked_structure(RankedModel(s4, {0, 1, 2, 3}), binary())))
            .starts_with("∅ < {a} < {b} ∼ {a,b} < {c} ∼ {a,c} ∼ {b,c} ∼ {a,b,c} < {d}"));
  CHECK(format_chain(subset_order(s2)).empty());
}

TEST_CASE("derivation needs a strict constant pair") {
  auto p = expectation_structure(ProbabilityModel::uniform(grid::space(1)), binary());
  for (ActId f = 0; f < p.acts().size(); ++f)
    for (ActId g = 0; g < p.acts().size(); ++g) p = p.with_pair(Event(1), f, g, true);
  CHECK_THROWS_AS(derive_plausibility(p), PreconditionError);
}

TEST_CASE("g.q.p. axioms") {
  const auto s = grid::space(2);
  const Event a = s.event({"a"}), b = s.event({"b"});
  const auto bad = closed_with(s, {{a, b}, {a | b, a}});
  const auto report = check_gqp(bad);
  REQUIRE(!report.passed);
  bool found = false;
  for (const auto& w : report.witnesses) {
    CHECK(replay_witness(bad, "gqp", w));
    if (w.condition == "condition 3" && !found) {
      found = true;
      CHECK(w.event("A") == a);
      CHECK(w.event("B") == b);
    }
  }
  CHECK(found);
  const auto lemmas = check_gqp_lemmas(bad);
  bool sum = false;
  for (const auto& r : lemmas)
    if (r.subject == "sum-exceeds-part") {
      sum = true;
      REQUIRE(!r.passed);
      CHECK(r.witnesses.front().event("A") == a);
      CHECK(r.witnesses.front().event("B") == b);
    }
  CHECK(sum);

  CHECK(check_gqp(subset_order(s)).passed);
  CHECK(oracle::gqp(subset_order(s)));

  EventRelation empty(s);
  const auto broken = check_gqp(empty);
  CHECK(!broken.passed);
  CHECK(broken.witnesses.front().condition == "reflexive");
}

TEST_CASE("check_gqp agrees with direct quantification on random relations") {
  std::mt19937 rng(3);
  const auto s = grid::space(2);
  int passing = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<std::pair<Event, Event>> extra;
    for (int i = 0; i < static_cast<int>(rng() % 4); ++i)
      extra.emplace_back(Event(rng() % 4), Event(rng() % 4));
    auto r = closed_with(s, extra);
    if (trial % 2) r.set(Event(rng() % 4), Event(rng() % 4), false);
    const bool ok = check_gqp(r).passed;
    passing += ok;
    CHECK(ok == oracle::gqp(r));
  }
  CHECK(passing > 0);
}

TEST_CASE("property suite holds on every derived relation of the grid") {
  for (const auto& inst : grid::full_grid()) {
    CAPTURE(inst.label);
    const auto p = inst.build();
    const auto r = derive_plausibility(p);
    CHECK(check_gqp(r).passed);
    for (const auto& rep : check_gqp_lemmas(r, inst.space.size() <= 3 ? &p : nullptr)) {
      CAPTURE(rep.subject);
      CHECK(rep.passed);
    }
  }
}

TEST_CASE("ranked: strict implies negligible") {
  const auto s = grid::space(4);
  const auto r = derive_plausibility(ranked_structure(RankedModel(s, {2, 0, 3, 1}), binary()));
  for (auto a : all_events(s))
    for (auto b : all_events(s))
      if (r.less(a, b)) CHECK(is_ll(r, a, b));
}

TEST_CASE("families") {
  for (const auto& inst : grid::full_grid()) {
    CAPTURE(inst.label);
    const auto flags = classify_family(derive_plausibility(inst.build()));
    CHECK(flags.total);
    CHECK(flags.criterion_agrees());
    if (flags.purely_nonstandard) CHECK(flags.total);
    switch (inst.kind) {
      case grid::Kind::Expectation:
        CHECK(flags.standard);
        CHECK(flags.purely_nonstandard == (inst.space.size() == 1));
        break;
      case grid::Kind::Ranked: CHECK(flags.purely_nonstandard); break;
      case grid::Kind::Hyperreal:
        if (inst.infinitesimal_weight) CHECK(!flags.standard);
        break;
    }
  }
  const auto s = grid::space(2);
  const auto partial = closed_with(s, {});
  const auto flags = classify_family(partial);
  CHECK(!flags.total);
  CHECK(!flags.purely_nonstandard);
}

TEST_CASE("equipartition") {
  const auto s = grid::space(2);
  const auto p = expectation_structure(ProbabilityModel::uniform(s), binary());
  const auto f = p.acts().id_of(Act({1, 0})), g = p.acts().id_of(Act({0, 1}));
  CHECK(check_equipartition_equivalence(p, s.full(), f, g).passed);
  CHECK(check_equipartition_equivalence(p, s.full(), f, f).passed);
  const auto all = check_equipartition_all(p);
  CHECK(all.passed);
  CHECK(all.checked_count == 4 * 4 * 4);

  // Breaking f ~ g on S produces a replayable witness.
  const auto broken = p.with_pair(s.full(), g, f, false);
  const auto r = check_equipartition_equivalence(broken, derive_plausibility(p), s.full(), f, g);
  REQUIRE(!r.passed);
  CHECK(replay_witness(derive_plausibility(p), "equipartition", r.witnesses.front(), &broken));
}

TEST_CASE("gloss readings are diagnostics with replayable witnesses") {
  for (const auto& inst : grid::full_grid()) {
    if (inst.space.size() > 3) continue;
    const auto r = derive_plausibility(inst.build());
    for (const auto& rep : check_ll_gloss(r))
      for (const auto& w : rep.witnesses) CHECK(replay_witness(r, rep.subject, w));
  }
}

TEST_CASE("relation helpers") {
  const auto s = grid::space(2);
  const std::vector<std::pair<Event, Event>> pairs{{Event(1), Event(2)}, {Event(2), Event(3)}};
  const EventRelation r(s, pairs);
  CHECK(r.pair_count() == 2);
  const auto c = r.reflexive_transitive_closure();
  CHECK(c.leq(Event(1), Event(3)));
  CHECK(c.contains(r));
  CHECK(!r.contains(c));
  CHECK_THROWS_AS(EventRelation(s, std::vector<std::pair<Event, Event>>{{Event(4), Event(0)}}), PreconditionError);
}
