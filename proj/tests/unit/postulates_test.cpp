#include <map>
#include <random>

#include "doctest.h"
#include "grid.hpp"
#include "oracles.hpp"
#include "qpw/error.hpp"
#include "qpw/postulates.hpp"

using namespace qpw;

namespace {

const ConsequenceScale& three() {
  static const ConsequenceScale f({"0", "h", "1"}, std::vector<Rational>{0, Rational(1, 2), 1});
  return f;
}

ConditionalPreferenceStructure uniform(int n, const ConsequenceScale& f = three()) {
  return expectation_structure(ProbabilityModel::uniform(grid::space(n)), f);
}

// Randomly flips a few pairs of a structure.
ConditionalPreferenceStructure perturb(const ConditionalPreferenceStructure& p, std::mt19937& rng, int flips) {
  auto q = p;
  for (int i = 0; i < flips; ++i) {
    const Event a(static_cast<Event::Mask>(rng() % p.space().event_count()));
    const auto f = static_cast<ActId>(rng() % p.acts().size());
    const auto g = static_cast<ActId>(rng() % p.acts().size());
    q = q.with_pair(a, f, g, !q.leq(a, f, g));
  }
  return q;
}

// Small structures: grid models, their perturbations, and saturations
// of random generators.
std::vector<ConditionalPreferenceStructure> mixed_corpus(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  std::vector<ConditionalPreferenceStructure> models;
  for (const auto& inst : grid::full_grid())
    if (inst.space.size() + inst.scale.size() <= 5) models.push_back(inst.build());
  std::vector<ConditionalPreferenceStructure> out = models;
  for (int i = 0; i < count; ++i) {
    const auto& base = models[rng() % models.size()];
    if (i % 3 == 2) {
      std::vector<Generator> gens;
      for (int k = 0; k < 4; ++k)
        gens.push_back({Event(static_cast<Event::Mask>(rng() % base.space().event_count())), static_cast<ActId>(rng() % base.acts().size()),
                        static_cast<ActId>(rng() % base.acts().size())});
      out.push_back(saturate(base.space(), base.scale(), base.acts(), gens));
    } else {
      out.push_back(perturb(base, rng, 1 + static_cast<int>(rng() % 3)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("postulate names") {
  for (auto q : kAllPostulates) CHECK(parse_postulate(postulate_name(q)) == q);
  CHECK(parse_postulate("Q4'") == Postulate::Q4Strong);
  CHECK(!parse_postulate("Q9").has_value());
}

TEST_CASE("uniform expectation on three states passes everything") {
  const auto p = uniform(3);
  for (auto q : kAllPostulates) {
    const auto r = check_postulate(p, q);
    CAPTURE(r.subject);
    CHECK(r.passed);
    CHECK(r.checked_count > 0);
  }
  for (const auto& r : check_derived_lemmas(p)) {
    CAPTURE(r.subject);
    CHECK(r.passed);
  }
  CHECK(check_derived_lemmas(p).size() == 11);
}

TEST_CASE("a deleted transitive pair breaks Q1 at exactly that triple") {
  const auto s = grid::space(3);
  const ConsequenceScale f({"lo", "mid", "hi"});
  const auto acts = ActSet::two_valued(s, f);
  const ActId lo = acts.id_of(constant_act(s, 0)), mid = acts.id_of(constant_act(s, 1)),
              hi = acts.id_of(constant_act(s, 2));
  const std::vector<Generator> gens{{s.full(), lo, hi}, {s.full(), hi, mid}};
  const auto p = saturate(s, f, acts, gens);
  REQUIRE(p.leq(s.full(), lo, mid));
  const auto broken = p.with_pair(s.full(), lo, mid, false);
  const auto r = check_postulate(broken, Postulate::Q1);
  REQUIRE(!r.passed);
  REQUIRE(r.witnesses.size() == 1);
  const auto& w = r.witnesses.front();
  CHECK(w.event("A") == s.full());
  CHECK(w.act("f") == lo);
  CHECK(w.act("g") == hi);
  CHECK(w.act("h") == mid);
  CHECK(replay_witness(broken, "Q1", w));
  CHECK(!replay_witness(p, "Q1", w));
}

TEST_CASE("ranked model: Q'4 fails through a negligible event") {
  const auto s = grid::space(3);
  const auto p = ranked_structure(RankedModel(s, {0, 1, 2}), three());
  const auto r = check_postulate(p, Postulate::Q4Strong);
  REQUIRE(!r.passed);
  for (const auto& w : r.witnesses) {
    CHECK(is_negligible(p, w.event("A"), w.event("B")));
    CHECK(replay_witness(p, "Q'4", w));
  }
  CHECK(check_postulate(p, Postulate::Q4).passed);
}

TEST_CASE("null events and negligibility") {
  const auto s = grid::space(3);
  const auto p = uniform(3);
  for (auto a : all_events(s)) CHECK(is_null_event(p, a) == a.empty());
  CHECK(is_negligible(p, Event(), s.event({"b"})));
  CHECK(!is_negligible(p, s.event({"a"}), s.event({"b"})));
  CHECK_THROWS_AS(is_negligible(p, s.event({"a"}), s.event({"a", "b"})), PreconditionError);

  const auto ranked = ranked_structure(RankedModel(s, {0, 1, 2}), three());
  CHECK(is_negligible(ranked, s.event({"a"}), s.event({"c"})));
  CHECK(!is_negligible(ranked, s.event({"c"}), s.event({"a"})));

  const ProbabilityModel m(s, {grid::hr({1, -1, -1}, 6), grid::hr({0, 1}, 6), grid::hr({0, 0, 1}, 6)});
  const auto h = hyperreal_structure(m, three());
  for (auto a : all_events(s)) CHECK(is_null_event(h, a) == a.empty());
}

TEST_CASE("constants order") {
  const auto order = constants_order(uniform(2));
  CHECK(order.less(0, 1));
  CHECK(order.less(1, 2));
  CHECK(order.less(0, 2));
  CHECK(!order.leq(2, 0));

  const auto ranked = constants_order(ranked_structure(RankedModel(grid::space(2), {1, 0}), three()));
  CHECK(ranked == order);

  // Everything null: the total relation.
  auto p = uniform(1);
  for (ActId f = 0; f < p.acts().size(); ++f)
    for (ActId g = 0; g < p.acts().size(); ++g) p = p.with_pair(Event(1), f, g, true);
  const auto total = constants_order(p);
  CHECK(!total.has_strict_pair());
  CHECK(total.leq(2, 0));
  CHECK(!check_postulate(p, Postulate::Q6).passed);

  // Two non-null events disagreeing on a constant pair.
  auto q = uniform(2);
  q = q.with_pair(Event(1), q.constant(2), q.constant(0), true);
  CHECK_THROWS_AS(constants_order(q), ConstantsDisagreement);
  try {
    constants_order(q);
  } catch (const ConstantsDisagreement& e) {
    CHECK(e.c != e.d);
  }
  CHECK(!check_postulate(q, Postulate::Q5).passed);
  const auto r = check_postulate(q, Postulate::R);
  CHECK(!r.passed);
  CHECK(r.error.has_value());
}

TEST_CASE("Q5 non-empty variant sees null non-empty events") {
  auto p = uniform(2);
  for (ActId f = 0; f < p.acts().size(); ++f)
    for (ActId g = 0; g < p.acts().size(); ++g) p = p.with_pair(Event(1), f, g, true);
  CHECK(is_null_event(p, Event(1)));
  CHECK(check_postulate(p, Postulate::Q5).passed);
  const auto strict = check_postulate(p, Postulate::Q5, {.q5_nonempty = true});
  CHECK(!strict.passed);
  for (const auto& w : strict.witnesses) CHECK(replay_witness(p, "Q5", w, {.q5_nonempty = true}));
}

TEST_CASE("Q7 reports missing spliced acts") {
  const auto s = grid::space(3);
  const auto acts = ActSet::two_valued(s, three());
  const auto p = expectation_structure(ProbabilityModel::uniform(s), three(), acts);
  const auto r = check_postulate(p, Postulate::Q7);
  CHECK(!r.passed);
  REQUIRE(r.error.has_value());
  CHECK(r.error->find("not in the act set") != std::string::npos);
  CHECK(r.witnesses.empty());
}

TEST_CASE("R records both general and disjoint forms") {
  const auto r = check_postulate(uniform(2), Postulate::R);
  CHECK(r.passed);
  REQUIRE(r.notes.size() == 2);
  CHECK(r.notes[0] == std::pair<std::string, std::string>{"general", "pass"});
  CHECK(r.notes[1] == std::pair<std::string, std::string>{"disjoint", "pass"});
}

TEST_CASE("checks agree with direct quantification") {
  std::map<bool, int> q3_outcomes, q4_outcomes, q7_outcomes;
  for (const auto& p : mixed_corpus(99, 150)) {
    ++q3_outcomes[oracle::q3(p)];
    ++q4_outcomes[oracle::q4(p, false)];
    ++q7_outcomes[oracle::q7(p)];
    CHECK(check_postulate(p, Postulate::Q1).passed == oracle::q1(p));
    CHECK(check_postulate(p, Postulate::Q2).passed == oracle::q2(p));
    CHECK(check_postulate(p, Postulate::Q3).passed == oracle::q3(p));
    CHECK(check_postulate(p, Postulate::Q4).passed == oracle::q4(p, false));
    CHECK(check_postulate(p, Postulate::Q4Strong).passed == oracle::q4(p, true));
    CHECK(check_postulate(p, Postulate::Q5).passed == oracle::q5(p));
    if (check_postulate(p, Postulate::Q5).passed)
      CHECK(check_postulate(p, Postulate::Q6).passed == oracle::q6(p));
    CHECK(check_postulate(p, Postulate::Q7).passed == oracle::q7(p));
    for (auto a : all_events(p.space())) {
      CHECK(is_null_event(p, a) == oracle::null_event(p, a));
      for (auto b : all_events(p.space()))
        if (a.disjoint(b)) CHECK(is_negligible(p, a, b) == oracle::negligible(p, a, b));
    }
  }
  // The corpus exercises both outcomes.
  for (const auto* m : {&q3_outcomes, &q4_outcomes, &q7_outcomes}) CHECK(m->size() == 2);
}

TEST_CASE("every emitted witness replays as a violation") {
  std::size_t replayed = 0;
  for (const auto& p : mixed_corpus(5, 120)) {
    std::vector<CheckReport> reports;
    for (auto q : kAllPostulates) reports.push_back(check_postulate(p, q));
    for (auto& r : check_derived_lemmas(p)) reports.push_back(std::move(r));
    for (const auto& r : reports) {
      CHECK(r.passed == (r.witnesses.empty() && !r.error));
      for (const auto& w : r.witnesses) {
        CAPTURE(r.subject);
        CHECK(replay_witness(p, r.subject, w));
        ++replayed;
      }
    }
  }
  CHECK(replayed > 100);
}

TEST_CASE("Q2 implies Q0") {
  for (const auto& p : mixed_corpus(17, 90))
    if (check_postulate(p, Postulate::Q2).passed) CHECK(check_postulate(p, Postulate::Q0).passed);
}

TEST_CASE("negligibility transfers strict preference and indifference") {
  for (const auto& p : mixed_corpus(23, 60))
    for (auto a : all_events(p.space()))
      for (auto b : all_events(p.space())) {
        if (!a.disjoint(b) || !is_negligible(p, a, b)) continue;
        for (ActId f = 0; f < p.acts().size(); ++f)
          for (ActId g = 0; g < p.acts().size(); ++g) {
            CHECK(p.indifferent(a | b, f, g) == p.indifferent(b, f, g));
            CHECK(p.less(a | b, f, g) == p.less(b, f, g));
          }
      }
}

TEST_CASE("Q6 fails exactly when the constant order has no strict pair") {
  for (const auto& p : mixed_corpus(31, 90)) {
    if (!check_postulate(p, Postulate::Q5).passed) continue;
    CHECK(check_postulate(p, Postulate::Q6).passed == constants_order(p).has_strict_pair());
  }
}

TEST_CASE("derived lemmas hold on models of Q0-Q6 and may fail elsewhere") {
  std::size_t models = 0, failing = 0;
  for (const auto& p : mixed_corpus(41, 150)) {
    bool model = true;
    for (auto q : {Postulate::Q0, Postulate::Q1, Postulate::Q2, Postulate::Q3, Postulate::Q4, Postulate::Q5,
                   Postulate::Q6})
      model = model && check_postulate(p, q).passed;
    const auto lemmas = check_derived_lemmas(p);
    if (model) {
      ++models;
      for (const auto& r : lemmas) {
        CAPTURE(r.subject);
        CHECK(r.passed);
      }
    } else {
      for (const auto& r : lemmas) failing += r.passed ? 0 : 1;
    }
  }
  CHECK(models > 0);
  CHECK(failing > 0);
}
