#include <cmath>
#include <random>

#include "doctest.h"
#include "qpw/error.hpp"
#include "qpw/postulates.hpp"
#include "qpw/preference.hpp"
#include "qpw/rational.hpp"

using namespace qpw;

namespace {

StateSpace abc() { return StateSpace({"a", "b", "c"}); }
ConsequenceScale lmh() { return ConsequenceScale({"lo", "mid", "hi"}); }

}  // namespace

TEST_CASE("rationals parse exactly and reject decimals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("+7/3") == Rational(7, 3));
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("state space validation") {
  CHECK_THROWS_AS(StateSpace({}), PreconditionError);
  CHECK_THROWS_AS(StateSpace({"a", "a"}), PreconditionError);
  CHECK_THROWS_AS(StateSpace({"a", "b", "c", "d", "e", "f", "g", "h", "i"}), GuardExceeded);
  const auto s = abc();
  CHECK(s.event_count() == 8);
  CHECK(s.full().mask() == 7);
  CHECK(s.event({"a", "c"}).mask() == 5);
  CHECK_THROWS_AS(s.event({"z"}), ParseError);
  CHECK(s.format(s.event({"c", "a"})) == "{a,c}");
  CHECK(s.format(Event()) == "∅");
  CHECK(s.complement(s.event({"b"})) == s.event({"a", "c"}));
}

TEST_CASE("event algebra laws hold on every triple of a 3-state space") {
  const auto s = abc();
  for (auto a : all_events(s))
    for (auto b : all_events(s)) {
      CHECK((a | b) == (b | a));
      CHECK(((a - b) | (a & b)) == a);
      CHECK((a - b).disjoint(b));
      CHECK(s.complement(a | b) == (s.complement(a) & s.complement(b)));
      CHECK(a.subset_of(b) == ((a | b) == b));
      for (auto c : all_events(s)) CHECK((a & (b | c)) == ((a & b) | (a & c)));
    }
}

TEST_CASE("bit matrix closure matches a naive fixpoint") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    BitMatrix m(n, n);
    for (std::size_t k = 0; k < n * 2; ++k) m.set(rng() % n, rng() % n);
    std::vector<std::vector<bool>> ref(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ref[i][j] = m.test(i, j);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n && !ref[i][j]; ++k)
            if (ref[i][k] && ref[k][j]) ref[i][j] = changed = true;
    }
    m.transitive_closure();
    bool same = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) same = same && m.test(i, j) == ref[i][j];
    CHECK(same);
  }
  BitMatrix full(3, 70);
  full.fill(true);
  CHECK(full.all());
  CHECK(full.count() == 210);
}

TEST_CASE("act sets") {
  const auto s = abc();
  const auto f = lmh();
  const auto all = ActSet::all(s, f);
  CHECK(all.size() == 27);
  CHECK(all[1] == Act({1, 0, 0}));  // state 0 varies fastest
  CHECK(all.id_of(Act({2, 2, 2})) == 26);
  CHECK_THROWS_AS(ActSet::all(s, f, 26), GuardExceeded);

  const auto two = ActSet::two_valued(s, f);
  // 3 constants + 6 proper events x 6 ordered pairs c != d, halved since
  // w_A^{c,d} is w_{S-A}^{d,c}.
  CHECK(two.size() == 3 + 6 * 6 / 2);
  for (auto a : all_events(s))
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) CHECK(two.find(two_valued_act(s, a, c, d)).has_value());

  CHECK(two_valued_act(s, f, s.event({"b"}), "hi", "lo") == Act({0, 2, 0}));
  CHECK(two_valued_act(s, Event(), 2, 1) == constant_act(s, 1));
  CHECK(splice(Act({0, 1, 2}), s.event({"a", "c"}), 1) == Act({1, 1, 1}));
  CHECK(format_act(s, f, Act({0, 1, 2})) == "{a↦lo, b↦mid, c↦hi}");
  CHECK_THROWS_AS(ActSet::from_acts(s, f, {Act({0, 0, 0}), Act({0, 0, 0})}), PreconditionError);
  CHECK_THROWS_AS(ActSet::from_acts(s, f, {Act({0, 0})}), PreconditionError);
}

TEST_CASE("agreement classes coincide with pointwise agreement") {
  const auto s = abc();
  const auto acts = ActSet::all(s, lmh());
  for (auto a : all_events(s)) {
    CHECK(acts.class_count(a) == static_cast<std::uint32_t>(std::pow(3, a.size())));
    for (ActId f = 0; f < acts.size(); ++f)
      for (ActId g = 0; g < acts.size(); ++g) CHECK(acts.agree_on(a, f, g) == equal_on(acts[f], acts[g], a));
  }
}

TEST_CASE("structure validation") {
  const StateSpace s({"a"});
  const ConsequenceScale f({"lo", "hi"});
  auto acts = ActSet::from_acts(s, f, {Act({0})});
  CHECK_THROWS_AS(ConditionalPreferenceStructure(s, f, acts, {BitMatrix(1, 1), BitMatrix(1, 1)}),
                  PreconditionError);  // w^{hi} missing
  auto two = ActSet::two_valued(s, f);
  CHECK_THROWS_AS(ConditionalPreferenceStructure(s, f, two, {BitMatrix(2, 2)}), PreconditionError);
  ConditionalPreferenceStructure p(s, f, two, {BitMatrix(2, 2), BitMatrix(2, 2)});
  CHECK(p.constant(1) == two.id_of(Act({1})));
  CHECK(p.two_valued(s.full(), 1, 0) == p.constant(1));
}

TEST_CASE("classify_pair") {
  const StateSpace s({"a"});
  const ConsequenceScale f({"lo", "hi"});
  auto acts = ActSet::two_valued(s, f);
  std::vector<Generator> gens{{s.full(), 0, 1}};
  auto p = saturate(s, f, acts, gens);
  CHECK(classify_pair(p, s.full(), 0, 1) == PairClass::StrictlyPreferredSecond);
  CHECK(classify_pair(p, s.full(), 1, 0) == PairClass::StrictlyPreferredFirst);
  CHECK(classify_pair(p, s.full(), 1, 1) == PairClass::Indifferent);
  CHECK(classify_pair(p, Event(), 0, 1) == PairClass::Indifferent);
  auto q = p.with_pair(s.full(), 0, 1, false);
  CHECK(classify_pair(q, s.full(), Act({0}), Act({1})) == PairClass::Undecided);
  CHECK_THROWS_AS(classify_pair(q, s.full(), Act({0}), Act({0, 0})), PreconditionError);
  CHECK(to_string(PairClass::Undecided) == "undecided");
}

namespace {

std::vector<Generator> random_generators(std::mt19937& rng, const StateSpace& s, const ActSet& acts, int count) {
  std::vector<Generator> out;
  for (int i = 0; i < count; ++i)
    out.push_back({Event(static_cast<Event::Mask>(rng() % s.event_count())), static_cast<ActId>(rng() % acts.size()),
                   static_cast<ActId>(rng() % acts.size())});
  return out;
}

bool contains(const ConditionalPreferenceStructure& big, const ConditionalPreferenceStructure& small) {
  for (auto a : all_events(big.space()))
    for (ActId f = 0; f < big.acts().size(); ++f)
      for (ActId g = 0; g < big.acts().size(); ++g)
        if (small.leq(a, f, g) && !big.leq(a, f, g)) return false;
  return true;
}

}  // namespace

TEST_CASE("saturate: idempotent, monotone, and closed under Q0-Q2") {
  const StateSpace s({"a", "b"});
  const auto f = lmh();
  const auto acts = ActSet::all(s, f);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = random_generators(rng, s, acts, 1 + trial % 12);
    const auto p = saturate(s, f, acts, gens);
    CHECK(check_postulate(p, Postulate::Q0).passed);
    CHECK(check_postulate(p, Postulate::Q1).passed);
    CHECK(check_postulate(p, Postulate::Q2).passed);

    // Re-saturating with every pair of p as a generator changes nothing.
    std::vector<Generator> all_pairs;
    for (auto a : all_events(s))
      for (ActId x = 0; x < acts.size(); ++x)
        for (ActId y = 0; y < acts.size(); ++y)
          if (p.leq(a, x, y)) all_pairs.push_back({a, x, y});
    CHECK(saturate(s, f, acts, all_pairs) == p);

    auto more = gens;
    const auto extra = random_generators(rng, s, acts, 3);
    more.insert(more.end(), extra.begin(), extra.end());
    CHECK(contains(saturate(s, f, acts, more), p));

    // Classification is exhaustive and mirror-consistent.
    for (auto a : all_events(s))
      for (ActId x = 0; x < acts.size(); x += 3)
        for (ActId y = 0; y < acts.size(); y += 2) {
          const auto xy = classify_pair(p, a, x, y), yx = classify_pair(p, a, y, x);
          if (xy == PairClass::StrictlyPreferredSecond) CHECK(yx == PairClass::StrictlyPreferredFirst);
          if (xy == PairClass::StrictlyPreferredFirst) CHECK(yx == PairClass::StrictlyPreferredSecond);
          if (xy == PairClass::Indifferent || xy == PairClass::Undecided) CHECK(yx == xy);
        }
  }
  CHECK_THROWS_AS(saturate(s, f, acts, std::vector<Generator>{{Event(), 0, 999}}), PreconditionError);
  CHECK_THROWS_AS(saturate(s, f, acts, std::vector<Generator>{{Event(16), 0, 1}}), PreconditionError);
}

TEST_CASE("witness lookups") {
  Witness w;
  w.event("A", Event(3)).act("f", 4).consequence("c", 1);
  CHECK(w.event("A") == Event(3));
  CHECK(w.act("f") == 4);
  CHECK(w.consequence("c") == 1);
  CHECK_THROWS_AS(w.event("B"), PreconditionError);
  CheckReport r("x");
  for (int i = 0; i < 20; ++i) r.record(Witness{});
  CHECK(!r.passed);
  CHECK(r.violation_count == 20);
  CHECK(r.witnesses.size() == kMaxWitnesses);
}
