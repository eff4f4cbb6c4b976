#include "qpw/document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>
#include <openssl/evp.h>

#include "qpw/error.hpp"
#include "qpw/models.hpp"

namespace qpw {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& at, const std::string& what) { throw ParseError(at, what); }

std::string child(const std::string& at, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return at + "/" + escaped;
}

std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

void reject_floats(const json& j, const std::string& at) {
  if (j.is_number_float()) fail(at, "floating-point number; write rationals as \"p/q\" strings");
  if (j.is_array())
    for (std::size_t i = 0; i < j.size(); ++i) reject_floats(j[i], child(at, i));
  if (j.is_object())
    for (const auto& [key, value] : j.items()) reject_floats(value, child(at, key));
}

const json& require(const json& doc, std::string_view key) {
  const auto it = doc.find(std::string(key));
  if (it == doc.end()) fail("", "missing field \"" + std::string(key) + "\"");
  return *it;
}

const json& require_array(const json& j, const std::string& at) {
  if (!j.is_array()) fail(at, "expected an array");
  return j;
}

const std::string& require_string(const json& j, const std::string& at) {
  if (!j.is_string()) fail(at, "expected a string");
  return j.get_ref<const std::string&>();
}

Rational rational_at(const json& j, const std::string& at) {
  try {
    return parse_rational(require_string(j, at));
  } catch (const ParseError& e) {
    if (!e.location.empty()) throw;
    fail(at, e.what());
  }
}

DocumentMode parse_mode(const json& j) {
  const auto& name = require_string(j, "/mode");
  for (auto m : {DocumentMode::Explicit, DocumentMode::Expectation, DocumentMode::Hyperreal,
                 DocumentMode::Ranked, DocumentMode::EventRelation})
    if (name == mode_name(m)) return m;
  fail("/mode", "unknown mode \"" + name + "\"");
}

StateSpace parse_states(const json& j) {
  require_array(j, "/states");
  if (j.empty()) fail("/states", "at least one state is required");
  if (j.size() > static_cast<std::size_t>(kMaxStates))
    fail("/states", "at most " + std::to_string(kMaxStates) + " states are supported");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& name = require_string(j[i], child("/states", i));
    if (name.empty()) fail(child("/states", i), "empty state name");
    if (std::find(names.begin(), names.end(), name) != names.end())
      fail(child("/states", i), "duplicate state \"" + name + "\"");
    names.push_back(name);
  }
  return StateSpace(std::move(names));
}

// Either a bare identifier or {"id": ..., "value": "p/q"}; values all or none.
ConsequenceScale parse_consequences(const json& j, bool need_values) {
  require_array(j, "/consequences");
  if (j.empty()) fail("/consequences", "at least one consequence is required");
  std::vector<std::string> ids;
  std::vector<Rational> values;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto at = child("/consequences", i);
    std::string id;
    if (j[i].is_string()) {
      id = j[i].get<std::string>();
    } else if (j[i].is_object()) {
      for (const auto& [key, value] : j[i].items())
        if (key != "id" && key != "value") fail(child(at, key), "unknown field");
      if (!j[i].contains("id")) fail(at, "missing field \"id\"");
      id = require_string(j[i]["id"], child(at, "id"));
      if (j[i].contains("value")) values.push_back(rational_at(j[i]["value"], child(at, "value")));
    } else {
      fail(at, "expected a string or an object");
    }
    if (id.empty()) fail(at, "empty consequence id");
    if (std::find(ids.begin(), ids.end(), id) != ids.end())
      fail(at, "duplicate consequence \"" + id + "\"");
    ids.push_back(id);
  }
  if (!values.empty() && values.size() != ids.size())
    fail("/consequences", "either every consequence carries a value or none does");
  if (need_values && values.empty()) fail("/consequences", "this mode needs consequence values");
  if (values.empty()) return ConsequenceScale(std::move(ids));
  return ConsequenceScale(std::move(ids), std::move(values));
}

Event parse_event(const json& j, const StateSpace& space, const std::string& at) {
  require_array(j, at);
  Event e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& name = require_string(j[i], child(at, i));
    const auto s = space.find(name);
    if (!s) fail(child(at, i), "unknown state \"" + name + "\"");
    e = e | space.singleton(*s);
  }
  return e;
}

Act parse_act(const json& j, const StateSpace& space, const ConsequenceScale& scale,
              const std::string& at) {
  require_array(j, at);
  if (j.size() != static_cast<std::size_t>(space.size()))
    fail(at, "an act lists one consequence per state");
  std::vector<Consequence> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& id = require_string(j[i], child(at, i));
    const auto c = scale.find(id);
    if (!c) fail(child(at, i), "unknown consequence \"" + id + "\"");
    out.push_back(*c);
  }
  return Act(std::move(out));
}

// "all" (default), "two_valued", or a list of extra acts joined to the
// two-valued ones.
ActSet parse_acts(const json& doc, const StateSpace& space, const ConsequenceScale& scale) {
  const auto it = doc.find("acts");
  if (it == doc.end()) return ActSet::all(space, scale);
  if (it->is_string()) {
    if (*it == "all") return ActSet::all(space, scale);
    if (*it == "two_valued") return ActSet::two_valued(space, scale);
    fail("/acts", "expected \"all\", \"two_valued\" or a list of acts");
  }
  require_array(*it, "/acts");
  auto acts = ActSet::two_valued(space, scale).acts();
  for (std::size_t i = 0; i < it->size(); ++i) {
    auto act = parse_act((*it)[i], space, scale, child("/acts", i));
    if (std::find(acts.begin(), acts.end(), act) == acts.end()) acts.push_back(std::move(act));
  }
  return ActSet::from_acts(space, scale, std::move(acts));
}

Hyperreal parse_weight(const json& j, int degree, const std::string& at) {
  if (j.is_string()) return Hyperreal::standard(rational_at(j, at), degree);
  require_array(j, at);
  if (j.empty()) fail(at, "empty coefficient array");
  if (j.size() > static_cast<std::size_t>(degree) + 1) fail(at, "more coefficients than the degree allows");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(rational_at(j[i], child(at, i)));
  return Hyperreal(std::move(coeffs), degree);
}

ProbabilityModel parse_probability(const json& doc, const StateSpace& space, bool standard) {
  const auto& w = require_array(require(doc, "weights"), "/weights");
  if (w.size() != static_cast<std::size_t>(space.size())) fail("/weights", "one weight per state is required");
  int degree = standard ? 0 : 2 * space.size();
  if (const auto it = doc.find("degree"); it != doc.end()) {
    if (standard) fail("/degree", "only hyperreal documents carry a degree");
    if (!it->is_number_integer() || it->get<long long>() < 0 || it->get<long long>() > 64)
      fail("/degree", "expected an integer between 0 and 64");
    degree = it->get<int>();
  }
  std::vector<Hyperreal> weights;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto at = child("/weights", i);
    if (standard && w[i].is_array()) {
      for (std::size_t k = 1; k < w[i].size(); ++k)
        if (rational_at(w[i][k], child(at, k)) != 0) fail(child(at, k), "expectation weights are standard");
      if (w[i].empty()) fail(at, "empty coefficient array");
      weights.push_back(Hyperreal::standard(rational_at(w[i][0], child(at, 0))));
    } else {
      weights.push_back(parse_weight(w[i], degree, at));
    }
  }
  try {
    return ProbabilityModel(space, std::move(weights));
  } catch (const PreconditionError& e) {
    fail("/weights", e.what());
  }
}

RankedModel parse_ranked(const json& doc, const StateSpace& space) {
  const auto& order = require_array(require(doc, "order"), "/order");
  if (order.size() != static_cast<std::size_t>(space.size()))
    fail("/order", "the order lists every state exactly once");
  std::vector<int> ascending;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& name = require_string(order[i], child("/order", i));
    const auto s = space.find(name);
    if (!s) fail(child("/order", i), "unknown state \"" + name + "\"");
    if (std::find(ascending.begin(), ascending.end(), *s) != ascending.end())
      fail(child("/order", i), "state listed twice");
    ascending.push_back(*s);
  }
  return RankedModel(space, std::move(ascending));
}

// {"event": [...], "first": act, "second": act, "relation": "<=" | ">=" | "~"}
ConditionalPreferenceStructure parse_explicit(const json& doc, const StateSpace& space,
                                              const ConsequenceScale& scale) {
  auto acts = parse_acts(doc, space, scale);
  std::vector<Generator> gens;
  if (const auto it = doc.find("generators"); it != doc.end()) {
    require_array(*it, "/generators");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto at = child("/generators", i);
      const auto& g = (*it)[i];
      if (!g.is_object()) fail(at, "expected an object");
      for (const auto& [key, value] : g.items())
        if (key != "event" && key != "first" && key != "second" && key != "relation")
          fail(child(at, key), "unknown field");
      for (const char* key : {"event", "first", "second"})
        if (!g.contains(key)) fail(at, std::string("missing field \"") + key + "\"");
      const Event e = parse_event(g["event"], space, child(at, "event"));
      const auto lookup = [&](const char* key) {
        const auto id = acts.find(parse_act(g[key], space, scale, child(at, key)));
        if (!id) fail(child(at, key), "act is not in the act set");
        return *id;
      };
      const ActId f = lookup("first");
      const ActId h = lookup("second");
      std::string rel = "<=";
      if (g.contains("relation")) rel = require_string(g["relation"], child(at, "relation"));
      if (rel == "<=" || rel == "~") gens.push_back({e, f, h});
      if (rel == ">=" || rel == "~") gens.push_back({e, h, f});
      if (rel != "<=" && rel != ">=" && rel != "~")
        fail(child(at, "relation"), "expected \"<=\", \">=\" or \"~\"");
    }
  }
  return saturate(space, scale, std::move(acts), gens);
}

EventRelation parse_event_relation(const json& doc, const StateSpace& space) {
  const auto& pairs = require_array(require(doc, "pairs"), "/pairs");
  std::vector<std::pair<Event, Event>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto at = child("/pairs", i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) fail(at, "expected a pair [A, B] meaning A <= B");
    out.emplace_back(parse_event(pairs[i][0], space, child(at, 0)),
                     parse_event(pairs[i][1], space, child(at, 1)));
  }
  EventRelation r(space, out);
  bool closure = true;
  if (const auto it = doc.find("closure"); it != doc.end()) {
    if (!it->is_boolean()) fail("/closure", "expected a boolean");
    closure = it->get<bool>();
  }
  return closure ? r.reflexive_transitive_closure() : r;
}

void check_keys(const json& doc, DocumentMode mode) {
  std::set<std::string> allowed = {"mode", "states", "consequences"};
  switch (mode) {
    case DocumentMode::Explicit: allowed.insert({"acts", "generators"}); break;
    case DocumentMode::Expectation: allowed.insert({"acts", "weights"}); break;
    case DocumentMode::Hyperreal: allowed.insert({"acts", "weights", "degree"}); break;
    case DocumentMode::Ranked: allowed.insert({"acts", "order"}); break;
    case DocumentMode::EventRelation: allowed.insert({"pairs", "closure"}); break;
  }
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key))
      fail(child("", key), "field not used by mode \"" + std::string(mode_name(mode)) + "\"");
}

}  // namespace

std::string_view mode_name(DocumentMode mode) {
  switch (mode) {
    case DocumentMode::Explicit: return "explicit";
    case DocumentMode::Expectation: return "expectation";
    case DocumentMode::Hyperreal: return "hyperreal";
    case DocumentMode::Ranked: return "ranked";
    case DocumentMode::EventRelation: return "event_relation";
  }
  return "?";
}

WorkbenchDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_object()) fail("", "the document must be a JSON object");
  reject_floats(doc, "");

  const auto mode = parse_mode(require(doc, "mode"));
  check_keys(doc, mode);
  auto space = parse_states(require(doc, "states"));
  const bool valued = mode == DocumentMode::Expectation || mode == DocumentMode::Hyperreal ||
                      mode == DocumentMode::Ranked;
  auto scale = mode == DocumentMode::EventRelation && !doc.contains("consequences")
                   ? ConsequenceScale({"low", "high"})
                   : parse_consequences(require(doc, "consequences"), valued);

  WorkbenchDocument out{mode, space, scale, std::nullopt, std::nullopt};
  switch (mode) {
    case DocumentMode::Explicit:
      out.structure = parse_explicit(doc, space, scale);
      break;
    case DocumentMode::Expectation:
      out.structure = expectation_structure(parse_probability(doc, space, true), scale,
                                            parse_acts(doc, space, scale));
      break;
    case DocumentMode::Hyperreal:
      out.structure = hyperreal_structure(parse_probability(doc, space, false), scale,
                                          parse_acts(doc, space, scale));
      break;
    case DocumentMode::Ranked:
      out.structure = ranked_structure(parse_ranked(doc, space), scale, parse_acts(doc, space, scale));
      break;
    case DocumentMode::EventRelation:
      out.relation = parse_event_relation(doc, space);
      break;
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

}  // namespace qpw
