#include "qpw/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpw/canonical.hpp"
#include "qpw/document.hpp"
#include "qpw/error.hpp"
#include "qpw/plausibility.hpp"
#include "qpw/postulates.hpp"

namespace qpw {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

// Names used to render events, acts and consequences of one structure.
struct Vocabulary {
  const StateSpace* space = nullptr;
  const ConsequenceScale* scale = nullptr;
  const ActSet* acts = nullptr;
};

ojson event_json(const StateSpace& space, Event e) {
  ojson out = ojson::array();
  for (int s = 0; s < space.size(); ++s)
    if (e.contains(s)) out.push_back(space.name(s));
  return out;
}

ojson act_json(const Vocabulary& v, ActId id) {
  if (!v.acts || !v.scale) return id;
  ojson out = ojson::array();
  for (Consequence c : (*v.acts)[id].outcome()) out.push_back(v.scale->id(c));
  return out;
}

ojson witness_json(const Witness& w, const Vocabulary& v) {
  ojson out;
  out["condition"] = w.condition;
  if (!w.events.empty()) {
    ojson events = ojson::object();
    for (const auto& [name, e] : w.events) events[name] = event_json(*v.space, e);
    out["events"] = events;
  }
  if (!w.acts.empty()) {
    ojson acts = ojson::object();
    for (const auto& [name, f] : w.acts) acts[name] = act_json(v, f);
    out["acts"] = acts;
  }
  if (!w.consequences.empty()) {
    ojson cs = ojson::object();
    for (const auto& [name, c] : w.consequences) cs[name] = v.scale ? ojson(v.scale->id(c)) : ojson(c);
    out["consequences"] = cs;
  }
  return out;
}

ojson report_json(const CheckReport& r, const Vocabulary& v) {
  ojson out;
  out["subject"] = r.subject;
  out["passed"] = r.passed;
  out["checked"] = r.checked_count;
  out["violations"] = r.violation_count;
  if (r.error) out["error"] = *r.error;
  if (!r.notes.empty()) {
    ojson notes = ojson::object();
    for (const auto& [key, value] : r.notes) notes[key] = value;
    out["notes"] = notes;
  }
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w, v));
  out["witnesses"] = ws;
  return out;
}

CheckReport failed_report(std::string subject, const std::string& message) {
  CheckReport r(std::move(subject));
  r.fail_with(message);
  return r;
}

int worker_count() {
  const char* env = std::getenv("QPW_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end || n < 1 || n > 256) throw UsageError("QPW_WORKERS must be an integer between 1 and 256");
  return static_cast<int>(n);
}

// Runs independent jobs on up to `workers` threads; results keep job order.
std::vector<CheckReport> run_jobs(const std::vector<std::function<CheckReport()>>& jobs, int workers) {
  std::vector<std::optional<CheckReport>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) slots[i] = jobs[i]();
  };
  const int extra = std::min<int>(workers, static_cast<int>(jobs.size())) - 1;
  std::vector<std::thread> pool;
  for (int t = 0; t < extra; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<CheckReport> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<Postulate> parse_postulate_list(const std::string& text) {
  if (text == "all") return {std::begin(kAllPostulates), std::end(kAllPostulates)};
  std::vector<Postulate> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto p = parse_postulate(item);
    if (!p) throw UsageError("unknown postulate \"" + item + "\"");
    if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
  }
  if (out.empty()) throw UsageError("empty postulate list");
  return out;
}

std::vector<CheckReport> check_postulates(const ConditionalPreferenceStructure& p,
                                          const std::vector<Postulate>& ids,
                                          const PostulateOptions& options) {
  std::vector<std::function<CheckReport()>> jobs;
  for (auto id : ids)
    jobs.push_back([&p, id, options] {
      try {
        return check_postulate(p, id, options);
      } catch (const PreconditionError& e) {
        return failed_report(std::string(postulate_name(id)), e.what());
      }
    });
  return run_jobs(jobs, worker_count());
}

ojson relation_json(const EventRelation& r) {
  ojson out;
  const auto chain = format_chain(r);
  if (!chain.empty()) out["chain"] = chain;
  ojson pairs = ojson::array();
  for (Event a : all_events(r.space()))
    for (Event b : all_events(r.space()))
      if (a != b && r.leq(a, b)) pairs.push_back({event_json(r.space(), a), event_json(r.space(), b)});
  out["leq"] = pairs;
  return out;
}

struct Session {
  std::string command;
  std::string path;
  std::string bytes;
  std::optional<WorkbenchDocument> doc;
  ojson options = ojson::object();
  ojson report;
  bool passed = true;

  Vocabulary vocabulary() const {
    Vocabulary v{&doc->space, &doc->scale, nullptr};
    if (doc->structure) v.acts = &doc->structure->acts();
    return v;
  }

  void load() {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    bytes.assign(std::istreambuf_iterator<char>(in), {});
    doc = parse_document(bytes);
  }

  const ConditionalPreferenceStructure& structure() const {
    if (!doc->structure)
      throw UsageError("command \"" + command + "\" needs a preference structure, not an event relation");
    return *doc->structure;
  }

  void add(const std::vector<CheckReport>& reports, const Vocabulary& v) {
    for (const auto& r : reports) add(r, v);
  }
  void add(const CheckReport& r, const Vocabulary& v) {
    passed = passed && r.passed;
    report["reports"].push_back(report_json(r, v));
  }

  // The document's relation, or the one derived from its structure. Records
  // a failed report when derivation is impossible.
  std::optional<EventRelation> relation() {
    if (doc->relation) return doc->relation;
    try {
      return derive_plausibility(structure());
    } catch (const PreconditionError& e) {
      add(failed_report("derive", e.what()), vocabulary());
      return std::nullopt;
    }
  }

  ojson header() const {
    ojson h;
    h["tool"] = kToolName;
    h["version"] = kToolVersion;
    h["command"] = command;
    if (doc) {
      ojson d;
      d["sha256"] = sha256_hex(bytes);
      d["mode"] = mode_name(doc->mode);
      d["states"] = doc->space.names();
      d["consequences"] = doc->scale.ids();
      if (doc->structure) d["acts"] = doc->structure->acts().size();
      h["document"] = d;
    }
    h["options"] = options;
    return h;
  }
};

void cmd_check(Session& s, const std::string& list, bool q5_nonempty) {
  s.options["postulates"] = list;
  s.options["q5_nonempty"] = q5_nonempty;
  const auto ids = parse_postulate_list(list);
  s.load();
  s.add(check_postulates(s.structure(), ids, {q5_nonempty}), s.vocabulary());
}

void cmd_lemmas(Session& s) {
  s.load();
  s.add(check_derived_lemmas(s.structure()), s.vocabulary());
}

void cmd_derive(Session& s) {
  s.load();
  s.structure();
  if (auto r = s.relation()) s.report["relation"] = relation_json(*r);
}

void cmd_gqp(Session& s) {
  s.load();
  const auto r = s.relation();
  if (!r) return;
  const auto base = check_gqp(*r);
  s.add(base, s.vocabulary());
  if (base.passed) s.add(check_gqp_lemmas(*r, s.doc->structure ? &*s.doc->structure : nullptr), s.vocabulary());
}

void cmd_classify(Session& s) {
  s.load();
  const auto r = s.relation();
  if (!r) return;
  s.add(check_gqp(*r), s.vocabulary());
  const auto flags = classify_family(*r);
  ojson f;
  f["total"] = flags.total;
  f["standard"] = flags.standard;
  f["purely_nonstandard"] = flags.purely_nonstandard;
  f["complement_criterion"] = flags.complement_criterion;
  s.report["families"] = f;
  CheckReport agree("standard-complement-agreement");
  agree.checked_count = 1;
  if (!flags.criterion_agrees()) {
    agree.record(Witness{"standard flag differs from the complementation criterion", {}, {}, {}});
  }
  s.add(agree, s.vocabulary());
}

void cmd_canonical(Session& s) {
  s.load();
  const auto r = s.relation();
  if (!r) return;
  const auto base = check_gqp(*r);
  s.add(base, s.vocabulary());
  if (!base.passed) return;
  const auto canon = canonical_structure(*r);
  const Vocabulary v{&canon.space(), &canon.scale(), &canon.acts()};
  const std::vector<Postulate> ids = {Postulate::Q0, Postulate::Q1, Postulate::Q2, Postulate::Q3,
                                      Postulate::Q4, Postulate::Q5, Postulate::Q6, Postulate::R};
  s.add(check_postulates(canon, ids, {}), v);
  s.add(roundtrip_check(*r), v);
  ojson c;
  c["consequences"] = canon.scale().ids();
  c["acts"] = canon.acts().size();
  s.report["canonical"] = c;
}

void cmd_extensions(Session& s, const std::string& mode_text) {
  s.options["mode"] = mode_text;
  const auto mode = mode_text == "superset" ? ExtensionMode::Superset : ExtensionMode::StrictPreserving;
  s.load();
  const auto r = s.relation();
  if (!r) return;
  const auto base = check_gqp(*r);
  s.add(base, s.vocabulary());
  if (!base.passed) return;
  const auto set = enumerate_total_extensions(*r, mode);
  ojson chains = ojson::array();
  for (const auto& t : set.extensions) chains.push_back(format_chain(t));
  s.report["extensions"] = chains;
  const auto result = conjecture_check(*r, mode);
  s.add(result.report, s.vocabulary());
  s.report["conjecture"] = result.outcome == ConjectureOutcome::Holds   ? "holds"
                           : result.outcome == ConjectureOutcome::Fails ? "fails"
                                                                        : "no-extensions";
}

void cmd_search(Session& s, const SearchBounds& bounds) {
  s.options["n_max"] = bounds.n_max;
  s.options["f_max"] = bounds.f_max;
  s.options["exhaustive"] = bounds.exhaustive;
  s.options["exhaustive_limit"] = bounds.exhaustive_limit;
  s.options["samples"] = bounds.samples;
  const auto outcome = search_counterexample(bounds);
  ojson out;
  out["seed"] = outcome.seed;
  ojson segs = ojson::array();
  for (const auto& seg : outcome.segments) {
    ojson j;
    j["states"] = seg.states;
    j["consequences"] = seg.consequences;
    j["exhaustive"] = seg.exhaustive;
    j["candidates"] = seg.candidates;
    j["models"] = seg.models;
    j["with_q7"] = seg.with_q7;
    segs.push_back(j);
  }
  out["segments"] = segs;
  CheckReport r("equipartition-without-Q7");
  for (const auto& seg : outcome.segments) r.checked_count += seg.models;
  if (outcome.witness) {
    const auto& w = *outcome.witness;
    const Vocabulary v{&w.structure.space(), &w.structure.scale(), &w.structure.acts()};
    r.record(Witness{"equipartition conclusion fails", {{"A", w.event}}, {{"f", w.f}, {"g", w.g}}, {}});
    ojson cx;
    cx["states"] = w.structure.space().names();
    cx["consequences"] = w.structure.scale().ids();
    cx["satisfies_q7"] = w.satisfies_q7;
    out["counterexample"] = cx;
    s.add(r, v);
  } else {
    s.add(r, {});
  }
  s.report["search"] = out;
}

std::string render_event(const ojson& e) {
  if (e.empty()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + e[i].get<std::string>();
  return out + "}";
}

std::string render_value(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + render_value(v[i]);
    return out + ")";
  }
  return v.dump();
}

// Plain-text rendering of a machine report.
void render_human(const ojson& rep, std::ostream& out) {
  out << rep["tool"].get<std::string>() << " " << rep["command"].get<std::string>();
  if (rep.contains("document")) {
    const auto& d = rep["document"];
    out << ": " << d["mode"].get<std::string>() << " document, " << d["states"].size() << " states";
    if (d.contains("acts")) out << ", " << d["acts"].get<std::size_t>() << " acts";
    out << ", sha256 " << d["sha256"].get<std::string>().substr(0, 12);
  }
  out << "\n";
  for (const auto& r : rep["reports"]) {
    out << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["subject"].get<std::string>() << " (checked "
        << r["checked"].get<std::uint64_t>();
    if (r["violations"].get<std::uint64_t>()) out << ", violations " << r["violations"].get<std::uint64_t>();
    out << ")\n";
    if (r.contains("error")) out << "  error: " << r["error"].get<std::string>() << "\n";
    if (r.contains("notes"))
      for (const auto& [k, v] : r["notes"].items()) out << "  " << k << ": " << v.get<std::string>() << "\n";
    for (const auto& w : r["witnesses"]) {
      out << "  witness";
      if (const auto& c = w["condition"].get_ref<const std::string&>(); !c.empty()) out << " [" << c << "]";
      if (w.contains("events"))
        for (const auto& [k, v] : w["events"].items()) out << " " << k << "=" << render_event(v);
      if (w.contains("acts"))
        for (const auto& [k, v] : w["acts"].items()) out << " " << k << "=" << render_value(v);
      if (w.contains("consequences"))
        for (const auto& [k, v] : w["consequences"].items()) out << " " << k << "=" << render_value(v);
      out << "\n";
    }
  }
  if (rep.contains("relation")) {
    const auto& rel = rep["relation"];
    if (rel.contains("chain")) {
      out << rel["chain"].get<std::string>() << "\n";
    } else {
      for (const auto& p : rel["leq"]) out << render_event(p[0]) << " ≤ " << render_event(p[1]) << "\n";
    }
  }
  if (rep.contains("families"))
    for (const auto& [k, v] : rep["families"].items()) out << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  if (rep.contains("canonical"))
    out << "canonical structure: " << rep["canonical"]["acts"].get<std::size_t>() << " acts\n";
  if (rep.contains("extensions")) {
    out << rep["extensions"].size() << " total extensions\n";
    for (const auto& c : rep["extensions"]) out << "  " << c.get<std::string>() << "\n";
    out << "conjecture: " << rep["conjecture"].get<std::string>() << "\n";
  }
  if (rep.contains("search")) {
    const auto& sr = rep["search"];
    out << "seed " << sr["seed"].get<std::uint64_t>() << "\n";
    for (const auto& seg : sr["segments"])
      out << "  |S|=" << seg["states"].get<int>() << " |F|=" << seg["consequences"].get<int>() << " "
          << (seg["exhaustive"].get<bool>() ? "exhaustive" : "sampled") << ": "
          << seg["candidates"].get<std::uint64_t>() << " candidates, " << seg["models"].get<std::uint64_t>()
          << " models, " << seg["with_q7"].get<std::uint64_t>() << " with Q7\n";
    if (sr.contains("counterexample"))
      out << "counterexample over states " << render_event(sr["counterexample"]["states"])
          << (sr["counterexample"]["satisfies_q7"].get<bool>() ? " (satisfies Q7)" : "") << "\n";
  }
  out << "result: " << (rep["passed"].get<bool>() ? "pass" : "violation found") << "\n";
}

void emit_error(bool as_json, const std::string& kind, const std::string& message,
                const std::string& location, std::ostream& out, std::ostream& err) {
  err << kToolName << ": " << message << "\n";
  if (!as_json) return;
  ojson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  ojson e;
  e["kind"] = kind;
  if (!location.empty()) e["location"] = location;
  e["message"] = message;
  j["error"] = e;
  out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model workbench for conditional preference structures"};
  app.name(kToolName);
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON report on stdout");
  app.set_version_flag("--version", kToolVersion);

  Session s;
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("document", s.path, "Workbench document (JSON)")->required();
    return sub;
  };

  std::string postulates = "all";
  bool q5_nonempty = false;
  auto* check = with_input(app.add_subcommand("check", "Check postulates"));
  check->add_option("--postulates", postulates, "Comma-separated list of Q0..Q7, Q'4, R, or all");
  check->add_flag("--q5-nonempty", q5_nonempty, "Condition Q5 on non-empty rather than non-null events");

  auto* lemmas = with_input(app.add_subcommand("lemmas", "Check consequences of Q0-Q6 on acts"));
  auto* derive = with_input(app.add_subcommand("derive", "Dump the derived plausibility relation"));
  auto* gqp = with_input(app.add_subcommand("gqp", "Check the plausibility axioms and their consequences"));
  auto* classify = with_input(app.add_subcommand("classify", "Classify the plausibility relation"));
  auto* canonical = with_input(app.add_subcommand("canonical", "Build the canonical structure and round-trip"));

  std::string ext_mode = "strict";
  auto* extensions = with_input(app.add_subcommand("extensions", "Enumerate total extensions"));
  extensions->add_option("--mode", ext_mode, "strict (keep strict pairs) or superset")
      ->check(CLI::IsMember({"strict", "superset"}));

  SearchBounds bounds;
  auto* search = app.add_subcommand("search", "Hunt for Q1-Q6 structures where equipartition fails");
  search->add_option("--n-max", bounds.n_max, "Largest state count")->check(CLI::Range(1, 4));
  search->add_option("--f-max", bounds.f_max, "Largest consequence count")->check(CLI::Range(2, 4));
  search->add_option("--seed", bounds.seed, "Sampling seed");
  search->add_flag("--exhaustive,!--sampled", bounds.exhaustive, "Enumerate small segments exhaustively");
  search->add_option("--exhaustive-limit", bounds.exhaustive_limit, "Largest exhaustive segment");
  search->add_option("--samples", bounds.samples, "Samples per sampled segment");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(as_json, "usage", e.what(), "", out, err);
    return 2;
  }

  try {
    s.report = ojson::object();
    s.report["reports"] = ojson::array();
    if (check->parsed()) s.command = "check", cmd_check(s, postulates, q5_nonempty);
    if (lemmas->parsed()) s.command = "lemmas", cmd_lemmas(s);
    if (derive->parsed()) s.command = "derive", cmd_derive(s);
    if (gqp->parsed()) s.command = "gqp", cmd_gqp(s);
    if (classify->parsed()) s.command = "classify", cmd_classify(s);
    if (canonical->parsed()) s.command = "canonical", cmd_canonical(s);
    if (extensions->parsed()) s.command = "extensions", cmd_extensions(s, ext_mode);
    if (search->parsed()) s.command = "search", cmd_search(s, bounds);
  } catch (const ParseError& e) {
    emit_error(as_json, "document", e.what(), e.location, out, err);
    return 2;
  } catch (const GuardExceeded& e) {
    emit_error(as_json, "guard", e.what(), "", out, err);
    return 2;
  } catch (const UsageError& e) {
    emit_error(as_json, "usage", e.what(), "", out, err);
    return 2;
  } catch (const Error& e) {
    emit_error(as_json, "input", e.what(), "", out, err);
    return 2;
  }

  ojson rep = s.header();
  rep["passed"] = s.passed;
  for (const auto& [k, v] : s.report.items()) rep[k] = v;
  if (as_json) out << rep.dump(2) << "\n";
  else render_human(rep, out);
  return s.passed ? 0 : 1;
}

}  // namespace qpw
