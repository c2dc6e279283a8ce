// Copyright 2026 The synccert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"
#include "synccert/automaton.hpp"
#include "synccert/contraction.hpp"
#include "synccert/generators.hpp"
#include "synccert/oracle.hpp"
#include "synccert/reachability.hpp"
#include "synccert/survey.hpp"

namespace synccert::cli {

namespace {

struct Options {
  std::string input;
  std::string gen;
  std::string subset;
  std::optional<std::size_t> length_bound;
  std::string method = "oracle";
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> capacity;
  std::string out;
  std::string tie_break = "smallest-label";
  std::string records = "reachable";
  bool dot = false;

  // survey
  std::string mode = "random";
  std::size_t n = 3;
  std::size_t n_min = 0;
  std::size_t k = 2;
  std::size_t count = 0;
  std::size_t threads = 0;
};

/// Bad flags or flag combinations detected after CLI11 parsing.
struct UsageError : Error {
  using Error::Error;
};

struct Loaded {
  std::string source;
  Automaton automaton;
};

Loaded load(const Options& o) {
  if (o.input.empty() == o.gen.empty()) {
    throw UsageError("give exactly one of --input PATH or --gen SPEC");
  }
  if (!o.input.empty()) return {o.input, load_automaton(o.input)};
  auto spec = GeneratorSpec::parse(o.gen);
  if (o.seed && (spec.family == GeneratorSpec::Family::kRandom ||
                 spec.family == GeneratorSpec::Family::kCircular)) {
    spec.seed = *o.seed;
  }
  return {spec.to_string(), spec.build()};
}

OracleLimits oracle_limits(const Options& o) {
  OracleLimits limits;
  if (o.capacity) limits.max_states = *o.capacity;
  return limits;
}

TieBreak tie_break(const Options& o) {
  return o.tie_break == "shortest-word" ? TieBreak::kShortestWord
                                        : TieBreak::kSmallestLabel;
}

int label(State q) { return static_cast<int>(q) + 1; }

std::string letter(char c) { return std::string(1, c); }

// The CLI never prints an unverified word; a failed check here is a bug.
void verify_reaches(const Automaton& a, const Word& w, StateSet s) {
  if (apply_word(a, a.all_states(), w) != s) {
    throw InvariantError("word '" + w + "' does not reach " + s.to_string());
  }
}

Report automaton_info(const Loaded& in) {
  Report r;
  r["source"] = in.source;
  r["states"] = in.automaton.size();
  r["alphabet"] = in.automaton.alphabet();
  return r;
}

/// "(1 2 4 3)" for a single cycle; product of cycles otherwise.
std::string cycle_notation(const std::vector<State>& map) {
  std::vector<bool> seen(map.size(), false);
  std::string out;
  for (State start = 0; start < map.size(); ++start) {
    if (seen[start]) continue;
    std::string cycle = "(";
    State q = start;
    while (!seen[q]) {
      seen[q] = true;
      if (cycle.size() > 1) cycle += ' ';
      cycle += std::to_string(label(q));
      q = map[q];
    }
    out += cycle + ")";
  }
  return out;
}

/// Certifying collection at length bound L: the circular fast path when its
/// words fit under L, the general search otherwise.
struct Certification {
  std::string path;  // "circular", "search", "trivial" or "" when absent
  std::optional<CircularCertificate> circular;
  std::optional<ContractingCollection> collection;
};

Certification certify(const Automaton& a, std::size_t bound) {
  Certification c;
  if (a.size() == 1) {
    c.path = "trivial";
    c.collection = trivial_collection();
    return c;
  }
  c.circular = circular_fast_path(a);
  if (c.circular && c.circular->collection.max_word_length <= bound) {
    c.path = "circular";
    c.collection = c.circular->collection;
    return c;
  }
  c.collection = find_aperiodic_collection(a, bound);
  if (c.collection) c.path = "search";
  return c;
}

Report collection_json(const Automaton& a, const ContractingCollection& c) {
  Report r;
  Report words = Report::array();
  for (const auto& w : c.words) {
    auto check = classify_deficient(a, w.word);
    if (!check || *check != w) {
      throw InvariantError("collection word '" + w.word + "' misclassified");
    }
    Report item;
    item["excluded"] = label(w.excluded);
    item["contracting"] = label(w.contracting);
    item["word"] = w.word;
    item["length"] = w.word.size();
    words.push_back(item);
  }
  r["words"] = words;
  Report map = Report::array();
  for (State t : c.state_map) map.push_back(label(t));
  r["state_map"] = map;
  r["cycles"] = cycle_notation(c.state_map);
  r["cyclic"] = c.cyclic;
  r["max_word_length"] = c.max_word_length;
  r["efficient"] = c.efficient();
  return r;
}

Report circular_json(const CircularAnalysis& c) {
  Report r;
  r["cycle_letter"] = letter(c.cycle_letter);
  r["deficient_letter"] = letter(c.deficient_letter);
  r["excluded"] = label(c.excluded);
  r["contracting"] = label(c.contracting);
  r["distance"] = c.distance;
  r["gcd"] = c.gcd;
  r["certifies"] = c.gcd == 1;
  return r;
}

// --------------------------------------------------------------------------
// Commands. Each fills `report` and returns the exit code.

int cmd_gen(const Options& o, Report& report, std::string& raw) {
  auto in = load(o);
  const auto& a = in.automaton;
  if (o.dot) {
    raw = to_dot(a);
    return kExitOk;
  }
  if (o.format == "text") {
    raw = serialize_automaton(a);
    return kExitOk;
  }
  report["source"] = in.source;
  report["states"] = a.size();
  report["alphabet"] = a.alphabet();
  Report rows;
  for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
    Report row = Report::array();
    for (State t : a.row(l)) row.push_back(label(t));
    rows[letter(a.letter(l))] = row;
  }
  report["transitions"] = rows;
  return kExitOk;
}

int cmd_analyze(const Options& o, Report& report) {
  auto in = load(o);
  const auto& a = in.automaton;
  const std::size_t bound = o.length_bound.value_or(a.size());
  report["automaton"] = automaton_info(in);
  report["length_bound"] = bound;

  Report deficient = Report::array();
  bool one_contracting = true;
  auto shortest = shortest_deficient_words(a);
  for (State q = 0; q < a.size(); ++q) {
    Report item;
    item["excluded"] = label(q);
    if (const auto& d = shortest[q]) {
      item["word"] = d->word;
      item["contracting"] = label(d->contracting);
    } else {
      item["word"] = nullptr;
      item["contracting"] = nullptr;
      one_contracting = a.size() == 1;
    }
    deficient.push_back(item);
  }
  report["shortest_deficient_words"] = deficient;

  Report circular = Report::array();
  for (const auto& c : circular_candidates(a)) circular.push_back(circular_json(c));
  report["circular_candidates"] = circular;

  auto cert = certify(a, bound);
  report["certified_by"] =
      cert.path.empty() ? Report(nullptr) : Report(cert.path);
  report["collection"] =
      cert.collection ? collection_json(a, *cert.collection) : Report(nullptr);

  Report verdict;
  verdict["one_contracting"] = one_contracting;
  verdict["efficient_collection"] =
      cert.collection.has_value() && cert.collection->efficient();
  verdict["aperiodic"] = cert.collection.has_value();
  report["verdict"] = verdict;
  return cert.collection ? kExitOk : kExitFails;
}

int cmd_reach(const Options& o, Report& report) {
  auto in = load(o);
  const auto& a = in.automaton;
  if (o.subset.empty()) throw UsageError("reach needs --subset");
  auto target = StateSet::parse(o.subset, a.size());
  if (target.empty()) throw UsageError("--subset must name at least one state");
  const std::size_t bound = o.length_bound.value_or(a.size());
  report["automaton"] = automaton_info(in);
  report["length_bound"] = bound;
  report["target"] = target.to_string();

  auto cert = certify(a, bound);
  report["certified_by"] =
      cert.path.empty() ? Report(nullptr) : Report(cert.path);
  if (!cert.collection) {
    report["collection"] = nullptr;
    return kExitFails;
  }
  const auto& c = *cert.collection;
  report["collection"] = collection_json(a, c);

  auto trace = reach_subset(a, c, target, tie_break(o));
  verify_reaches(a, trace.final_word, target);
  Report steps = Report::array();
  for (const auto& s : trace.steps) {
    Report item;
    item["chosen"] = label(s.chosen);
    item["word"] = s.word;
    item["before"] = s.before.to_string();
    item["after"] = s.after.to_string();
    steps.push_back(item);
  }
  report["tie_break"] = o.tie_break;
  report["steps"] = steps;
  report["word"] = trace.final_word;
  report["length"] = trace.final_word.size();
  const std::size_t n = a.size(), k = target.size();
  if (c.efficient()) {
    report["bound"] = n * (n - k);
    report["within_bound"] = trace.final_word.size() <= n * (n - k);
  } else {
    report["bound"] = nullptr;
    report["within_bound"] = nullptr;
  }
  report["verified"] = true;
  return kExitOk;
}

int cmd_sync(const Options& o, Report& report) {
  auto in = load(o);
  const auto& a = in.automaton;
  const std::size_t n = a.size();
  report["automaton"] = automaton_info(in);
  report["method"] = o.method;
  std::optional<Word> word;
  if (o.method == "oracle") {
    word = shortest_sync_word(a, oracle_limits(o));
    report["synchronizing"] = word.has_value();
  } else {
    const std::size_t bound = o.length_bound.value_or(n);
    report["length_bound"] = bound;
    auto cert = certify(a, bound);
    report["certified_by"] =
        cert.path.empty() ? Report(nullptr) : Report(cert.path);
    if (cert.collection && o.method == "collection") {
      word = synchronizing_word(a, *cert.collection, tie_break(o));
    } else if (cert.collection && cert.collection->efficient()) {
      auto b = cerny_bound_word(a, *cert.collection, tie_break(o));
      word = b.word;
      report["pair"] = n == 1 ? Report(nullptr) : Report(b.pair.to_string());
      report["merge_letter"] =
          n == 1 ? Report(nullptr) : Report(letter(b.merge_letter));
    } else if (cert.collection) {
      report["efficient"] = false;
    }
  }
  if (!word) {
    report["word"] = nullptr;
    return kExitFails;
  }
  auto image = apply_word(a, a.all_states(), *word);
  if (image.size() != 1) {
    throw InvariantError("word '" + *word + "' is not synchronizing");
  }
  report["word"] = *word;
  report["length"] = word->size();
  report["image"] = image.to_string();
  report["cerny_bound"] = (n - 1) * (n - 1);
  report["within_cerny_bound"] = word->size() <= (n - 1) * (n - 1);
  report["verified"] = true;
  return kExitOk;
}

Report violation_json(const Conjecture2Violation& v) {
  Report r;
  r["subset"] = v.subset.to_string();
  r["distance"] = v.distance;
  r["bound"] = v.bound;
  r["witness"] = v.witness;
  return r;
}

Report sizes_json(const Conjecture2Report& c2) {
  Report sizes = Report::array();
  for (const auto& s : c2.sizes) {
    Report item;
    item["k"] = s.k;
    item["subsets"] = s.subsets;
    item["reachable"] = s.reachable;
    item["worst"] = s.worst ? Report(*s.worst) : Report(nullptr);
    item["bound"] = s.bound;
    item["margin"] = s.margin ? Report(*s.margin) : Report(nullptr);
    sizes.push_back(item);
  }
  return sizes;
}

int cmd_oracle(const Options& o, Report& report) {
  auto in = load(o);
  const auto& a = in.automaton;
  ReachabilityTable table(a, oracle_limits(o));
  report["automaton"] = automaton_info(in);

  if (!o.subset.empty()) {
    auto s = StateSet::parse(o.subset, a.size());
    report["subset"] = s.to_string();
    auto w = table.witness(s);
    report["reachable"] = w.has_value();
    if (!w) {
      report["distance"] = nullptr;
      report["witness"] = nullptr;
      return kExitFails;
    }
    verify_reaches(a, *w, s);
    report["distance"] = w->size();
    report["witness"] = *w;
    return kExitOk;
  }

  auto sync = shortest_sync_word(table);
  if (sync) verify_reaches(a, *sync, apply_word(a, a.all_states(), *sync));
  report["synchronizing"] = sync.has_value();
  report["shortest_sync_word"] = sync ? Report(*sync) : Report(nullptr);
  report["shortest_sync_length"] = sync ? Report(sync->size()) : Report(nullptr);
  report["reachable_subsets"] = table.reachable_count();
  report["unreachable_subsets"] = table.unreachable().size();

  if (o.records != "none") {
    Report records = Report::array();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << a.size()); ++m) {
      auto s = StateSet::from_mask(m);
      auto w = table.witness(s);
      if (!w && o.records != "all") continue;
      if (w) verify_reaches(a, *w, s);
      Report item;
      item["subset"] = s.to_string();
      item["size"] = s.size();
      item["distance"] = w ? Report(w->size()) : Report(nullptr);
      item["witness"] = w ? Report(*w) : Report(nullptr);
      records.push_back(item);
    }
    report["records"] = records;
  }

  auto c2 = conjecture2_check(table, in.source);
  Report conj;
  conj["sizes"] = sizes_json(c2);
  Report violations = Report::array();
  for (const auto& v : c2.violations) {
    verify_reaches(a, v.witness, v.subset);
    violations.push_back(violation_json(v));
  }
  conj["violations"] = violations;
  conj["holds"] = c2.holds();
  report["conjecture2"] = conj;
  if (!c2.holds()) report["automaton_file"] = serialize_automaton(a);
  return c2.holds() ? kExitOk : kExitFails;
}

int cmd_survey(const Options& o, Report& report) {
  if (!o.input.empty() || !o.gen.empty()) {
    throw UsageError("survey generates its own instances; drop --input/--gen");
  }
  SurveyConfig config;
  config.mode = o.mode == "exhaustive" ? SurveyConfig::Mode::kExhaustive
                                       : SurveyConfig::Mode::kRandom;
  config.n = o.n;
  config.n_min = o.n_min;
  config.k = o.k;
  config.count = o.count;
  config.seed = o.seed.value_or(0);
  config.threads =
      o.threads ? o.threads
                : std::max(1u, std::thread::hardware_concurrency());
  config.limits = oracle_limits(o);
  auto result = run_survey(config);

  Report cfg;
  cfg["mode"] = o.mode;
  cfg["n"] = config.n;
  cfg["n_min"] = config.n_min == 0 ? config.n : config.n_min;
  cfg["k"] = config.k;
  if (config.mode == SurveyConfig::Mode::kRandom) {
    cfg["count"] = config.count;
    cfg["seed"] = config.seed;
  }
  report["config"] = cfg;

  const auto& s = result.summary;
  Report summary;
  summary["instances"] = s.instances;
  summary["skipped"] = s.skipped;
  summary["synchronizing"] = s.synchronizing;
  summary["one_contracting"] = s.one_contracting;
  summary["aperiodic"] = s.aperiodic;
  summary["circular_certified"] = s.circular_certified;
  summary["violating_instances"] = s.violating_instances;
  summary["violations"] = s.violations;
  summary["worst_margin"] = s.worst_margin ? Report(*s.worst_margin) : Report(nullptr);
  report["summary"] = summary;

  // Counterexamples always print in full, whatever --records says.
  Report records = Report::array();
  for (const auto& r : result.records) {
    const bool violating = !r.violations.empty();
    if (o.records == "none" && !violating) continue;
    Report item;
    item["id"] = r.id;
    item["n"] = r.n;
    item["k"] = r.k;
    item["skipped"] = r.skipped;
    if (r.skipped) {
      item["skip_reason"] = r.skip_reason;
    } else {
      item["synchronizing"] = r.synchronizing;
      item["shortest_sync"] =
          r.shortest_sync ? Report(*r.shortest_sync) : Report(nullptr);
      item["one_contracting"] = r.one_contracting;
      item["aperiodic"] = r.aperiodic;
      item["circular_certified"] = r.circular_certified;
      item["cerny_bound_ok"] =
          r.cerny_bound_ok ? Report(*r.cerny_bound_ok) : Report(nullptr);
      item["worst_margin"] =
          r.worst_margin ? Report(*r.worst_margin) : Report(nullptr);
    }
    if (violating) {
      auto a = parse_automaton(r.automaton);
      Report vs = Report::array();
      for (const auto& v : r.violations) {
        verify_reaches(a, v.witness, v.subset);
        vs.push_back(violation_json(v));
      }
      item["violations"] = vs;
      item["automaton"] = r.automaton;
    }
    records.push_back(item);
  }
  report["records"] = records;
  return s.violations == 0 ? kExitOk : kExitFails;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "automaton file");
  sub->add_option("--gen", o.gen,
                  "generator spec: cerny:N, circular:N:D[:SEED], "
                  "random:N:K:SEED or fixture:NAME");
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", o.out, "write the report to PATH");
}

void add_bound(CLI::App* sub, Options& o) {
  sub->add_option("--length-bound", o.length_bound,
                  "longest collection word considered (default n)");
  sub->add_option("--tie-break", o.tie_break,
                  "backward-chaining choice: smallest-label or shortest-word")
      ->check(CLI::IsMember({"smallest-label", "shortest-word"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Certify synchronization of finite automata via 1-contracting "
               "collections", "synccert"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "print a generated automaton");
  gen->add_option("spec", o.gen, "generator spec (same as --gen)");
  add_input(gen, o);
  gen->add_option("--seed", o.seed, "override the seed of random/circular specs");
  gen->add_flag("--dot", o.dot, "emit Graphviz DOT instead");
  add_output(gen, o);

  auto* analyze = app.add_subcommand("analyze", "look for an aperiodic collection");
  add_input(analyze, o);
  add_bound(analyze, o);
  add_output(analyze, o);

  auto* reach = app.add_subcommand("reach", "build a word reaching a subset");
  add_input(reach, o);
  reach->add_option("--subset", o.subset, "target, e.g. 1,3");
  add_bound(reach, o);
  add_output(reach, o);

  auto* sync = app.add_subcommand("sync", "produce a synchronizing word");
  add_input(sync, o);
  sync->add_option("--method", o.method, "collection, bound or oracle")
      ->check(CLI::IsMember({"collection", "bound", "oracle"}));
  sync->add_option("--capacity", o.capacity, "oracle state limit (default 20)");
  add_bound(sync, o);
  add_output(sync, o);

  auto* oracle = app.add_subcommand("oracle", "exact power-automaton BFS");
  add_input(oracle, o);
  oracle->add_option("--subset", o.subset, "report only this subset");
  oracle->add_option("--capacity", o.capacity, "state limit (default 20)");
  oracle->add_option("--records", o.records, "per-subset records: reachable, all or none")
      ->check(CLI::IsMember({"reachable", "all", "none"}));
  add_output(oracle, o);

  auto* survey = app.add_subcommand("survey", "check many automata");
  survey->add_option("--mode", o.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  survey->add_option("--n", o.n, "states (random: largest size)");
  survey->add_option("--n-min", o.n_min, "random: smallest size (default n)");
  survey->add_option("--k", o.k, "letters");
  survey->add_option("--count", o.count, "random: number of instances");
  survey->add_option("--seed", o.seed, "random: master seed");
  survey->add_option("--threads", o.threads, "workers (default: all cores)");
  survey->add_option("--capacity", o.capacity, "oracle state limit (default 20)");
  survey->add_option("--records", o.records,
                     "per-instance records: reachable (all), none")
      ->check(CLI::IsMember({"reachable", "none"}));
  add_input(survey, o);
  add_output(survey, o);

  std::vector<std::string> argv_store{"synccert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report report;
  std::string raw;
  int code = kExitUsage;
  try {
    if (gen->parsed()) {
      code = cmd_gen(o, report, raw);
    } else if (analyze->parsed()) {
      code = cmd_analyze(o, report);
    } else if (reach->parsed()) {
      code = cmd_reach(o, report);
    } else if (sync->parsed()) {
      code = cmd_sync(o, report);
    } else if (oracle->parsed()) {
      code = cmd_oracle(o, report);
    } else {
      code = cmd_survey(o, report);
    }
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream text;
  if (!raw.empty()) {
    text << raw;
  } else if (o.format == "json") {
    render_json(report, text);
  } else {
    render_text(report, text);
  }
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out);
    if (!(file << text.str())) {
      err << "error: cannot write " << o.out << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace synccert::cli
