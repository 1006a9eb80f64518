/*
 * Copyright 2026 The usum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance runner: one PASS/FAIL line per primary criterion.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "usum/binding.hpp"
#include "usum/build.hpp"
#include "usum/dialogue.hpp"
#include "usum/model.hpp"
#include "usum/parser.hpp"
#include "usum/printer.hpp"
#include "usum/reduction.hpp"
#include "usum/service.hpp"
#include "usum/typing.hpp"

using namespace usum;
namespace fs = std::filesystem;

namespace {

std::string corpus(const std::string& name) { return std::string(USUM_CORPUS_DIR) + "/" + name; }

Document load(const std::string& name) {
  std::ifstream in(corpus(name));
  std::stringstream s;
  s << in.rdbuf();
  return parse_document(s.str());
}

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs < limit_s;
  bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << secs << " s (limit " << limit_s << " s)";
  std::cout << (ok ? "PASS " : "FAIL ") << std::left << std::setw(26) << name << o.detail << "; " << t.str()
            << (in_time ? "" : " TOO SLOW") << std::endl;
}

std::string ratio(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

// ---------------------------------------------------------------------

Outcome rewriting_fidelity() {
  Document doc = load("appendix.nd");
  const Signature& sig = *doc.signature;
  // Right-hand sides of the eight rewritings, instantiated by hand at the
  // corpus's choices of a, b, f, g, d and r.
  struct Row {
    std::string name;
    BetaRule rule;
    std::string reduct;
  };
  const std::vector<Row> rows = {
      {"fst_pair", BetaRule::ConjLeft, "a"},
      {"snd_pair", BetaRule::ConjRight, "b"},
      {"case_inl", BetaRule::DisjLeft, "APP(k, a)"},
      {"case_inr", BetaRule::DisjRight, "APP(m, b)"},
      {"app_lam", BetaRule::Impl, "pair(a, b)"},
      {"extr_gen", BetaRule::Forall, "EXTR(all, c)"},
      {"inst_eps", BetaRule::Exists, "eps y. (pc, c) : P(y)"},
      {"rewr_idp", BetaRule::Id, "idp(rw(f(c), fc), f(c), d)"},
  };
  std::size_t good = 0;
  std::string bad;
  for (const auto& r : rows) {
    const ProofEntry* p = doc.proof(r.name);
    if (!p) {
      bad += " " + r.name + "(missing)";
      continue;
    }
    Redex root{{}, r.rule};
    auto found = redexes(p->term);
    bool listed = !found.empty() && found.front() == root && testing::scan_redexes(p->term).front() == root;
    Proof got = step(p->term, root);
    Proof want = parse_proof(r.reduct, sig, doc.context);
    if (listed && got == want) {
      ++good;
    } else {
      bad += " " + r.name;
    }
  }
  return {good == rows.size(), ratio(good, rows.size()) + " golden rewritings" + (bad.empty() ? "" : "; failed:" + bad)};
}

Outcome subject_reduction() {
  auto sig = testing::mixed_signature();
  Context ctx = testing::mixed_context();
  testing::TypedGenerator gen(sig, 20261016);
  std::size_t terms = 0, reducts = 0, ill_typed = 0, fails = 0;
  std::set<Formula::Kind> kinds;
  std::set<BetaRule> rules;
  for (int i = 0; i < 1000; ++i) {
    testing::Typed t = gen.next(12);
    ++terms;
    try {
      check(*sig, ctx, t.term, t.formula);
    } catch (const TypeError&) {
      ++ill_typed;
      continue;
    }
    std::function<void(const Formula&)> collect = [&](const Formula& f) {
      kinds.insert(f.kind());
      for (const auto& k : f.kids()) collect(k);
    };
    collect(t.formula);
    for (const auto& r : redexes(t.term)) {
      rules.insert(r.rule);
      ++reducts;
      try {
        check(*sig, ctx, step(t.term, r), t.formula);
      } catch (const TypeError&) {
        ++fails;
      }
    }
  }
  std::string detail = std::to_string(terms) + " terms, " + std::to_string(reducts) + " reducts, " +
                       std::to_string(fails) + " failures, " + std::to_string(rules.size()) + "/8 rules exercised, " +
                       std::to_string(kinds.size()) + " formula kinds";
  if (ill_typed) detail += ", " + std::to_string(ill_typed) + " ill-typed inputs";
  return {fails == 0 && ill_typed == 0 && terms == 1000, detail};
}

Outcome confluence() {
  auto sig = testing::propositional_signature();
  auto terms = testing::enumerate_closed(8, testing::default_annotations());
  std::size_t divergent = 0, truncated = 0, untyped = 0, strategy = 0, with_redex = 0;
  for (const auto& t : terms) {
    try {
      check(*sig, Context{}, t.term, t.formula);
    } catch (const TypeError&) {
      ++untyped;
      continue;
    }
    auto g = testing::explore(t.term, 100);
    if (g.nodes > 1) ++with_redex;
    if (g.truncated) ++truncated;
    if (g.normal_forms.size() != 1) {
      ++divergent;
      continue;
    }
    for (Strategy s : {Strategy::NormalOrder, Strategy::ApplicativeOrder}) {
      Trace tr = normalize(t.term, s, 100);
      if (tr.exhausted || canonical_key(tr.terminal) != *g.normal_forms.begin()) ++strategy;
    }
  }
  std::string detail = std::to_string(terms.size()) + " closed terms (" + std::to_string(with_redex) +
                       " reducible), " + std::to_string(divergent) + " divergent, " + std::to_string(truncated) +
                       " over fuel, " + std::to_string(strategy) + " strategy mismatches";
  if (untyped) detail += ", " + std::to_string(untyped) + " ill-typed";
  return {divergent == 0 && truncated == 0 && strategy == 0 && untyped == 0 && !terms.empty(), detail};
}

Outcome dialogue_correspondence() {
  Document doc = load("theorems.nd");
  const Signature& sig = *doc.signature;
  const std::vector<std::string> required = {
      "(A /\\ B) -> (B /\\ A)",
      "A -> (B -> A)",
      "(A -> B) -> ((B -> C) -> (A -> C))",
      "(A /\\ B) -> A",
      "A -> (A \\/ B)",
      "(forall x. P(x) /\\ R(x)) -> forall x. P(x)",
      "(exists x. P(x)) -> (forall x. (P(x) -> Q)) -> Q",
  };
  std::size_t present = 0;
  for (const auto& r : required) {
    Formula f = parse_formula(r, sig, doc.context);
    for (const auto& t : doc.theorems)
      if (t.formula == f) {
        ++present;
        break;
      }
  }
  bool has_id = false;
  std::size_t wins = 0, total = 0;
  std::string bad;
  for (const auto& t : doc.theorems) {
    const ProofEntry* p = doc.proof(t.name);
    if (!p) continue;
    ++total;
    std::function<bool(const Proof&)> uses_id = [&](const Proof& q) {
      if (q.kind() == Proof::Kind::IdIntro || q.kind() == Proof::Kind::Rewr) return true;
      for (const auto& k : q.kids())
        if (uses_id(k)) return true;
      return false;
    };
    has_id = has_id || uses_id(p->term);
    check(sig, doc.context, p->term, t.formula);
    if (exhaustive_win(doc.signature, p->term, t.formula, 12) == Verdict::Win)
      ++wins;
    else
      bad += " " + t.name;
  }
  std::string detail = ratio(wins, total) + " win at depth 12, required theses " + ratio(present, required.size()) +
                       (has_id ? ", Id example present" : ", no Id example");
  if (!bad.empty()) detail += "; not won:" + bad;
  return {wins == total && total == 20 && present == required.size() && has_id, detail};
}

Outcome table_fidelity() {
  // Schematic instances and the reference rows of the particle tables.
  Signature sig;
  sig.add_sort("A");
  sig.add_constant("u", "A");
  sig.add_constant("v", "A");
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  Formula px = Formula::atom("P", {Term::bound(0, "x", kIndividuals)});
  struct Table {
    std::string connective;
    Formula f;
    std::vector<TableRow> expected;
  };
  const std::vector<Table> tables = {
      {"∧", Formula::conj(a, b), {{"A∧B", "L?", "A"}, {"A∧B", "R?", "B"}}},
      {"∨", Formula::disj(a, b), {{"A∨B", "?", "A"}, {"A∨B", "?", "B"}}},
      {"→", Formula::impl(a, b), {{"A→B", "A ?", "B"}}},
      {"∀", Formula::forall("x", kIndividuals, px), {{"∀x^D.P(x)", "s:D ?", "P(s)"}}},
      {"∃", Formula::exists("x", kIndividuals, px), {{"∃x^D.P(x)", "?", "s:D, P(s)"}}},
      {"Id", Formula::identity("A", Term::constant("u", "A"), Term::constant("v", "A")),
       {{"Id_A(u,v)", "?", "u=_r v:A"}}},
  };
  std::size_t good = 0;
  std::string bad;
  for (const auto& t : tables) {
    auto rows = table_rows(t.f);
    bool same = rows.size() == t.expected.size();
    for (std::size_t i = 0; same && i < rows.size(); ++i)
      same = rows[i].assertion == t.expected[i].assertion && rows[i].attack == t.expected[i].attack &&
             rows[i].defense == t.expected[i].defense;
    if (same)
      ++good;
    else
      bad += " " + t.connective;
  }
  return {good == tables.size(), ratio(good, tables.size()) + " connective tables" + (bad.empty() ? "" : "; differ:" + bad)};
}

Outcome tarski_game() {
  Signature sig;
  sig.add_predicate("P", {kIndividuals});
  sig.add_predicate("R", {kIndividuals, kIndividuals});
  auto structures = enumerate_structures(sig, 3);
  auto formulas = random_closed_formulas(sig, 7, 40, 3, 12);
  std::size_t pairs = 0, disagree = 0, oracle = 0, duality = 0;
  for (const auto& f : formulas) {
    for (const auto& m : structures) {
      ++pairs;
      bool t = eval_tarski(sig, m, {}, f);
      bool g = eval_game(sig, m, {}, f);
      if (t != g) ++disagree;
      if (testing::reference_truth(sig, m, f) != t) ++oracle;
      if (eval_game(sig, m, {}, Formula::negation(f)) == g) ++duality;
    }
  }
  std::string detail = std::to_string(pairs) + " pairs (" + std::to_string(formulas.size()) + " formulas x " +
                       std::to_string(structures.size()) + " structures), " + std::to_string(disagree) +
                       " disagreements, " + std::to_string(oracle) + " reference mismatches, " +
                       std::to_string(duality) + " negation-duality failures";
  return {pairs >= 10000 && disagree == 0 && oracle == 0 && duality == 0, detail};
}

Outcome round_trip() {
  auto sig = testing::mixed_signature();
  Context ctx = testing::mixed_context();
  testing::SyntaxGenerator gen(99);
  std::size_t fails = 0, n = 10000;
  std::string example;
  for (std::size_t i = 0; i < n; ++i) {
    Proof t = gen.proof(1 + static_cast<int>(i % 12));
    for (bool unicode : {false, true}) {
      std::string text = print(t, {unicode});
      bool ok = false;
      try {
        ok = parse_proof(text, *sig, ctx) == t;
      } catch (const Error&) {
      }
      if (!ok) {
        ++fails;
        if (example.empty()) example = text;
      }
    }
  }
  std::string detail = std::to_string(n) + " terms x 2 notations, " + std::to_string(fails) + " failures";
  if (!example.empty()) detail += "; e.g. " + example;
  return {fails == 0, detail};
}

Outcome replay_determinism() {
  std::ifstream in(corpus("theorems.nd"));
  std::stringstream text;
  text << in.rdbuf();
  Document doc = parse_document(text.str());
  std::vector<std::string> names;
  for (const auto& t : doc.theorems) names.push_back(t.name);
  fs::path dir = fs::temp_directory_path() / ("usum-replay-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  std::size_t sessions = 0, identical = 0, steps = 0, step_mismatch = 0;
  {
    Service live({dir.string(), nullptr});
    for (unsigned seed = 1; seed <= 100; ++seed) {
      std::mt19937 rng(seed);
      json create = {{"proto", kProtoTag},
                     {"kind", "CREATE"},
                     {"payload", {{"document", text.str()}, {"theorem", names[seed % names.size()]}, {"depth", 12}}}};
      std::vector<json> responses = {live.handle(create)};
      std::string id = responses[0].value("session", "");
      for (;;) {
        const json& view = responses.back()["payload"];
        if (responses.back()["kind"] != "VIEW" || view["status"] != "running" || view["legal_moves"].empty()) break;
        int k = std::uniform_int_distribution<int>(0, static_cast<int>(view["legal_moves"].size()) - 1)(rng);
        responses.push_back(live.handle(
            {{"proto", kProtoTag}, {"kind", "MOVE"}, {"session", id}, {"payload", {{"index", k}}}}));
      }
      ++sessions;
      fs::path log = dir / (id + ".jsonl");
      Service fresh;
      json final_view = fresh.replay_file(log.string());
      if (final_view == responses.back()) ++identical;
      // Every prefix of the log reproduces the view seen at that step.
      std::vector<json> events;
      std::ifstream lin(log);
      std::string line;
      while (std::getline(lin, line)) events.push_back(json::parse(line));
      for (std::size_t k = 1; k <= events.size(); ++k) {
        Service again;
        ++steps;
        std::vector<json> prefix(events.begin(), events.begin() + static_cast<long>(k));
        if (k - 1 >= responses.size() || again.replay(prefix) != responses[k - 1]) ++step_mismatch;
      }
    }
  }
  fs::remove_all(dir);
  std::string detail = ratio(identical, sessions) + " sessions replay to identical final views, " +
                       std::to_string(step_mismatch) + "/" + std::to_string(steps) + " step views differ";
  return {identical == 100 && sessions == 100 && step_mismatch == 0, detail};
}

}  // namespace

int main() {
  std::cout << "usum acceptance" << std::endl;
  criterion("rewriting-fidelity", 1, rewriting_fidelity);
  criterion("subject-reduction", 30, subject_reduction);
  criterion("confluence", 120, confluence);
  criterion("dialogue-correspondence", 120, dialogue_correspondence);
  criterion("table-fidelity", 1, table_fidelity);
  criterion("tarski-game-agreement", 120, tarski_game);
  criterion("round-trip", 60, round_trip);
  criterion("replay-determinism", 60, replay_determinism);
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria pass"))
            << std::endl;
  return failures ? 1 : 0;
}
