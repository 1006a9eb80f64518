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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "usum/binding.hpp"
#include "usum/dialogue.hpp"
#include "usum/model.hpp"
#include "usum/parser.hpp"
#include "usum/printer.hpp"
#include "usum/reduction.hpp"
#include "usum/service.hpp"
#include "usum/trace.hpp"
#include "usum/typing.hpp"

using namespace usum;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Document load(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

const ProofEntry& proof_named(const Document& doc, const std::string& name) {
  const ProofEntry* p = doc.proof(name);
  if (!p) throw UsageError("no proof named '" + name + "'");
  return *p;
}

// Dialogues start from an empty context: only closed theses over the
// signature can be played.
void require_closed(const Document& doc) {
  if (!doc.context.vars().empty() || !doc.context.hyps().empty() || !doc.context.paths().empty())
    throw UsageError("dialogues need a document with an empty [context]");
}

int cmd_check(const std::string& file, bool derivations) {
  Document doc = load(file);
  int failures = 0;
  try {
    check_context(*doc.signature, doc.context);
  } catch (const Error& e) {
    std::cout << "FAIL context: " << e.what() << "\n";
    return kFail;
  }
  for (const auto& t : doc.theorems) {
    const ProofEntry* p = doc.proof(t.name);
    if (!p) {
      if (t.expects_proof) std::cout << "open " << t.name << " : " << print(t.formula) << "\n";
      continue;
    }
    try {
      Derivation d = check(*doc.signature, doc.context, p->term, t.formula);
      std::cout << "ok   " << t.name << " : " << print(t.formula) << "\n";
      if (derivations) std::cout << derivation_json(d).dump(2) << "\n";
    } catch (const TypeError& e) {
      ++failures;
      std::cout << "FAIL " << file << ":" << p->pos.line << ":" << p->pos.col << ": " << t.name << ": " << e.what()
                << "\n";
    }
  }
  std::cout << (failures ? std::to_string(failures) + " proof(s) failed" : std::string("all proofs check")) << "\n";
  return failures ? kFail : 0;
}

int cmd_normalize(const std::string& file, const std::string& name, const std::string& strategy, int fuel,
                  const std::string& trace_out, bool ascii) {
  Document doc = load(file);
  const ProofEntry& p = proof_named(doc, name);
  auto s = parse_strategy(strategy);
  if (!s) throw UsageError("unknown strategy '" + strategy + "'");
  if (fuel < 0) throw UsageError("fuel must be non-negative");
  Trace t = normalize(p.term, *s, fuel);
  std::cout << trace_text(t, !ascii);
  if (t.steps.empty()) std::cout << print(t.initial, {!ascii}) << " is normal\n";
  if (!trace_out.empty()) {
    std::ofstream out(trace_out);
    if (!out) throw UsageError("cannot write " + trace_out);
    out << trace_json(t, *s, fuel).dump(2) << "\n";
  }
  if (t.exhausted) {
    std::cout << "fuel exhausted after " << t.steps.size() << " steps\n";
    return kFail;
  }
  std::cout << "normal form: " << print(t.terminal, {!ascii}) << "  (" << t.steps.size()
            << (t.steps.size() == 1 ? " step)\n" : " steps)\n");
  return 0;
}

Policy interactive_policy() {
  return [](const GameState& g, const std::vector<Move>& legal) -> std::optional<Move> {
    std::cout << "legal moves:\n";
    for (std::size_t i = 0; i < legal.size(); ++i) {
      GameState next = g.apply(legal[i]);
      std::cout << "  [" << i << "] " << describe(next, static_cast<int>(next.history().size()) - 1) << "\n";
    }
    std::cout << "move> " << std::flush;
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line == "q" || line == "quit") return std::nullopt;
      try {
        std::size_t i = std::stoul(line);
        if (i < legal.size()) return legal[i];
      } catch (const std::exception&) {
      }
      std::cout << "enter an index or q\nmove> " << std::flush;
    }
    return std::nullopt;
  };
}

int cmd_dialogue(const std::string& file, const std::string& name, int depth, const std::string& opponent,
                 bool as_json) {
  Document doc = load(file);
  const ProofEntry& p = proof_named(doc, name);
  require_closed(doc);
  const Formula& thesis = doc.theorem(name)->formula;
  try {
    check(*doc.signature, doc.context, p.term, thesis);
  } catch (const TypeError& e) {
    std::cout << "FAIL " << name << ": " << e.what() << "\n";
    return kFail;
  }
  if (opponent == "exhaustive") {
    SearchStats stats;
    Verdict v = exhaustive_win(doc.signature, p.term, thesis, depth, &stats);
    std::cout << name << ": " << verdict_name(v) << " at depth " << depth << " (" << stats.states << " states, "
              << stats.cuts << " cut)\n";
    return v == Verdict::Win ? 0 : kFail;
  }
  Policy policy;
  if (opponent.rfind("random:", 0) == 0) {
    unsigned seed = 0;
    try {
      seed = static_cast<unsigned>(std::stoul(opponent.substr(7)));
    } catch (const std::exception&) {
      throw UsageError("bad seed in '" + opponent + "'");
    }
    policy = random_policy(seed);
  } else if (opponent == "interactive") {
    policy = interactive_policy();
  } else {
    throw UsageError("unknown opponent '" + opponent + "'");
  }
  PlayResult r = play(doc.signature, p.term, thesis, policy, depth);
  if (as_json) {
    std::cout << game_json(r.state).dump(2) << "\n";
  } else {
    for (int i = 0; i < static_cast<int>(r.state.history().size()); ++i) {
      const Move& m = r.state.history()[i];
      std::cout << describe(r.state, i);
      if (m.rule) std::cout << "  [" << family_name(*m.rule) << "]";
      std::cout << "\n";
    }
    std::cout << "status: " << status_name(r.state.status()) << "\n";
  }
  if (r.error) {
    std::cout << "error: " << *r.error << "\n";
    return kFail;
  }
  return r.state.status() == Status::OpponentWins ? kFail : 0;
}

const Formula& formula_named(const Document& doc, const std::string& name) {
  const TheoremEntry* t = doc.theorem(name);
  if (!t) throw UsageError("no formula named '" + name + "'");
  return t->formula;
}

const Structure& structure_named(const Document& doc, const std::string& name) {
  const StructureEntry* s = doc.structure(name);
  if (!s) throw UsageError("no structure named '" + name + "'");
  return s->structure;
}

int cmd_model(const std::string& file, const std::string& fname, const std::string& sname, const std::string& mode) {
  Document doc = load(file);
  const Formula& f = formula_named(doc, fname);
  const Structure& m = structure_named(doc, sname);
  if (!free_vars(f).empty()) throw UsageError("'" + fname + "' is not closed");
  if (mode != "tarski" && mode != "game" && mode != "both") throw UsageError("unknown mode '" + mode + "'");
  std::optional<bool> tarski, game;
  if (mode != "game") {
    tarski = eval_tarski(*doc.signature, m, {}, f);
    std::cout << "tarski: " << (*tarski ? "true" : "false") << "\n";
  }
  if (mode != "tarski") {
    game = eval_game(*doc.signature, m, {}, f);
    std::cout << "game:   " << (*game ? "true" : "false") << "\n";
  }
  if (tarski && game) {
    std::cout << (*tarski == *game ? "AGREE" : "DISAGREE") << "\n";
    if (*tarski != *game) return kFail;
  }
  return 0;
}

struct Tally {
  int pass = 0;
  int fail = 0;
  void report(bool ok, const std::string& what, const std::string& detail = {}) {
    (ok ? pass : fail)++;
    std::cout << (ok ? "pass " : "FAIL ") << what;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
  }
};

int cmd_oracle(const std::string& file, int depth, int fuel) {
  Document doc = load(file);
  const Signature& sig = *doc.signature;
  Tally t;
  {
    Document again;
    std::string printed = print_document(doc);
    try {
      again = parse_document(printed);
      t.report(print_document(again) == printed, "document round-trip");
    } catch (const ParseError& e) {
      t.report(false, "document round-trip", e.what());
    }
  }
  bool closed = doc.context.vars().empty() && doc.context.hyps().empty() && doc.context.paths().empty();
  for (const auto& th : doc.theorems) {
    try {
      t.report(parse_formula(print(th.formula), sig, doc.context) == th.formula, th.name + " formula round-trip");
    } catch (const Error& e) {
      t.report(false, th.name + " formula round-trip", e.what());
    }
    const ProofEntry* p = doc.proof(th.name);
    if (!p) continue;
    try {
      check(sig, doc.context, p->term, th.formula);
      t.report(true, th.name + " type-checks");
    } catch (const TypeError& e) {
      t.report(false, th.name + " type-checks", e.what());
      continue;
    }
    try {
      t.report(parse_proof(print(p->term), sig, doc.context) == p->term, th.name + " proof round-trip");
    } catch (const Error& e) {
      t.report(false, th.name + " proof round-trip", e.what());
    }
    Trace n = normalize(p->term, Strategy::NormalOrder, fuel);
    Trace a = normalize(p->term, Strategy::ApplicativeOrder, fuel);
    bool reduced_ok = true;
    std::string why;
    for (const auto& s : n.steps) {
      try {
        check(sig, doc.context, s.result, th.formula);
      } catch (const TypeError& e) {
        reduced_ok = false;
        why = e.what();
        break;
      }
    }
    t.report(reduced_ok, th.name + " subject reduction", why);
    t.report(!n.exhausted && !a.exhausted && n.terminal == a.terminal, th.name + " strategies agree",
             n.exhausted || a.exhausted ? "fuel exhausted" : std::string());
    if (closed) {
      Verdict v = exhaustive_win(doc.signature, p->term, th.formula, depth);
      t.report(v == Verdict::Win, th.name + " dialogue", std::string(verdict_name(v)));
    }
  }
  for (const auto& th : doc.theorems) {
    if (!free_vars(th.formula).empty()) continue;
    for (const auto& s : doc.structures) {
      bool a = eval_tarski(sig, s.structure, {}, th.formula);
      bool b = eval_game(sig, s.structure, {}, th.formula);
      t.report(a == b, th.name + " in " + s.name + " tarski/game", a ? "true" : "false");
    }
  }
  std::cout << t.pass << " passed, " << t.fail << " failed\n";
  return t.fail ? kFail : 0;
}

int cmd_serve(int port, const std::string& host, bool stdio, const std::string& log_dir) {
  Service service({log_dir, nullptr});
  if (stdio) {
    serve_stdio(service, std::cin, std::cout);
    return 0;
  }
  std::cerr << "listening on http://" << host << ":" << port << "/api\n";
  if (!serve_http(service, host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof terms, reduction, dialogues and finite models"};
  app.require_subcommand(1);

  std::string file, name, strategy = "normal-order", trace_out, opponent = "exhaustive", formula, structure,
                          mode = "both", host = "127.0.0.1", log_dir;
  int fuel = kDefaultFuel, depth = 12, port = 8080;
  bool ascii = false, as_json = false, stdio = false, derivations = false;

  auto* check_cmd = app.add_subcommand("check", "type-check every proof in FILE");
  check_cmd->add_option("FILE", file)->required();
  check_cmd->add_flag("--derivations", derivations, "print derivation trees as JSON");

  auto* norm = app.add_subcommand("normalize", "reduce a proof term to normal form");
  norm->add_option("FILE", file)->required();
  norm->add_option("--term", name)->required();
  norm->add_option("--strategy", strategy)->check(CLI::IsMember({"normal-order", "applicative-order"}));
  norm->add_option("--fuel", fuel);
  norm->add_option("--trace", trace_out, "write the trace document here");
  norm->add_flag("--ascii", ascii);

  auto* dia = app.add_subcommand("dialogue", "play the dialogue driven by a proof term");
  dia->add_option("FILE", file)->required();
  dia->add_option("--term", name)->required();
  dia->add_option("--depth", depth);
  dia->add_option("--opponent", opponent, "exhaustive | random:SEED | interactive");
  dia->add_flag("--json", as_json);

  auto* mod = app.add_subcommand("model", "evaluate a closed formula in a finite structure");
  mod->add_option("FILE", file)->required();
  mod->add_option("--formula", formula)->required();
  mod->add_option("--structure", structure)->required();
  mod->add_option("--mode", mode)->check(CLI::IsMember({"tarski", "game", "both"}));

  auto* orc = app.add_subcommand("oracle", "run every cross-check on FILE");
  orc->add_option("FILE", file)->required();
  orc->add_option("--depth", depth);
  orc->add_option("--fuel", fuel);

  auto* srv = app.add_subcommand("serve", "start the session service");
  srv->add_option("--port", port);
  srv->add_option("--host", host);
  srv->add_flag("--stdio", stdio, "serve JSON lines on stdin/stdout");
  srv->add_option("--log-dir", log_dir, "append-only session logs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check_cmd) return cmd_check(file, derivations);
    if (*norm) return cmd_normalize(file, name, strategy, fuel, trace_out, ascii);
    if (*dia) return cmd_dialogue(file, name, depth, opponent, as_json);
    if (*mod) return cmd_model(file, formula, structure, mode);
    if (*orc) return cmd_oracle(file, depth, fuel);
    if (*srv) return cmd_serve(port, host, stdio, log_dir);
  } catch (const UsageError& e) {
    std::cerr << "usum: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "usum: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
