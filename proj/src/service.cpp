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

#include "usum/service.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <httplib.h>

#include "usum/printer.hpp"
#include "usum/trace.hpp"
#include "usum/typing.hpp"

namespace usum {

struct Service::Session {
  std::string id;
  std::string theorem;
  int depth = 0;
  Proof proof;
  GameState game;
  std::vector<json> events;
  std::string note;
  std::mutex mu;
  std::mutex log_mu;

  Session(std::string i, std::string t, int d, Proof p, GameState g)
      : id(std::move(i)), theorem(std::move(t)), depth(d), proof(std::move(p)), game(std::move(g)) {}
};

namespace {

class RequestError : public Error {
 public:
  RequestError(std::string code, const std::string& message, json detail = nullptr)
      : Error(message), code_(std::move(code)), detail_(std::move(detail)) {}
  const std::string& code() const { return code_; }
  const json& detail() const { return detail_; }

 private:
  std::string code_;
  json detail_;
};

json response(const std::string& kind, const std::optional<std::string>& session, json payload) {
  json j = {{"proto", kProtoTag}, {"kind", kind}, {"payload", std::move(payload)}};
  if (session) j["session"] = *session;
  return j;
}

// Text of the machine's last contraction, e.g. "FST(pair(a, b)) ⟶ a".
std::optional<std::string> last_reduction(const GameState& g) {
  const auto& h = g.history();
  for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i) {
    const Move& d = h[i];
    if (d.player != Player::Proponent || d.kind != MoveKind::Defend) continue;
    const Move& attack = h[d.target];
    const Move& asserted = h[attack.target];
    if (!asserted.residual || !asserted.residual->is_constructor()) return std::nullopt;
    std::optional<Proof> grant;
    if (*attack.attack == AttackKind::ImplGrant) grant = Proof::hyp(attack.token);
    try {
      Response r = respond(g.signature(), *asserted.residual, *asserted.formula, {*attack.attack, attack.term}, grant);
      PrintOptions u{true};
      return print(r.redex, u) + " ⟶ " + print(r.reduct, u);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool matches(const json& want, const json& have) {
  for (const char* key : {"kind", "target", "attack", "choice", "term"}) {
    if (!want.contains(key)) continue;
    if (!have.contains(key) || have[key] != want[key]) return false;
  }
  return true;
}

}  // namespace

json error_response(const std::string& code, const std::string& message, const std::optional<std::string>& session,
                    json detail) {
  json payload = {{"code", code}, {"message", message}};
  if (!detail.is_null()) payload["detail"] = std::move(detail);
  return response("ERROR", session, std::move(payload));
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  if (!options_.log_dir.empty()) std::filesystem::create_directories(options_.log_dir);
}

Service::~Service() = default;

std::size_t Service::session_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw RequestError("unknown-session", "no session '" + id + "'");
  return it->second;
}

void Service::log(Session& s, const json& event) {
  std::lock_guard<std::mutex> lock(s.log_mu);
  s.events.push_back(event);
  if (options_.log_dir.empty()) return;
  std::ofstream out(std::filesystem::path(options_.log_dir) / (s.id + ".jsonl"), std::ios::app);
  out << event.dump() << "\n";
}

namespace {

json view(const Service::Session& s);

}  // namespace

json Service::handle(const json& request) {
  std::optional<std::string> sid;
  try {
    if (!request.is_object()) throw RequestError("bad-request", "a request is a JSON object");
    if (request.value("proto", "") != kProtoTag)
      throw RequestError("bad-request", std::string("expected proto ") + kProtoTag);
    if (request.contains("session")) {
      if (!request["session"].is_string()) throw RequestError("bad-request", "session must be a string");
      sid = request["session"].get<std::string>();
    }
    std::string kind = request.value("kind", "");
    json payload = request.value("payload", json::object());
    if (!payload.is_object()) throw RequestError("bad-request", "payload must be an object");
    if (kind == "CREATE") return create(payload);
    if (!sid) throw RequestError("bad-request", kind + " needs a session");
    if (kind == "MOVE") return move(*sid, payload);
    if (kind == "STATE") return state(*sid);
    throw RequestError("bad-request", "unknown message kind '" + kind + "'");
  } catch (const RequestError& e) {
    return error_response(e.code(), e.what(), sid, e.detail());
  } catch (const json::exception& e) {
    return error_response("bad-request", e.what(), sid);
  }
}

std::string Service::handle_text(const std::string& line) {
  json request;
  try {
    request = json::parse(line);
  } catch (const json::exception& e) {
    return error_response("bad-request", std::string("malformed JSON: ") + e.what()).dump();
  }
  return handle(request).dump();
}

json Service::create(const json& payload) {
  std::string id = "s" + std::to_string(++counter_);
  return create_with_id(id, payload);
}

json Service::create_with_id(const std::string& id, const json& payload) {
  if (!payload.contains("document") || !payload["document"].is_string())
    throw RequestError("bad-request", "CREATE needs a document");
  if (!payload.contains("theorem") || !payload["theorem"].is_string())
    throw RequestError("bad-request", "CREATE needs a theorem");
  std::string theorem = payload["theorem"];
  int depth = payload.value("depth", 12);
  Document doc;
  try {
    doc = parse_document(payload["document"].get<std::string>());
  } catch (const ParseError& e) {
    throw RequestError("parse", e.what(),
                       {{"line", e.line()}, {"col", e.col()}, {"expected", e.expected()}, {"message", e.detail()}});
  }
  const TheoremEntry* t = doc.theorem(theorem);
  if (!t) throw RequestError("unknown-theorem", "no theorem '" + theorem + "'");
  const ProofEntry* p = doc.proof(theorem);
  if (!p) throw RequestError("no-proof", "theorem '" + theorem + "' has no proof");
  try {
    if (!doc.context.vars().empty() || !doc.context.hyps().empty() || !doc.context.paths().empty())
      throw RequestError("type", "a dialogue thesis is defended from an empty [context]");
    check(*doc.signature, doc.context, p->term, t->formula);
  } catch (const TypeError& e) {
    throw RequestError("type", e.what(),
                       {{"kind", kind_name(e.kind())}, {"location", e.location()}, {"message", e.detail()}});
  } catch (const Error& e) {
    throw RequestError("type", e.what());
  }
  GameState g(doc.signature, t->formula, p->term);
  if (static_cast<int>(g.history().size()) > depth) g.cut();
  auto s = std::make_shared<Session>(id, theorem, depth, p->term, std::move(g));
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (sessions_.count(id)) throw RequestError("bad-request", "session '" + id + "' exists");
    sessions_[id] = s;
  }
  log(*s, {{"proto", kProtoTag}, {"kind", "CREATE"}, {"session", id}, {"payload", payload}});
  return response("VIEW", id, view(*s));
}

json Service::move(const std::string& id, const json& payload) {
  auto s = find(id);
  std::unique_lock<std::mutex> lock(s->mu, std::try_to_lock);
  if (!lock.owns_lock()) throw RequestError("busy", "a move is already in flight for '" + id + "'");
  if (options_.on_move) options_.on_move(id);
  GameState& g = s->game;
  if (g.status() != Status::Running) throw RequestError("illegal-move", "the game is over");
  if (g.turn() != Player::Opponent) throw RequestError("illegal-move", "it is not the Opponent's turn");
  auto legal = g.legal_moves();
  std::optional<Move> chosen;
  if (payload.contains("index")) {
    if (!payload["index"].is_number_integer()) throw RequestError("bad-request", "index must be an integer");
    int i = payload["index"];
    if (i < 0 || i >= static_cast<int>(legal.size()))
      throw RequestError("illegal-move", "no legal move with index " + std::to_string(i));
    chosen = legal[i];
  } else if (payload.contains("move") && payload["move"].is_object()) {
    const json& want = payload["move"];
    for (const auto& m : legal)
      if (matches(want, move_json(g, m))) {
        chosen = m;
        break;
      }
    if (!chosen) {
      std::string why = "not a legal move";
      if (want.contains("target") && want["target"].is_number_integer()) {
        int t = want["target"];
        if (t >= 0 && t < static_cast<int>(g.history().size()) && g.history()[t].kind == MoveKind::Attack &&
            g.answered(t))
          why = "attack #" + std::to_string(t) + " has already been answered";
      }
      throw RequestError("illegal-move", why);
    }
  } else {
    throw RequestError("bad-request", "MOVE needs an index or a move");
  }
  g = g.apply(*chosen);
  s->note.clear();
  auto over_depth = [&] { return static_cast<int>(g.history().size()) > s->depth; };
  if (g.status() == Status::Running && over_depth()) g.cut();
  while (g.status() == Status::Running && g.turn() == Player::Proponent) {
    auto m = proponent_move(g);
    if (!m || !g.is_legal(*m)) {
      s->note = "the proof term yields no legal move";
      g.cut();
      break;
    }
    g = g.apply(*m);
    if (g.status() == Status::Running && over_depth()) g.cut();
  }
  log(*s, {{"proto", kProtoTag}, {"kind", "MOVE"}, {"session", id}, {"payload", payload}});
  return response("VIEW", id, view(*s));
}

json Service::state(const std::string& id) {
  auto s = find(id);
  std::lock_guard<std::mutex> lock(s->mu);
  return response("VIEW", id, view(*s));
}

json Service::replay(const std::vector<json>& events) {
  if (events.empty() || events[0].value("kind", "") != "CREATE" || !events[0].contains("session"))
    return error_response("bad-request", "a log starts with a CREATE carrying the session id");
  std::string id = events[0]["session"];
  json last;
  try {
    last = create_with_id(id, events[0].value("payload", json::object()));
  } catch (const RequestError& e) {
    return error_response(e.code(), e.what(), id, e.detail());
  }
  if (id.size() > 1 && id[0] == 's') {
    try {
      int n = std::stoi(id.substr(1));
      int cur = counter_.load();
      while (cur < n && !counter_.compare_exchange_weak(cur, n)) {
      }
    } catch (const std::exception&) {
    }
  }
  for (std::size_t i = 1; i < events.size(); ++i) {
    json e = events[i];
    e["session"] = id;
    last = handle(e);
    if (last["kind"] == "ERROR") return last;
  }
  return last;
}

json Service::replay_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return error_response("bad-request", "cannot read " + path);
  std::vector<json> events;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      events.push_back(json::parse(line));
    } catch (const json::exception& e) {
      return error_response("bad-request", std::string("corrupt log line: ") + e.what());
    }
  }
  return replay(events);
}

namespace {

json view(const Service::Session& s) {
  json j = game_json(s.game);
  j["theorem"] = s.theorem;
  j["depth"] = s.depth;
  j["proof"] = print(s.proof);
  const auto& h = s.game.history();
  for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i) {
    if (h[i].player != Player::Proponent || h[i].kind != MoveKind::Defend) continue;
    if (h[i].residual) j["residual"] = print(*h[i].residual);
    if (h[i].path) j["residual"] = print(*h[i].path);
    if (h[i].rule) j["rule"] = family_name(*h[i].rule);
    if (auto r = last_reduction(s.game)) j["reduction"] = *r;
    break;
  }
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

}  // namespace

void serve_stdio(Service& service, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out << service.handle_text(line) << "\n" << std::flush;
  }
}

bool serve_http(Service& service, const std::string& host, int port) {
  httplib::Server server;
  server.Post("/api", [&](const httplib::Request& req, httplib::Response& res) {
    res.set_content(service.handle_text(req.body), "application/json");
  });
  return server.listen(host, port);
}

}  // namespace usum
