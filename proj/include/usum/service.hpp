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

#pragma once

#include <atomic>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "usum/dialogue.hpp"
#include "usum/parser.hpp"

namespace usum {

using json = nlohmann::json;

inline constexpr const char* kProtoTag = "usum-proto/1";

struct ServiceOptions {
  /// Directory for one append-only JSONL log per session; empty disables.
  std::string log_dir;
  /// Called while a move holds its session lock (tests use it to keep a
  /// move in flight).
  std::function<void(const std::string& session)> on_move;
};

/// Session store speaking CREATE / MOVE / STATE. The human plays the
/// Opponent; the machine Proponent answers from the proof term.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Every request gets exactly one VIEW or ERROR response.
  json handle(const json& request);
  std::string handle_text(const std::string& line);

  /// Rebuild a session from its logged requests and return the final
  /// response. The session is registered under its logged id.
  json replay(const std::vector<json>& events);
  json replay_file(const std::string& path);

  std::size_t session_count() const;

  struct Session;

 private:

  json create(const json& payload);
  json move(const std::string& id, const json& payload);
  json state(const std::string& id);
  json create_with_id(const std::string& id, const json& payload);
  std::shared_ptr<Session> find(const std::string& id) const;
  void log(Session& s, const json& event);

  ServiceOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<int> counter_{0};
};

json error_response(const std::string& code, const std::string& message,
                    const std::optional<std::string>& session = std::nullopt, json detail = nullptr);

/// One JSON request per input line, one response per output line.
void serve_stdio(Service& service, std::istream& in, std::ostream& out);

/// HTTP binding: POST /api with a request body. Blocks until stopped.
bool serve_http(Service& service, const std::string& host, int port);

}  // namespace usum
