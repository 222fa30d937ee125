// Copyright 2026 The TalentLens Authors
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

#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "talentlens/query.hpp"
#include "talentlens/snapshot.hpp"

namespace httplib {
class Server;
}

namespace talentlens {

// Holds the published snapshot. Readers take a shared_ptr copy and keep a
// complete snapshot alive for the whole request; `publish` swaps atomically.
class SnapshotStore {
 public:
  SnapshotStore() = default;
  explicit SnapshotStore(std::shared_ptr<const DatasetSnapshot> snapshot)
      : snapshot_(std::move(snapshot)) {}

  std::shared_ptr<const DatasetSnapshot> current() const;
  void publish(std::shared_ptr<const DatasetSnapshot> snapshot);

  // Reads a cache file and publishes it. On failure the old snapshot stays.
  void reload_from(const std::filesystem::path& cache);

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const DatasetSnapshot> snapshot_;
};

struct ApiError {
  int status = 500;
  std::string code;
  std::string message;

  nlohmann::json to_json() const;
};

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
};

// Stateless request handler: the same (snapshot, path, query) always yields
// the same response body.
class AnalyticsApi {
 public:
  explicit AnalyticsApi(const SnapshotStore& store) : store_(store) {}

  ApiResponse handle(std::string_view path, const QueryParams& params) const;
  ApiResponse handle_url(std::string_view path_and_query) const;

 private:
  std::string dispatch(std::string_view path, const QueryParams& params,
                          const DatasetSnapshot& snapshot) const;

  const SnapshotStore& store_;
};

// HTTP/1.1 front end over AnalyticsApi (GET only).
class HttpService {
 public:
  explicit HttpService(const SnapshotStore& store);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Blocks until stop(). Returns false when the socket cannot be bound.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  bool is_running() const;

 private:
  AnalyticsApi api_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace talentlens
