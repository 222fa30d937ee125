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

#include "talentlens/service.hpp"

#include <httplib.h>

#include "talentlens/analytics.hpp"
#include "talentlens/ingest.hpp"
#include "talentlens/payload_json.hpp"

namespace talentlens {

using nlohmann::json;

namespace {

class ApiException : public std::exception {
 public:
  ApiException(int status, std::string code, std::string message)
      : error_{status, std::move(code), std::move(message)} {}
  const ApiError& error() const { return error_; }
  const char* what() const noexcept override { return error_.message.c_str(); }

 private:
  ApiError error_;
};

std::vector<std::string> values_of(const QueryParams& params, std::string_view key) {
  std::vector<std::string> out;
  for (const auto& [k, v] : params) {
    if (k == key) out.push_back(v);
  }
  return out;
}

std::optional<std::string> single_value(const QueryParams& params, std::string_view key,
                                        std::string_view error_code) {
  auto values = values_of(params, key);
  if (values.empty()) return std::nullopt;
  if (values.size() > 1) {
    throw ApiException(422, std::string(error_code),
                       "parameter '" + std::string(key) + "' given more than once");
  }
  return values.front();
}

const std::set<std::string, std::less<>> kNoExtras;
const std::set<std::string, std::less<>> kScatterKeys = {"axis", "pos", "neg"};
const std::set<std::string, std::less<>> kTreemapKeys = {"level", "parent"};

AxisSpec axis_from(const QueryParams& params) {
  const auto axis = single_value(params, "axis", "INVALID_AXIS");
  if (!axis) throw ApiException(422, "INVALID_AXIS", "scatter requires an 'axis' parameter");
  const auto dimension = parse_axis_dimension(*axis);
  if (!dimension) {
    throw ApiException(422, "INVALID_AXIS", "unknown axis dimension '" + *axis + "'");
  }
  AxisSpec spec;
  spec.dimension = *dimension;
  for (auto& v : values_of(params, "pos")) spec.positive.insert(std::move(v));
  for (auto& v : values_of(params, "neg")) spec.negative.insert(std::move(v));
  if (spec.positive.empty() && spec.negative.empty() &&
      *dimension == AxisDimension::kEducation) {
    spec = AxisSpec::default_spec();
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ApiException(422, "INVALID_AXIS", e.what());
  }
  return spec;
}

}  // namespace

// ---------------------------------------------------------------------------

std::shared_ptr<const DatasetSnapshot> SnapshotStore::current() const {
  std::lock_guard lock(mu_);
  return snapshot_;
}

void SnapshotStore::publish(std::shared_ptr<const DatasetSnapshot> snapshot) {
  std::lock_guard lock(mu_);
  snapshot_ = std::move(snapshot);
}

void SnapshotStore::reload_from(const std::filesystem::path& cache) {
  auto fresh = read_cache_file(cache);
  publish(std::move(fresh));
}

json ApiError::to_json() const {
  return {{"status", status}, {"code", code}, {"message", message}};
}

// ---------------------------------------------------------------------------

std::string AnalyticsApi::dispatch(std::string_view path, const QueryParams& params,
                            const DatasetSnapshot& snapshot) const {
  if (path == "/api/health") {
    if (!params.empty()) throw BadFilterError("health takes no parameters");
    const json health = {{"status", "ok"},
                         {"record_count", snapshot.size()},
                         {"fraction", snapshot.fraction()},
                         {"provenance", to_json(snapshot.provenance())}};
    return health.dump();
  }
  if (path == "/api/scatter") {
    const FilterState filter = decode_filter(params, kScatterKeys);
    return to_json_text(scatter_glyphs(snapshot, filter, axis_from(params)));
  }
  if (path == "/api/treemap") {
    const FilterState filter = decode_filter(params, kTreemapKeys);
    TreemapLevel level = TreemapLevel::kProvince;
    if (const auto text = single_value(params, "level", "INVALID_LEVEL")) {
      const auto parsed = parse_treemap_level(*text);
      if (!parsed) {
        throw ApiException(422, "INVALID_LEVEL", "level must be PROVINCE or CITY");
      }
      level = *parsed;
    }
    std::optional<char> parent;
    if (const auto text = single_value(params, "parent", "INVALID_PARENT")) {
      if (!is_province(*text)) {
        throw ApiException(422, "INVALID_PARENT", "parent must be a province letter");
      }
      parent = (*text)[0];
    }
    if (level == TreemapLevel::kCity && !parent) {
      throw ApiException(422, "MISSING_PARENT", "level=CITY requires a parent province");
    }
    if (level == TreemapLevel::kProvince && parent) {
      throw ApiException(422, "INVALID_PARENT", "parent is only valid with level=CITY");
    }
    return to_json(regional_treemap(snapshot, filter, level, parent)).dump();
  }

  const FilterState filter = decode_filter(params, kNoExtras);
  if (path == "/api/summary") {
    SummaryAccumulator acc;
    for (std::uint32_t id : match(snapshot, filter)) acc.add(snapshot.record(id).base);
    return to_json(acc.result()).dump();
  }
  if (path == "/api/sankey") return to_json(sankey_flows(snapshot, filter)).dump();
  if (path == "/api/regions") return to_json(region_bars(snapshot, filter)).dump();
  if (path == "/api/positions") return to_json(position_rows(snapshot, filter)).dump();
  if (path == "/api/bands") return to_json(requirement_bands(snapshot, filter)).dump();
  if (path == "/api/grid") return to_json(industry_region_grid(snapshot, filter)).dump();
  if (path == "/api/flowers") return to_json(industry_flowers(snapshot, filter)).dump();
  throw ApiException(404, "NOT_FOUND", "no endpoint " + std::string(path));
}

ApiResponse AnalyticsApi::handle(std::string_view path, const QueryParams& params) const {
  ApiError error;
  try {
    const auto snapshot = store_.current();
    if (!snapshot || snapshot->size() == 0) {
      throw ApiException(503, "EMPTY_SNAPSHOT", "no snapshot is loaded");
    }
    return ApiResponse{200, dispatch(path, params, *snapshot)};
  } catch (const ApiException& e) {
    error = e.error();
  } catch (const BadFilterError& e) {
    error = ApiError{400, "BAD_FILTER", e.what()};
  } catch (const UnknownRegionError& e) {
    error = ApiError{404, "UNKNOWN_REGION", e.what()};
  } catch (const DomainError& e) {
    error = ApiError{422, "INVALID_ARGUMENT", e.what()};
  } catch (const std::exception& e) {
    error = ApiError{500, "INTERNAL", e.what()};
  }
  return ApiResponse{error.status, error.to_json().dump()};
}

ApiResponse AnalyticsApi::handle_url(std::string_view path_and_query) const {
  const auto q = path_and_query.find('?');
  const std::string_view path = path_and_query.substr(0, q);
  QueryParams params;
  try {
    if (q != std::string_view::npos) params = parse_query(path_and_query.substr(q + 1));
  } catch (const BadFilterError& e) {
    const ApiError error{400, "BAD_FILTER", e.what()};
    return ApiResponse{error.status, error.to_json().dump()};
  }
  return handle(path, params);
}

// ---------------------------------------------------------------------------

HttpService::HttpService(const SnapshotStore& store)
    : api_(store), server_(std::make_unique<httplib::Server>()) {
  server_->Get(R"(.*)", [this](const httplib::Request& req, httplib::Response& res) {
    QueryParams params(req.params.begin(), req.params.end());
    const ApiResponse out = api_.handle(req.path, params);
    res.status = out.status;
    res.set_content(out.body, "application/json; charset=utf-8");
  });
}

HttpService::~HttpService() = default;

bool HttpService::listen(const std::string& host, int port) {
  return server_->listen(host, port);
}

int HttpService::bind_any_port(const std::string& host) {
  return server_->bind_to_any_port(host);
}

bool HttpService::listen_after_bind() { return server_->listen_after_bind(); }

void HttpService::stop() { server_->stop(); }

bool HttpService::is_running() const { return server_->is_running(); }

}  // namespace talentlens
