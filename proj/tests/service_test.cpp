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

#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "talentlens/analytics.hpp"
#include "talentlens/datagen.hpp"
#include "talentlens/payload_json.hpp"
#include "talentlens/pipeline.hpp"
#include "talentlens/service.hpp"

namespace talentlens {
namespace {

using nlohmann::json;

std::shared_ptr<const DatasetSnapshot> sample(std::size_t n = 2000, std::uint64_t seed = 42) {
  GenConfig config;
  config.record_count = n;
  config.seed = seed;
  config.province_count = 6;
  return build_snapshot(generate_records(config), 0.2);
}

class ApiTest : public ::testing::Test {
 protected:
  ApiTest() : store_(sample()), api_(store_) {}

  json ok(std::string_view url) {
    const auto r = api_.handle_url(url);
    EXPECT_EQ(r.status, 200) << url << " -> " << r.body;
    return json::parse(r.body);
  }
  void fails(std::string_view url, int status, const std::string& code) {
    const auto r = api_.handle_url(url);
    EXPECT_EQ(r.status, status) << url;
    const auto body = json::parse(r.body);
    EXPECT_EQ(body.at("code"), code) << url;
    EXPECT_EQ(body.at("status"), status);
    EXPECT_TRUE(body.at("message").is_string());
  }

  SnapshotStore store_;
  AnalyticsApi api_;
};

TEST_F(ApiTest, AllEndpointsRespond) {
  const auto health = ok("/api/health");
  EXPECT_EQ(health.at("status"), "ok");
  EXPECT_EQ(health.at("record_count"), store_.current()->size());
  for (const char* path : {"/api/summary", "/api/sankey", "/api/regions", "/api/positions",
                           "/api/bands", "/api/grid", "/api/flowers", "/api/treemap",
                           "/api/scatter?axis=education"}) {
    ok(path);
  }
  EXPECT_EQ(ok("/api/summary").at("record_count"), store_.current()->size());
}

TEST_F(ApiTest, FiltersApply) {
  const auto all = ok("/api/sankey").at("total").get<std::size_t>();
  const auto some = ok("/api/sankey?province=A&province=B").at("total").get<std::size_t>();
  EXPECT_LT(some, all);
  EXPECT_EQ(ok("/api/summary?province=A&province=B").at("record_count"), some);
}

TEST_F(ApiTest, ErrorCodes) {
  fails("/api/nope", 404, "NOT_FOUND");
  fails("/api/sankey?colour=red", 400, "BAD_FILTER");
  fails("/api/sankey?education=XX", 400, "BAD_FILTER");
  fails("/api/sankey?province=%zz", 400, "BAD_FILTER");
  fails("/api/scatter", 422, "INVALID_AXIS");
  fails("/api/scatter?axis=height", 422, "INVALID_AXIS");
  fails("/api/scatter?axis=province&pos=A", 422, "INVALID_AXIS");
  fails("/api/treemap?level=CITY", 422, "MISSING_PARENT");
  fails("/api/treemap?parent=A", 422, "INVALID_PARENT");
  fails("/api/treemap?level=STREET", 422, "INVALID_LEVEL");
  fails("/api/treemap?level=CITY&parent=Z", 404, "UNKNOWN_REGION");
}

TEST_F(ApiTest, ScatterDefaultsAndExplicitSides) {
  const auto def = ok("/api/scatter?axis=education");
  EXPECT_FALSE(def.at("points").empty());
  const auto prov = ok("/api/scatter?axis=province&pos=A&neg=B");
  for (const auto& p : prov.at("points")) {
    EXPECT_EQ(p.at("side") == "+", p.at("province") == "A");
  }
}

TEST_F(ApiTest, TreemapLevels) {
  const auto root = ok("/api/treemap");
  EXPECT_EQ(root.at("id"), "ALL");
  const auto city = ok("/api/treemap?level=CITY&parent=A");
  EXPECT_EQ(city.at("id"), "A");
  for (const auto& c : city.at("children")) EXPECT_EQ(c.at("kind"), "CITY");
}

TEST_F(ApiTest, MoneyIsWholeCny) {
  for (const auto& bar : ok("/api/regions").at("bars")) {
    if (!bar.at("avg_salary").is_null()) {
      EXPECT_TRUE(bar.at("avg_salary").is_number_integer());
    }
  }
}

TEST_F(ApiTest, ResponsesAreDeterministic) {
  for (const char* url : {"/api/positions", "/api/treemap", "/api/scatter?axis=education"}) {
    EXPECT_EQ(api_.handle_url(url).body, api_.handle_url(url).body);
  }
}

TEST(Payload, StreamedGlyphsMatchJsonTree) {
  const auto snap = sample(4000, 3);
  for (const auto& axis : {AxisSpec::default_spec(),
                           AxisSpec{AxisDimension::kProvince, {"A", "C"}, {"B"}},
                           AxisSpec{AxisDimension::kExperience, {"ESu"}, {"EKk", "Eas"}}}) {
    const auto set = scatter_glyphs(*snap, {}, axis);
    ASSERT_FALSE(set.points.empty());
    EXPECT_EQ(to_json_text(set), to_json(set).dump());
  }
  GlyphSet empty;
  empty.axis = AxisSpec::default_spec();
  EXPECT_EQ(to_json_text(empty), to_json(empty).dump());
}

TEST(Api, EmptyStoreIs503) {
  SnapshotStore store;
  AnalyticsApi api(store);
  EXPECT_EQ(api.handle_url("/api/sankey").status, 503);
  EXPECT_EQ(json::parse(api.handle_url("/api/health").body).at("code"), "EMPTY_SNAPSHOT");
}

TEST(Store, ReloadSwapsOrKeeps) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "talentlens_reload_test.tlc";
  const auto first = sample(1500, 1);
  const auto second = sample(2500, 2);
  SnapshotStore store(first);
  write_cache_file(path, *second);
  store.reload_from(path);
  EXPECT_EQ(store.current()->size(), second->size());

  const auto held = store.current();  // readers keep their copy alive
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(store.reload_from(path));
  EXPECT_EQ(store.current(), held);
}

TEST(Http, ServesOverEphemeralPort) {
  SnapshotStore store(sample());
  HttpService service(store);
  const int port = service.bind_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread server([&] { service.listen_after_bind(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  httplib::Result res;
  for (int i = 0; i < 50 && !(res = client.Get("/api/health")); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type").rfind("application/json", 0), 0u);

  auto bad = client.Get("/api/sankey?nope=1");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  auto missing = client.Get("/elsewhere");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  // Publishing a new snapshot is visible to the next request.
  const auto next = sample(3000, 9);
  store.publish(next);
  auto after = client.Get("/api/health");
  ASSERT_TRUE(after);
  EXPECT_EQ(json::parse(after->body).at("record_count"), next->size());

  service.stop();
  server.join();
}

}  // namespace
}  // namespace talentlens
