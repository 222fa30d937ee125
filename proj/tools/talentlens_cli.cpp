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

// talentlens command line: ingest a dataset into a snapshot cache, serve a
// cache over HTTP, or generate synthetic corpora.
//
// Exit codes: 0 ok, 1 usage error, 2 data error.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "talentlens/datagen.hpp"
#include "talentlens/error.hpp"
#include "talentlens/ingest.hpp"
#include "talentlens/payload_json.hpp"
#include "talentlens/pipeline.hpp"
#include "talentlens/service.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr const char* kPortEnv = "TALENTLENS_PORT";

std::atomic<bool> g_stop{false};
std::atomic<bool> g_reload{false};

extern "C" void on_signal(int sig) {
  if (sig == SIGHUP) {
    g_reload = true;
  } else {
    g_stop = true;
  }
}

struct IngestArgs {
  std::string input;
  std::string cache;
  double fraction = talentlens::kDefaultTopFraction;
  std::string format = "auto";
  std::string rejects;
  std::string salary_map;
};

struct ServeArgs {
  std::string cache;
  int port = 8080;
  std::string host = "127.0.0.1";
};

struct GenArgs {
  std::size_t records = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string config;
  std::string scenario;
};

talentlens::InputFormat pick_format(const IngestArgs& args) {
  if (args.format == "csv") return talentlens::InputFormat::kCsv;
  if (args.format == "jsonl") return talentlens::InputFormat::kJsonl;
  const bool jsonl = args.input.ends_with(".jsonl") || args.input.ends_with(".ndjson");
  return jsonl ? talentlens::InputFormat::kJsonl : talentlens::InputFormat::kCsv;
}

int run_ingest(const IngestArgs& args) {
  using namespace talentlens;
  IngestOptions options;
  SalaryTypeMap salary_map;
  if (!args.salary_map.empty()) {
    std::ifstream map_in(args.salary_map);
    if (!map_in) {
      std::cerr << "error: cannot open salary map " << args.salary_map << "\n";
      return kExitData;
    }
    salary_map = load_salary_type_map(map_in);
    options.salary_type_map = &salary_map;
  }

  std::ifstream in(args.input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input " << args.input << "\n";
    return kExitData;
  }
  const ParseResult parsed = parse_dataset(in, pick_format(args), options);
  if (!args.rejects.empty()) {
    std::ofstream out(args.rejects, std::ios::binary);
    out << parsed.report.to_csv();
  }
  if (parsed.records.empty()) {
    std::cerr << "error: no records accepted (" << parsed.report.rejects.size()
              << " rejected)\n";
    return kExitData;
  }

  const auto snapshot = build_snapshot(parsed.records, args.fraction);
  write_cache_file(args.cache, *snapshot);

  nlohmann::json report = {
      {"total_lines", parsed.report.total_lines},
      {"accepted", parsed.report.accepted},
      {"rejected", parsed.report.rejects.size()},
      {"summary", to_json(dataset_summary(parsed.records))},
      {"fraction", args.fraction},
      {"provenance", to_json(snapshot->provenance())},
  };
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int run_serve(const ServeArgs& args) {
  using namespace talentlens;
  int port = args.port;
  if (const char* env = std::getenv(kPortEnv); env != nullptr && *env != '\0') {
    try {
      port = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: " << kPortEnv << " is not a port number\n";
      return kExitUsage;
    }
  }
  if (port < 0 || port > 65535) {
    std::cerr << "error: port out of range\n";
    return kExitUsage;
  }

  SnapshotStore store(read_cache_file(args.cache));
  HttpService service(store);

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::signal(SIGHUP, on_signal);
  std::thread watcher([&] {
    while (!g_stop) {
      if (g_reload.exchange(false)) {
        try {
          store.reload_from(args.cache);
          std::cerr << "reloaded " << args.cache << "\n";
        } catch (const std::exception& e) {
          std::cerr << "reload failed, keeping previous snapshot: " << e.what() << "\n";
        }
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    service.stop();
  });

  std::cerr << "serving " << args.cache << " on http://" << args.host << ":" << port << "\n";
  const bool ok = service.listen(args.host, port);
  g_stop = true;
  watcher.join();
  if (!ok) {
    std::cerr << "error: cannot listen on " << args.host << ":" << port << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_gen(const GenArgs& args, const CLI::App& sub) {
  using namespace talentlens;
  std::string bytes;
  if (!args.scenario.empty()) {
    if (args.scenario == "CASE1") {
      bytes = scenario_corpus(Scenario::kCase1);
    } else if (args.scenario == "CASE2") {
      bytes = scenario_corpus(Scenario::kCase2);
    } else {
      std::cerr << "error: --scenario must be CASE1 or CASE2\n";
      return kExitUsage;
    }
  } else {
    GenConfig config;
    if (!args.config.empty()) {
      std::ifstream in(args.config);
      if (!in) {
        std::cerr << "error: cannot open config " << args.config << "\n";
        return kExitData;
      }
      config = load_gen_config(in);
    }
    if (sub.count("--records")) config.record_count = args.records;
    if (sub.count("--seed")) config.seed = args.seed;
    bytes = generate(config);
  }

  if (args.output == "-") {
    std::cout << bytes;
    return kExitOk;
  }
  std::ofstream out(args.output, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << args.output << "\n";
    return kExitData;
  }
  out << bytes;
  return out ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"talentlens: recruitment analytics engine"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Run the pipeline and write a snapshot cache");
  ingest_cmd->add_option("--input", ingest.input, "CSV or JSONL dataset")->required();
  ingest_cmd->add_option("--cache", ingest.cache, "Snapshot cache to write")->required();
  ingest_cmd->add_option("--fraction", ingest.fraction, "Top fraction of positions to keep")
      ->check(CLI::Range(0.0, 1.0));
  ingest_cmd->add_option("--format", ingest.format, "csv, jsonl or auto (by extension)")
      ->check(CLI::IsMember({"auto", "csv", "jsonl"}));
  ingest_cmd->add_option("--rejects", ingest.rejects, "Write the reject report CSV here");
  ingest_cmd->add_option("--salary-map", ingest.salary_map,
                         "raw=CANONICAL salary type mapping file");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve a snapshot cache over HTTP");
  serve_cmd->add_option("--cache", serve.cache, "Snapshot cache to load")->required();
  serve_cmd->add_option("--port", serve.port, "Port (overridden by TALENTLENS_PORT)");
  serve_cmd->add_option("--host", serve.host, "Bind address");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus as CSV");
  gen_cmd->add_option("--records", gen.records, "Record count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--output", gen.output, "Output path or - for stdout")->required();
  gen_cmd->add_option("--config", gen.config, "key=value generator config file");
  gen_cmd->add_option("--scenario", gen.scenario, "CASE1 or CASE2 (ignores other options)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ingest_cmd) {
      if (!(ingest.fraction > 0.0)) {
        std::cerr << "error: --fraction must lie in (0, 1]\n";
        return kExitUsage;
      }
      return run_ingest(ingest);
    }
    if (*serve_cmd) return run_serve(serve);
    if (*gen_cmd) return run_gen(gen, *gen_cmd);
  } catch (const talentlens::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
