/*
 * Copyright 2026 The ergvc Authors
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

// Command-line front end. Builds a JSON config from --config plus flag
// overrides and hands it to the shared library.

#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ergvc.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

// A flag that writes its value to a JSON pointer in the config.
struct Override {
  std::string pointer;
  std::optional<std::string> text;
  std::optional<std::uint64_t> number;
  std::optional<std::vector<std::string>> list;
  bool flag = false;
};

struct Options {
  std::string config_path;
  std::string out_dir;
  bool print_json = false;
  std::vector<std::string> sets;  // --set /pointer=value
  std::deque<Override> overrides;  // stable addresses for the callbacks
};

Override& number_flag(CLI::App* app, Options& o, const std::string& name,
                      const std::string& pointer, const std::string& help) {
  o.overrides.push_back({pointer, {}, {}, {}, false});
  auto& ov = o.overrides.back();
  app->add_option_function<std::uint64_t>(name, [&ov](const std::uint64_t& v) { ov.number = v; }, help);
  return ov;
}

Override& text_flag(CLI::App* app, Options& o, const std::string& name,
                    const std::string& pointer, const std::string& help) {
  o.overrides.push_back({pointer, {}, {}, {}, false});
  auto& ov = o.overrides.back();
  app->add_option_function<std::string>(name, [&ov](const std::string& v) { ov.text = v; }, help);
  return ov;
}

Override& list_flag(CLI::App* app, Options& o, const std::string& name,
                    const std::string& pointer, const std::string& help) {
  o.overrides.push_back({pointer, {}, {}, {}, false});
  auto& ov = o.overrides.back();
  app->add_option_function<std::vector<std::string>>(
      name, [&ov](const std::vector<std::string>& v) { ov.list = v; }, help)
      ->delimiter(',');
  return ov;
}

Override& bool_flag(CLI::App* app, Options& o, const std::string& name,
                    const std::string& pointer, const std::string& help) {
  o.overrides.push_back({pointer, {}, {}, {}, false});
  auto& ov = o.overrides.back();
  app->add_flag_callback(name, [&ov] { ov.flag = true; }, help);
  return ov;
}

void family_flags(CLI::App* sub, Options& o) {
  text_flag(sub, o, "--family", "/family/name", "registered family name");
  number_flag(sub, o, "--order", "/family/order", "family order");
  number_flag(sub, o, "--k", "/family/k", "intervals per member (k-intervals)");
}

// Reads a flag value the same way a config field would be written.
json scalar(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

int fail(int code, const std::string& message) {
  std::cerr << "ergvc: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on VC families and ergodic sample paths"};
  app.require_subcommand(1, 1);
  Options o;
  // Global flags; the config fields they override are top-level.
  app.add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
  number_flag(&app, o, "--precision", "/precision", "sample precision P in [64,128]");
  number_flag(&app, o, "--budget", "/budget", "family members enumerated");
  number_flag(&app, o, "--seed", "/seed", "base seed");
  app.add_option("--out", o.out_dir, "directory for report.json and data files");
  app.add_option("--set", o.sets, "override a config field: /json/pointer=value");
  app.add_flag("--json", o.print_json, "print the JSON report instead of the summary");
  app.fallthrough();

  auto* shatter = app.add_subcommand("shatter", "shatter coefficient on a point set");
  family_flags(shatter, o);
  number_flag(shatter, o, "--grid", "/grid", "midpoint grid order");
  list_flag(shatter, o, "--points", "/points", "comma-separated rational points");

  auto* vcdim = app.add_subcommand("vcdim", "grid-relative VC dimension");
  family_flags(vcdim, o);
  number_flag(vcdim, o, "--grid", "/grid", "midpoint grid order");
  number_flag(vcdim, o, "--max-k", "/max_k", "largest subset size searched");

  auto* jw = app.add_subcommand("join-witness", "shattered witness from a full join");
  number_flag(jw, o, "--k", "/k", "witness size; builds 2^k digit sets");
  number_flag(jw, o, "--permutation-seed", "/permutation_seed", "shuffle the digit sets");
  list_flag(jw, o, "--sets", "/sets", "explicit sets (2^k of them)");

  auto* converge = app.add_subcommand("converge", "deviation traces over an m grid");
  family_flags(converge, o);
  text_flag(converge, o, "--process", "/process/kind", "iid, rotation, doubling or markov");
  number_flag(converge, o, "--m", "/m", "largest sample size");
  number_flag(converge, o, "--seeds", "/seeds", "number of seeds");

  auto* cex = app.add_subcommand("counterexample", "trajectory family on its own orbit");
  number_flag(cex, o, "--window", "/window", "atoms materialized on each side");
  number_flag(cex, o, "--count", "/count", "family members");
  text_flag(cex, o, "--x0", "/x0", "starting point");
  number_flag(cex, o, "--m", "/m", "largest sample size");

  auto* iso = app.add_subcommand("isomorphism", "piecewise-translation straightening");
  list_flag(iso, o, "--sets", "/sets", "set sequence C_1, C_2, ...");
  bool_flag(iso, o, "--interleave", "/interleave", "interleave dyadic digit sets");
  number_flag(iso, o, "--doubling", "/doubling", "doubling-map stage to check");
  number_flag(iso, o, "--probe-order", "/probe_order", "probe grid order for the doubling check");
  number_flag(iso, o, "--probes", "/probes", "random probes for the measure check");

  auto* induced = app.add_subcommand("induced", "return times and the induced-frequency identity");
  text_flag(induced, o, "--A", "/A", "inducing set");
  text_flag(induced, o, "--C", "/C", "test set");
  number_flag(induced, o, "--hits", "/hits", "number of visits to A");
  number_flag(induced, o, "--m", "/m", "induced sample size");
  text_flag(induced, o, "--process", "/process/kind", "iid, rotation, doubling or markov");

  auto* graph = app.add_subcommand("graph-lift", "graph lifting and the two-term split");
  number_flag(graph, o, "--ramps", "/ramps", "number of ramp functions");
  number_flag(graph, o, "--m", "/m", "sample size");
  number_flag(graph, o, "--V", "/V", "graph-class dimension in the bound");
  number_flag(graph, o, "--seeds", "/seeds", "number of seeds");
  text_flag(graph, o, "--process", "/process/kind", "iid, rotation, doubling or markov");

  auto* suite = app.add_subcommand("suite", "run every acceptance experiment");
  list_flag(suite, o, "--criteria", "/criteria", "subset of criteria ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  const std::string subcommand = app.get_subcommands().front()->get_name();

  json config = json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    try {
      config = json::parse(in);
    } catch (const json::parse_error& e) {
      return fail(kExitConfig, "config error at /: " + std::string(e.what()));
    }
    if (!config.is_object()) return fail(kExitConfig, "config error at /: expected an object");
  }
  try {
    for (const auto& ov : o.overrides) {
      const json::json_pointer ptr(ov.pointer);
      if (ov.number) config[ptr] = *ov.number;
      else if (ov.text) config[ptr] = scalar(*ov.text);
      else if (ov.list) {
        json arr = json::array();
        for (const auto& item : *ov.list) {
          const json v = scalar(item);
          arr.push_back(v.is_number_unsigned() && ov.pointer == "/criteria" ? v : json(item));
        }
        config[ptr] = arr;
      } else if (ov.flag) config[ptr] = true;
    }
    for (const auto& s : o.sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos || s.empty() || s[0] != '/')
        return fail(kExitConfig, "--set expects /json/pointer=value, got '" + s + "'");
      config[json::json_pointer(s.substr(0, eq))] = scalar(s.substr(eq + 1));
    }
  } catch (const json::exception& e) {
    return fail(kExitConfig, "config error: " + std::string(e.what()));
  }
  if (o.out_dir.empty() && config.contains("output") && config["output"].is_object() &&
      config["output"].contains("dir") && config["output"]["dir"].is_string())
    o.out_dir = config["output"]["dir"].get<std::string>();

  ergvc_report* report = nullptr;
  const ergvc_status st = ergvc_run(subcommand.c_str(), config.dump().c_str(),
                                    ergvc_default_workers(), &report);
  if (st == ERGVC_ERR_CONFIG) {
    const std::string pointer = ergvc_last_error_pointer();
    std::string message = ergvc_last_error();
    if (message.rfind(pointer + ": ", 0) == 0) message.erase(0, pointer.size() + 2);
    return fail(kExitConfig, "config error at " + pointer + ": " + message);
  }
  if (st == ERGVC_ERR_RESOURCE) return fail(kExitResource, ergvc_last_error());
  if (st != ERGVC_OK) return fail(kExitFailure, ergvc_last_error());

  const int code = ergvc_report_exit_code(report);
  if (!o.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.out_dir, ec);
    auto write = [&](const std::string& name, const std::string& content) {
      std::ofstream out(std::filesystem::path(o.out_dir) / name, std::ios::binary);
      out << content;
      return static_cast<bool>(out);
    };
    bool ok = write("report.json", std::string(ergvc_report_json(report)) + "\n");
    for (size_t i = 0; i < ergvc_report_file_count(report); ++i)
      ok = write(ergvc_report_file_name(report, i), ergvc_report_file_content(report, i)) && ok;
    if (!ok) {
      ergvc_report_free(report);
      return fail(kExitFailure, "cannot write to " + o.out_dir);
    }
  }
  const std::string text = ergvc_report_text(report);
  if (o.print_json || text.empty()) std::cout << ergvc_report_json(report) << '\n';
  else std::cout << text;
  ergvc_report_free(report);
  return code == 0 ? kExitOk : kExitFailure;
}
