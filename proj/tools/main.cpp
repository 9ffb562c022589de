// siospec command line: config ingestion, command dispatch, report emission.
// Links only the C API of the shared library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "siospec.h"

namespace {

constexpr int kExitConfig = 64;

struct Options {
  std::string config_path;
  bool verify = false;
  int sweep_samples = 0;
  double tol = 0.0;
  long long seed = -1;
  std::string svg_path;
  std::string csv_path;
};

std::string read_config(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// CLI flags fold into the config document so the library stays config-driven.
std::string apply_overrides(const std::string& text, const Options& opt) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception&) {
    return text;  // let the library report the malformed document
  }
  if (opt.sweep_samples > 0) j["sweep"]["mu_samples"] = opt.sweep_samples;
  if (opt.tol > 0.0) j["sweep"]["tol"] = opt.tol;
  if (opt.seed >= 0) j["seed"] = opt.seed;
  return j.dump();
}

class Handle {
 public:
  explicit Handle(const std::string& config) {
    const int rc = siospec_analysis_create(config.c_str(), &a_);
    if (rc != SIOSPEC_OK) {
      fprintf(stderr, "siospec: %s\n", siospec_last_error());
      std::exit(rc == SIOSPEC_ERR_CONFIG || rc == SIOSPEC_ERR_INVALID_ARGUMENT ? kExitConfig
                                                                               : rc);
    }
  }
  ~Handle() { siospec_analysis_destroy(a_); }
  siospec_analysis* get() { return a_; }

 private:
  siospec_analysis* a_ = nullptr;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  siospec_string_free(s);
  return out;
}

int run_or_exit(int rc) {
  if (rc != SIOSPEC_OK) {
    fprintf(stderr, "siospec: %s\n", siospec_last_error());
    if (rc == SIOSPEC_ERR_CONFIG || rc == SIOSPEC_ERR_INVALID_ARGUMENT) return kExitConfig;
    return rc;
  }
  return 0;
}

bool write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << data;
  return bool(out);
}

int merged_exit(const std::string& report, bool verify) {
  const int e = siospec_report_exit(report.c_str());
  if (verify) {
    // verify sections set exit to 1 on disagreement; nothing extra to do
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fredholm analysis of singular integral operators on weighted Nakano spaces"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", opt.config_path, "config JSON file ('-' for stdin)")->required();
    cmd->add_flag("--verify", opt.verify, "run oracle cross-checks");
    cmd->add_option("--sweep-samples", opt.sweep_samples, "spiral samples per jump fibre");
    cmd->add_option("--tol", opt.tol, "determinant sweep tolerance");
    cmd->add_option("--seed", opt.seed, "seed for randomized verification");
    cmd->add_option("--svg", opt.svg_path, "write an SVG plot to this path");
    cmd->add_option("--csv", opt.csv_path, "write the CSV point cloud to this path");
  };

  auto* cmd_bounded = app.add_subcommand("check-bounded", "boundedness of S on the weighted space");
  auto* cmd_fredholm = app.add_subcommand("fredholm", "Fredholm verdict for the expression");
  auto* cmd_spectrum = app.add_subcommand("spectrum", "essential spectrum point cloud");
  auto* cmd_index = app.add_subcommand("index", "index of a scalar a*P + Q");
  for (auto* c : {cmd_bounded, cmd_fredholm, cmd_spectrum, cmd_index}) add_common(c);

  CLI11_PARSE(app, argc, argv);

  std::string config;
  try {
    config = read_config(opt.config_path);
  } catch (const std::exception& e) {
    fprintf(stderr, "siospec: %s\n", e.what());
    return kExitConfig;
  }
  config = apply_overrides(config, opt);
  Handle handle(config);

  char* out = nullptr;
  if (cmd_bounded->parsed()) {
    if (int rc = run_or_exit(siospec_check_bounded(handle.get(), &out))) return rc;
    const std::string report = take(out);
    fputs(report.c_str(), stdout);
    return merged_exit(report, false);
  }

  if (cmd_fredholm->parsed()) {
    if (int rc = run_or_exit(siospec_fredholm(handle.get(), opt.verify, &out))) return rc;
    const std::string report = take(out);
    fputs(report.c_str(), stdout);
    return merged_exit(report, opt.verify);
  }

  if (cmd_index->parsed()) {
    if (int rc = run_or_exit(siospec_index(handle.get(), opt.verify, &out))) return rc;
    const std::string report = take(out);
    fputs(report.c_str(), stdout);
    return merged_exit(report, opt.verify);
  }

  if (cmd_spectrum->parsed()) {
    if (int rc = run_or_exit(siospec_spectrum_csv(handle.get(), &out))) return rc;
    const std::string csv = take(out);
    if (!opt.csv_path.empty()) {
      if (!write_file(opt.csv_path, csv)) {
        fprintf(stderr, "siospec: cannot write %s\n", opt.csv_path.c_str());
        return 1;
      }
    } else {
      fputs(csv.c_str(), stdout);
    }
    if (!opt.svg_path.empty()) {
      if (int rc = run_or_exit(siospec_spectrum_svg(handle.get(), &out))) return rc;
      const std::string svg = take(out);
      if (!write_file(opt.svg_path, svg)) {
        fprintf(stderr, "siospec: cannot write %s\n", opt.svg_path.c_str());
        return 1;
      }
    }
    if (opt.verify) {
      if (int rc = run_or_exit(siospec_verify(handle.get(), &out))) return rc;
      const std::string v = take(out);
      fputs(v.c_str(), stderr);
      if (v.find("\"pass\": true") == std::string::npos) return 1;
    }
    return 0;
  }

  return kExitConfig;
}
