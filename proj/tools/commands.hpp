#pragma once

// Subcommand bodies. Each writes its stdout payload and files through the
// context so that the manifest can hash every output.

#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

namespace skewtab::cli {

struct Context {
  std::ostringstream out;
  nlohmann::json outputs = nlohmann::json::object();
  nlohmann::json seeds = nlohmann::json::array();
  int threads = 1;

  /// "-" or empty writes to stdout.
  void emit(const std::string& path, const std::string& content);
};

struct CountOpts {
  std::string shape;
  std::string method = "auto";
};

struct NhlfOpts {
  std::string shape;
  double epsilon = 0.0;  // 0: no capping report
  std::string emit_terms;
};

struct EnumerateOpts {
  std::string shape;
  long long limit = 100000;
  std::string out = "-";
};

struct SampleOpts {
  std::string shape;
  std::string weights = "uniform";
  std::uint64_t n = 100;
  std::uint64_t burn = 0;  // 0: 20 |V|^2
  std::uint64_t thin = 0;  // 0: |V|
  std::uint64_t seed = 1;
  std::string out_density;
  std::string out_svg;
};

struct SolveOpts {
  std::string profile;
  int mesh = 64;
  double epsilon = 0.05;
  double tol = 1e-6;
  int restarts = 0;
  std::uint64_t seed = 1;
  std::string out_profile;
  std::string out_constant;
};

struct RenderOpts {
  std::string shape;
  std::string which = "lowest";
  std::string tiling;  // JSON produced by enumerate
  long long index = 0;
  bool labels = false;
  double scale = 24.0;
  std::string out = "-";
};

struct ReproOpts {
  std::string target;
  int mesh = 64;
};

void run_count(const CountOpts& o, Context& ctx);
void run_nhlf(const NhlfOpts& o, Context& ctx);
void run_enumerate(const EnumerateOpts& o, Context& ctx);
void run_sample(const SampleOpts& o, Context& ctx);
void run_solve(const SolveOpts& o, Context& ctx);
void run_constant(const SolveOpts& o, Context& ctx);
void run_render(const RenderOpts& o, Context& ctx);
void run_repro(const ReproOpts& o, Context& ctx);

}  // namespace skewtab::cli
