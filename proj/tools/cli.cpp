#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "skewtab/exact_count.hpp"
#include "skewtab/lattice.hpp"
#include "skewtab/shapes.hpp"

#ifndef SKEWTAB_VERSION
#define SKEWTAB_VERSION "0.0.0"
#endif

namespace skewtab::cli {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 15];
  return s;
}

namespace {

using nlohmann::json;

void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (flag < 0) throw InvalidArgument("--threads must be positive");
  if (const char* env = std::getenv("SKEWTAB_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw InvalidArgument("SKEWTAB_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  return 1;
}

json flag_set(const CLI::App& app) {
  json flags = json::object();
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_name();
    if (name == "--help" || name.empty()) continue;
    if (opt->count() > 0) {
      const auto& r = opt->results();
      std::string v;
      for (std::size_t i = 0; i < r.size(); ++i) v += (i ? "," : "") + r[i];
      flags[name] = v;
    } else {
      flags[name] = opt->get_default_str();
    }
  }
  return flags;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();

  CLI::App app{"Exact counts, random tilings and limit-shape constants for skew Young tableaux", "skewtab"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string manifest_path;
  int threads_flag = 0;
  app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");
  app.add_option("--threads", threads_flag, "Worker threads (default: SKEWTAB_THREADS or 1)");

  CountOpts count;
  auto* c = app.add_subcommand("count", "Number of standard Young tableaux of a skew shape");
  c->add_option("--shape", count.shape, "Shape JSON")->required();
  c->add_option("--method", count.method, "Counting method")
      ->check(CLI::IsMember({"hlf", "det", "brute", "nhlf", "auto"}));

  NhlfOpts nhlf;
  auto* nh = app.add_subcommand("nhlf", "Excited-diagram hook sum, optionally with capped weights");
  nh->add_option("--shape", nhlf.shape, "Shape JSON")->required();
  nh->add_option("--epsilon", nhlf.epsilon, "Cap for the scaled hook weights")->check(CLI::Range(0.0, 1.0));
  nh->add_option("--emit-terms", nhlf.emit_terms, "CSV of per-tiling log-weights");

  EnumerateOpts en;
  auto* e = app.add_subcommand("enumerate", "List every lozenge tiling as JSON");
  e->add_option("--shape", en.shape, "Shape JSON")->required();
  e->add_option("--limit", en.limit, "Refuse shapes with more tilings")->check(CLI::PositiveNumber);
  e->add_option("--out", en.out, "Output path, - for stdout");

  SampleOpts sa;
  auto* s = app.add_subcommand("sample", "Metropolis sampling of tilings");
  s->add_option("--shape", sa.shape, "Shape JSON")->required();
  s->add_option("--weights", sa.weights, "Weight field")->check(CLI::IsMember({"uniform", "hook"}));
  s->add_option("--n", sa.n, "Number of samples");
  s->add_option("--burn", sa.burn, "Burn-in steps (0: 20|V|^2)");
  s->add_option("--thin", sa.thin, "Steps between samples (0: |V|)");
  s->add_option("--seed", sa.seed, "RNG seed");
  s->add_option("--out-density", sa.out_density, "Density CSV");
  s->add_option("--out-svg", sa.out_svg, "Density SVG");

  SolveOpts so;
  auto add_solve_flags = [&](CLI::App* sub) {
    sub->add_option("--profile", so.profile, "Profile JSON")->required();
    sub->add_option("--mesh", so.mesh, "Mesh resolution")->check(CLI::Range(2, 4096));
    sub->add_option("--epsilon", so.epsilon, "Hook cap")->check(CLI::Range(1e-12, 1.0));
    sub->add_option("--tol", so.tol, "Optimizer tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--restarts", so.restarts, "Extra random feasible starts")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", so.seed, "Seed for restarts");
  };
  auto* sv = app.add_subcommand("solve", "Maximize the variational functional on a mesh");
  add_solve_flags(sv);
  sv->add_option("--out-profile", so.out_profile, "Maximizer CSV");
  sv->add_option("--out-constant", so.out_constant, "Constant report, - for stdout");
  auto* cs = app.add_subcommand("constant", "Limit constant with its error budget");
  add_solve_flags(cs);

  RenderOpts re;
  auto* r = app.add_subcommand("render", "SVG of a tiling");
  r->add_option("--shape", re.shape, "Shape JSON")->required();
  r->add_option("--which", re.which, "Extremal tiling")->check(CLI::IsMember({"lowest", "highest"}));
  r->add_option("--tiling", re.tiling, "Tiling JSON (single or enumerate output)");
  r->add_option("--index", re.index, "Entry of an enumerate list");
  r->add_flag("--labels", re.labels, "Print heights at vertices");
  r->add_option("--scale", re.scale, "Pixels per lattice unit")->check(CLI::PositiveNumber);
  r->add_option("--out", re.out, "Output path, - for stdout");

  ReproOpts rp;
  auto* p = app.add_subcommand("repro", "Named reproduction pipelines");
  p->add_option("--target", rp.target, "Pipeline")
      ->required()
      ->check(CLI::IsMember({"example", "thick-hook", "ribbons", "hexagon", "capping"}));
  p->add_option("--mesh", rp.mesh, "Mesh resolution")->check(CLI::Range(2, 4096));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << SKEWTAB_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& ex) {
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    error_line(err, "usage", ex.what());
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Context ctx;
  int code = 0;
  try {
    ctx.threads = resolve_threads(threads_flag);
    if (name == "count") run_count(count, ctx);
    else if (name == "nhlf") run_nhlf(nhlf, ctx);
    else if (name == "enumerate") run_enumerate(en, ctx);
    else if (name == "sample") run_sample(sa, ctx);
    else if (name == "solve") run_solve(so, ctx);
    else if (name == "constant") run_constant(so, ctx);
    else if (name == "render") run_render(re, ctx);
    else run_repro(rp, ctx);
  } catch (const ResourceGuard& ex) {
    error_line(err, "resource_guard", ex.what());
    code = 3;
  } catch (const std::invalid_argument& ex) {
    error_line(err, "validation", ex.what());
    code = 2;
  } catch (const std::out_of_range& ex) {
    error_line(err, "validation", ex.what());
    code = 2;
  } catch (const InvalidHeight& ex) {
    error_line(err, "validation", ex.what());
    code = 2;
  } catch (const ExtensionError& ex) {
    error_line(err, "validation", ex.what());
    code = 2;
  } catch (const std::exception& ex) {
    error_line(err, "internal", ex.what());
    code = 1;
  }

  const std::string stdout_text = ctx.out.str();
  if (code == 0) {
    out << stdout_text;
    ctx.outputs["stdout"] = hex64(fnv1a64(stdout_text));
  }
  json flags = flag_set(*sub);
  flags["--threads"] = std::to_string(ctx.threads);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const json manifest{{"subcommand", name},   {"flags", flags},         {"seeds", ctx.seeds},
                      {"version", SKEWTAB_VERSION}, {"wall_time_s", wall}, {"outputs", ctx.outputs},
                      {"exit_code", code}};
  if (manifest_path.empty()) {
    err << json{{"manifest", manifest}}.dump() << '\n';
  } else {
    std::ofstream f(manifest_path);
    if (f) {
      f << manifest.dump(2) << '\n';
    } else {
      error_line(err, "validation", "cannot write " + manifest_path);
      if (code == 0) code = 2;
    }
  }
  return code;
}

}  // namespace skewtab::cli
