#include "sldrep/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sldrep/report.hpp"

namespace sldrep::cli {

namespace {

using report::Json;

struct Args {
  std::string file;
  bool all_sw_paths = false;
  std::string group;
  std::string dedup = "so3_canonical";
  bool allow_any_hopf = false;
  unsigned threads = 1;
  std::string cache_dir;
  std::optional<std::int64_t> b2;
  std::vector<std::int64_t> summands;
  std::int64_t b1 = 0;
  std::int64_t c2 = 0;
};

std::optional<Json> read_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const Json::parse_error&) {
    return std::nullopt;
  }
}

void write_cache(const std::filesystem::path& path, const Json& r) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream(path) << r.dump(2) << '\n';
}

Json run_search(const sld::SldDocument& doc, const report::SearchRequest& req, const std::string& cache_dir) {
  if (cache_dir.empty()) return report::search_report(doc, req);
  std::string key_text = sld::serialize(sld::make_document(doc.diagram())) + req.to_string(doc);
  auto path = std::filesystem::path(cache_dir) / ("search-" + report::fnv1a_hex(key_text) + ".json");
  if (auto cached = read_cache(path)) return *cached;
  Json r = report::search_report(doc, req);
  if (r["error"].is_null()) write_cache(path, r);
  return r;
}

Json dispatch(const std::string& command, const Args& a) {
  if (command == "obstruct") return report::obstruct_report(a.b2, a.summands);
  if (command == "bundle") return report::bundle_report(a.b1, a.b2.value_or(0), a.c2);

  sld::SldDocument doc;
  try {
    doc = sld::load_file(a.file);
  } catch (const sld::ParseError& e) {
    return report::error_report(command, "parse", e.message(), e.line(), e.column());
  } catch (const std::runtime_error& e) {
    return report::error_report(command, "io", e.what());
  }
  SwOptions sw;
  sw.exhaustive_paths = a.all_sw_paths;
  if (command == "check") return report::check_report(doc, sw);
  if (command == "canon") return report::canon_report(doc);

  report::SearchRequest req;
  if (!a.group.empty()) {
    req.group = parse_group_name(a.group);
    if (!req.group || *req.group == GroupName::custom) {
      return report::error_report(command, "usage", "unknown group '" + a.group + "'");
    }
  }
  auto dedup = parse_dedup_mode(a.dedup);
  if (!dedup) return report::error_report(command, "usage", "unknown dedup mode '" + a.dedup + "'");
  req.dedup = *dedup;
  req.involutions_only_on_hopfs = !a.allow_any_hopf;
  req.exhaustive_sw_paths = a.all_sw_paths;
  req.threads = a.threads;
  return run_search(doc, req, a.cache_dir);
}

int emit(const Json& r, std::ostream& out, std::ostream& err) {
  out << r.dump(2) << '\n';
  for (const auto& d : r["diagnostics"]) {
    err << Json{{"command", r["command"]}, {"diagnostic", d}}.dump() << '\n';
  }
  return report::exit_code(r);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decorated singular link diagrams: certificate checks, decoration search and obstructions", "sldrep"};
  app.require_subcommand(1);
  Args a;

  auto* check = app.add_subcommand("check", "run the four certificate checks on a decorated diagram");
  check->add_option("FILE", a.file, ".sld file")->required();
  check->add_flag("--all-sw-paths", a.all_sw_paths, "evaluate the Stiefel-Whitney product on every simple path");

  auto* search = app.add_subcommand("search", "enumerate valid decorations over a finite rotation group");
  search->add_option("FILE", a.file, ".sld file")->required();
  search->add_option("--group", a.group, "tetrahedral, octahedral or icosahedral (default: file, else octahedral)");
  search->add_option("--dedup", a.dedup, "none, group_conjugacy or so3_canonical");
  search->add_flag("--all-sw-paths", a.all_sw_paths, "evaluate the Stiefel-Whitney product on every simple path");
  search->add_flag("--allow-any-hopf", a.allow_any_hopf, "do not restrict Hopf labels to involutions");
  search->add_option("--threads", a.threads, "worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--cache-dir", a.cache_dir, "directory for cached search reports");

  auto* obstruct = app.add_subcommand("obstruct", "mod-4 divisibility obstruction");
  obstruct->add_option("--b2", a.b2, "second Betti number");
  obstruct->add_option("--summands", a.summands, "b2 of each connected summand")->delimiter(',');

  auto* bundle = app.add_subcommand("bundle", "characteristic numbers of the rank-2 bundle");
  bundle->add_option("--b1", a.b1, "first Betti number")->required();
  bundle->add_option("--b2", a.b2, "second Betti number")->required();
  bundle->add_option("--c2", a.c2, "second Chern class")->required();

  auto* canon = app.add_subcommand("canon", "canonical conjugacy key of the decorated Hopf tuple");
  canon->add_option("FILE", a.file, ".sld file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    return emit(report::error_report(command, "usage", e.what()), out, err);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return emit(dispatch(command, a), out, err);
  } catch (const std::exception& e) {
    return emit(report::error_report(command, "internal", e.what()), out, err);
  }
}

}  // namespace sldrep::cli
