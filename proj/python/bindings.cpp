#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sldrep/cli.hpp"
#include "sldrep/report.hpp"
#include "sldrep/rotations.hpp"
#include "sldrep/sld_format.hpp"

namespace py = pybind11;
using namespace sldrep;

namespace {

sld::SldDocument parse_or_raise(const std::string& text) {
  try {
    return sld::parse(text);
  } catch (const sld::ParseError& e) {
    throw py::value_error(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_sldrep, m) {
  m.doc() = "Exact checks, decoration search and obstructions for decorated singular link diagrams.";

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool; returns (exit_code, stdout, stderr).");

  m.def("canonicalize", [](const std::string& text) { return sld::serialize(parse_or_raise(text)); },
        py::arg("text"), "Canonical .sld text; raises ValueError on a parse error.");

  m.def("check_json",
        [](const std::string& text, bool all_sw_paths) {
          SwOptions sw;
          sw.exhaustive_paths = all_sw_paths;
          return report::check_report(parse_or_raise(text), sw).dump();
        },
        py::arg("text"), py::arg("all_sw_paths") = false);

  m.def(
      "search_json",
      [](const std::string& text, const std::string& group, const std::string& dedup, bool allow_any_hopf,
         unsigned threads) {
        report::SearchRequest req;
        if (!group.empty()) {
          req.group = parse_group_name(group);
          if (!req.group) throw py::value_error("unknown group '" + group + "'");
        }
        auto mode = parse_dedup_mode(dedup);
        if (!mode) throw py::value_error("unknown dedup mode '" + dedup + "'");
        req.dedup = *mode;
        req.involutions_only_on_hopfs = !allow_any_hopf;
        req.threads = threads;
        py::gil_scoped_release release;
        return report::search_report(parse_or_raise(text), req).dump();
      },
      py::arg("text"), py::arg("group") = "", py::arg("dedup") = "so3_canonical", py::arg("allow_any_hopf") = false,
      py::arg("threads") = 1);

  m.def(
      "obstruct_json",
      [](std::optional<std::int64_t> b2, const std::vector<std::int64_t>& summands) {
        return report::obstruct_report(b2, summands).dump();
      },
      py::arg("b2") = py::none(), py::arg("summands") = std::vector<std::int64_t>{});

  m.def("bundle_json", [](std::int64_t b1, std::int64_t b2, std::int64_t c2) {
    return report::bundle_report(b1, b2, c2).dump();
  }, py::arg("b1"), py::arg("b2"), py::arg("c2"));

  m.def("canon_json", [](const std::string& text) { return report::canon_report(parse_or_raise(text)).dump(); },
        py::arg("text"));

  m.def("exit_code", [](const std::string& report_json) {
    return report::exit_code(report::Json::parse(report_json));
  }, py::arg("report_json"));

  m.def(
      "perm_matrix",
      [](const std::string& cycles) {
        auto g = rot(cycles);
        std::vector<std::string> entries;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) entries.push_back(g.matrix()(i, j).to_string());
        }
        return entries;
      },
      py::arg("cycles"), "Row-major entries of the cube rotation of a permutation of the diagonals.");

  m.def("group_order", [](const std::string& name) {
    auto g = parse_group_name(name);
    if (!g || *g == GroupName::custom) throw py::value_error("unknown group '" + name + "'");
    return FiniteRotationGroup::preset(*g).size();
  }, py::arg("name"));
}
