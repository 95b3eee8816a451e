#include "sldrep/report.hpp"

#include <sstream>

#include "sldrep/diagram.hpp"

namespace sldrep::report {

namespace {

Json verdict_json(const CheckVerdict& v) {
  return Json{{"pass", v.pass}, {"diagnostics", v.diagnostics}, {"notes", v.notes}};
}

Json obstruction_summary(std::int64_t b2) {
  if (b2 < 1) {
    return Json{{"psq", nullptr}, {"b2_mod4", 0}, {"verdict", "not applicable"},
                {"message", "no Hopf nodes: b2 = 0"}};
  }
  auto r = divisibility_obstruction(b2);
  return Json{{"psq", r.psq},
              {"b2_mod4", b2 % 4},
              {"verdict", r.pass ? "pass" : "fail"},
              {"message", r.message},
              {"hurewicz_flag", r.hurewicz_flag}};
}

/// Fills wellformed, b1, b2, components and obstructions. Returns false when
/// the diagram is malformed.
bool describe_structure(const SingularLinkDiagram& d, Json& out) {
  auto violations = d.validate();
  out["wellformed"] = violations.empty();
  for (const auto& v : violations) out["diagnostics"].push_back(v.kind + ": " + v.subject + ": " + v.message);
  if (!violations.empty()) return false;

  auto b2 = static_cast<std::int64_t>(d.hopf_count());
  out["b2"] = b2;
  out["components"] = components(d).blocks.size();
  try {
    out["b1"] = betti(d).b1;
  } catch (const ImmersedLinkError& e) {
    out["diagnostics"].push_back(std::string("b1: ") + e.what());
  }
  out["obstructions"] = obstruction_summary(b2);
  return true;
}

std::vector<std::string> hopf_ids(const SingularLinkDiagram& d) {
  std::vector<std::string> ids;
  for (const auto& n : d.nodes()) {
    if (n.kind == NodeKind::hopf) ids.push_back(n.id);
  }
  return ids;
}

Json decoration_json(const SingularLinkDiagram& d, const Decoration& dec) {
  Json out = Json::object();
  for (const auto& n : d.nodes()) {
    auto it = dec.find(n.id);
    if (it != dec.end()) out[n.id] = sld::spec_for(it->second).to_string();
  }
  return out;
}

}  // namespace

Json empty_report(const std::string& command) {
  return Json{{"command", command},     {"error", nullptr},  {"wellformed", nullptr},   {"b1", nullptr},
              {"b2", nullptr},          {"components", nullptr}, {"checks", nullptr}, {"obstructions", nullptr},
              {"search", nullptr},      {"bundle", nullptr}, {"canon", nullptr},        {"diagnostics", Json::array()}};
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> line, std::optional<std::size_t> column) {
  Json r = empty_report(command);
  Json err{{"kind", kind}, {"message", message}};
  if (line) err["line"] = *line;
  if (column) err["column"] = *column;
  r["error"] = err;
  r["diagnostics"].push_back(kind + ": " + message);
  return r;
}

Json check_report(const sld::SldDocument& doc, const SwOptions& sw) {
  Json r = empty_report("check");
  auto d = doc.diagram();
  if (!describe_structure(d, r)) return r;
  auto report = check_all(d, doc.decoration(), sw);
  r["checks"] = Json{{"genus0", verdict_json(report.genus0)},
                     {"selfint", verdict_json(report.selfint)},
                     {"relators", verdict_json(report.relators)},
                     {"sw", verdict_json(report.sw)}};
  const std::pair<const char*, const CheckVerdict*> named[] = {
      {"genus0", &report.genus0}, {"selfint", &report.selfint}, {"relators", &report.relators}, {"sw", &report.sw}};
  for (const auto& [name, v] : named) {
    for (const auto& msg : v->diagnostics) r["diagnostics"].push_back(std::string(name) + ": " + msg);
  }
  return r;
}

std::string SearchRequest::to_string(const sld::SldDocument& doc) const {
  std::ostringstream out;
  out << "group=" << sldrep::to_string(effective_group(doc, *this)) << ";dedup=" << sldrep::to_string(dedup)
      << ";involutions_only=" << involutions_only_on_hopfs << ";all_sw_paths=" << exhaustive_sw_paths;
  return out.str();
}

GroupName effective_group(const sld::SldDocument& doc, const SearchRequest& req) {
  if (req.group) return *req.group;
  return doc.group().value_or(GroupName::octahedral);
}

Json search_report(const sld::SldDocument& doc, const SearchRequest& req) {
  Json r = empty_report("search");
  auto d = doc.diagram();
  if (!describe_structure(d, r)) return r;

  auto opts = default_search_options(effective_group(doc, req));
  opts.dedup = req.dedup;
  opts.involutions_only_on_hopfs = req.involutions_only_on_hopfs;
  opts.exhaustive_sw_paths = req.exhaustive_sw_paths;
  opts.threads = req.threads;

  Json s{{"group", sldrep::to_string(opts.group->name())},
         {"group_order", opts.group->size()},
         {"dedup", sldrep::to_string(opts.dedup)},
         {"involutions_only_on_hopfs", opts.involutions_only_on_hopfs},
         {"exhaustive_sw_paths", opts.exhaustive_sw_paths},
         {"hopf_order", hopf_ids(d)},
         {"precondition_failure", nullptr},
         {"raw_solutions", 0},
         {"classes", 0},
         {"solutions", Json::array()}};

  auto result = enumerate_valid_decorations(d, opts);
  if (result.precondition_failure) {
    s["precondition_failure"] = *result.precondition_failure;
    r["diagnostics"].push_back("search: precondition failed: " + *result.precondition_failure);
  }
  s["raw_solutions"] = result.solutions.size();
  try {
    s["classes"] = count_classes(result.solutions, hopf_ids(d), opts);
  } catch (const NotAnInvolution& e) {
    s["classes"] = nullptr;
    r["diagnostics"].push_back(std::string("search: classes not computed: ") + e.what());
  }
  for (const auto& dec : result.solutions) s["solutions"].push_back(decoration_json(d, dec));
  if (result.solutions.empty() && !result.precondition_failure) {
    r["diagnostics"].push_back("search: no valid decoration over the " + sldrep::to_string(opts.group->name()) +
                               " group (this does not rule out SO(3) representations)");
  }
  r["search"] = std::move(s);
  return r;
}

Json obstruct_report(std::optional<std::int64_t> b2, const std::vector<std::int64_t>& summands) {
  Json r = empty_report("obstruct");
  ObstructionReport o;
  try {
    if (!summands.empty()) {
      o = connected_sum_obstruction(summands);
      if (b2 && *b2 != o.b2) {
        return error_report("obstruct", "usage", "--b2 " + std::to_string(*b2) + " disagrees with the summand total " +
                                                     std::to_string(o.b2));
      }
    } else if (b2) {
      o = divisibility_obstruction(*b2);
    } else {
      return error_report("obstruct", "usage", "give --b2 or --summands");
    }
  } catch (const std::invalid_argument& e) {
    return error_report("obstruct", "usage", e.what());
  }
  r["b2"] = o.b2;
  Json ob{{"psq", o.psq},
          {"b2_mod4", o.b2 % 4},
          {"divisibility_pass", o.divisibility_pass},
          {"summands", nullptr},
          {"verdict", o.pass ? "pass" : "fail"},
          {"message", o.message},
          {"hurewicz_flag", o.hurewicz_flag}};
  if (o.summand_verdicts) {
    ob["summands"] = Json::array();
    for (const auto& v : *o.summand_verdicts) ob["summands"].push_back(Json{{"b2", v.b2}, {"pass", v.pass}});
  }
  if (!o.pass) r["diagnostics"].push_back("obstruct: " + o.message);
  r["obstructions"] = std::move(ob);
  return r;
}

Json bundle_report(std::int64_t b1, std::int64_t b2, std::int64_t c2) {
  Json r = empty_report("bundle");
  BundleProfile p;
  try {
    p = bundle_profile(b1, b2, c2);
  } catch (const std::invalid_argument& e) {
    return error_report("bundle", "usage", e.what());
  }
  r["b1"] = b1;
  r["b2"] = b2;
  r["obstructions"] = obstruction_summary(b2);
  Json witness = nullptr;
  if (p.splitting_witness) witness = *p.splitting_witness;
  r["bundle"] = Json{{"b1", p.b1},
                     {"b2", p.b2},
                     {"c2", p.c2},
                     {"c1sq", p.c1sq},
                     {"p1", p.p1},
                     {"energy", format_rational(p.energy)},
                     {"compact", p.compact},
                     {"flat", p.flat},
                     {"irreducible_locked", p.irreducible_locked},
                     {"splitting_witness_prefix", witness},
                     {"expected_dimension", p.expected_dimension}};
  return r;
}

Json canon_report(const sld::SldDocument& doc) {
  Json r = empty_report("canon");
  auto d = doc.diagram();
  if (!describe_structure(d, r)) return r;
  auto ids = hopf_ids(d);
  auto dec = doc.decoration();
  Json c{{"hopf_order", ids}, {"key", nullptr}};
  std::vector<RotationElement> tuple;
  for (const auto& id : ids) {
    auto it = dec.find(id);
    if (it == dec.end()) {
      r["diagnostics"].push_back("canon: Hopf node '" + id + "' has no decoration");
      continue;
    }
    tuple.push_back(it->second);
  }
  if (tuple.size() == ids.size()) {
    try {
      c["key"] = canonical_class(tuple).to_string();
    } catch (const NotAnInvolution& e) {
      r["diagnostics"].push_back(std::string("canon: ") + e.what());
    }
  }
  r["canon"] = std::move(c);
  return r;
}

int exit_code(const Json& report) {
  if (!report.at("error").is_null()) return 2;
  const auto& command = report.at("command").get_ref<const std::string&>();
  if (command == "bundle") return 0;
  if (command == "obstruct") return report.at("obstructions").at("verdict") == "pass" ? 0 : 1;
  if (report.at("wellformed") != true) return 2;
  if (command == "check") {
    for (const auto& [name, v] : report.at("checks").items()) {
      if (v.at("pass") != true) return 1;
    }
    return 0;
  }
  if (command == "search") return report.at("search").at("raw_solutions").get<std::size_t>() > 0 ? 0 : 1;
  if (command == "canon") return report.at("canon").at("key").is_null() ? 1 : 0;
  return 2;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sldrep::report
