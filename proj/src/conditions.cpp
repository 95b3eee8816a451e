#include "sldrep/conditions.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace sldrep {

namespace {

const RotationElement& lookup(const Decoration& dec, const std::string& node) {
  auto it = dec.find(node);
  if (it == dec.end()) throw UndecoratedNode(node);
  return it->second;
}

std::string describe(const RotationElement& g) {
  if (auto p = rotation_to_perm(g)) return "perm " + p->to_string();
  return "matrix " + g.matrix().to_string();
}

}  // namespace

std::vector<std::string> undecorated_nodes(const SingularLinkDiagram& d, const Decoration& dec) {
  std::vector<std::string> out;
  for (const auto& n : d.nodes())
    if (!dec.contains(n.id)) out.push_back(n.id);
  return out;
}

RotationElement holonomy_word(const ArcBand& arc, const Decoration& dec) {
  RotationElement c;
  for (const auto& x : arc.word) c = c * power_sign(lookup(dec, x.disc.node), x.sign);
  return c;
}

CheckVerdict check_relators(const SingularLinkDiagram& d, const Decoration& dec) {
  CheckVerdict v{true, {}, {}};
  for (const auto& a : d.arcs()) {
    const RotationElement& g = lookup(dec, a.start.circle.node);
    const RotationElement& h = lookup(dec, a.end.circle.node);
    RotationElement expected = conjugate(holonomy_word(a, dec), g);
    if (expected != h) {
      v.pass = false;
      v.diagnostics.push_back("arc " + a.id + ": end decoration " + describe(h) + " differs from C(A) g C(A)^-1 = " +
                              describe(expected));
    }
  }
  return v;
}

CheckVerdict check_selfint(const SingularLinkDiagram& d) {
  CheckVerdict v{true, {}, {}};
  ComponentPartition p = components(d);
  for (const auto& n : d.nodes()) {
    if (n.kind != NodeKind::hopf) continue;
    if (p.block_of[*d.circle_index({n.id, 'a'})] != p.block_of[*d.circle_index({n.id, 'b'})]) {
      v.pass = false;
      v.diagnostics.push_back("hopf " + n.id + ": members a and b lie in different components");
    }
  }
  return v;
}

CheckVerdict check_genus0(const SingularLinkDiagram& d) {
  CheckVerdict v{true, {}, {}};
  for (const auto& g : ribbon_genus(d)) {
    if (g.genus != 0) {
      v.pass = false;
      v.diagnostics.push_back("component " + std::to_string(g.component) + " has genus " + std::to_string(g.genus) +
                              " (V=" + std::to_string(g.vertices) + ", E=" + std::to_string(g.edges) +
                              ", F=" + std::to_string(g.faces) + ")");
    }
  }
  auto triples = triple_order_violations(d);
  if (triples.empty()) {
    v.notes.push_back("triple-order cross-check: pass");
  }
  for (const auto& t : triples) {
    v.notes.push_back("triple-order cross-check: arcs " + t.arcs[0] + "," + t.arcs[1] + "," + t.arcs[2] +
                      " keep the same cyclic order on " + t.first_circle + " and " + t.second_circle);
  }
  if (!triples.empty() && v.pass) {
    v.notes.push_back("triple-order cross-check disagrees with ribbon genus 0");
  }
  return v;
}

namespace {

struct Incidence {
  std::size_t arc;
  bool forward;
  std::size_t other;
};

std::vector<std::vector<Incidence>> incidence(const SingularLinkDiagram& d) {
  std::vector<std::vector<Incidence>> adj(d.circle_count());
  const auto& arcs = d.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    std::size_t s = *d.circle_index(arcs[k].start.circle);
    std::size_t e = *d.circle_index(arcs[k].end.circle);
    if (s == e) continue;
    adj[s].push_back({k, true, e});
    adj[e].push_back({k, false, s});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) { return x.arc < y.arc; });
  }
  return adj;
}

std::pair<std::size_t, std::size_t> hopf_circles(const SingularLinkDiagram& d, const std::string& hopf) {
  auto a = d.circle_index({hopf, 'a'});
  auto b = d.circle_index({hopf, 'b'});
  if (!a || !b) throw std::invalid_argument("'" + hopf + "' is not a Hopf node");
  return {*a, *b};
}

}  // namespace

std::optional<std::vector<PathStep>> shortest_hopf_path(const SingularLinkDiagram& d, const std::string& hopf) {
  auto [from, to] = hopf_circles(d, hopf);
  auto adj = incidence(d);
  std::vector<std::optional<Incidence>> via(d.circle_count());
  std::vector<char> seen(d.circle_count(), 0);
  std::deque<std::size_t> queue{from};
  seen[from] = 1;
  while (!queue.empty() && !seen[to]) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (const auto& inc : adj[c]) {
      if (seen[inc.other]) continue;
      seen[inc.other] = 1;
      via[inc.other] = Incidence{inc.arc, inc.forward, c};
      queue.push_back(inc.other);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<PathStep> path;
  for (std::size_t c = to; c != from; c = via[c]->other) path.push_back({via[c]->arc, via[c]->forward});
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<PathStep>> all_hopf_paths(const SingularLinkDiagram& d, const std::string& hopf,
                                                  std::size_t limit) {
  auto [from, to] = hopf_circles(d, hopf);
  auto adj = incidence(d);
  std::vector<std::vector<PathStep>> out;
  std::vector<PathStep> current;
  std::vector<char> on_path(d.circle_count(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (out.size() >= limit) return;
    if (c == to) {
      out.push_back(current);
      return;
    }
    on_path[c] = 1;
    for (const auto& inc : adj[c]) {
      if (on_path[inc.other]) continue;
      current.push_back({inc.arc, inc.forward});
      walk(inc.other);
      current.pop_back();
    }
    on_path[c] = 0;
  };
  walk(from);
  return out;
}

RotationElement path_holonomy(const SingularLinkDiagram& d, const std::vector<PathStep>& path,
                              const Decoration& dec) {
  RotationElement p;
  for (const auto& step : path) {
    RotationElement c = holonomy_word(d.arcs()[step.arc], dec);
    p = power_sign(c, step.forward ? 1 : -1) * p;
  }
  return p;
}

namespace {

std::string path_string(const SingularLinkDiagram& d, const std::vector<PathStep>& path) {
  std::string s;
  for (const auto& step : path) {
    if (!s.empty()) s += ' ';
    s += (step.forward ? "" : "~") + d.arcs()[step.arc].id;
  }
  return s.empty() ? "(empty)" : s;
}

}  // namespace

CheckVerdict check_sw(const SingularLinkDiagram& d, const Decoration& dec, const SwOptions& opts) {
  CheckVerdict v{true, {}, {}};
  for (const auto& n : d.nodes()) {
    if (n.kind != NodeKind::hopf) continue;
    const RotationElement& g = lookup(dec, n.id);
    if (!is_involution(g)) {
      v.pass = false;
      v.diagnostics.push_back("hopf " + n.id + ": decoration " + describe(g) + " is not a rotation by pi");
      continue;
    }
    std::vector<std::vector<PathStep>> paths;
    if (opts.exhaustive_paths) {
      paths = all_hopf_paths(d, n.id, opts.path_limit);
      if (paths.size() >= opts.path_limit) {
        v.notes.push_back("hopf " + n.id + ": path enumeration stopped at " + std::to_string(opts.path_limit));
      }
    } else if (auto p = shortest_hopf_path(d, n.id)) {
      paths.push_back(std::move(*p));
    }
    if (paths.empty()) throw MissingHopfPath(n.id);

    std::size_t passing = 0;
    for (const auto& path : paths) {
      RotationElement prod = path_holonomy(d, path, dec);
      if (prod * g != g * prod) {
        v.diagnostics.push_back("internal inconsistency: hopf " + n.id + " path " + path_string(d, path) +
                                " product does not commute with the decoration");
      }
      if (prod.is_identity() || prod == g) {
        v.diagnostics.push_back("hopf " + n.id + ": path " + path_string(d, path) + " product " + describe(prod) +
                                (prod.is_identity() ? " is the identity" : " equals the Hopf decoration"));
      } else {
        ++passing;
      }
    }
    if (passing != paths.size()) v.pass = false;
    if (passing != 0 && passing != paths.size()) {
      v.diagnostics.push_back("hopf " + n.id + ": path-dependent verdict (" + std::to_string(passing) + " of " +
                              std::to_string(paths.size()) + " paths pass)");
    }
  }
  return v;
}

ConditionReport check_all(const SingularLinkDiagram& d, const Decoration& dec, const SwOptions& opts) {
  ConditionReport r;
  try {
    r.genus0 = check_genus0(d);
  } catch (const NonOrientableBand& e) {
    r.genus0 = {false, {e.what()}, {}};
  }
  r.selfint = check_selfint(d);
  auto missing = undecorated_nodes(d, dec);
  if (!missing.empty()) {
    std::string msg = "decoration is not total; undecorated:";
    for (const auto& m : missing) msg += " " + m;
    r.relators = {false, {msg}, {}};
    r.sw = {false, {msg}, {}};
    return r;
  }
  r.relators = check_relators(d, dec);
  if (!r.selfint.pass) {
    r.sw = {false, {"skipped: selfint precondition failed"}, {}};
  } else {
    r.sw = check_sw(d, dec, opts);
  }
  return r;
}

std::string GroupPresentation::relator_string(const Relator& r) const {
  std::string s;
  for (const auto& l : r.word) {
    if (!s.empty()) s += ' ';
    s += generators[l.generator];
    if (l.exponent < 0) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

GroupPresentation extract_presentation(const SingularLinkDiagram& d) {
  auto v = d.validate();
  if (!v.empty()) throw MalformedDiagram("diagram is not well-formed: " + v.front().message);
  GroupPresentation p;
  for (const auto& n : d.nodes()) p.generators.push_back(n.id);
  auto gen = [&](const CircleRef& c) { return *d.node_index(c.node); };
  for (const auto& a : d.arcs()) {
    Relator r{a.id, {}};
    r.word.push_back({gen(a.end.circle), -1});
    for (const auto& x : a.word) r.word.push_back({gen(x.disc), x.sign});
    r.word.push_back({gen(a.start.circle), 1});
    for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) r.word.push_back({gen(it->disc), -it->sign});
    p.relators.push_back(std::move(r));
  }
  return p;
}

bool evaluate_representation(const GroupPresentation& p, const Decoration& dec) {
  std::vector<const RotationElement*> images;
  for (const auto& g : p.generators) images.push_back(&lookup(dec, g));
  for (const auto& r : p.relators) {
    RotationElement acc;
    for (const auto& l : r.word) acc = acc * power_sign(*images[l.generator], l.exponent);
    if (!acc.is_identity()) return false;
  }
  return true;
}

}  // namespace sldrep
