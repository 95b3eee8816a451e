#include "sldrep/search.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <set>
#include <sstream>

namespace sldrep {

std::string to_string(DedupMode mode) {
  switch (mode) {
    case DedupMode::none:
      return "none";
    case DedupMode::group_conjugacy:
      return "group_conjugacy";
    case DedupMode::so3_canonical:
      return "so3_canonical";
  }
  return "none";
}

std::optional<DedupMode> parse_dedup_mode(std::string_view text) {
  if (text == "none") return DedupMode::none;
  if (text == "group_conjugacy") return DedupMode::group_conjugacy;
  if (text == "so3_canonical") return DedupMode::so3_canonical;
  return std::nullopt;
}

SearchOptions default_search_options(GroupName group) {
  SearchOptions opts;
  opts.group = std::make_shared<const FiniteRotationGroup>(FiniteRotationGroup::preset(group));
  return opts;
}

namespace {

struct IndexedArc {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::pair<std::size_t, int>> word;  // (node, sign)
};

struct IndexedStep {
  std::size_t arc = 0;
  int sign = 1;
};

struct HopfConstraint {
  std::size_t node = 0;
  std::vector<std::vector<IndexedStep>> paths;
};

// Static description of the constraint problem, shared by all workers.
struct Problem {
  const FiniteRotationGroup* group = nullptr;
  std::vector<IndexedArc> arcs;
  std::vector<char> hopf;
  std::vector<std::vector<std::size_t>> domain;
  std::vector<std::size_t> order;
  std::vector<HopfConstraint> hopfs;
};

using Assignment = std::vector<std::ptrdiff_t>;

class Worker {
 public:
  explicit Worker(const Problem& p) : p_(p), assign_(p.domain.size(), -1) {}

  // Explores the subtree where order[0] (if any) takes `first_value`.
  void run(std::optional<std::size_t> first_value) {
    if (p_.order.empty()) {
      descend();
      return;
    }
    if (first_value) {
      std::size_t mark = trail_.size();
      set(p_.order.front(), *first_value);
      descend();
      undo(mark);
    } else {
      descend();
    }
  }

  std::vector<std::vector<std::size_t>> solutions;
  std::size_t visited = 0;

 private:
  void set(std::size_t node, std::size_t value) {
    assign_[node] = static_cast<std::ptrdiff_t>(value);
    trail_.push_back(node);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      assign_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  bool allowed(std::size_t node, std::size_t value) const {
    const auto& dom = p_.domain[node];
    return std::binary_search(dom.begin(), dom.end(), value);
  }

  std::optional<std::size_t> holonomy(const IndexedArc& a) const {
    const auto& g = *p_.group;
    std::size_t c = g.identity_index();
    for (const auto& [node, sign] : a.word) {
      if (assign_[node] < 0) return std::nullopt;
      c = g.product(c, g.power_sign(static_cast<std::size_t>(assign_[node]), sign));
    }
    return c;
  }

  // Applies every arc whose holonomy is known until nothing changes; an arc
  // with one decorated endpoint forces the other.
  bool propagate() {
    const auto& g = *p_.group;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& a : p_.arcs) {
        auto c = holonomy(a);
        if (!c) continue;
        std::ptrdiff_t s = assign_[a.start];
        std::ptrdiff_t e = assign_[a.end];
        if (s >= 0 && e >= 0) {
          if (g.conjugate(*c, static_cast<std::size_t>(s)) != static_cast<std::size_t>(e)) return false;
        } else if (s >= 0) {
          std::size_t forced = g.conjugate(*c, static_cast<std::size_t>(s));
          if (!allowed(a.end, forced)) return false;
          set(a.end, forced);
          changed = true;
        } else if (e >= 0) {
          std::size_t forced = g.conjugate(g.inverse(*c), static_cast<std::size_t>(e));
          if (!allowed(a.start, forced)) return false;
          set(a.start, forced);
          changed = true;
        }
      }
    }
    return true;
  }

  bool sw_holds() const {
    const auto& g = *p_.group;
    for (const auto& h : p_.hopfs) {
      auto x = static_cast<std::size_t>(assign_[h.node]);
      if (!g.is_involution(x)) return false;
      for (const auto& path : h.paths) {
        std::size_t prod = g.identity_index();
        for (const auto& step : path) {
          std::size_t c = *holonomy(p_.arcs[step.arc]);
          prod = g.product(g.power_sign(c, step.sign), prod);
        }
        if (prod == g.identity_index() || prod == x) return false;
      }
    }
    return true;
  }

  void descend() {
    ++visited;
    std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return;
    }
    auto next = std::find_if(p_.order.begin(), p_.order.end(), [&](std::size_t n) { return assign_[n] < 0; });
    if (next == p_.order.end()) {
      if (sw_holds()) {
        std::vector<std::size_t> tuple(assign_.size());
        for (std::size_t i = 0; i < tuple.size(); ++i) tuple[i] = static_cast<std::size_t>(assign_[i]);
        solutions.push_back(std::move(tuple));
      }
      undo(mark);
      return;
    }
    for (std::size_t value : p_.domain[*next]) {
      std::size_t inner = trail_.size();
      set(*next, value);
      descend();
      undo(inner);
    }
    undo(mark);
  }

  const Problem& p_;
  Assignment assign_;
  std::vector<std::size_t> trail_;
};

Problem build_problem(const SingularLinkDiagram& d, const SearchOptions& opts) {
  Problem p;
  p.group = opts.group.get();
  const auto& g = *opts.group;
  const auto& nodes = d.nodes();
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> invols = g.involutions();
  std::vector<std::size_t> degree(nodes.size(), 0);
  for (const auto& a : d.arcs()) {
    IndexedArc ia;
    ia.start = *d.node_index(a.start.circle.node);
    ia.end = *d.node_index(a.end.circle.node);
    ++degree[ia.start];
    ++degree[ia.end];
    for (const auto& x : a.word) {
      std::size_t n = *d.node_index(x.disc.node);
      ia.word.push_back({n, x.sign});
      ++degree[n];
    }
    p.arcs.push_back(std::move(ia));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    bool hopf = nodes[i].kind == NodeKind::hopf;
    p.hopf.push_back(hopf ? 1 : 0);
    p.domain.push_back(hopf && opts.involutions_only_on_hopfs ? invols : all);
    p.order.push_back(i);
    if (!hopf) continue;
    HopfConstraint hc{i, {}};
    std::vector<std::vector<PathStep>> paths;
    if (opts.exhaustive_sw_paths) {
      paths = all_hopf_paths(d, nodes[i].id);
    } else if (auto path = shortest_hopf_path(d, nodes[i].id)) {
      paths.push_back(std::move(*path));
    }
    if (paths.empty()) throw MissingHopfPath(nodes[i].id);
    for (const auto& path : paths) {
      std::vector<IndexedStep> steps;
      for (const auto& s : path) steps.push_back({s.arc, s.forward ? 1 : -1});
      hc.paths.push_back(std::move(steps));
    }
    p.hopfs.push_back(std::move(hc));
  }
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });
  return p;
}

Decoration to_decoration(const SingularLinkDiagram& d, const FiniteRotationGroup& g,
                         const std::vector<std::size_t>& tuple) {
  Decoration dec;
  for (std::size_t i = 0; i < tuple.size(); ++i) dec.emplace(d.nodes()[i].id, g.element(tuple[i]));
  return dec;
}

}  // namespace

SearchResult enumerate_valid_decorations(const SingularLinkDiagram& d, const SearchOptions& opts) {
  if (!opts.group || opts.group->size() == 0) throw std::invalid_argument("search needs a nonempty group");
  auto violations = d.validate();
  if (!violations.empty()) throw MalformedDiagram("diagram is not well-formed: " + violations.front().message);

  SearchResult result;
  CheckVerdict selfint = check_selfint(d);
  if (!selfint.pass) {
    result.precondition_failure = "selfint: " + selfint.diagnostics.front();
    return result;
  }
  CheckVerdict genus;
  try {
    genus = check_genus0(d);
  } catch (const NonOrientableBand& e) {
    genus = {false, {e.what()}, {}};
  }
  if (!genus.pass) {
    result.precondition_failure = "genus0: " + genus.diagnostics.front();
    return result;
  }

  Problem problem = build_problem(d, opts);
  std::vector<std::vector<std::size_t>> tuples;
  if (opts.threads <= 1 || problem.order.empty()) {
    Worker w(problem);
    w.run(std::nullopt);
    tuples = std::move(w.solutions);
    result.nodes_visited = w.visited;
  } else {
    const auto& first_domain = problem.domain[problem.order.front()];
    const std::size_t workers = std::min<std::size_t>(opts.threads, first_domain.size());
    std::vector<std::future<std::pair<std::vector<std::vector<std::size_t>>, std::size_t>>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        std::vector<std::vector<std::size_t>> found;
        std::size_t visited = 0;
        for (std::size_t i = w; i < first_domain.size(); i += workers) {
          Worker worker(problem);
          worker.run(first_domain[i]);
          visited += worker.visited;
          for (auto& t : worker.solutions) found.push_back(std::move(t));
        }
        return std::pair{std::move(found), visited};
      }));
    }
    for (auto& f : futures) {
      auto [found, visited] = f.get();
      result.nodes_visited += visited;
      for (auto& t : found) tuples.push_back(std::move(t));
    }
  }
  std::sort(tuples.begin(), tuples.end());
  for (const auto& t : tuples) result.solutions.push_back(to_decoration(d, *opts.group, t));
  return result;
}

// ---------------------------------------------------------------------------

std::string ConjugacyClassKey::to_string() const {
  std::ostringstream out;
  out << "n=" << size << ";gram=[";
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (i) out << ',';
    if (gram[i].sign == 0) {
      out << '0';
    } else {
      out << (gram[i].sign > 0 ? '+' : '-') << gram[i].cos2.to_string();
    }
  }
  out << "];triples=[";
  for (std::size_t i = 0; i < triple_signs.size(); ++i) {
    if (i) out << ',';
    out << (triple_signs[i] > 0 ? "+" : triple_signs[i] < 0 ? "-" : "0");
  }
  out << ']';
  return out.str();
}

ConjugacyClassKey canonical_class(const std::vector<RotationElement>& tuple) {
  const std::size_t n = tuple.size();
  std::vector<Vector3> axes;
  for (const auto& g : tuple) axes.push_back(axis_of_involution(g).direction());

  // Signs fixed along BFS trees of the "not perpendicular" graph; within a
  // component this makes the signed Gram entries independent of the input
  // signs, and flipping a whole component leaves them unchanged.
  std::vector<int> sign(n, 0);
  std::vector<std::size_t> component(n, 0);
  std::size_t components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    component[root] = components;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (sign[v] != 0) continue;
        int s = dot(axes[u], axes[v]).sign();
        if (s == 0) continue;
        sign[v] = sign[u] * s;
        component[v] = components;
        queue.push_back(v);
      }
    }
    ++components;
  }

  ConjugacyClassKey key;
  key.size = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactScalar d = dot(axes[i], axes[j]);
      ExactScalar cos2 = d * d / (dot(axes[i], axes[i]) * dot(axes[j], axes[j]));
      key.gram.push_back({sign[i] * sign[j] * d.sign(), cos2});
    }
  }
  // Mutually perpendicular spans: at most three components in R^3.
  std::optional<std::vector<int>> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << components); ++mask) {
    std::vector<int> triples;
    auto s = [&](std::size_t i) { return sign[i] * ((mask >> component[i]) & 1 ? -1 : 1); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          triples.push_back(s(i) * s(j) * s(k) * triple_product(axes[i], axes[j], axes[k]).sign());
    if (!best || triples < *best) best = std::move(triples);
  }
  key.triple_signs = std::move(*best);
  return key;
}

std::size_t count_classes(const std::vector<Decoration>& solutions, const std::vector<std::string>& hopf_order,
                          const SearchOptions& opts) {
  auto hopf_tuple = [&](const Decoration& dec) {
    std::vector<RotationElement> t;
    for (const auto& h : hopf_order) {
      auto it = dec.find(h);
      if (it == dec.end()) throw UndecoratedNode(h);
      t.push_back(it->second);
    }
    return t;
  };
  switch (opts.dedup) {
    case DedupMode::none: {
      std::set<std::vector<RotationElement>> keys;
      for (const auto& s : solutions) keys.insert(hopf_tuple(s));
      return keys.size();
    }
    case DedupMode::so3_canonical: {
      std::set<ConjugacyClassKey> keys;
      for (const auto& s : solutions) keys.insert(canonical_class(hopf_tuple(s)));
      return keys.size();
    }
    case DedupMode::group_conjugacy: {
      if (!opts.group) throw std::invalid_argument("group_conjugacy needs a group");
      const auto& g = *opts.group;
      std::set<std::vector<std::size_t>> keys;
      for (const auto& s : solutions) {
        std::vector<std::size_t> idx;
        for (const auto& [node, elem] : s) {
          auto i = g.index_of(elem);
          if (!i) throw std::invalid_argument("decoration of " + node + " is outside the search group");
          idx.push_back(*i);
        }
        std::optional<std::vector<std::size_t>> best;
        for (std::size_t c = 0; c < g.size(); ++c) {
          std::vector<std::size_t> conj(idx.size());
          for (std::size_t k = 0; k < idx.size(); ++k) conj[k] = g.conjugate(c, idx[k]);
          if (!best || conj < *best) best = std::move(conj);
        }
        keys.insert(best.value_or(std::vector<std::size_t>{}));
      }
      return keys.size();
    }
  }
  return 0;
}

bool verify_onepoint_geometry(const RotationElement& tl, const RotationElement& tr, const RotationElement& bl,
                              const RotationElement& br) {
  AxisLine a_tl = axis_of_involution(tl);
  AxisLine a_tr = axis_of_involution(tr);
  AxisLine a_bl = axis_of_involution(bl);
  AxisLine a_br = axis_of_involution(br);
  if (!is_perpendicular(a_tl, a_bl) || !is_perpendicular(a_tr, a_br)) return false;
  // Common normal of one pair against the other pair.
  auto normal_fits = [](const AxisLine& p, const AxisLine& q, const AxisLine& u, const AxisLine& v) {
    Vector3 nv = cross(p.direction(), q.direction());
    if (nv.is_zero()) return false;
    AxisLine normal(nv);
    return is_coplanar(normal, u, v) && is_angle_pi_over_4(normal, u) && is_angle_pi_over_4(normal, v);
  };
  return normal_fits(a_tr, a_br, a_tl, a_bl) && normal_fits(a_tl, a_bl, a_tr, a_br);
}

bool verify_onepoint_geometry(const Decoration& dec) {
  auto get = [&](const char* k) -> const RotationElement& {
    auto it = dec.find(k);
    if (it == dec.end()) throw UndecoratedNode(k);
    return it->second;
  };
  return verify_onepoint_geometry(get("TL"), get("TR"), get("BL"), get("BR"));
}

}  // namespace sldrep
