#include "sldrep/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sldrep {

ArcBand ArcBand::reversed() const {
  ArcBand r = *this;
  std::swap(r.start, r.end);
  std::reverse(r.word.begin(), r.word.end());
  for (auto& c : r.word) c.sign = -c.sign;
  return r;
}

std::size_t SingularLinkDiagram::hopf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.kind == NodeKind::hopf; }));
}

std::size_t SingularLinkDiagram::simple_circle_count() const { return nodes_.size() - hopf_count(); }

std::optional<std::size_t> SingularLinkDiagram::node_index(const std::string& id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return i;
  return std::nullopt;
}

std::size_t SingularLinkDiagram::circle_count() const { return nodes_.size() + hopf_count(); }

std::optional<std::size_t> SingularLinkDiagram::circle_index(const CircleRef& ref) const {
  std::size_t circle = 0;
  for (const auto& n : nodes_) {
    if (n.id == ref.node) {
      if (n.kind == NodeKind::circle) {
        if (ref.member) return std::nullopt;
        return circle;
      }
      if (!ref.member || (*ref.member != 'a' && *ref.member != 'b')) return std::nullopt;
      return circle + (*ref.member == 'b' ? 1 : 0);
    }
    circle += n.kind == NodeKind::hopf ? 2 : 1;
  }
  return std::nullopt;
}

CircleRef SingularLinkDiagram::circle_ref(std::size_t circle) const {
  std::size_t at = 0;
  for (const auto& n : nodes_) {
    std::size_t width = n.kind == NodeKind::hopf ? 2 : 1;
    if (circle < at + width) {
      if (n.kind == NodeKind::circle) return {n.id, std::nullopt};
      return {n.id, circle == at ? 'a' : 'b'};
    }
    at += width;
  }
  throw std::out_of_range("circle index out of range");
}

std::size_t SingularLinkDiagram::node_of_circle(std::size_t circle) const {
  std::size_t at = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    at += nodes_[i].kind == NodeKind::hopf ? 2 : 1;
    if (circle < at) return i;
  }
  throw std::out_of_range("circle index out of range");
}

std::vector<Violation> SingularLinkDiagram::validate() const {
  std::vector<Violation> out;
  std::set<std::string> node_ids;
  for (const auto& n : nodes_) {
    if (n.id.empty()) out.push_back({"invalid id", n.id, "node id is empty"});
    if (!node_ids.insert(n.id).second) out.push_back({"duplicate id", n.id, "node id '" + n.id + "' declared twice"});
  }
  std::set<std::string> arc_ids;
  std::set<std::pair<std::size_t, long>> slots;
  for (const auto& a : arcs_) {
    if (!arc_ids.insert(a.id).second) out.push_back({"duplicate id", a.id, "arc id '" + a.id + "' declared twice"});
    auto start = circle_index(a.start.circle);
    auto end = circle_index(a.end.circle);
    for (const auto* e : {&a.start, &a.end}) {
      if (!circle_index(e->circle)) {
        out.push_back({"unresolved reference", a.id, "arc " + a.id + " endpoint " + e->circle.to_string() +
                                                         " does not name a circle"});
      }
    }
    for (const auto& c : a.word) {
      if (!circle_index(c.disc)) {
        out.push_back({"unresolved reference", a.id,
                       "arc " + a.id + " crosses unknown disc " + c.disc.to_string()});
      }
      if (c.sign != 1 && c.sign != -1) {
        out.push_back({"invalid sign", a.id, "arc " + a.id + " crossing sign must be +1 or -1"});
      }
    }
    if (start && end && *start == *end && a.start.slot == a.end.slot) {
      out.push_back({"slot collision", a.id,
                     "arc " + a.id + " starts and ends at " + a.start.circle.to_string() + " slot " +
                         std::to_string(a.start.slot)});
      if (start) slots.insert({*start, a.start.slot});
      continue;
    }
    for (const auto& [idx, e] : {std::pair{start, &a.start}, std::pair{end, &a.end}}) {
      if (!idx) continue;
      if (!slots.insert({*idx, e->slot}).second) {
        out.push_back({"slot collision", a.id,
                       "slot " + std::to_string(e->slot) + " on " + e->circle.to_string() + " is used twice"});
      }
    }
  }
  return out;
}

namespace {

void require_well_formed(const SingularLinkDiagram& d) {
  auto v = d.validate();
  if (!v.empty()) throw MalformedDiagram("diagram is not well-formed: " + v.front().message);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ComponentPartition components(const SingularLinkDiagram& d) {
  require_well_formed(d);
  const std::size_t n = d.circle_count();
  UnionFind uf(n);
  for (const auto& a : d.arcs()) uf.unite(*d.circle_index(a.start.circle), *d.circle_index(a.end.circle));
  ComponentPartition p;
  p.block_of.assign(n, 0);
  std::map<std::size_t, std::size_t> block_of_root;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t root = uf.find(c);
    auto [it, inserted] = block_of_root.emplace(root, p.blocks.size());
    if (inserted) p.blocks.emplace_back();
    p.blocks[it->second].push_back(c);
    p.block_of[c] = it->second;
  }
  return p;
}

Betti betti(const SingularLinkDiagram& d) {
  ComponentPartition p = components(d);
  for (const auto& n : d.nodes()) {
    if (n.kind != NodeKind::hopf) continue;
    if (p.block_of[*d.circle_index({n.id, 'a'})] != p.block_of[*d.circle_index({n.id, 'b'})]) {
      throw ImmersedLinkError();
    }
  }
  return {static_cast<long>(p.blocks.size()), static_cast<long>(d.hopf_count())};
}

std::vector<ComponentGenus> ribbon_genus(const SingularLinkDiagram& d) {
  require_well_formed(d);
  for (const auto& a : d.arcs()) {
    if (a.twist && *a.twist % 2 != 0) throw NonOrientableBand(a.id);
  }
  ComponentPartition p = components(d);
  const auto& arcs = d.arcs();
  // Dart 2k is the start of arc k, dart 2k+1 its end.
  const std::size_t darts = 2 * arcs.size();
  std::vector<std::size_t> dart_circle(darts);
  std::vector<std::vector<std::pair<long, std::size_t>>> at_circle(d.circle_count());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    dart_circle[2 * k] = *d.circle_index(arcs[k].start.circle);
    dart_circle[2 * k + 1] = *d.circle_index(arcs[k].end.circle);
    at_circle[dart_circle[2 * k]].push_back({arcs[k].start.slot, 2 * k});
    at_circle[dart_circle[2 * k + 1]].push_back({arcs[k].end.slot, 2 * k + 1});
  }
  // Rotation: next dart around the circle in increasing slot order.
  std::vector<std::size_t> next_around(darts);
  for (auto& ring : at_circle) {
    std::sort(ring.begin(), ring.end());
    for (std::size_t i = 0; i < ring.size(); ++i) next_around[ring[i].second] = ring[(i + 1) % ring.size()].second;
  }

  std::vector<ComponentGenus> out(p.blocks.size());
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    out[b].component = b;
    out[b].vertices = static_cast<long>(p.blocks[b].size());
  }
  for (std::size_t k = 0; k < arcs.size(); ++k) out[p.block_of[dart_circle[2 * k]]].edges += 1;
  for (std::size_t c = 0; c < at_circle.size(); ++c) {
    if (at_circle[c].empty()) out[p.block_of[c]].faces += 1;  // bare disc: its boundary is one face
  }
  // Boundary cycles are the orbits of next_around composed with the band swap.
  std::vector<char> seen(darts, 0);
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    out[p.block_of[dart_circle[start]]].faces += 1;
    for (std::size_t x = start; !seen[x]; x = next_around[x ^ 1]) seen[x] = 1;
  }
  for (auto& g : out) {
    long chi = g.vertices - g.edges + g.faces;
    if ((2 - chi) % 2 != 0 || chi > 2) throw std::logic_error("ribbon genus is not a nonnegative integer");
    g.genus = (2 - chi) / 2;
  }
  return out;
}

namespace {

// +1 if (x, y, z) is increasing in the cyclic order, -1 otherwise (distinct values).
int cyclic_orientation(long x, long y, long z) {
  int inversions = (x > y) + (x > z) + (y > z);
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<TripleOrderViolation> triple_order_violations(const SingularLinkDiagram& d) {
  require_well_formed(d);
  struct Parallel {
    std::size_t arc;
    long slot_low;   // slot on the circle with the smaller index
    long slot_high;  // slot on the other circle
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Parallel>> groups;
  const auto& arcs = d.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    std::size_t s = *d.circle_index(arcs[k].start.circle);
    std::size_t e = *d.circle_index(arcs[k].end.circle);
    if (s == e) continue;
    if (s < e) {
      groups[{s, e}].push_back({k, arcs[k].start.slot, arcs[k].end.slot});
    } else {
      groups[{e, s}].push_back({k, arcs[k].end.slot, arcs[k].start.slot});
    }
  }
  std::vector<TripleOrderViolation> out;
  for (const auto& [pair, list] : groups) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        for (std::size_t k = j + 1; k < list.size(); ++k) {
          int first = cyclic_orientation(list[i].slot_low, list[j].slot_low, list[k].slot_low);
          int second = cyclic_orientation(list[i].slot_high, list[j].slot_high, list[k].slot_high);
          if (first == second) {
            out.push_back({d.circle_ref(pair.first).to_string(), d.circle_ref(pair.second).to_string(),
                           {arcs[list[i].arc].id, arcs[list[j].arc].id, arcs[list[k].arc].id}});
          }
        }
  }
  return out;
}

}  // namespace sldrep
