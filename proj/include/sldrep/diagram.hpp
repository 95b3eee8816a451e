#pragma once

// Singular link diagrams: simple circles, Hopf pairs (two circles sharing one
// group generator) and arc bands, i.e. the cores of ribbon 1-handles. Each arc
// records where it starts and ends (circle plus a slot giving the cyclic
// position on that circle) and the ordered signed list of discs it crosses.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sldrep {

enum class NodeKind { circle, hopf };

struct Node {
  std::string id;
  NodeKind kind = NodeKind::circle;
  friend bool operator==(const Node&, const Node&) = default;
};

/// A circle: a simple-circle node, or member 'a'/'b' of a Hopf node.
struct CircleRef {
  std::string node;
  std::optional<char> member;

  std::string to_string() const { return member ? node + "." + *member : node; }
  friend bool operator==(const CircleRef&, const CircleRef&) = default;
  friend auto operator<=>(const CircleRef&, const CircleRef&) = default;
};

struct ArcEnd {
  CircleRef circle;
  long slot = 0;
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

struct Crossing {
  CircleRef disc;
  int sign = 1;  ///< +1 or -1
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct ArcBand {
  std::string id;
  ArcEnd start;
  ArcEnd end;
  std::vector<Crossing> word;
  /// Framing twist; only its parity is used.
  std::optional<long> twist;

  ArcBand reversed() const;
  friend bool operator==(const ArcBand&, const ArcBand&) = default;
};

struct Violation {
  std::string kind;     ///< "duplicate id", "unresolved reference", "slot collision", ...
  std::string subject;  ///< offending node or arc id
  std::string message;
};

class SingularLinkDiagram {
 public:
  void add_circle(std::string id) { nodes_.push_back({std::move(id), NodeKind::circle}); }
  void add_hopf(std::string id) { nodes_.push_back({std::move(id), NodeKind::hopf}); }
  void add_arc(ArcBand arc) { arcs_.push_back(std::move(arc)); }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<ArcBand>& arcs() const { return arcs_; }

  /// Number of Hopf nodes (n) and of simple circles (l).
  std::size_t hopf_count() const;
  std::size_t simple_circle_count() const;

  std::optional<std::size_t> node_index(const std::string& id) const;
  /// Circles are numbered in node order; a Hopf node contributes a then b.
  std::size_t circle_count() const;
  std::optional<std::size_t> circle_index(const CircleRef& ref) const;
  CircleRef circle_ref(std::size_t circle) const;
  std::size_t node_of_circle(std::size_t circle) const;

  /// Every structural defect; empty means well-formed.
  std::vector<Violation> validate() const;
  bool well_formed() const { return validate().empty(); }

  friend bool operator==(const SingularLinkDiagram&, const SingularLinkDiagram&) = default;

 private:
  std::vector<Node> nodes_;
  std::vector<ArcBand> arcs_;
};

class MalformedDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by betti() when a Hopf pair spans two components.
class ImmersedLinkError : public std::runtime_error {
 public:
  ImmersedLinkError() : std::runtime_error("component count ill-defined for immersed link") {}
};

class NonOrientableBand : public std::runtime_error {
 public:
  explicit NonOrientableBand(const std::string& arc)
      : std::runtime_error("non-orientable band: arc " + arc + " has an odd twist") {}
};

/// Connected components of the graph whose vertices are circles and whose
/// edges are arcs. Blocks are sorted and ordered by their smallest circle.
struct ComponentPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;  ///< circle index -> block index
};

/// Requires a well-formed diagram (throws MalformedDiagram).
ComponentPartition components(const SingularLinkDiagram& d);

struct Betti {
  long b1 = 0;
  long b2 = 0;
  friend bool operator==(const Betti&, const Betti&) = default;
};

/// b1 = number of link components, b2 = number of Hopf nodes. Throws
/// ImmersedLinkError if some Hopf pair spans two components.
Betti betti(const SingularLinkDiagram& d);

struct ComponentGenus {
  std::size_t component = 0;
  long vertices = 0;
  long edges = 0;
  long faces = 0;
  long genus = 0;
};

/// Genus of the closed surface obtained from each component: circles are
/// discs with arc ends attached in increasing slot order, arcs are untwisted
/// bands and every boundary cycle is capped. Throws NonOrientableBand.
std::vector<ComponentGenus> ribbon_genus(const SingularLinkDiagram& d);

/// Three single arcs joining the same two circles whose cyclic order is the
/// same (not reversed) on both circles.
struct TripleOrderViolation {
  std::string first_circle;
  std::string second_circle;
  std::vector<std::string> arcs;
};

/// Cyclic-order criterion on triples of parallel arcs; empty means no triple
/// violates it.
std::vector<TripleOrderViolation> triple_order_violations(const SingularLinkDiagram& d);

}  // namespace sldrep
