#pragma once

// The four certificate checks on a decorated singular link diagram, the
// holonomy word C(A) of an arc, and the fundamental-group presentation read
// off the diagram.

#include <map>
#include <string>
#include <vector>

#include "sldrep/diagram.hpp"
#include "sldrep/rotations.hpp"

namespace sldrep {

/// node id -> group element. A Hopf node carries one element for both circles.
using Decoration = std::map<std::string, RotationElement>;

class UndecoratedNode : public std::invalid_argument {
 public:
  explicit UndecoratedNode(const std::string& node)
      : std::invalid_argument("node '" + node + "' has no decoration") {}
};

/// Node ids of d missing from dec, in node order.
std::vector<std::string> undecorated_nodes(const SingularLinkDiagram& d, const Decoration& dec);

/// C(A) = g_1^{e_1} * ... * g_m^{e_m} over the discs crossed by the arc, in
/// word order. Throws UndecoratedNode.
RotationElement holonomy_word(const ArcBand& arc, const Decoration& dec);

struct CheckVerdict {
  bool pass = false;
  std::vector<std::string> diagnostics;  ///< why it failed, one per offending item
  std::vector<std::string> notes;        ///< informational, never affects pass
};

struct ConditionReport {
  CheckVerdict genus0;
  CheckVerdict selfint;
  CheckVerdict relators;
  CheckVerdict sw;
  bool passed() const { return genus0.pass && selfint.pass && relators.pass && sw.pass; }
};

/// Every arc satisfies h = C(A) g C(A)^-1 (g at the start, h at the end).
CheckVerdict check_relators(const SingularLinkDiagram& d, const Decoration& dec);
/// Both circles of every Hopf pair lie in one component.
CheckVerdict check_selfint(const SingularLinkDiagram& d);
/// Every component has ribbon genus 0; the triple cyclic-order criterion is
/// attached as a note. Throws NonOrientableBand.
CheckVerdict check_genus0(const SingularLinkDiagram& d);

class MissingHopfPath : public std::runtime_error {
 public:
  explicit MissingHopfPath(const std::string& hopf)
      : std::runtime_error("no arc path joins " + hopf + ".a to " + hopf + ".b (selfint precondition)") {}
};

/// One arc of a path between circles, traversed along or against its orientation.
struct PathStep {
  std::size_t arc = 0;
  bool forward = true;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Shortest arc path from hopf.a to hopf.b (breadth first, arcs in
/// declaration order); nullopt if none exists.
std::optional<std::vector<PathStep>> shortest_hopf_path(const SingularLinkDiagram& d, const std::string& hopf);
/// All circle-simple arc paths from hopf.a to hopf.b, at most `limit`.
std::vector<std::vector<PathStep>> all_hopf_paths(const SingularLinkDiagram& d, const std::string& hopf,
                                                  std::size_t limit = 100000);

/// Product of the holonomies along a path; the first step is applied first,
/// steps against the orientation contribute C(A)^-1.
RotationElement path_holonomy(const SingularLinkDiagram& d, const std::vector<PathStep>& path,
                              const Decoration& dec);

struct SwOptions {
  bool exhaustive_paths = false;
  std::size_t path_limit = 100000;
};

/// Stiefel-Whitney condition: every Hopf decoration g is a rotation by pi and
/// the path product P avoids {1, g}. P failing to commute with g is reported
/// as an internal inconsistency. Throws MissingHopfPath.
CheckVerdict check_sw(const SingularLinkDiagram& d, const Decoration& dec, const SwOptions& opts = {});

/// Runs all four checks. Decoration-dependent checks fail with a diagnostic
/// when the decoration is not total; check_sw is skipped (fail) when
/// selfint fails.
ConditionReport check_all(const SingularLinkDiagram& d, const Decoration& dec, const SwOptions& opts = {});

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Relator {
  std::string arc;
  std::vector<Letter> word;
  friend bool operator==(const Relator&, const Relator&) = default;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;

  std::string relator_string(const Relator& r) const;
};

/// One generator per node; per arc the relator x_end^-1 W x_start W^-1.
GroupPresentation extract_presentation(const SingularLinkDiagram& d);

/// True iff every relator evaluates to the identity. Throws UndecoratedNode.
bool evaluate_representation(const GroupPresentation& p, const Decoration& dec);

}  // namespace sldrep
