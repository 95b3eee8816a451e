#pragma once

// Enumeration of valid decorations over a finite rotation group and counting
// of the solutions up to conjugation.
//
// A nonempty result over a finite subgroup exhibits representations of the
// link group; an empty result says nothing about SO(3) as a whole.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sldrep/conditions.hpp"

namespace sldrep {

enum class DedupMode { none, group_conjugacy, so3_canonical };

std::string to_string(DedupMode mode);
std::optional<DedupMode> parse_dedup_mode(std::string_view text);

struct SearchOptions {
  std::shared_ptr<const FiniteRotationGroup> group;
  bool involutions_only_on_hopfs = true;
  bool exhaustive_sw_paths = false;
  DedupMode dedup = DedupMode::so3_canonical;
  /// Worker threads; the first branching node's values are split between them.
  unsigned threads = 1;
};

SearchOptions default_search_options(GroupName group = GroupName::octahedral);

struct SearchResult {
  /// Sorted by the tuple of group indices in node order.
  std::vector<Decoration> solutions;
  /// Set when a decoration-independent check fails (then solutions is empty).
  std::optional<std::string> precondition_failure;
  std::size_t nodes_visited = 0;
};

/// Every total decoration over opts.group passing check_relators and
/// check_sw. Throws MalformedDiagram for ill-formed input.
SearchResult enumerate_valid_decorations(const SingularLinkDiagram& d, const SearchOptions& opts);

/// Rotation invariant of an ordered tuple of pi-rotations: for every pair of
/// axes the sign and squared cosine of their angle, after the per-axis signs
/// are normalised along spanning trees of the non-perpendicularity graph,
/// plus the smallest vector of triple-product signs over the remaining
/// component sign flips.
struct ConjugacyClassKey {
  struct PairEntry {
    int sign = 0;
    ExactScalar cos2;
    friend bool operator==(const PairEntry&, const PairEntry&) = default;
    friend auto operator<=>(const PairEntry&, const PairEntry&) = default;
  };
  std::size_t size = 0;
  std::vector<PairEntry> gram;     ///< pairs i < j, row-major
  std::vector<int> triple_signs;   ///< triples i < j < k, lexicographic

  std::string to_string() const;
  friend bool operator==(const ConjugacyClassKey&, const ConjugacyClassKey&) = default;
  friend auto operator<=>(const ConjugacyClassKey&, const ConjugacyClassKey&) = default;
};

/// Throws NotAnInvolution.
ConjugacyClassKey canonical_class(const std::vector<RotationElement>& tuple);

/// Number of distinct solutions under the dedup mode: ordered Hopf tuples
/// (none), their SO(3) keys (so3_canonical), or whole decorations up to
/// simultaneous conjugation by the search group (group_conjugacy).
std::size_t count_classes(const std::vector<Decoration>& solutions, const std::vector<std::string>& hopf_order,
                          const SearchOptions& opts);

/// Axis geometry forced on a Hopf tuple (TL, TR, BL, BR): TL perpendicular to
/// BL, TR perpendicular to BR, the common normal of TR and BR coplanar with
/// TL and BL at pi/4 to both, and symmetrically. Throws NotAnInvolution.
bool verify_onepoint_geometry(const RotationElement& tl, const RotationElement& tr, const RotationElement& bl,
                              const RotationElement& br);
bool verify_onepoint_geometry(const Decoration& dec);

}  // namespace sldrep
