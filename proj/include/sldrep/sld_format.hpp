#pragma once

// The line-oriented .sld text format for decorated singular link diagrams.
//
//   group octahedral
//   hopf TL
//   circle Y
//   arc A7 from TL.b slot 1 to Y slot 0 word TL.a:+ Y:+ twist 0
//   decorate TL = perm (12)
//   decorate Y = matrix 1 0 0 0 -1 0 0 0 -1
//   # comment
//
// Scalars in matrices are "p", "p/q" or "p/q+r/s*r5". Statements keep their
// order, so comments and blank lines survive a round trip.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sldrep/conditions.hpp"
#include "sldrep/diagram.hpp"
#include "sldrep/rotations.hpp"

namespace sldrep::sld {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct ElementSpec {
  std::variant<CubePermutation, Matrix3> value;

  RotationElement element() const;
  std::string to_string() const;
  friend bool operator==(const ElementSpec&, const ElementSpec&) = default;
};

/// Cube permutation when g permutes the cube diagonals, matrix otherwise.
ElementSpec spec_for(const RotationElement& g);

struct GroupStmt {
  GroupName group = GroupName::octahedral;
  friend bool operator==(const GroupStmt&, const GroupStmt&) = default;
};
struct CircleStmt {
  std::string id;
  friend bool operator==(const CircleStmt&, const CircleStmt&) = default;
};
struct HopfStmt {
  std::string id;
  friend bool operator==(const HopfStmt&, const HopfStmt&) = default;
};
struct ArcStmt {
  ArcBand arc;
  friend bool operator==(const ArcStmt&, const ArcStmt&) = default;
};
struct DecorateStmt {
  std::string node;
  ElementSpec element;
  friend bool operator==(const DecorateStmt&, const DecorateStmt&) = default;
};
struct CommentStmt {
  std::string text;  ///< the whole line, starting with '#'
  friend bool operator==(const CommentStmt&, const CommentStmt&) = default;
};
struct BlankStmt {
  friend bool operator==(const BlankStmt&, const BlankStmt&) = default;
};

using Statement = std::variant<GroupStmt, CircleStmt, HopfStmt, ArcStmt, DecorateStmt, CommentStmt, BlankStmt>;

struct SldDocument {
  std::vector<Statement> statements;

  SingularLinkDiagram diagram() const;
  /// Possibly partial.
  Decoration decoration() const;
  std::optional<GroupName> group() const;

  friend bool operator==(const SldDocument&, const SldDocument&) = default;
};

/// Throws ParseError (1-based line and column).
SldDocument parse(std::string_view text);
/// Canonical text: single spaces, one statement per line, trailing newline.
std::string serialize(const SldDocument& doc);

/// Document listing the group, the nodes, the arcs and then the decoration.
SldDocument make_document(const SingularLinkDiagram& d, const Decoration& dec = {},
                          std::optional<GroupName> group = std::nullopt);

/// Reads and parses a file; throws ParseError or std::runtime_error.
SldDocument load_file(const std::string& path);

}  // namespace sldrep::sld
