#pragma once

// Finite subgroups of SO(3) as exact matrices.
//
// Product convention, used everywhere in the library: (g * h) applies h first,
// then g. Permutations compose the same way: (p * q)(i) = p(q(i)).

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sldrep/exact.hpp"

namespace sldrep {

class NotARotation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnInvolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of SO(3): orthogonal with determinant 1, checked exactly.
class RotationElement {
 public:
  RotationElement() : m_(Matrix3::identity()) {}
  /// Throws NotARotation unless m^T m = I and det m = 1.
  explicit RotationElement(Matrix3 m);

  static RotationElement identity() { return {}; }

  const Matrix3& matrix() const { return m_; }
  ExactScalar trace() const { return m_.trace(); }
  bool is_identity() const { return m_ == Matrix3::identity(); }

  friend RotationElement operator*(const RotationElement& g, const RotationElement& h) {
    return RotationElement(g.m_ * h.m_, Trusted{});
  }
  friend bool operator==(const RotationElement&, const RotationElement&) = default;
  friend auto operator<=>(const RotationElement&, const RotationElement&) = default;

 private:
  struct Trusted {};
  RotationElement(Matrix3 m, Trusted) : m_(std::move(m)) {}
  friend RotationElement invert(const RotationElement& g);
  friend RotationElement from_axis_pi(const AxisLine& axis);

  Matrix3 m_;
};

RotationElement compose(const RotationElement& g, const RotationElement& h);
RotationElement invert(const RotationElement& g);
/// g * h * g^-1
RotationElement conjugate(const RotationElement& g, const RotationElement& h);
/// g^e for e in {+1, -1}.
RotationElement power_sign(const RotationElement& g, int e);

/// True iff g is a rotation by pi. Decided both as (g != I and g^2 = I) and
/// as trace(g) = -1; a disagreement throws std::logic_error.
bool is_involution(const RotationElement& g);
/// Fixed line of a pi-rotation. Throws NotAnInvolution.
AxisLine axis_of_involution(const RotationElement& g);
/// The rotation by pi about the given axis: (2/(v.v)) v v^T - I.
RotationElement from_axis_pi(const AxisLine& axis);

/// A permutation of the four cube diagonals, 1-based in text.
class CubePermutation {
 public:
  CubePermutation() : images_{0, 1, 2, 3} {}
  /// images[i] = p(i), 0-based.
  explicit CubePermutation(std::array<std::uint8_t, 4> images);

  /// Cycle notation such as "(12)(34)", "(134)", "()" or "e". Surrounding
  /// quotes and blanks between cycles are accepted.
  static CubePermutation parse(std::string_view cycles);
  static std::vector<CubePermutation> all();

  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::array<std::uint8_t, 4>& images() const { return images_; }
  bool is_even() const;

  CubePermutation inverse() const;
  /// Canonical cycle notation: cycles start at their smallest point and are
  /// ordered by it, fixed points omitted; identity is "()".
  std::string to_string() const;

  friend CubePermutation operator*(const CubePermutation& p, const CubePermutation& q);
  friend bool operator==(const CubePermutation&, const CubePermutation&) = default;
  friend auto operator<=>(const CubePermutation&, const CubePermutation&) = default;

 private:
  std::array<std::uint8_t, 4> images_;
};

/// Cube diagonals d1 = (1,1,1), d2 = (1,-1,-1), d3 = (-1,1,-1), d4 = (-1,-1,1).
const std::array<Vector3, 4>& cube_diagonals();

/// The rotation carrying the line d_i to the line d_{p(i)} for every i.
RotationElement perm_to_rotation(const CubePermutation& p);
/// Inverse dictionary; nullopt if g does not permute the cube diagonals.
std::optional<CubePermutation> rotation_to_perm(const RotationElement& g);

/// Shorthand for perm_to_rotation(CubePermutation::parse(cycles)).
RotationElement rot(std::string_view cycles);

enum class GroupName { tetrahedral, octahedral, icosahedral, custom };

std::string to_string(GroupName name);
std::optional<GroupName> parse_group_name(std::string_view text);

class NotFinitePreset : public std::runtime_error {
 public:
  NotFinitePreset() : std::runtime_error("not a finite subgroup preset size") {}
};

/// A finite subgroup of SO(3) with its multiplication table.
///
/// Elements are sorted by their matrices (lexicographic in the real order of
/// the entries), so the indexing does not depend on the generators used.
class FiniteRotationGroup {
 public:
  static constexpr std::size_t kMaxOrder = 200;

  /// Closure of the generators. Throws NotFinitePreset past kMaxOrder.
  static FiniteRotationGroup generate(const std::vector<RotationElement>& gens,
                                      GroupName name = GroupName::custom);
  static FiniteRotationGroup tetrahedral();
  static FiniteRotationGroup octahedral();
  static FiniteRotationGroup icosahedral();
  static FiniteRotationGroup preset(GroupName name);

  GroupName name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<RotationElement>& elements() const { return elements_; }
  const RotationElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const RotationElement& g) const;

  std::size_t identity_index() const { return identity_; }
  std::size_t product(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  std::size_t inverse(std::size_t i) const { return inverses_[i]; }
  /// i^e for e in {+1, -1}.
  std::size_t power_sign(std::size_t i, int e) const { return e < 0 ? inverses_[i] : i; }
  /// c * i * c^-1
  std::size_t conjugate(std::size_t c, std::size_t i) const {
    return product(product(c, i), inverses_[c]);
  }
  bool is_involution(std::size_t i) const { return involution_[i] != 0; }
  std::vector<std::size_t> involutions() const;

 private:
  GroupName name_ = GroupName::custom;
  std::vector<RotationElement> elements_;
  std::map<RotationElement, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
  std::vector<char> involution_;
  std::size_t identity_ = 0;
};

}  // namespace sldrep
