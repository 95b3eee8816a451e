#include "sldrep/rotations.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace sldrep {

RotationElement::RotationElement(Matrix3 m) : m_(std::move(m)) {
  if (!m_.is_orthogonal()) throw NotARotation("matrix is not orthogonal: " + m_.to_string());
  if (m_.determinant() != ExactScalar(1)) {
    throw NotARotation("matrix has determinant " + m_.determinant().to_string() + ", expected 1");
  }
}

RotationElement compose(const RotationElement& g, const RotationElement& h) { return g * h; }

RotationElement invert(const RotationElement& g) {
  return RotationElement(g.m_.transpose(), RotationElement::Trusted{});
}

RotationElement conjugate(const RotationElement& g, const RotationElement& h) { return g * h * invert(g); }

RotationElement power_sign(const RotationElement& g, int e) { return e < 0 ? invert(g) : g; }

bool is_involution(const RotationElement& g) {
  bool by_square = !g.is_identity() && (g * g).is_identity();
  bool by_trace = g.trace() == ExactScalar(-1);
  if (by_square != by_trace) {
    throw std::logic_error("involution tests disagree for " + g.matrix().to_string());
  }
  return by_square;
}

AxisLine axis_of_involution(const RotationElement& g) {
  if (!is_involution(g)) throw NotAnInvolution("not a rotation by pi: " + g.matrix().to_string());
  Matrix3 fixed = g.matrix() + Matrix3::identity();
  for (std::size_t c = 0; c < 3; ++c) {
    Vector3 v = fixed.column(c);
    if (v.is_zero()) continue;
    AxisLine axis(v);
    if (g.matrix() * axis.direction() != axis.direction()) {
      throw std::logic_error("axis of involution is not fixed");
    }
    return axis;
  }
  throw std::logic_error("g + I vanished for an involution");
}

RotationElement from_axis_pi(const AxisLine& axis) {
  const Vector3& v = axis.direction();
  ExactScalar scale = ExactScalar(2) / dot(v, v);
  Matrix3 m = scale * outer(v, v) - Matrix3::identity();
  return RotationElement(std::move(m), RotationElement::Trusted{});
}

// ---------------------------------------------------------------------------

CubePermutation::CubePermutation(std::array<std::uint8_t, 4> images) : images_(images) {
  std::array<bool, 4> seen{};
  for (auto x : images_) {
    if (x > 3 || seen[x]) throw std::invalid_argument("not a permutation of {1,2,3,4}");
    seen[x] = true;
  }
}

CubePermutation CubePermutation::parse(std::string_view cycles) {
  std::string text;
  for (char ch : cycles) {
    if (ch != '"' && !std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  std::array<std::uint8_t, 4> images{0, 1, 2, 3};
  if (text.empty() || text == "e" || text == "()") return CubePermutation(images);
  std::array<bool, 4> used{};
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("malformed cycle notation '" + std::string(cycles) + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unterminated cycle in '" + std::string(cycles) + "'");
    std::vector<std::uint8_t> cyc;
    for (std::size_t k = i + 1; k < close; ++k) {
      char ch = text[k];
      if (ch < '1' || ch > '4') throw std::invalid_argument("cycle entries must be 1..4 in '" + std::string(cycles) + "'");
      auto pt = static_cast<std::uint8_t>(ch - '1');
      if (used[pt]) throw std::invalid_argument("point repeated in '" + std::string(cycles) + "'");
      used[pt] = true;
      cyc.push_back(pt);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) images[cyc[k]] = cyc[(k + 1) % cyc.size()];
    i = close + 1;
  }
  return CubePermutation(images);
}

std::vector<CubePermutation> CubePermutation::all() {
  std::array<std::uint8_t, 4> images{0, 1, 2, 3};
  std::vector<CubePermutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool CubePermutation::is_even() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inversions += images_[i] > images_[j];
  return inversions % 2 == 0;
}

CubePermutation CubePermutation::inverse() const {
  std::array<std::uint8_t, 4> inv{};
  for (std::uint8_t i = 0; i < 4; ++i) inv[images_[i]] = i;
  return CubePermutation(inv);
}

std::string CubePermutation::to_string() const {
  std::string out;
  std::array<bool, 4> done{};
  for (std::uint8_t start = 0; start < 4; ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    for (std::uint8_t x = start; !done[x]; x = images_[x]) {
      done[x] = true;
      out += static_cast<char>('1' + x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

CubePermutation operator*(const CubePermutation& p, const CubePermutation& q) {
  std::array<std::uint8_t, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = p.images_[q.images_[i]];
  return CubePermutation(r);
}

const std::array<Vector3, 4>& cube_diagonals() {
  static const std::array<Vector3, 4> d{Vector3{1, 1, 1}, Vector3{1, -1, -1}, Vector3{-1, 1, -1},
                                        Vector3{-1, -1, 1}};
  return d;
}

namespace {

bool same_line(const Vector3& u, const Vector3& v) { return u == v || u == ExactScalar(-1) * v; }

// Solves R [d1 d2 d3] = [s1 d_p(1), s2 d_p(2), s3 d_p(3)] over the eight sign
// choices; exactly one gives a rotation that also sends d4 to the line d_p(4).
RotationElement solve_perm_rotation(const CubePermutation& p) {
  const auto& d = cube_diagonals();
  Matrix3 basis_inv = *Matrix3::from_columns(d[0], d[1], d[2]).inverse();
  std::optional<RotationElement> found;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<Vector3, 3> img;
    for (int i = 0; i < 3; ++i) {
      ExactScalar s = (mask >> i) & 1 ? -1 : 1;
      img[i] = s * d[p(i)];
    }
    Matrix3 r = Matrix3::from_columns(img[0], img[1], img[2]) * basis_inv;
    if (!r.is_orthogonal() || r.determinant() != ExactScalar(1)) continue;
    if (!same_line(r * d[3], d[p(3)])) continue;
    if (found) throw std::logic_error("cube dictionary is not unique");
    found = RotationElement(r);
  }
  if (!found) throw std::logic_error("no rotation realises " + p.to_string());
  return *found;
}

const std::map<CubePermutation, RotationElement>& cube_dictionary() {
  static const std::map<CubePermutation, RotationElement> dict = [] {
    std::map<CubePermutation, RotationElement> m;
    for (const auto& p : CubePermutation::all()) m.emplace(p, solve_perm_rotation(p));
    return m;
  }();
  return dict;
}

}  // namespace

RotationElement perm_to_rotation(const CubePermutation& p) { return cube_dictionary().at(p); }

std::optional<CubePermutation> rotation_to_perm(const RotationElement& g) {
  const auto& d = cube_diagonals();
  std::array<std::uint8_t, 4> images{};
  for (std::size_t i = 0; i < 4; ++i) {
    Vector3 img = g.matrix() * d[i];
    bool hit = false;
    for (std::uint8_t j = 0; j < 4; ++j) {
      if (same_line(img, d[j])) {
        images[i] = j;
        hit = true;
        break;
      }
    }
    if (!hit) return std::nullopt;
  }
  return CubePermutation(images);
}

RotationElement rot(std::string_view cycles) { return perm_to_rotation(CubePermutation::parse(cycles)); }

// ---------------------------------------------------------------------------

std::string to_string(GroupName name) {
  switch (name) {
    case GroupName::tetrahedral:
      return "tetrahedral";
    case GroupName::octahedral:
      return "octahedral";
    case GroupName::icosahedral:
      return "icosahedral";
    case GroupName::custom:
      return "custom";
  }
  return "custom";
}

std::optional<GroupName> parse_group_name(std::string_view text) {
  if (text == "tetrahedral") return GroupName::tetrahedral;
  if (text == "octahedral") return GroupName::octahedral;
  if (text == "icosahedral") return GroupName::icosahedral;
  return std::nullopt;
}

FiniteRotationGroup FiniteRotationGroup::generate(const std::vector<RotationElement>& gens, GroupName name) {
  if (gens.empty()) throw std::invalid_argument("generate_group needs at least one generator");
  std::map<RotationElement, std::size_t> seen;
  std::vector<RotationElement> found{RotationElement::identity()};
  seen.emplace(found.front(), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    RotationElement current = found[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      RotationElement next = g * current;
      if (seen.contains(next)) continue;
      if (found.size() >= kMaxOrder) throw NotFinitePreset();
      seen.emplace(next, found.size());
      queue.push_back(found.size());
      found.push_back(std::move(next));
    }
  }

  FiniteRotationGroup group;
  group.name_ = name;
  std::sort(found.begin(), found.end());
  group.elements_ = std::move(found);
  const std::size_t n = group.elements_.size();
  for (std::size_t i = 0; i < n; ++i) group.index_.emplace(group.elements_[i], i);
  group.identity_ = group.index_.at(RotationElement::identity());
  group.table_.resize(n * n);
  group.inverses_.resize(n);
  group.involution_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = group.index_.find(group.elements_[i] * group.elements_[j]);
      if (it == group.index_.end()) throw std::logic_error("generated set is not closed");
      group.table_[i * n + j] = it->second;
      if (it->second == group.identity_) group.inverses_[i] = j;
    }
    group.involution_[i] = sldrep::is_involution(group.elements_[i]) ? 1 : 0;
  }
  return group;
}

FiniteRotationGroup FiniteRotationGroup::octahedral() {
  return generate({rot("(12)"), rot("(1234)")}, GroupName::octahedral);
}

FiniteRotationGroup FiniteRotationGroup::tetrahedral() {
  return generate({rot("(123)"), rot("(12)(34)")}, GroupName::tetrahedral);
}

FiniteRotationGroup FiniteRotationGroup::icosahedral() {
  // Cyclic coordinate shift, the half-turn about the x-axis, and an order-5
  // rotation with golden-ratio entries.
  const ExactScalar half(Rational(1, 2));
  const ExactScalar phi = ExactScalar::golden_ratio();
  const ExactScalar phi_inv = *phi.inverse();
  Matrix3 shift(std::array<ExactScalar, 9>{0, 0, 1, 1, 0, 0, 0, 1, 0});
  Matrix3 five(std::array<ExactScalar, 9>{half, -half * phi, half * phi_inv, half * phi, half * phi_inv, -half,
                                          half * phi_inv, half, half * phi});
  return generate({RotationElement(shift), RotationElement(Matrix3::diagonal(1, -1, -1)), RotationElement(five)},
                  GroupName::icosahedral);
}

FiniteRotationGroup FiniteRotationGroup::preset(GroupName name) {
  switch (name) {
    case GroupName::tetrahedral:
      return tetrahedral();
    case GroupName::octahedral:
      return octahedral();
    case GroupName::icosahedral:
      return icosahedral();
    case GroupName::custom:
      break;
  }
  throw std::invalid_argument("no preset for a custom group");
}

std::optional<std::size_t> FiniteRotationGroup::index_of(const RotationElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FiniteRotationGroup::involutions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (involution_[i]) out.push_back(i);
  return out;
}

}  // namespace sldrep
