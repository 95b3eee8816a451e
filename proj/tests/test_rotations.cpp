#include <doctest.h>

#include <random>

#include "sldrep/rotations.hpp"

using namespace sldrep;

namespace {

/// Does R send the line of d_i to the line of d_p(i) for every i?
bool permutes_diagonals_as(const RotationElement& r, const CubePermutation& p) {
  const auto& d = cube_diagonals();
  for (int i = 0; i < 4; ++i) {
    Vector3 image = r.matrix() * d[static_cast<std::size_t>(i)];
    const Vector3& target = d[static_cast<std::size_t>(p(i))];
    if (!(image == target) && !(image == ExactScalar(-1) * target)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("rotations") {
  TEST_CASE("perm_to_rotation is a homomorphism on all 576 pairs") {
    auto perms = CubePermutation::all();
    REQUIRE(perms.size() == 24);
    int checked = 0;
    for (const auto& p : perms) {
      for (const auto& q : perms) {
        CHECK(perm_to_rotation(p * q) == perm_to_rotation(p) * perm_to_rotation(q));
        ++checked;
      }
    }
    CHECK(checked == 576);
  }

  TEST_CASE("the rotation of p moves diagonals as p does") {
    for (const auto& p : CubePermutation::all()) {
      auto r = perm_to_rotation(p);
      CHECK(permutes_diagonals_as(r, p));
      CHECK(rotation_to_perm(r) == p);
    }
  }

  TEST_CASE("composition convention: p*q applies q first") {
    auto p = CubePermutation::parse("(34)"), q = CubePermutation::parse("(14)");
    CHECK((p * q).to_string() == "(134)");
    CHECK(p * q == CubePermutation::parse("(134)"));
  }

  TEST_CASE("cycle notation parsing") {
    CHECK(CubePermutation::parse("()").to_string() == "()");
    CHECK(CubePermutation::parse("e") == CubePermutation());
    CHECK(CubePermutation::parse("\"(12) (34)\"").to_string() == "(12)(34)");
    CHECK(CubePermutation::parse("(431)").to_string() == "(143)");
    CHECK_THROWS(CubePermutation::parse("(15)"));
    CHECK_THROWS(CubePermutation::parse("(11)"));
    CHECK_THROWS(CubePermutation::parse("(12"));
  }

  TEST_CASE("axis facts") {
    CHECK(axis_of_involution(rot("(12)")).direction() == Vector3{0, 1, 1});
    CHECK(axis_of_involution(rot("(34)")).direction() == Vector3{0, 1, -1});
    CHECK(is_perpendicular(axis_of_involution(rot("(12)")), axis_of_involution(rot("(34)"))));
    CHECK(rot("(12)(34)").matrix() == Matrix3::diagonal(1, -1, -1));
  }

  TEST_CASE("octahedral involutions") {
    auto g = FiniteRotationGroup::octahedral();
    CHECK(g.size() == 24);
    auto inv = g.involutions();
    CHECK(inv.size() == 9);
    for (auto i : inv) {
      const auto& e = g.element(i);
      CHECK(from_axis_pi(axis_of_involution(e)) == e);
      CHECK(e.trace() == ExactScalar(-1));
    }
    CHECK_THROWS_AS(axis_of_involution(rot("(123)")), NotAnInvolution);
    CHECK_THROWS_AS(axis_of_involution(RotationElement::identity()), NotAnInvolution);
  }

  TEST_CASE("preset groups") {
    CHECK(FiniteRotationGroup::tetrahedral().size() == 12);
    CHECK(FiniteRotationGroup::tetrahedral().involutions().size() == 3);
    auto ico = FiniteRotationGroup::icosahedral();
    CHECK(ico.size() == 60);
    CHECK(ico.involutions().size() == 15);
    for (auto i : ico.involutions()) CHECK(from_axis_pi(axis_of_involution(ico.element(i))) == ico.element(i));
  }

  TEST_CASE("group tables are consistent") {
    for (auto name : {GroupName::tetrahedral, GroupName::octahedral, GroupName::icosahedral}) {
      auto g = FiniteRotationGroup::preset(name);
      for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g.product(i, g.inverse(i)) == g.identity_index());
        CHECK(g.index_of(g.element(i)) == i);
        for (std::size_t j = 0; j < g.size(); j += 7) {
          CHECK(g.element(g.product(i, j)) == g.element(i) * g.element(j));
        }
      }
    }
  }

  TEST_CASE("generation beyond the preset bound fails") {
    // An irrational-angle rotation generates an infinite group.
    Matrix3 m({ExactScalar(Rational(3, 5)), ExactScalar(Rational(-4, 5)), 0, ExactScalar(Rational(4, 5)),
               ExactScalar(Rational(3, 5)), 0, 0, 0, 1});
    CHECK_THROWS_AS(FiniteRotationGroup::generate({RotationElement(m)}), NotFinitePreset);
  }

  TEST_CASE("invalid matrices are rejected") {
    CHECK_THROWS_AS(RotationElement(Matrix3::diagonal(1, 1, -1)), NotARotation);
    CHECK_THROWS_AS(RotationElement(Matrix3::diagonal(2, 1, 1)), NotARotation);
  }

  TEST_CASE("conjugation and inverses") {
    std::mt19937_64 rng(21);
    auto g = FiniteRotationGroup::octahedral();
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int t = 0; t < 100; ++t) {
      auto a = g.element(pick(rng)), b = g.element(pick(rng));
      CHECK(conjugate(a, b) == a * b * invert(a));
      CHECK(power_sign(a, -1) * a == RotationElement::identity());
      CHECK(is_involution(conjugate(a, b)) == is_involution(b));
    }
  }
}
