#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sldrep/fixtures.hpp"
#include "sldrep/search.hpp"

using namespace sldrep;

namespace {

std::vector<RotationElement> tuple_of(const Decoration& dec, const std::vector<std::string>& order) {
  std::vector<RotationElement> t;
  for (const auto& k : order) t.push_back(dec.at(k));
  return t;
}

/// Every total decoration over g, by direct enumeration and check_all.
std::set<Decoration> brute_force(const SingularLinkDiagram& d, const FiniteRotationGroup& g) {
  std::set<Decoration> out;
  const auto& nodes = d.nodes();
  std::vector<std::size_t> idx(nodes.size(), 0);
  while (true) {
    Decoration dec;
    bool allowed = true;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].kind == NodeKind::hopf && !g.is_involution(idx[i])) allowed = false;
      dec.emplace(nodes[i].id, g.element(idx[i]));
    }
    if (allowed) {
      auto r = check_all(d, dec);
      if (r.relators.pass && r.sw.pass) out.insert(dec);
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == g.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("one unconstrained circle") {
    SingularLinkDiagram d;
    d.add_circle("c");
    auto r = enumerate_valid_decorations(d, default_search_options());
    CHECK(r.solutions.size() == 24);
    CHECK_FALSE(r.precondition_failure.has_value());
  }

  TEST_CASE("structural preconditions") {
    SingularLinkDiagram d;
    d.add_hopf("H");
    auto r = enumerate_valid_decorations(d, default_search_options());
    CHECK(r.solutions.empty());
    REQUIRE(r.precondition_failure.has_value());
    CHECK(r.precondition_failure->find("selfint") != std::string::npos);

    SingularLinkDiagram bad;
    bad.add_circle("c");
    bad.add_circle("c");
    CHECK_THROWS_AS(enumerate_valid_decorations(bad, default_search_options()), MalformedDiagram);
  }

  TEST_CASE("REF-1 solutions") {
    auto d = fixtures::ref1_diagram();
    auto opts = default_search_options();
    auto r = enumerate_valid_decorations(d, opts);
    REQUIRE_FALSE(r.solutions.empty());
    CHECK(std::find(r.solutions.begin(), r.solutions.end(), fixtures::ref1_decoration()) != r.solutions.end());
    auto order = fixtures::ref1_hopf_order();
    CHECK(count_classes(r.solutions, order, opts) == 1);
    for (const auto& s : r.solutions) {
      auto c = check_all(d, s);
      CHECK(c.relators.pass);
      CHECK(c.sw.pass);
      CHECK(verify_onepoint_geometry(s));
    }
    auto none = opts;
    none.dedup = DedupMode::none;
    CHECK(count_classes(r.solutions, order, none) == 24);
  }

  TEST_CASE("REF-1 hopf tuples form one orbit of the cube group") {
    auto d = fixtures::ref1_diagram();
    auto r = enumerate_valid_decorations(d, default_search_options());
    auto g = FiniteRotationGroup::octahedral();
    auto order = fixtures::ref1_hopf_order();
    auto ref = tuple_of(fixtures::ref1_decoration(), order);
    for (const auto& s : r.solutions) {
      auto t = tuple_of(s, order);
      bool found = false;
      for (const auto& c : g.elements()) {
        std::vector<RotationElement> conj;
        for (const auto& x : ref) conj.push_back(conjugate(c, x));
        found = found || conj == t;
      }
      CHECK(found);
    }
  }

  TEST_CASE("threads do not change the result") {
    auto d = fixtures::ref1_diagram();
    auto one = default_search_options();
    auto four = one;
    four.threads = 4;
    CHECK(enumerate_valid_decorations(d, one).solutions == enumerate_valid_decorations(d, four).solutions);
  }

  TEST_CASE("search equals brute force on small diagrams") {
    std::mt19937_64 rng(61);
    auto opts = default_search_options(GroupName::tetrahedral);
    int compared = 0;
    for (int t = 0; t < 60; ++t) {
      oracle::DiagramShape shape;
      shape.circles = 1 + static_cast<int>(rng() % 2);
      shape.hopfs = static_cast<int>(rng() % 2);
      shape.arcs = shape.circles + 2 * shape.hopfs - 1;
      shape.connected = true;
      shape.max_word = 2;
      auto d = oracle::random_diagram(rng, shape);
      auto r = enumerate_valid_decorations(d, opts);
      if (r.precondition_failure) continue;
      auto expected = brute_force(d, *opts.group);
      CHECK(std::set<Decoration>(r.solutions.begin(), r.solutions.end()) == expected);
      CHECK(std::is_sorted(r.solutions.begin(), r.solutions.end(), [&](const Decoration& a, const Decoration& b) {
        std::vector<std::size_t> ia, ib;
        for (const auto& n : d.nodes()) {
          ia.push_back(*opts.group->index_of(a.at(n.id)));
          ib.push_back(*opts.group->index_of(b.at(n.id)));
        }
        return ia < ib;
      }));
      ++compared;
    }
    CHECK(compared > 30);
  }

  TEST_CASE("class keys") {
    CHECK(canonical_class({rot("(12)"), rot("(34)")}) == canonical_class({rot("(14)"), rot("(23)")}));
    CHECK(canonical_class({rot("(12)"), rot("(34)")}) != canonical_class({rot("(12)"), rot("(12)")}));
    CHECK_THROWS_AS(canonical_class({rot("(123)")}), NotAnInvolution);
    CHECK(count_classes({}, {"H"}, default_search_options()) == 0);
    Decoration one{{"H", rot("(12)")}};
    CHECK(count_classes({one, one}, {"H"}, default_search_options()) == 1);
  }

  TEST_CASE("class keys are invariant under conjugation") {
    std::mt19937_64 rng(62);
    auto g = FiniteRotationGroup::icosahedral();
    auto inv = g.involutions();
    std::uniform_int_distribution<std::size_t> pick_inv(0, inv.size() - 1), pick(0, g.size() - 1);
    for (int t = 0; t < 200; ++t) {
      std::vector<RotationElement> tuple, conj;
      std::size_t n = 1 + rng() % 5;
      const auto& c = g.element(pick(rng));
      for (std::size_t i = 0; i < n; ++i) {
        tuple.push_back(g.element(inv[pick_inv(rng)]));
        conj.push_back(conjugate(c, tuple.back()));
      }
      CHECK(canonical_class(tuple) == canonical_class(conj));
    }
  }

  TEST_CASE("class keys separate triples with equal pair angles") {
    auto pi = [](Vector3 v) { return from_axis_pi(AxisLine(v)); };
    // Every pair at squared cosine 1/4; the first triple spans space, the second is planar.
    auto spatial = std::vector<RotationElement>{pi({1, 1, 0}), pi({0, 1, 1}), pi({1, 0, 1})};
    auto planar = std::vector<RotationElement>{pi({1, 1, 0}), pi({0, 1, 1}), pi({1, 0, -1})};
    CHECK(canonical_class(spatial) != canonical_class(planar));
    // Mirror images of line configurations are rotations of each other.
    auto mirror = std::vector<RotationElement>{pi({1, 1, 0}), pi({0, 1, -1}), pi({1, 0, -1})};
    CHECK(canonical_class(spatial) == canonical_class(mirror));
  }

  TEST_CASE("group conjugacy divides the raw count") {
    auto d = fixtures::ref1_diagram();
    auto opts = default_search_options();
    auto r = enumerate_valid_decorations(d, opts);
    opts.dedup = DedupMode::group_conjugacy;
    auto classes = count_classes(r.solutions, fixtures::ref1_hopf_order(), opts);
    CHECK(classes >= 1);
    CHECK(classes <= r.solutions.size());
    // The solution set is closed under conjugation by the group.
    auto g = FiniteRotationGroup::octahedral();
    std::set<Decoration> all(r.solutions.begin(), r.solutions.end());
    for (const auto& s : r.solutions) {
      for (const auto& c : g.elements()) {
        Decoration conj;
        for (const auto& [k, v] : s) conj.emplace(k, conjugate(c, v));
        CHECK(all.count(conj) == 1);
      }
    }
  }

  TEST_CASE("one-point geometry") {
    auto dec = fixtures::ref1_decoration();
    CHECK(verify_onepoint_geometry(dec));
    auto bad = dec;
    bad.at("BL") = rot("(12)");
    CHECK_FALSE(verify_onepoint_geometry(bad));
    auto cube = FiniteRotationGroup::octahedral();
    for (const auto& c : cube.elements()) {
      Decoration conj;
      for (const auto& [k, v] : dec) conj.emplace(k, conjugate(c, v));
      CHECK(verify_onepoint_geometry(conj));
    }
    bad.at("BL") = rot("(123)");
    CHECK_THROWS_AS(verify_onepoint_geometry(bad), NotAnInvolution);
  }
}
