// Acceptance gate: one PASS/FAIL line per criterion, with its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sldrep/fixtures.hpp"
#include "sldrep/obstructions.hpp"
#include "sldrep/search.hpp"
#include "sldrep/sld_format.hpp"

using namespace sldrep;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ref1_certificate() {
  auto r = check_all(fixtures::ref1_diagram(), fixtures::ref1_decoration());
  std::ostringstream s;
  s << "genus0=" << r.genus0.pass << " selfint=" << r.selfint.pass << " relators=" << r.relators.pass
    << " sw=" << r.sw.pass;
  return {r.passed(), s.str()};
}

Outcome one_point() {
  auto d = fixtures::ref1_diagram();
  auto opts = default_search_options(GroupName::octahedral);
  opts.involutions_only_on_hopfs = true;
  opts.dedup = DedupMode::so3_canonical;
  auto r = enumerate_valid_decorations(d, opts);
  if (r.solutions.empty()) return {false, "no solutions"};
  auto classes = count_classes(r.solutions, fixtures::ref1_hopf_order(), opts);
  std::size_t geometric = 0, reverified = 0;
  for (const auto& s : r.solutions) {
    geometric += verify_onepoint_geometry(s);
    auto c = check_all(d, s);
    reverified += c.relators.pass && c.sw.pass;
  }
  std::ostringstream out;
  out << "solutions=" << r.solutions.size() << " classes=" << classes << " geometry=" << geometric
      << " reverified=" << reverified;
  bool ok = classes == 1 && geometric == r.solutions.size() && reverified == r.solutions.size();
  return {ok, out.str()};
}

Outcome divisibility() {
  int mismatches = 0;
  for (std::int64_t b2 = 1; b2 <= 1000; ++b2) {
    if (divisibility_obstruction(b2).pass != (b2 % 4 == 0)) ++mismatches;
  }
  bool z_fails = !connected_sum_obstruction({1, 1, 1, 1}).pass;
  std::ostringstream s;
  s << "mismatches=" << mismatches << " [1,1,1,1] fails=" << z_fails;
  return {mismatches == 0 && z_fails, s.str()};
}

Outcome bundle_calculus() {
  auto p = bundle_profile(1, 4, -1);
  bool flat_case = p.p1 == 0 && p.energy == 0 && p.flat && p.compact && p.irreducible_locked &&
                   p.expected_dimension == 0;
  bool window = in_compactness_window(Rational(0)) && in_compactness_window(Rational(1, 4)) &&
                in_compactness_window(Rational(1, 2)) && in_compactness_window(Rational(3, 4)) &&
                !in_compactness_window(Rational(1));
  std::ostringstream s;
  s << "p1=" << p.p1 << " energy=" << format_rational(p.energy) << " d=" << p.expected_dimension
    << " window=" << window;
  return {flat_case && window, s.str()};
}

Outcome reducibility() {
  std::mt19937_64 rng(20261019);
  int disagreements = 0;
  for (int t = 0; t < 1000; ++t) {
    std::int64_t b2 = 1 + static_cast<std::int64_t>(rng() % 12);
    std::int64_t c2 = static_cast<std::int64_t>(rng() % 17) - 8;
    if (bundle_profile(1, b2, c2).irreducible_locked == oracle::splittable(b2, c2)) ++disagreements;
  }
  return {disagreements == 0, "1000 samples, disagreements=" + std::to_string(disagreements)};
}

Outcome presentation() {
  std::mt19937_64 rng(6);
  auto g = FiniteRotationGroup::octahedral();
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  int disagreements = 0, satisfied = 0;
  for (int t = 0; t < 500; ++t) {
    oracle::DiagramShape shape;
    shape.circles = 1 + static_cast<int>(rng() % 4);
    shape.hopfs = static_cast<int>(rng() % 3);
    shape.arcs = static_cast<int>(rng() % 7);
    auto d = oracle::random_diagram(rng, shape);
    Decoration dec;
    if (t % 2) {
      dec = oracle::propagated_decoration(d, g, rng);
    } else {
      for (const auto& n : d.nodes()) dec.emplace(n.id, g.element(pick(rng)));
    }
    bool direct = check_relators(d, dec).pass;
    if (direct != evaluate_representation(extract_presentation(d), dec)) ++disagreements;
    satisfied += direct;
  }
  std::ostringstream s;
  s << "500 diagrams, disagreements=" << disagreements << " satisfied=" << satisfied;
  return {disagreements == 0, s.str()};
}

Outcome genus() {
  auto arc = [](std::string id, const std::string& s, long ss, const std::string& e, long es) {
    ArcBand a;
    a.id = std::move(id);
    a.start = {{s, std::nullopt}, ss};
    a.end = {{e, std::nullopt}, es};
    return a;
  };
  auto total = [](const SingularLinkDiagram& d) {
    long g = 0;
    for (const auto& c : ribbon_genus(d)) g += c.genus;
    return g;
  };
  SingularLinkDiagram interleaved, nested;
  interleaved.add_circle("c");
  interleaved.add_arc(arc("p", "c", 0, "c", 2));
  interleaved.add_arc(arc("q", "c", 1, "c", 3));
  nested.add_circle("c");
  nested.add_arc(arc("p", "c", 0, "c", 3));
  nested.add_arc(arc("q", "c", 1, "c", 2));

  std::mt19937_64 rng(7);
  int tree_failures = 0, relabel_failures = 0;
  for (int t = 0; t < 200; ++t) {
    oracle::DiagramShape tree;
    tree.circles = 1 + static_cast<int>(rng() % 5);
    tree.hopfs = static_cast<int>(rng() % 3);
    tree.arcs = tree.circles + 2 * tree.hopfs - 1;
    tree.connected = true;
    if (total(oracle::random_diagram(rng, tree)) != 0) ++tree_failures;

    oracle::DiagramShape any;
    any.arcs = static_cast<int>(rng() % 9);
    auto d = oracle::random_diagram(rng, any);
    auto before = ribbon_genus(d), after = ribbon_genus(oracle::relabel_slots(d, rng));
    for (std::size_t i = 0; i < before.size(); ++i) relabel_failures += before[i].genus != after[i].genus;
  }
  long gi = total(interleaved), gn = total(nested);
  std::ostringstream s;
  s << "interleaved=" << gi << " nested=" << gn << " tree failures=" << tree_failures
    << " relabel failures=" << relabel_failures;
  return {gi == 1 && gn == 0 && tree_failures == 0 && relabel_failures == 0, s.str()};
}

Outcome rotation_layer() {
  auto perms = CubePermutation::all();
  int pairs = 0, homomorphic = 0;
  for (const auto& p : perms) {
    for (const auto& q : perms) {
      ++pairs;
      homomorphic += perm_to_rotation(p * q) == perm_to_rotation(p) * perm_to_rotation(q);
    }
  }
  auto g = FiniteRotationGroup::octahedral();
  auto inv = g.involutions();
  bool round_trip = std::all_of(inv.begin(), inv.end(), [&](std::size_t i) {
    return from_axis_pi(axis_of_involution(g.element(i))) == g.element(i);
  });
  AxisLine a12 = axis_of_involution(rot("(12)")), a34 = axis_of_involution(rot("(34)"));
  bool axes = a12.direction() == Vector3{0, 1, 1} && a34.direction() == Vector3{0, 1, -1} && is_perpendicular(a12, a34);
  std::ostringstream s;
  s << "homomorphic " << homomorphic << "/" << pairs << " involutions=" << inv.size() << " axes=" << axes
    << " axis round trip=" << round_trip;
  return {pairs == 576 && homomorphic == 576 && inv.size() == 9 && axes && round_trip, s.str()};
}

Outcome round_trip() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(SLDREP_FIXTURE_DIR)) {
    if (e.path().extension() == ".sld") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  int identical = 0;
  bool has_ref1 = false;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    auto doc = sld::parse(text.str());
    bool same = sld::serialize(doc) == text.str() && sld::parse(sld::serialize(doc)) == doc;
    identical += same;
    if (f.filename() == "ref1.sld") has_ref1 = same && doc.diagram() == fixtures::ref1_diagram();
  }
  std::ostringstream s;
  s << identical << "/" << files.size() << " files byte-identical, ref1=" << has_ref1;
  return {!files.empty() && identical == static_cast<int>(files.size()) && has_ref1, s.str()};
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "REF-1 certificate check", 1000, ref1_certificate},
      {2, "one-point representation space of REF-1 over the cube group", 60000, one_point},
      {3, "divisibility obstruction and connected sum", 1000, divisibility},
      {4, "bundle calculus and compactness window", 1000, bundle_calculus},
      {5, "reducibility versus brute force", 10000, reducibility},
      {6, "relators versus presentation evaluation", 30000, presentation},
      {7, "ribbon genus", 5000, genus},
      {8, "rotation layer", 1000, rotation_layer},
      {9, "parser round trip on the fixture corpus", 1000, round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass && ms < c.limit_ms;
    failures += !pass;
    std::printf("%s criterion %d: %s (%.1f ms, limit %.0f ms) %s\n", pass ? "PASS" : "FAIL", c.id, c.name, ms,
                c.limit_ms, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
