#include "sldrep/fixtures.hpp"

namespace sldrep::fixtures {

namespace {

CircleRef ref(const std::string& node, char member = 0) {
  if (member == 0) return {node, std::nullopt};
  return {node, member};
}

ArcBand arc(std::string id, CircleRef from, long from_slot, CircleRef to, long to_slot,
            std::vector<CircleRef> crossed) {
  ArcBand a;
  a.id = std::move(id);
  a.start = {std::move(from), from_slot};
  a.end = {std::move(to), to_slot};
  for (auto& c : crossed) a.word.push_back({std::move(c), 1});
  return a;
}

SingularLinkDiagram ref1_with_suffix(const std::string& s, SingularLinkDiagram d = {}) {
  const std::string tl = "TL" + s, tr = "TR" + s, bl = "BL" + s, br = "BR" + s, y = "Y" + s;
  for (const auto& h : {tl, tr, bl, br}) d.add_hopf(h);
  d.add_circle(y);
  d.add_arc(arc("A1" + s, ref(tl, 'a'), 0, ref(tl, 'b'), 0, {ref(bl, 'a')}));
  d.add_arc(arc("A2" + s, ref(tr, 'a'), 0, ref(tr, 'b'), 0, {ref(br, 'a')}));
  d.add_arc(arc("A3" + s, ref(bl, 'a'), 0, ref(bl, 'b'), 0, {ref(tl, 'a')}));
  d.add_arc(arc("A4" + s, ref(br, 'a'), 0, ref(br, 'b'), 0, {ref(tr, 'a')}));
  d.add_arc(arc("A5" + s, ref(tl, 'a'), 1, ref(bl, 'a'), 1, {ref(tr, 'a'), ref(br, 'a')}));
  d.add_arc(arc("A6" + s, ref(tr, 'a'), 1, ref(br, 'a'), 1, {ref(tl, 'a'), ref(bl, 'a')}));
  d.add_arc(arc("A7" + s, ref(tl, 'b'), 1, ref(y), 0, {ref(tl, 'a'), ref(y)}));
  d.add_arc(arc("A8" + s, ref(bl, 'b'), 1, ref(tr, 'a'), 2, {ref(bl, 'a'), ref(tr, 'a')}));
  return d;
}

}  // namespace

SingularLinkDiagram ref1_diagram() { return ref1_with_suffix(""); }

Decoration ref1_decoration() {
  return {{"TL", rot("(12)")}, {"TR", rot("(14)")}, {"BL", rot("(34)")}, {"BR", rot("(23)")}, {"Y", rot("(24)")}};
}

std::vector<std::string> ref1_hopf_order() { return {"TL", "TR", "BL", "BR"}; }

SingularLinkDiagram ref1_double_diagram() { return ref1_with_suffix("_2", ref1_with_suffix("_1")); }

}  // namespace sldrep::fixtures
