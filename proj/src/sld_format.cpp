#include "sldrep/sld_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sldrep::sld {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

RotationElement ElementSpec::element() const {
  if (const auto* p = std::get_if<CubePermutation>(&value)) return perm_to_rotation(*p);
  return RotationElement(std::get<Matrix3>(value));
}

std::string ElementSpec::to_string() const {
  if (const auto* p = std::get_if<CubePermutation>(&value)) return "perm " + p->to_string();
  return "matrix " + std::get<Matrix3>(value).to_string();
}

ElementSpec spec_for(const RotationElement& g) {
  if (auto p = rotation_to_perm(g)) return {*p};
  return {g.matrix()};
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::vector<Token> tokens) : line_(line_no), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t col = pos_ < tokens_.size() ? tokens_[pos_].column
                      : tokens_.empty()     ? 1
                                            : tokens_.back().column + tokens_.back().text.size();
    throw ParseError(line_, col, message);
  }
  [[noreturn]] void fail_at(std::size_t token, const std::string& message) const {
    throw ParseError(line_, tokens_[token].column, message);
  }

  bool done() const { return pos_ == tokens_.size(); }
  std::size_t pos() const { return pos_; }
  const std::string& peek() const { return tokens_[pos_].text; }

  std::string next(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return tokens_[pos_++].text;
  }

  void expect(const char* keyword) {
    if (done() || tokens_[pos_].text != keyword) fail(std::string("expected '") + keyword + "'");
    ++pos_;
  }

  std::string id(const char* what) {
    std::string s = next(what);
    if (!valid_id(s)) fail_at(pos_ - 1, std::string("invalid ") + what + " '" + s + "'");
    return s;
  }

  long integer(const char* what) {
    std::string s = next(what);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail_at(pos_ - 1, std::string("expected integer ") + what);
    return v;
  }

  CircleRef circle_ref(std::string_view text, std::size_t token) const {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
      if (!valid_id(text)) fail_at(token, "invalid circle reference '" + std::string(text) + "'");
      return {std::string(text), std::nullopt};
    }
    std::string_view node = text.substr(0, dot);
    std::string_view member = text.substr(dot + 1);
    if (!valid_id(node) || (member != "a" && member != "b")) {
      fail_at(token, "invalid circle reference '" + std::string(text) + "'");
    }
    return {std::string(node), member[0]};
  }

  CircleRef circle_ref() {
    std::string s = next("circle reference");
    return circle_ref(s, pos_ - 1);
  }

  Crossing crossing() {
    std::size_t token = pos_;
    std::string s = next("crossing");
    auto colon = s.rfind(':');
    if (colon == std::string::npos || colon + 2 != s.size() || (s.back() != '+' && s.back() != '-')) {
      fail_at(token, "crossing must look like REF:+ or REF:-, got '" + s + "'");
    }
    return {circle_ref(std::string_view(s).substr(0, colon), token), s.back() == '+' ? 1 : -1};
  }

  ElementSpec element() {
    std::size_t kind_token = pos_;
    std::string kind = next("'perm' or 'matrix'");
    if (kind == "perm") {
      if (done()) fail("expected cycle notation");
      std::string cycles;
      while (!done()) cycles += tokens_[pos_++].text;
      try {
        return {CubePermutation::parse(cycles)};
      } catch (const std::invalid_argument& e) {
        fail_at(kind_token + 1, e.what());
      }
    }
    if (kind == "matrix") {
      std::array<ExactScalar, 9> entries;
      for (auto& e : entries) {
        std::string s = next("matrix entry");
        try {
          e = ExactScalar::parse(s);
        } catch (const std::invalid_argument& err) {
          fail_at(pos_ - 1, "bad scalar '" + s + "': " + err.what());
        }
      }
      Matrix3 m(entries);
      try {
        RotationElement check(m);
      } catch (const NotARotation& err) {
        fail_at(kind_token, std::string("not a rotation: ") + err.what());
      }
      return {m};
    }
    fail_at(kind_token, "expected 'perm' or 'matrix', got '" + kind + "'");
  }

 private:
  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

SldDocument parse(std::string_view text) {
  SldDocument doc;
  std::set<std::string> node_ids;
  std::set<std::string> arc_ids;
  std::map<std::string, std::pair<std::size_t, std::size_t>> decorated;  // node -> (line, column)
  bool have_group = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    std::string line = trim(raw);
    if (line.empty()) {
      doc.statements.emplace_back(BlankStmt{});
      continue;
    }
    if (line.front() == '#') {
      doc.statements.emplace_back(CommentStmt{line});
      continue;
    }
    LineParser p(line_no, tokenize(raw));
    std::string keyword = p.next("keyword");
    if (keyword == "group") {
      std::string name = p.next("group name");
      auto g = parse_group_name(name);
      if (!g) p.fail_at(1, "unknown group '" + name + "'");
      if (have_group) p.fail_at(0, "duplicate group statement");
      have_group = true;
      doc.statements.emplace_back(GroupStmt{*g});
    } else if (keyword == "circle" || keyword == "hopf") {
      std::string id = p.id("node id");
      if (!node_ids.insert(id).second) p.fail_at(1, "duplicate id '" + id + "'");
      if (keyword == "circle") {
        doc.statements.emplace_back(CircleStmt{id});
      } else {
        doc.statements.emplace_back(HopfStmt{id});
      }
    } else if (keyword == "arc") {
      ArcBand a;
      a.id = p.id("arc id");
      if (!arc_ids.insert(a.id).second) p.fail_at(1, "duplicate id '" + a.id + "'");
      p.expect("from");
      a.start.circle = p.circle_ref();
      p.expect("slot");
      a.start.slot = p.integer("slot");
      p.expect("to");
      a.end.circle = p.circle_ref();
      p.expect("slot");
      a.end.slot = p.integer("slot");
      p.expect("word");
      while (!p.done() && p.peek() != "twist") a.word.push_back(p.crossing());
      if (!p.done()) {
        p.expect("twist");
        a.twist = p.integer("twist");
      }
      doc.statements.emplace_back(ArcStmt{std::move(a)});
    } else if (keyword == "decorate") {
      std::size_t node_token = p.pos();
      std::string node = p.id("node id");
      if (decorated.contains(node)) p.fail_at(node_token, "node '" + node + "' decorated twice");
      p.expect("=");
      ElementSpec elem = p.element();
      decorated.emplace(node, std::pair{line_no, tokenize(raw)[node_token].column});
      doc.statements.emplace_back(DecorateStmt{node, std::move(elem)});
    } else {
      p.fail_at(0, "unknown keyword '" + keyword + "'");
    }
    if (!p.done()) p.fail("unexpected trailing token '" + p.peek() + "'");
  }
  for (const auto& [node, where] : decorated) {
    if (!node_ids.contains(node)) throw ParseError(where.first, where.second, "decorated node '" + node + "' is not declared");
  }
  return doc;
}

namespace {

struct StatementWriter {
  std::ostream& out;
  void operator()(const GroupStmt& s) const { out << "group " << to_string(s.group); }
  void operator()(const CircleStmt& s) const { out << "circle " << s.id; }
  void operator()(const HopfStmt& s) const { out << "hopf " << s.id; }
  void operator()(const ArcStmt& s) const {
    const ArcBand& a = s.arc;
    out << "arc " << a.id << " from " << a.start.circle.to_string() << " slot " << a.start.slot << " to "
        << a.end.circle.to_string() << " slot " << a.end.slot << " word";
    for (const auto& c : a.word) out << ' ' << c.disc.to_string() << ':' << (c.sign > 0 ? '+' : '-');
    if (a.twist) out << " twist " << *a.twist;
  }
  void operator()(const DecorateStmt& s) const { out << "decorate " << s.node << " = " << s.element.to_string(); }
  void operator()(const CommentStmt& s) const { out << s.text; }
  void operator()(const BlankStmt&) const {}
};

}  // namespace

std::string serialize(const SldDocument& doc) {
  std::ostringstream out;
  for (const auto& s : doc.statements) {
    std::visit(StatementWriter{out}, s);
    out << '\n';
  }
  return out.str();
}

SingularLinkDiagram SldDocument::diagram() const {
  SingularLinkDiagram d;
  for (const auto& s : statements) {
    if (const auto* c = std::get_if<CircleStmt>(&s)) d.add_circle(c->id);
    if (const auto* h = std::get_if<HopfStmt>(&s)) d.add_hopf(h->id);
    if (const auto* a = std::get_if<ArcStmt>(&s)) d.add_arc(a->arc);
  }
  return d;
}

Decoration SldDocument::decoration() const {
  Decoration dec;
  for (const auto& s : statements) {
    if (const auto* d = std::get_if<DecorateStmt>(&s)) dec.emplace(d->node, d->element.element());
  }
  return dec;
}

std::optional<GroupName> SldDocument::group() const {
  for (const auto& s : statements) {
    if (const auto* g = std::get_if<GroupStmt>(&s)) return g->group;
  }
  return std::nullopt;
}

SldDocument make_document(const SingularLinkDiagram& d, const Decoration& dec, std::optional<GroupName> group) {
  SldDocument doc;
  if (group) doc.statements.emplace_back(GroupStmt{*group});
  for (const auto& n : d.nodes()) {
    if (n.kind == NodeKind::hopf) {
      doc.statements.emplace_back(HopfStmt{n.id});
    } else {
      doc.statements.emplace_back(CircleStmt{n.id});
    }
  }
  for (const auto& a : d.arcs()) doc.statements.emplace_back(ArcStmt{a});
  for (const auto& n : d.nodes()) {
    auto it = dec.find(n.id);
    if (it != dec.end()) doc.statements.emplace_back(DecorateStmt{n.id, spec_for(it->second)});
  }
  return doc;
}

SldDocument load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace sldrep::sld
