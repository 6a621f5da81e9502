#include "gdtb/erst_reader.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdtb {

namespace {

struct XmlNode {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::vector<XmlNode> children;
  std::string text;
  int line = 0;
  int col = 0;

  std::string attr(const std::string& key, const std::string& fallback = "") const {
    auto it = attrs.find(key);
    return it == attrs.end() ? fallback : it->second;
  }
};

// Minimal XML reader covering the rs3/rs4 element subset: declaration,
// comments, elements with double- or single-quoted attributes, text content,
// and the five predefined entities.
class XmlParser {
 public:
  explicit XmlParser(const std::string& text) : text_(text) {}

  XmlNode parse() {
    skip_prolog();
    XmlNode root = parse_element();
    skip_ws_and_comments();
    if (pos_ < text_.size()) fail("trailing content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("XML parse error at line " + std::to_string(line_) +
                             ", column " + std::to_string(col_) + ": " + msg);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char next() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool consume(const std::string& s) {
    if (text_.compare(pos_, s.size(), s) != 0) return false;
    for (size_t i = 0; i < s.size(); ++i) next();
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) next();
  }

  void skip_ws_and_comments() {
    for (;;) {
      skip_ws();
      if (!consume("<!--")) return;
      while (!consume("-->")) next();
    }
  }

  void skip_prolog() {
    skip_ws();
    if (consume("<?")) {
      while (!consume("?>")) next();
    }
    skip_ws_and_comments();
  }

  std::string parse_name() {
    std::string name;
    while (pos_ < text_.size()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          c == ':' || c == '.') {
        name += next();
      } else {
        break;
      }
    }
    if (name.empty()) fail("expected a name");
    return name;
  }

  std::string decode_entities(const std::string& raw) {
    std::string out;
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      size_t semi = raw.find(';', i);
      if (semi == std::string::npos) fail("unterminated entity reference");
      std::string ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "amp") out += '&';
      else if (ent == "lt") out += '<';
      else if (ent == "gt") out += '>';
      else if (ent == "quot") out += '"';
      else if (ent == "apos") out += '\'';
      else fail("unknown entity '&" + ent + ";'");
      i = semi;
    }
    return out;
  }

  XmlNode parse_element() {
    if (!consume("<")) fail("expected '<'");
    XmlNode node;
    node.line = line_;
    node.col = col_;
    node.name = parse_name();
    for (;;) {
      skip_ws();
      if (consume("/>")) return node;
      if (consume(">")) break;
      std::string key = parse_name();
      skip_ws();
      if (!consume("=")) fail("expected '=' after attribute name");
      skip_ws();
      char quote = next();
      if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
      std::string value;
      while (peek() != quote) value += next();
      next();
      node.attrs[key] = decode_entities(value);
    }
    // content: text and child elements until the closing tag
    for (;;) {
      if (pos_ >= text_.size()) fail("unterminated element <" + node.name + ">");
      if (consume("<!--")) {
        while (!consume("-->")) next();
        continue;
      }
      if (text_.compare(pos_, 2, "</") == 0) {
        consume("</");
        std::string closing = parse_name();
        if (closing != node.name)
          fail("mismatched closing tag </" + closing + "> for <" + node.name + ">");
        skip_ws();
        if (!consume(">")) fail("expected '>'");
        return node;
      }
      if (peek() == '<') {
        node.children.push_back(parse_element());
        continue;
      }
      std::string raw;
      while (pos_ < text_.size() && peek() != '<') raw += next();
      node.text += decode_entities(raw);
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::vector<std::string> whitespace_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

struct RstNode {
  std::string id;
  bool is_segment = false;
  std::string parent;   // empty for root
  std::string relname;  // empty for root
  int order = 0;        // appearance order
  std::vector<std::string> children;
  Range token_span;  // segments only, before subtree aggregation
};

}  // namespace

const std::vector<std::string>& gum_relation_inventory() {
  static const std::vector<std::string> kInventory = {
      "adversative-antithesis", "adversative-concession", "adversative-contrast",
      "attribution-positive",   "attribution-negative",
      "causal-cause",           "causal-result",
      "context-background",     "context-circumstance",
      "contingency-condition",
      "elaboration-attribute",  "elaboration-additional",
      "explanation-evidence",   "explanation-justify",   "explanation-motivation",
      "evaluation-comment",
      "joint-disjunction",      "joint-list",            "joint-sequence",
      "joint-other",
      "mode-manner",            "mode-means",
      "organization-heading",   "organization-phatic",   "organization-preparation",
      "purpose-attribute",      "purpose-goal",
      "restatement-partial",    "restatement-repetition",
      "topic-question",         "topic-solutionhood",
      "same-unit",
  };
  return kInventory;
}

bool is_gum_relation(const std::string& label) {
  const auto& inv = gum_relation_inventory();
  return std::find(inv.begin(), inv.end(), label) != inv.end();
}

namespace {

[[noreturn]] void unknown_label(const std::string& label) {
  std::string msg = "unknown RST relation label '" + label + "'; expected one of:";
  for (const std::string& l : gum_relation_inventory()) msg += " " + l;
  throw std::runtime_error(msg);
}

}  // namespace

ErstLayer parse_rst(const std::string& xml_text) {
  XmlParser parser(xml_text);
  XmlNode root = parser.parse();
  if (root.name != "rst")
    throw std::runtime_error("expected <rst> root element, got <" + root.name + ">");

  // header relation declarations: name -> "rst" | "multinuc"
  std::map<std::string, std::string> declared;
  const XmlNode* body = nullptr;
  for (const XmlNode& top : root.children) {
    if (top.name == "header") {
      for (const XmlNode& h : top.children) {
        if (h.name != "relations") continue;
        for (const XmlNode& rel : h.children)
          if (rel.name == "rel") declared[rel.attr("name")] = rel.attr("type");
      }
    } else if (top.name == "body") {
      body = &top;
    }
  }
  if (!body) throw std::runtime_error("eRST document has no <body>");

  ErstLayer layer;
  std::map<std::string, RstNode> nodes;
  std::vector<std::string> segment_order;
  std::vector<const XmlNode*> secedges;
  std::vector<const XmlNode*> signal_elems;
  int order = 0;
  int next_token = 0;

  for (const XmlNode& el : body->children) {
    if (el.name == "segment" || el.name == "group") {
      RstNode n;
      n.id = el.attr("id");
      if (n.id.empty())
        throw std::runtime_error("element <" + el.name + "> at line " +
                                 std::to_string(el.line) + " has no id");
      n.is_segment = (el.name == "segment");
      n.parent = el.attr("parent");
      n.relname = el.attr("relname");
      n.order = order++;
      if (n.is_segment) {
        auto toks = whitespace_tokens(el.text);
        n.token_span = {next_token, next_token + static_cast<int>(toks.size())};
        next_token += static_cast<int>(toks.size());
        layer.edu_texts.push_back(el.text);
        for (auto& t : toks) layer.token_forms.push_back(std::move(t));
        segment_order.push_back(n.id);
      }
      if (!n.relname.empty() && n.relname != "span" && !is_gum_relation(n.relname))
        unknown_label(n.relname);
      if (nodes.count(n.id))
        throw std::runtime_error("duplicate node id '" + n.id + "'");
      nodes[n.id] = std::move(n);
    } else if (el.name == "secedges") {
      for (const XmlNode& se : el.children)
        if (se.name == "secedge") secedges.push_back(&se);
    } else if (el.name == "signals") {
      for (const XmlNode& sig : el.children)
        if (sig.name == "signal") signal_elems.push_back(&sig);
    }
  }

  // resolve parents, build children lists
  for (auto& [id, n] : nodes) {
    if (n.parent.empty()) continue;
    auto it = nodes.find(n.parent);
    if (it == nodes.end())
      throw std::runtime_error("dangling node reference: node '" + id +
                               "' has unknown parent '" + n.parent + "'");
    it->second.children.push_back(id);
  }
  for (auto& [id, n] : nodes) {
    std::sort(n.children.begin(), n.children.end(),
              [&](const std::string& a, const std::string& b) {
                return nodes.at(a).order < nodes.at(b).order;
              });
  }

  // EDUs, numbered by text order starting at 1
  std::map<std::string, int> edu_id_of_segment;
  {
    std::vector<std::string> by_pos = segment_order;
    std::sort(by_pos.begin(), by_pos.end(), [&](const auto& a, const auto& b) {
      return nodes.at(a).token_span.begin < nodes.at(b).token_span.begin;
    });
    int eid = 1;
    for (const std::string& sid : by_pos) {
      edu_id_of_segment[sid] = eid;
      Edu e;
      e.id = eid++;
      e.token_span = nodes.at(sid).token_span;
      layer.edus.push_back(e);
    }
  }

  // subtree EDU sets and head EDUs, memoized
  std::map<std::string, std::vector<int>> subtree_edus;
  std::map<std::string, int> head_edu;

  auto is_multinuc_member = [&](const RstNode& n) {
    if (n.relname.empty() || n.relname == "span") return false;
    auto it = declared.find(n.relname);
    if (it != declared.end()) return it->second == "multinuc";
    // fall back: siblings sharing the relname under one parent
    if (n.parent.empty()) return false;
    int sharing = 0;
    for (const std::string& cid : nodes.at(n.parent).children)
      if (nodes.at(cid).relname == n.relname) ++sharing;
    return sharing >= 2;
  };

  std::function<void(const std::string&)> compute = [&](const std::string& id) {
    if (subtree_edus.count(id)) return;
    const RstNode& n = nodes.at(id);
    std::vector<int> edus;
    if (n.is_segment) edus.push_back(edu_id_of_segment.at(id));
    for (const std::string& cid : n.children) {
      compute(cid);
      const auto& sub = subtree_edus.at(cid);
      edus.insert(edus.end(), sub.begin(), sub.end());
    }
    std::sort(edus.begin(), edus.end());
    subtree_edus[id] = std::move(edus);

    if (n.is_segment) {
      head_edu[id] = edu_id_of_segment.at(id);
      return;
    }
    // nucleus descent: span groups follow the relname="span" child, multinuc
    // (and same-unit) groups the leftmost nucleus member
    std::string nucleus;
    for (const std::string& cid : n.children) {
      const RstNode& c = nodes.at(cid);
      if (c.relname == "span" || c.relname == "same-unit" || is_multinuc_member(c)) {
        nucleus = cid;  // children are order-sorted, first hit is leftmost
        break;
      }
    }
    if (nucleus.empty() && !n.children.empty()) nucleus = n.children.front();
    head_edu[id] = nucleus.empty() ? 0 : head_edu.at(nucleus);
  };
  for (const auto& [id, n] : nodes) compute(id);

  auto make_relation = [&](const std::string& rel_id, const std::string& label,
                           Nuclearity nuc, EdgeKind kind, const std::string& src,
                           const std::string& tgt, bool subtract_src_from_tgt) {
    RstRelation r;
    r.id = rel_id;
    r.label = label;
    r.nuclearity = nuc;
    r.edge_kind = kind;
    r.source_edus = subtree_edus.at(src);
    r.target_edus = subtree_edus.at(tgt);
    if (subtract_src_from_tgt) {
      std::vector<int> trimmed;
      std::set<int> src_set(r.source_edus.begin(), r.source_edus.end());
      for (int e : r.target_edus)
        if (!src_set.count(e)) trimmed.push_back(e);
      if (!trimmed.empty()) r.target_edus = std::move(trimmed);
    }
    r.source_head_edu = head_edu.at(src);
    r.target_head_edu = head_edu.at(tgt);
    return r;
  };

  // satellite edges: every parent link with a non-span, non-multinuc relname
  for (const auto& [id, n] : nodes) {
    if (n.relname.empty() || n.relname == "span" || n.relname == "same-unit") continue;
    if (is_multinuc_member(n)) continue;
    layer.relations.push_back(make_relation(id, n.relname,
                                            Nuclearity::SatelliteNucleus,
                                            EdgeKind::Tree, id, n.parent, true));
  }

  // multinuclear nodes: adjacent nucleus pairs, relation id = right member id
  for (const auto& [id, n] : nodes) {
    if (n.is_segment || n.children.empty()) continue;
    std::vector<std::string> members;
    for (const std::string& cid : n.children)
      if (is_multinuc_member(nodes.at(cid)) && nodes.at(cid).relname != "same-unit")
        members.push_back(cid);
    std::sort(members.begin(), members.end(), [&](const auto& a, const auto& b) {
      return subtree_edus.at(a).front() < subtree_edus.at(b).front();
    });
    for (size_t i = 0; i + 1 < members.size(); ++i) {
      const std::string& label = nodes.at(members[i + 1]).relname;
      layer.relations.push_back(make_relation(members[i + 1], label,
                                              Nuclearity::Multinuclear,
                                              EdgeKind::Tree, members[i],
                                              members[i + 1], false));
    }
  }

  // tree-breaking (secondary) edges
  for (const XmlNode* se : secedges) {
    std::string src = se->attr("source"), tgt = se->attr("target");
    std::string label = se->attr("relname");
    if (!nodes.count(src))
      throw std::runtime_error("dangling node reference: secedge source '" + src + "'");
    if (!nodes.count(tgt))
      throw std::runtime_error("dangling node reference: secedge target '" + tgt + "'");
    if (!is_gum_relation(label)) unknown_label(label);
    if (label == "same-unit") continue;
    std::string rel_id = se->attr("id", src + "-" + tgt);
    layer.relations.push_back(make_relation(rel_id, label,
                                            Nuclearity::SatelliteNucleus,
                                            EdgeKind::TreeBreaking, src, tgt, true));
  }

  auto relation_exists = [&](const std::string& rel_id) {
    for (const RstRelation& r : layer.relations)
      if (r.id == rel_id) return true;
    return false;
  };

  // signals: source references a node id (its parent-link relation) or a
  // secedge id; signals on nodes that spawn no relation are skipped
  for (const XmlNode* sig : signal_elems) {
    std::string src = sig->attr("source");
    std::string rel_id;
    if (relation_exists(src)) {
      rel_id = src;
    } else if (nodes.count(src)) {
      // first multinuc member: the pair relation carries the sibling's id
      const RstNode& n = nodes.at(src);
      if (!n.parent.empty()) {
        for (const std::string& cid : nodes.at(n.parent).children) {
          if (cid != src && relation_exists(cid) &&
              nodes.at(cid).relname == n.relname) {
            rel_id = cid;
            break;
          }
        }
      }
      if (rel_id.empty()) continue;  // node exists but spawns no relation
    } else {
      throw std::runtime_error("dangling node reference: signal source '" + src + "'");
    }
    Signal s;
    s.relation_id = rel_id;
    s.signal_class = sig->attr("type");
    s.signal_type = sig->attr("type");
    s.signal_subtype = sig->attr("subtype");
    for (const std::string& t : whitespace_tokens(sig->attr("tokens"))) {
      std::string piece = t;
      if (!piece.empty() && piece.back() == ',') piece.pop_back();
      size_t pos = 0;
      while (pos < piece.size()) {
        size_t comma = piece.find(',', pos);
        std::string num = piece.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!num.empty()) s.token_indices.push_back(std::stoi(num) - 1);  // 1-based in rs4
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    std::sort(s.token_indices.begin(), s.token_indices.end());
    for (int ti : s.token_indices)
      if (ti < 0 || ti >= next_token)
        throw std::runtime_error("signal token index out of range: " +
                                 std::to_string(ti + 1));
    if (s.token_indices.empty() && s.signal_class == kConnectiveSignalClass)
      throw std::runtime_error("connective signal on '" + src + "' has no tokens");
    layer.signals.push_back(std::move(s));
  }

  // deterministic relation order: by source span start, then id
  std::sort(layer.relations.begin(), layer.relations.end(),
            [](const RstRelation& a, const RstRelation& b) {
              if (a.source_edus.front() != b.source_edus.front())
                return a.source_edus.front() < b.source_edus.front();
              return a.id < b.id;
            });
  return layer;
}

ErstLayer parse_rst_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open RST file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_rst(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace gdtb
