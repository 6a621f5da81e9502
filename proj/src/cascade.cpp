#include "gdtb/cascade.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "gdtb/arg_spans.hpp"
#include "gdtb/erst_reader.hpp"

namespace gdtb {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, sep)) out.push_back(piece);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::set<std::string> parse_label_set(const std::string& field) {
  std::set<std::string> out;
  if (field == "*" || field.empty()) return out;
  for (const std::string& l : split(field, ';')) {
    std::string t = trim(l);
    if (t.empty()) continue;
    if (!is_gum_relation(t))
      throw std::runtime_error("pattern file references unknown RST label '" + t + "'");
    out.insert(t);
  }
  return out;
}

CandidateRelation seed_candidate(const Document& doc, const RstRelation& rel) {
  CandidateRelation c;
  c.source_span = doc.edu_span(rel.source_edus);
  c.target_span = doc.edu_span(rel.target_edus);
  c.source_edus = rel.source_edus;
  c.target_edus = rel.target_edus;
  c.source_head_edu = rel.source_head_edu;
  c.target_head_edu = rel.target_head_edu;
  c.rst_label = rel.label;
  c.satellite_is_source = (rel.nuclearity == Nuclearity::SatelliteNucleus);
  return c;
}

// Dependency subtree of a token, as the min..max token range it dominates.
Range subtree_range(const Document& doc, int root) {
  int lo = root, hi = root;
  std::vector<int> stack{root};
  std::vector<bool> seen(doc.tokens.size(), false);
  seen[root] = true;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    lo = std::min(lo, cur);
    hi = std::max(hi, cur);
    for (const Token& t : doc.tokens) {
      if (t.head && *t.head == cur && !seen[t.index]) {
        seen[t.index] = true;
        stack.push_back(t.index);
      }
    }
  }
  return {lo, hi + 1};
}

bool has_feat(const Token& t, const std::string& feat) {
  return t.feats.find(feat) != std::string::npos;
}

bool is_finite_verb(const Token& t) {
  if (t.upos != "VERB" && t.upos != "AUX") return false;
  if (has_feat(t, "VerbForm=Fin")) return true;
  return t.xpos == "VBD" || t.xpos == "VBZ" || t.xpos == "VBP" || t.xpos == "MD";
}

bool is_participle(const Token& t) {
  if (has_feat(t, "VerbForm=Part")) return true;
  return t.xpos == "VBG" || t.xpos == "VBN";
}

std::string lower_form(const Document& doc, int i) {
  return to_lower(doc.tokens[i].form);
}

// The most local RST relation whose two argument spans sit on opposite sides
// of the left/right division. Tree edges win over tree-breaking ones.
const RstRelation* find_linking_relation(const Document& doc, const Span& left,
                                         const Span& right) {
  const RstRelation* best = nullptr;
  int best_size = 0;
  bool best_tree = false;
  for (const RstRelation& r : doc.rst_relations) {
    Span src = doc.edu_span(r.source_edus);
    Span tgt = doc.edu_span(r.target_edus);
    bool forward = src.overlaps(left) && !src.overlaps(right) &&
                   tgt.overlaps(right) && !tgt.overlaps(left);
    bool backward = src.overlaps(right) && !src.overlaps(left) &&
                    tgt.overlaps(left) && !tgt.overlaps(right);
    if (!forward && !backward) continue;
    int size = src.size() + tgt.size();
    bool tree = (r.edge_kind == EdgeKind::Tree);
    if (!best || (tree && !best_tree) ||
        (tree == best_tree && size < best_size)) {
      best = &r;
      best_size = size;
      best_tree = tree;
    }
  }
  return best;
}

// EntRel criterion: a definite or pronominal mention in the right sentence
// corefers with a mention in the left sentence.
bool entity_coref_between(const Document& doc, int left_sent, int right_sent) {
  for (const Mention& m2 : doc.mentions) {
    if (m2.sent_index != right_sent) continue;
    if (!m2.is_pronoun && !m2.is_definite) continue;
    for (const Mention& m1 : doc.mentions)
      if (m1.sent_index == left_sent && m1.entity_id == m2.entity_id) return true;
  }
  return false;
}

bool is_entity_class_label(const std::string& label) {
  return label.rfind("joint", 0) == 0 || label.rfind("elaboration", 0) == 0;
}

int edu_at(const Document& doc, int token_index) {
  for (const Edu& e : doc.edus)
    if (e.token_span.contains(token_index)) return e.id;
  return 0;
}

// Suppression test: the candidate's head-EDU pair coincides with the
// junction's adjoining EDUs, or it was spawned by the junction's own
// RST relation.
bool covers_junction(const Document& doc, const CandidateRelation& c,
                     const Junction& j, const std::string& junction_rel_id,
                     const std::string& candidate_rel_id) {
  if (!junction_rel_id.empty() && junction_rel_id == candidate_rel_id) return true;
  if (j.left_span.empty() || j.right_span.empty()) return false;
  int left_edu = edu_at(doc, j.left_span.last());
  int right_edu = edu_at(doc, j.right_span.first());
  std::pair<int, int> a{std::min(c.source_head_edu, c.target_head_edu),
                        std::max(c.source_head_edu, c.target_head_edu)};
  std::pair<int, int> b{std::min(left_edu, right_edu), std::max(left_edu, right_edu)};
  return a == b;
}

}  // namespace

std::vector<AltLexPattern> load_altlex_patterns(const std::string& path,
                                                const SenseHierarchy& hierarchy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open AltLex pattern file: " + path);
  std::vector<AltLexPattern> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 4)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 4 columns");
    AltLexPattern p;
    p.id = trim(cols[0]);
    p.token_regex = trim(cols[1]);
    p.compatible_labels = parse_label_set(trim(cols[2]));
    p.sense = hierarchy.normalize(trim(cols[3]));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<AltLexCPattern> load_altlexc_patterns(const std::string& path,
                                                  const SenseHierarchy& hierarchy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open AltLexC pattern file: " + path);
  std::vector<AltLexCPattern> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 4)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 4 columns");
    AltLexCPattern p;
    p.id = trim(cols[0]);
    p.detector = trim(cols[1]);
    p.compatible_labels = parse_label_set(trim(cols[2]));
    p.sense = hierarchy.normalize(trim(cols[3]));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CandidateRelation> generate_explicit(const Document& doc,
                                                 const MappingResources& resources) {
  std::vector<CandidateRelation> out;
  std::set<std::string> done;  // one candidate per relation
  for (const Signal& sig : doc.signals) {
    if (sig.signal_class != kConnectiveSignalClass) continue;
    if (done.count(sig.relation_id)) continue;
    const RstRelation* rel = doc.relation_by_id(sig.relation_id);
    if (!rel || rel->label == "same-unit") continue;
    done.insert(sig.relation_id);

    CandidateRelation c = seed_candidate(doc, *rel);
    c.rel_type = RelType::Explicit;
    for (int ti : sig.token_indices) c.conn_tokens.add(Range{ti, ti + 1});
    c.conn_text = to_lower(doc.text(c.conn_tokens));
    c.provenance = "explicit:signal:" + sig.relation_id;

    AllowedSenses allowed = resources.allowed_senses(c.conn_text, rel->label);
    c.candidate_senses = allowed.senses;
    if (allowed.unknown_connective) c.flags.insert(RelationFlag::UnknownConnective);
    if (allowed.map_conflict) c.flags.insert(RelationFlag::MapConflict);
    if (const RstMapEntry* e = resources.map_entry(rel->label))
      c.direction = e->direction;
    if (c.candidate_senses.empty()) {
      // neither lexicon nor map constrains this pair
      c.candidate_senses.push_back(
          resources.hierarchy().normalize("Expansion.Conjunction"));
      c.flags.insert(RelationFlag::LowConfidence);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Junction> find_implicit_junctions(const Document& doc) {
  std::vector<Junction> out;

  // inter-sentential: adjacent same-paragraph sentence pairs
  for (size_t s = 0; s + 1 < doc.sentences.size(); ++s) {
    const Range& a = doc.sentences[s];
    const Range& b = doc.sentences[s + 1];
    if (doc.tokens[a.begin].par_index != doc.tokens[b.begin].par_index) continue;
    Junction j;
    j.kind = JunctionKind::InterSentential;
    j.left_span = Span(a);
    j.right_span = Span(b);
    if (const RstRelation* rel = find_linking_relation(doc, j.left_span, j.right_span))
      j.rst_relation_id = rel->id;
    out.push_back(std::move(j));
  }

  auto intra_junction = [&](JunctionKind kind, int clause_root) {
    Range clause = subtree_range(doc, clause_root);
    const Token& root_tok = doc.tokens[clause_root];
    if (!root_tok.head) return;
    const Range& sent = doc.sentences[root_tok.sent_index];
    Span right(clause);
    Span left = Span(sent).subtract(right);
    if (left.empty() || right.empty()) return;
    // keep the contiguous piece hosting the matrix verb
    Span matrix;
    for (const Range& r : left.ranges())
      if (r.contains(*root_tok.head)) matrix = Span(r);
    if (matrix.empty()) matrix = Span(left.ranges().front());
    Junction j;
    j.kind = kind;
    if (matrix.first() < right.first()) {
      j.left_span = matrix;
      j.right_span = right;
    } else {
      j.left_span = right;
      j.right_span = matrix;
    }
    if (const RstRelation* rel = find_linking_relation(doc, j.left_span, j.right_span))
      j.rst_relation_id = rel->id;
    out.push_back(std::move(j));
  };

  for (const Token& t : doc.tokens) {
    if (t.deprel.rfind("advcl", 0) == 0 && t.head) {
      Range clause = subtree_range(doc, t.index);
      // purpose infinitive: clause begins with infinitival "to"
      const Token& first = doc.tokens[clause.begin];
      if (first.upos == "PART" && to_lower(first.form) == "to") {
        intra_junction(JunctionKind::PurposeInfinitive, t.index);
        continue;
      }
      if (is_participle(t)) {
        intra_junction(JunctionKind::ParticipialAdverbial, t.index);
        continue;
      }
    }
    // zero coordination: conj between finite verbs with no cc in between
    if (t.deprel == "conj" && t.head && is_finite_verb(t) &&
        is_finite_verb(doc.tokens[*t.head])) {
      bool has_cc = false;
      for (const Token& d : doc.tokens)
        if (d.head && *d.head == t.index && d.deprel == "cc") has_cc = true;
      if (!has_cc) intra_junction(JunctionKind::ZeroCoordination, t.index);
    }
  }

  std::sort(out.begin(), out.end(), [](const Junction& a, const Junction& b) {
    if (a.left_span.first() != b.left_span.first())
      return a.left_span.first() < b.left_span.first();
    return a.right_span.first() < b.right_span.first();
  });
  return out;
}

std::vector<CandidateRelation> generate_implicit(
    const Document& doc, const std::vector<Junction>& junctions,
    const MappingResources& resources, const BaselineTable& baseline,
    const HintsFile* hints,
    const std::vector<CandidateRelation>& explicit_candidates) {
  std::vector<CandidateRelation> out;

  // the sanctioned and-then double on sequence relations
  for (const CandidateRelation& e : explicit_candidates) {
    if (e.rst_label != "joint-sequence" || e.candidate_senses.empty()) continue;
    const SenseLabel& top = e.candidate_senses.front();
    if (top.level1 != "Expansion" || top.level2 != "Conjunction") continue;
    CandidateRelation c = e;
    c.rel_type = RelType::Implicit;
    c.conn_tokens = Span();
    c.conn_text = "then";
    c.candidate_senses = {
        resources.hierarchy().normalize("Temporal.Asynchronous.Precedence")};
    c.senses.clear();
    c.flags.clear();
    c.direction = DirectionRule::None;
    c.provenance = "implicit:and-then";
    out.push_back(std::move(c));
  }

  for (const Junction& j : junctions) {
    if (!j.rst_relation_id) continue;
    const RstRelation* rel = doc.relation_by_id(*j.rst_relation_id);
    if (!rel) continue;
    if (rel->label == "topic-question") continue;  // hypophora module's job
    // entity-mediated elaborations (and unmappable joint-other) become EntRel
    if (j.kind == JunctionKind::InterSentential &&
        (rel->label.rfind("elaboration", 0) == 0 || rel->label == "joint-other") &&
        entity_coref_between(doc, doc.sentence_of(j.left_span.first()),
                             doc.sentence_of(j.right_span.first())))
      continue;
    bool suppressed = false;
    for (const CandidateRelation& e : explicit_candidates) {
      // identify the explicit candidate's originating relation via provenance
      std::string rel_id = e.provenance.substr(e.provenance.rfind(':') + 1);
      if (covers_junction(doc, e, j, *j.rst_relation_id, rel_id)) {
        suppressed = true;
        break;
      }
    }
    if (suppressed) continue;

    CandidateRelation c = seed_candidate(doc, *rel);
    c.rel_type = RelType::Implicit;
    auto [conn, origin] = predict_connective(baseline, hints, doc.doc_id,
                                             c.source_span, c.target_span, rel->label);
    c.conn_text = conn;
    AllowedSenses allowed = resources.allowed_senses(conn, rel->label);
    c.candidate_senses = allowed.senses;
    if (allowed.unknown_connective) c.flags.insert(RelationFlag::UnknownConnective);
    if (allowed.map_conflict) c.flags.insert(RelationFlag::MapConflict);
    if (origin == ConnectiveOrigin::BaselineFallback)
      c.flags.insert(RelationFlag::LowConfidence);
    if (rel->label == "context-background" || rel->label == "joint-other")
      c.flags.insert(RelationFlag::LowConfidence);
    if (const RstMapEntry* e = resources.map_entry(rel->label))
      c.direction = e->direction;
    if (c.candidate_senses.empty()) {
      c.candidate_senses.push_back(
          resources.hierarchy().normalize("Expansion.Conjunction"));
      c.flags.insert(RelationFlag::LowConfidence);
    }
    std::string origin_tag = origin == ConnectiveOrigin::Hint ? "hint" : "baseline";
    c.provenance = "implicit:" + origin_tag + ":" + rel->id;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CandidateRelation> match_altlex(
    const Document& doc, const std::vector<AltLexPattern>& patterns,
    const std::vector<Junction>& junctions,
    const std::vector<CandidateRelation>& covered) {
  std::vector<CandidateRelation> out;
  for (const Junction& j : junctions) {
    if (!j.rst_relation_id) continue;
    const RstRelation* rel = doc.relation_by_id(*j.rst_relation_id);
    if (!rel) continue;
    bool suppressed = false;
    for (const CandidateRelation& e : covered) {
      std::string rel_id = e.provenance.substr(e.provenance.rfind(':') + 1);
      if (covers_junction(doc, e, j, *j.rst_relation_id, rel_id)) {
        suppressed = true;
        break;
      }
    }
    if (suppressed) continue;

    // sentence-initial region of the second argument
    int start = j.right_span.first();
    std::string region;
    int limit = std::min(start + 10, j.right_span.last() + 1);
    for (int i = start; i < limit; ++i) {
      if (!region.empty()) region += ' ';
      region += lower_form(doc, i);
    }
    for (const AltLexPattern& p : patterns) {
      if (!p.compatible_labels.empty() && !p.compatible_labels.count(rel->label))
        continue;
      std::smatch m;
      if (!std::regex_search(region, m, std::regex("^(" + p.token_regex + ")")))
        continue;
      int matched_tokens =
          static_cast<int>(split(trim(m[1].str()), ' ').size());
      CandidateRelation c = seed_candidate(doc, *rel);
      c.rel_type = RelType::AltLex;
      c.conn_tokens = Span(start, start + matched_tokens);
      c.conn_text = to_lower(doc.text(c.conn_tokens));
      c.candidate_senses = {p.sense};
      c.provenance = "altlex:" + p.id + ":" + rel->id;
      out.push_back(std::move(c));
      break;  // first pattern wins per junction
    }
  }
  return out;
}

namespace {

// Built-in AltLexC construction detectors. Each returns the matched token
// indices within the span, or empty when the construction is absent.
std::vector<int> detect_aux_inversion(const Document& doc, const Span& span) {
  if (span.empty()) return {};
  int first = span.first();
  const Token& t = doc.tokens[first];
  std::string form = to_lower(t.form);
  if (t.upos != "AUX" || (form != "had" && form != "were" && form != "should"))
    return {};
  // inverted auxiliary precedes its head (or its subject) inside the span
  if (t.deprel.rfind("aux", 0) != 0 && t.deprel != "cop") return {};
  if (t.head && *t.head > first && span.contains(*t.head)) return {first};
  return {};
}

std::vector<int> detect_so_that(const Document& doc, const Span& span) {
  int so = -1;
  for (int i : span.tokens()) {
    std::string form = lower_form(doc, i);
    if (so < 0 && (form == "so" || form == "such") && doc.tokens[i].upos != "SCONJ") {
      so = i;
    } else if (so >= 0 && form == "that" && doc.tokens[i].deprel == "mark") {
      return {so, i};
    }
  }
  return {};
}

std::vector<int> detect_too_to(const Document& doc, const Span& span) {
  int too = -1;
  for (int i : span.tokens()) {
    std::string form = lower_form(doc, i);
    if (too < 0 && form == "too" && doc.tokens[i].upos == "ADV") {
      too = i;
    } else if (too >= 0 && form == "to" && doc.tokens[i].upos == "PART") {
      return {too, i};
    }
  }
  return {};
}

std::vector<int> detect_comparative_correlative(const Document& doc, const Span& span) {
  if (span.size() < 2) return {};
  int first = span.first();
  if (lower_form(doc, first) != "the") return {};
  const Token& next = doc.tokens[first + 1];
  std::string nf = to_lower(next.form);
  if (next.xpos == "JJR" || next.xpos == "RBR" || nf == "more" || nf == "less")
    return {first, first + 1};
  return {};
}

std::vector<int> detect_conditional_imperative(const Document& doc, const Span& span) {
  if (span.empty()) return {};
  int first = span.first();
  const Token& t = doc.tokens[first];
  if (t.upos != "VERB" || t.xpos != "VB") return {};
  for (const Token& d : doc.tokens) {
    if (d.head && *d.head == first && d.deprel.rfind("nsubj", 0) == 0) return {};
  }
  return {first};
}

std::vector<int> detect_fronted_participle(const Document& doc, const Span& span) {
  if (span.empty()) return {};
  int first = span.first();
  const Token& t = doc.tokens[first];
  if (t.upos == "VERB" && is_participle(t) && t.deprel.rfind("advcl", 0) == 0)
    return {first};
  return {};
}

std::vector<int> detect_no_sooner(const Document& doc, const Span& span) {
  if (span.size() < 2) return {};
  int first = span.first();
  if (lower_form(doc, first) == "no" && lower_form(doc, first + 1) == "sooner")
    return {first, first + 1};
  return {};
}

std::vector<int> run_detector(const std::string& name, const Document& doc,
                              const Span& span) {
  if (name == "aux_inversion") return detect_aux_inversion(doc, span);
  if (name == "so_that") return detect_so_that(doc, span);
  if (name == "too_to") return detect_too_to(doc, span);
  if (name == "comparative_correlative")
    return detect_comparative_correlative(doc, span);
  if (name == "conditional_imperative")
    return detect_conditional_imperative(doc, span);
  if (name == "fronted_participle") return detect_fronted_participle(doc, span);
  if (name == "no_sooner") return detect_no_sooner(doc, span);
  throw std::runtime_error("unknown AltLexC detector '" + name + "'");
}

}  // namespace

std::vector<CandidateRelation> match_altlexc(
    const Document& doc, const std::vector<AltLexCPattern>& patterns,
    const MappingResources& resources,
    const std::vector<CandidateRelation>& covered) {
  std::vector<CandidateRelation> out;
  for (const RstRelation& rel : doc.rst_relations) {
    bool taken = false;
    for (const CandidateRelation& e : covered) {
      std::string rel_id = e.provenance.substr(e.provenance.rfind(':') + 1);
      if (rel_id == rel.id) {
        taken = true;
        break;
      }
    }
    if (taken) continue;
    Span src = doc.edu_span(rel.source_edus);
    for (const AltLexCPattern& p : patterns) {
      if (!p.compatible_labels.empty() && !p.compatible_labels.count(rel.label))
        continue;
      std::vector<int> matched = run_detector(p.detector, doc, src);
      if (matched.empty()) continue;
      CandidateRelation c = seed_candidate(doc, rel);
      c.rel_type = RelType::AltLexC;
      for (int i : matched) c.conn_tokens.add(Range{i, i + 1});
      c.conn_text = to_lower(doc.text(c.conn_tokens));
      c.candidate_senses = {p.sense};
      if (const RstMapEntry* e = resources.map_entry(rel.label))
        c.direction = e->direction;
      c.provenance = "altlexc:" + p.id + ":" + rel.id;
      out.push_back(std::move(c));
      break;
    }
  }
  return out;
}

std::vector<CandidateRelation> generate_hypophora(const Document& doc) {
  std::vector<CandidateRelation> out;
  for (const RstRelation& rel : doc.rst_relations) {
    if (rel.label != "topic-question") continue;
    CandidateRelation c = seed_candidate(doc, rel);
    c.rel_type = RelType::Hypophora;
    c.provenance = "hypophora:" + rel.id;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CandidateRelation> generate_entrel_norel(
    const Document& doc, const std::vector<CandidateRelation>& candidates_so_far) {
  std::vector<CandidateRelation> out;
  for (size_t s = 0; s + 1 < doc.sentences.size(); ++s) {
    const Range& a = doc.sentences[s];
    const Range& b = doc.sentences[s + 1];
    if (doc.tokens[a.begin].par_index != doc.tokens[b.begin].par_index) continue;
    // boundary covered when some relation's (minimal) arguments sit on
    // opposite sides
    bool taken = false;
    for (const CandidateRelation& c : candidates_so_far) {
      Span x = clip_minimal(c.source_span, c.source_head_edu, doc);
      Span y = clip_minimal(c.target_span, c.target_head_edu, doc);
      if (x.empty() || y.empty()) continue;
      bool forward = x.last() < b.begin && y.first() >= b.begin;
      bool backward = y.last() < b.begin && x.first() >= b.begin;
      if (forward || backward) {
        taken = true;
        break;
      }
    }
    if (taken) continue;

    CandidateRelation c;
    c.source_span = Span(a);
    c.target_span = Span(b);
    c.source_head_edu = edu_at(doc, a.begin);
    c.target_head_edu = edu_at(doc, b.begin);

    // EntRel: a Joint- or Elaboration-class relation links the pair and a
    // definite or pronominal mention in sentence 2 corefers into sentence 1
    bool entrel = false;
    const RstRelation* link = find_linking_relation(doc, Span(a), Span(b));
    if (link && is_entity_class_label(link->label))
      entrel = entity_coref_between(doc, static_cast<int>(s),
                                    static_cast<int>(s) + 1);
    c.rel_type = entrel ? RelType::EntRel : RelType::NoRel;
    c.rst_label = link ? link->label : "";
    c.provenance = entrel ? "entrel:sent:" + std::to_string(s)
                          : "norel:sent:" + std::to_string(s);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CandidateRelation> convert_document(
    const Document& doc, const MappingResources& resources,
    const BaselineTable& baseline, const HintsFile* hints,
    const std::vector<AltLexPattern>& altlex_patterns,
    const std::vector<AltLexCPattern>& altlexc_patterns,
    const CascadeConfig& config) {
  std::vector<CandidateRelation> all = generate_explicit(doc, resources);
  std::vector<Junction> junctions = find_implicit_junctions(doc);

  auto append = [&](std::vector<CandidateRelation> more) {
    for (CandidateRelation& c : more) all.push_back(std::move(c));
  };

  append(match_altlex(doc, altlex_patterns, junctions, all));
  append(match_altlexc(doc, altlexc_patterns, resources, all));
  append(generate_implicit(doc, junctions, resources, baseline, hints, all));
  append(generate_hypophora(doc));

  // sense resolution: hints first, frequency rank otherwise
  for (CandidateRelation& c : all) {
    if (c.candidate_senses.empty()) continue;
    const HintsFile::Record* hint =
        hints ? hints->find(doc.doc_id, c.source_span, c.target_span) : nullptr;
    ResolvedSenses resolved =
        resolve_sense(c.candidate_senses, hint, config.second_sense_threshold);
    c.senses = resolved.senses;
    if (resolved.map_conflict) c.flags.insert(RelationFlag::MapConflict);
  }

  append(generate_entrel_norel(doc, all));

  std::sort(all.begin(), all.end(),
            [](const CandidateRelation& a, const CandidateRelation& b) {
              int af = a.source_span.empty() ? 0 : std::min(a.source_span.first(),
                                                            a.target_span.first());
              int bf = b.source_span.empty() ? 0 : std::min(b.source_span.first(),
                                                            b.target_span.first());
              if (af != bf) return af < bf;
              return a.provenance < b.provenance;
            });
  return all;
}

}  // namespace gdtb
