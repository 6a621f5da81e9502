#include "gdtb/arg_spans.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gdtb {

namespace {

const char* level3_role(const std::string& level2) {
  if (level2 == "Condition") return "cond";
  if (level2 == "Negative-condition") return "negCond";
  if (level2 == "Purpose") return "goal";
  if (level2 == "Concession") return "denier";
  if (level2 == "Exception") return "excpt";
  if (level2 == "Instantiation") return "instance";
  if (level2 == "Level-of-detail") return "detail";
  if (level2 == "Manner") return "manner";
  if (level2 == "Substitution") return "subst";
  return nullptr;
}

std::set<int> sentences_of(const Span& span, const Document& doc) {
  std::set<int> out;
  for (int i : span.tokens()) out.insert(doc.sentence_of(i));
  return out;
}

}  // namespace

ArgAssignment assign_arg_roles(const CandidateRelation& candidate,
                               const Document& doc,
                               const MappingResources& resources) {
  const Span& src = candidate.source_span;
  const Span& tgt = candidate.target_span;
  ArgAssignment out;

  auto assign = [&](bool source_is_arg2) {
    out.source_is_arg2 = source_is_arg2;
    out.arg1 = source_is_arg2 ? tgt : src;
    out.arg2 = source_is_arg2 ? src : tgt;
  };

  if (src.empty() || tgt.empty()) {
    assign(false);
    return out;
  }

  if (candidate.rel_type == RelType::Hypophora) {
    // question is Arg1, answer Arg2
    assign(/*source_is_arg2=*/false);
    return out;
  }

  if (!candidate.conn_tokens.empty()) {
    bool subordinating = candidate.rel_type == RelType::AltLexC;
    if (candidate.rel_type == RelType::Explicit ||
        candidate.rel_type == RelType::AltLex) {
      const ConnectiveEntry* e = resources.connective(candidate.conn_text);
      subordinating = e && e->syntactic_class == ConnectiveClass::Subordinator;
    }
    if (subordinating) {
      int anchor = candidate.conn_tokens.first();
      if (src.contains(anchor) || Span(src.first(), src.last() + 1).contains(anchor)) {
        assign(true);
        return out;
      }
      if (tgt.contains(anchor) || Span(tgt.first(), tgt.last() + 1).contains(anchor)) {
        assign(false);
        return out;
      }
    }
  }

  if (candidate.rel_type == RelType::Implicit && candidate.satellite_is_source &&
      !src.empty() && !tgt.empty()) {
    auto ssents = sentences_of(src, doc);
    auto tsents = sentences_of(tgt, doc);
    std::set<int> both;
    std::set_intersection(ssents.begin(), ssents.end(), tsents.begin(), tsents.end(),
                          std::inserter(both, both.begin()));
    if (!both.empty()) {  // intra-sentential: satellite is Arg2
      assign(true);
      return out;
    }
  }

  // linear order: second span is Arg2
  assign(src.first() > tgt.first());
  return out;
}

SenseLabel restore_direction(const SenseLabel& sense, DirectionRule rule,
                             bool satellite_is_arg2, bool arg1_is_linearly_first,
                             const SenseHierarchy& hierarchy) {
  if (!sense.level3.empty()) return sense;
  if (!hierarchy.directional(sense.level1, sense.level2)) return sense;

  SenseLabel out = sense;
  if (sense.level1 == "Temporal" && sense.level2 == "Asynchronous") {
    out.level3 = arg1_is_linearly_first ? "Precedence" : "Succession";
    return hierarchy.valid(out) ? out : sense;
  }
  if (sense.level2 == "Cause") {
    bool cause_on_arg2;
    switch (rule) {
      case DirectionRule::CauseOnSatellite: cause_on_arg2 = satellite_is_arg2; break;
      case DirectionRule::CauseOnNucleus: cause_on_arg2 = !satellite_is_arg2; break;
      default: cause_on_arg2 = satellite_is_arg2; break;
    }
    out.level3 = cause_on_arg2 ? "Reason" : "Result";
    return hierarchy.valid(out) ? out : sense;
  }
  const char* role = level3_role(sense.level2);
  if (!role) return sense;
  bool role_on_arg2;
  switch (rule) {
    case DirectionRule::RoleOnNucleus: role_on_arg2 = !satellite_is_arg2; break;
    case DirectionRule::RoleOnSatellite:
    default: role_on_arg2 = satellite_is_arg2; break;
  }
  out.level3 = std::string(role_on_arg2 ? "Arg2-as-" : "Arg1-as-") + role;
  return hierarchy.valid(out) ? out : sense;
}

Span clip_minimal(const Span& span, int head_edu, const Document& doc) {
  if (span.empty()) return span;
  std::set<int> sents = sentences_of(span, doc);
  if (sents.size() <= 1) return span;
  const Edu* head = doc.edu_by_id(head_edu);
  int head_sent = head ? doc.sentence_of(head->token_span.begin)
                       : doc.sentence_of(span.first());
  return span.intersect(Span(doc.sentences[head_sent]));
}

Span strip_attribution(const Span& span, int head_edu, const Document& doc,
                       bool* emptied) {
  if (emptied) *emptied = false;
  Span out = span;
  for (const RstRelation& r : doc.rst_relations) {
    if (r.label.rfind("attribution", 0) != 0) continue;
    if (r.target_head_edu != head_edu) continue;  // must scope the nucleus directly
    Span sat = doc.edu_span(r.source_edus);
    if (!span.contains(sat)) continue;
    out = out.subtract(sat);
  }
  if (out.empty()) {
    if (emptied) *emptied = true;
    return span;
  }
  return out;
}

PdtbRelation finalize_relation(const CandidateRelation& candidate,
                               const Document& doc,
                               const MappingResources& resources,
                               bool include_connective_in_arg2) {
  ArgAssignment roles = assign_arg_roles(candidate, doc, resources);

  int arg1_head = roles.source_is_arg2 ? candidate.target_head_edu
                                       : candidate.source_head_edu;
  int arg2_head = roles.source_is_arg2 ? candidate.source_head_edu
                                       : candidate.target_head_edu;

  PdtbRelation rel;
  rel.doc_id = doc.doc_id;
  rel.rel_type = candidate.rel_type;
  rel.conn_text = candidate.conn_text;
  rel.conn_tokens = candidate.conn_tokens;
  rel.rst_label = candidate.rst_label;
  rel.flags = candidate.flags;
  rel.provenance = candidate.provenance;

  Span arg1 = clip_minimal(roles.arg1, arg1_head, doc);
  Span arg2 = clip_minimal(roles.arg2, arg2_head, doc);
  bool emptied = false;
  arg1 = strip_attribution(arg1, arg1_head, doc, &emptied);
  if (emptied) rel.flags.insert(RelationFlag::LowConfidence);
  arg2 = strip_attribution(arg2, arg2_head, doc, &emptied);
  if (emptied) rel.flags.insert(RelationFlag::LowConfidence);

  if (!include_connective_in_arg2 && !candidate.conn_tokens.empty()) {
    Span trimmed = arg2.subtract(candidate.conn_tokens);
    if (!trimmed.empty()) arg2 = trimmed;
    Span trimmed1 = arg1.subtract(candidate.conn_tokens);
    if (!trimmed1.empty()) arg1 = trimmed1;
  }

  if (arg1.overlaps(arg2)) {
    Span reduced = arg1.subtract(arg2);
    if (!reduced.empty()) {
      arg1 = reduced;
    } else {
      arg2 = arg2.subtract(arg1);
    }
    rel.flags.insert(RelationFlag::LowConfidence);
  }
  rel.arg1_span = arg1;
  rel.arg2_span = arg2;

  bool satellite_is_arg2 =
      candidate.satellite_is_source ? roles.source_is_arg2 : true;
  bool arg1_first =
      !arg1.empty() && !arg2.empty() ? arg1.first() < arg2.first() : true;
  for (const SenseLabel& s : candidate.senses) {
    rel.senses.push_back(restore_direction(s, candidate.direction,
                                           satellite_is_arg2, arg1_first,
                                           resources.hierarchy()));
  }
  return rel;
}

}  // namespace gdtb
