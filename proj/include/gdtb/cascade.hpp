#ifndef GDTB_CASCADE_HPP
#define GDTB_CASCADE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdtb/document.hpp"
#include "gdtb/predictor.hpp"
#include "gdtb/relation.hpp"
#include "gdtb/resources.hpp"

namespace gdtb {

enum class JunctionKind {
  InterSentential,
  PurposeInfinitive,
  ParticipialAdverbial,
  ZeroCoordination,
};

struct Junction {
  JunctionKind kind = JunctionKind::InterSentential;
  Span left_span;
  Span right_span;
  std::optional<std::string> rst_relation_id;
};

struct CandidateRelation {
  RelType rel_type = RelType::NoRel;
  Span conn_tokens;
  std::string conn_text;
  Span source_span;  // EDU-derived
  Span target_span;
  std::vector<int> source_edus;
  std::vector<int> target_edus;
  int source_head_edu = 0;
  int target_head_edu = 0;
  std::string rst_label;
  bool satellite_is_source = true;  // false for multinuclear relations
  DirectionRule direction = DirectionRule::None;
  std::vector<SenseLabel> candidate_senses;
  std::vector<SenseLabel> senses;  // resolved, 0-2
  std::set<RelationFlag> flags;
  std::string provenance;
};

// AltLex surface patterns: anchored regex over the lowercased token stream
// at the start of the second argument's sentence.
struct AltLexPattern {
  std::string id;
  std::string token_regex;
  std::set<std::string> compatible_labels;  // empty set = any label
  SenseLabel sense;
};

// AltLexC syntactic constructions, dispatched to built-in detectors by name.
struct AltLexCPattern {
  std::string id;
  std::string detector;  // e.g. "aux_inversion"
  std::set<std::string> compatible_labels;
  SenseLabel sense;
};

std::vector<AltLexPattern> load_altlex_patterns(const std::string& path,
                                                const SenseHierarchy& hierarchy);
std::vector<AltLexCPattern> load_altlexc_patterns(const std::string& path,
                                                  const SenseHierarchy& hierarchy);

struct CascadeConfig {
  double second_sense_threshold = 0.5;
};

std::vector<CandidateRelation> generate_explicit(const Document& doc,
                                                 const MappingResources& resources);

std::vector<Junction> find_implicit_junctions(const Document& doc);

std::vector<CandidateRelation> generate_implicit(
    const Document& doc, const std::vector<Junction>& junctions,
    const MappingResources& resources, const BaselineTable& baseline,
    const HintsFile* hints, const std::vector<CandidateRelation>& explicit_candidates);

std::vector<CandidateRelation> match_altlex(
    const Document& doc, const std::vector<AltLexPattern>& patterns,
    const std::vector<Junction>& junctions,
    const std::vector<CandidateRelation>& covered);

std::vector<CandidateRelation> match_altlexc(
    const Document& doc, const std::vector<AltLexCPattern>& patterns,
    const MappingResources& resources,
    const std::vector<CandidateRelation>& covered);

std::vector<CandidateRelation> generate_hypophora(const Document& doc);

std::vector<CandidateRelation> generate_entrel_norel(
    const Document& doc, const std::vector<CandidateRelation>& candidates_so_far);

// Runs the full cascade in precedence order and resolves multi-sense
// candidates via hints, then frequency rank. Deterministic for fixed inputs.
std::vector<CandidateRelation> convert_document(
    const Document& doc, const MappingResources& resources,
    const BaselineTable& baseline, const HintsFile* hints,
    const std::vector<AltLexPattern>& altlex_patterns,
    const std::vector<AltLexCPattern>& altlexc_patterns,
    const CascadeConfig& config = {});

}  // namespace gdtb

#endif
