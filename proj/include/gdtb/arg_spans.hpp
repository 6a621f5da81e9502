#ifndef GDTB_ARG_SPANS_HPP
#define GDTB_ARG_SPANS_HPP

#include "gdtb/cascade.hpp"
#include "gdtb/document.hpp"
#include "gdtb/relation.hpp"
#include "gdtb/resources.hpp"

namespace gdtb {

struct ArgAssignment {
  Span arg1;
  Span arg2;
  bool source_is_arg2 = false;  // the candidate's source span became Arg2
};

// Arg2 is the clause hosting the connective in subordinating configurations
// (or the satellite for intra-sentential implicits); otherwise the linearly
// second span.
ArgAssignment assign_arg_roles(const CandidateRelation& candidate,
                               const Document& doc,
                               const MappingResources& resources);

// Fills the Level-3 component of a directional Level-2 sense so the
// RST-designated role lands on the right argument. Symmetric senses and
// senses with a pinned Level-3 pass through unchanged.
SenseLabel restore_direction(const SenseLabel& sense, DirectionRule rule,
                             bool satellite_is_arg2, bool arg1_is_linearly_first,
                             const SenseHierarchy& hierarchy);

// Multi-sentential spans shrink to the sentence containing the head EDU;
// intra-sentential spans stay at the EDU-dominated tokens. Idempotent.
Span clip_minimal(const Span& span, int head_edu, const Document& doc);

// Removes attribution satellites scoping over the span's nucleus. When the
// removal would empty the span the original is kept and low-confidence set.
Span strip_attribution(const Span& span, int head_edu, const Document& doc,
                       bool* emptied);

// Full span finalization for one candidate.
PdtbRelation finalize_relation(const CandidateRelation& candidate,
                               const Document& doc,
                               const MappingResources& resources,
                               bool include_connective_in_arg2 = false);

}  // namespace gdtb

#endif
