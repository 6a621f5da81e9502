#ifndef GDTB_RELATION_HPP
#define GDTB_RELATION_HPP

#include <set>
#include <string>
#include <vector>

#include "gdtb/sense.hpp"
#include "gdtb/span.hpp"

namespace gdtb {

enum class RelType { Explicit, Implicit, AltLex, AltLexC, EntRel, Hypophora, NoRel };

std::string to_string(RelType t);
RelType rel_type_from_string(const std::string& s);

enum class RelationFlag { UnknownConnective, MapConflict, LowConfidence };

std::string to_string(RelationFlag f);
RelationFlag flag_from_string(const std::string& s);

// One finalized output record.
struct PdtbRelation {
  std::string doc_id;
  RelType rel_type = RelType::NoRel;
  std::string conn_text;  // inserted connective for Implicit, surface otherwise
  Span conn_tokens;       // empty for Implicit/EntRel/Hypophora/NoRel
  Span arg1_span;
  Span arg2_span;
  std::vector<SenseLabel> senses;  // 0-2; empty for EntRel/Hypophora/NoRel
  std::string rst_label;           // originating label, may be empty
  std::set<RelationFlag> flags;
  std::string provenance;  // module + rule id
};

}  // namespace gdtb

#endif
