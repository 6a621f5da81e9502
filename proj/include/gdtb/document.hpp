#ifndef GDTB_DOCUMENT_HPP
#define GDTB_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "gdtb/span.hpp"

namespace gdtb {

struct Token {
  int index = 0;  // document-wide, 0-based
  std::string form;
  std::string upos;
  std::string xpos;
  std::string feats;
  std::optional<int> head;  // document-wide index; empty for root
  std::string deprel;
  int sent_index = 0;
  int par_index = 0;
};

struct Edu {
  int id = 0;  // positive
  Range token_span;
  std::vector<int> sent_indices;  // sentences the EDU touches, ascending
};

enum class Nuclearity { SatelliteNucleus, Multinuclear };
enum class EdgeKind { Tree, TreeBreaking };

// One conversion-relevant RST edge. For satellite links source is the
// satellite and target the nucleus; multinuclear nodes are decomposed into
// adjacent nucleus pairs (source = left, target = right, in text order).
struct RstRelation {
  std::string id;
  std::string label;
  Nuclearity nuclearity = Nuclearity::SatelliteNucleus;
  EdgeKind edge_kind = EdgeKind::Tree;
  std::vector<int> source_edus;  // EDU ids, ascending
  std::vector<int> target_edus;
  int source_head_edu = 0;  // recursive nucleus descent, leftmost on ties
  int target_head_edu = 0;
};

struct Signal {
  std::string relation_id;
  std::string signal_class;  // eRST signal type, e.g. "dm" for connectives
  std::string signal_type;
  std::string signal_subtype;
  std::vector<int> token_indices;  // sorted, possibly non-contiguous
};

struct Mention {
  std::string entity_id;
  Range token_span;
  bool is_pronoun = false;
  bool is_definite = false;
  int sent_index = 0;
};

struct Document {
  std::string doc_id;
  std::string genre;
  std::vector<Token> tokens;
  std::vector<Range> sentences;   // token ranges, contiguous partition
  std::vector<Range> paragraphs;  // token ranges, contiguous partition
  std::vector<Edu> edus;
  std::vector<RstRelation> rst_relations;
  std::vector<Signal> signals;
  std::vector<Mention> mentions;

  const Edu* edu_by_id(int id) const;
  const RstRelation* relation_by_id(const std::string& id) const;
  Span edu_span(const std::vector<int>& edu_ids) const;
  int sentence_of(int token_index) const { return tokens.at(token_index).sent_index; }
  std::string text(const Span& span) const;  // space-joined forms
};

// Connective-class signals carry this eRST signal type.
inline constexpr const char* kConnectiveSignalClass = "dm";

}  // namespace gdtb

#endif
