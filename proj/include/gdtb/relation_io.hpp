#ifndef GDTB_RELATION_IO_HPP
#define GDTB_RELATION_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gdtb/document.hpp"
#include "gdtb/relation.hpp"
#include "gdtb/sense.hpp"

namespace gdtb {

// Tab-separated relation records, one per line, header line first:
// doc_id rel_type conn_text conn_spans arg1_spans arg2_spans arg1_text
// arg2_text sense1 sense2 rst_label flags
// Spans are comma-joined inclusive "a-b" pairs, "_" when empty.
void write_relations(std::ostream& out, const std::vector<PdtbRelation>& relations,
                     const Document* doc = nullptr);
void write_relations_file(const std::string& path,
                          const std::vector<PdtbRelation>& relations);

std::vector<PdtbRelation> read_relations(std::istream& in,
                                         const SenseHierarchy& hierarchy);
std::vector<PdtbRelation> read_relations_file(const std::string& path,
                                              const SenseHierarchy& hierarchy);

// Deterministic output order: (doc_id, arg1 start, arg2 start, type).
void sort_relations(std::vector<PdtbRelation>& relations);

}  // namespace gdtb

#endif
