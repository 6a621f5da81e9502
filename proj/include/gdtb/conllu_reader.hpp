#ifndef GDTB_CONLLU_READER_HPP
#define GDTB_CONLLU_READER_HPP

#include <string>
#include <vector>

#include "gdtb/document.hpp"

namespace gdtb {

struct ConlluLayer {
  std::string doc_id;  // from "# newdoc id = ..." when present
  std::vector<Token> tokens;
  std::vector<Range> sentences;
  std::vector<Range> paragraphs;
};

// 10-column CoNLL-U. Multiword-token ranges (1-2) and empty nodes (1.1) are
// skipped for indexing; "# newpar" starts a new paragraph. Head indices are
// converted to document-wide 0-based positions.
ConlluLayer parse_conllu(const std::string& text);
ConlluLayer parse_conllu_file(const std::string& path);

}  // namespace gdtb

#endif
