#ifndef GDTB_ERST_READER_HPP
#define GDTB_ERST_READER_HPP

#include <string>
#include <vector>

#include "gdtb/document.hpp"

namespace gdtb {

struct ErstLayer {
  std::vector<Edu> edus;
  std::vector<RstRelation> relations;
  std::vector<Signal> signals;
  std::vector<std::string> edu_texts;  // whitespace-tokenized segment texts
  std::vector<std::string> token_forms;
};

// Parses an eRST .rs3/.rs4 XML document (segments, groups, secedges,
// signals). Throws std::runtime_error with line/column on malformed input,
// on dangling node references, and on relation labels outside the GUM
// inventory.
ErstLayer parse_rst(const std::string& xml_text);
ErstLayer parse_rst_file(const std::string& path);

// The 32-label GUM v10 relation inventory (same-unit included).
const std::vector<std::string>& gum_relation_inventory();
bool is_gum_relation(const std::string& label);

}  // namespace gdtb

#endif
