#ifndef GDTB_COREF_READER_HPP
#define GDTB_COREF_READER_HPP

#include <string>
#include <vector>

#include "gdtb/document.hpp"

namespace gdtb {

// Mention TSV: doc_id, entity_id, token start, token end (0-based,
// inclusive), pronoun flag (0/1), definiteness flag (0/1). '#' comments and
// blank lines allowed. Output is sorted by span start.
std::vector<Mention> parse_coref(const std::string& text);
std::vector<Mention> parse_coref_file(const std::string& path);

}  // namespace gdtb

#endif
