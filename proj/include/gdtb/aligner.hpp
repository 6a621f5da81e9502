#ifndef GDTB_ALIGNER_HPP
#define GDTB_ALIGNER_HPP

#include <string>
#include <vector>

#include "gdtb/conllu_reader.hpp"
#include "gdtb/document.hpp"
#include "gdtb/erst_reader.hpp"

namespace gdtb {

// Merges the three annotation layers onto one token index and validates the
// Document invariants. Throws std::runtime_error on token-count or
// token-form mismatches (reporting the first divergent index), broken EDU
// partition, or out-of-range mention spans.
Document align_layers(const std::string& doc_id, const ErstLayer& rst,
                      const ConlluLayer& syntax, std::vector<Mention> mentions);

// "GUM_academic_art" -> "academic"; "unknown" when the pattern is absent.
std::string genre_from_doc_id(const std::string& doc_id);

}  // namespace gdtb

#endif
