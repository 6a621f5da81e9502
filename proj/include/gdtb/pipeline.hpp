#ifndef GDTB_PIPELINE_HPP
#define GDTB_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdtb/cascade.hpp"
#include "gdtb/document.hpp"
#include "gdtb/predictor.hpp"
#include "gdtb/relation.hpp"
#include "gdtb/resources.hpp"

namespace gdtb {

struct RunConfig {
  std::string rst_dir;
  std::string conllu_dir;
  std::string coref_dir;  // optional; empty mentions when a file is absent
  std::string resources_dir;
  std::string baseline_path;  // defaults to <resources_dir>/baseline_connectives.tsv
  std::string hints_path;     // optional
  std::string output_path;
  bool include_connective_in_arg2 = false;
  int sense_level = 2;
  double second_sense_threshold = 0.5;
  std::string genre_filter;  // empty = all genres
  int jobs = 1;
};

struct LoadedResources {
  MappingResources mapping;
  BaselineTable baseline;
  std::optional<HintsFile> hints;
  std::vector<AltLexPattern> altlex_patterns;
  std::vector<AltLexCPattern> altlexc_patterns;
};

LoadedResources load_run_resources(const RunConfig& config);

// One corpus document, loaded and aligned from the three layer files.
Document load_document(const std::string& doc_id, const std::string& rst_path,
                       const std::string& conllu_path,
                       const std::string& coref_path);

struct ConvertResult {
  std::vector<PdtbRelation> relations;  // deterministic order
  std::vector<std::string> errors;      // per-document failures, doc skipped
  int documents_converted = 0;
};

std::vector<PdtbRelation> convert_one(const Document& doc,
                                      const LoadedResources& res,
                                      const RunConfig& config);

// Full corpus run: documents discovered by matching basenames across the
// layer directories, converted in parallel, output in document order.
ConvertResult convert_corpus(const RunConfig& config, const LoadedResources& res);

// type x genre counts for a relation file
std::map<std::string, std::map<std::string, int>> relation_stats(
    const std::vector<PdtbRelation>& relations);

}  // namespace gdtb

#endif
