#include "gdtb/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <stdexcept>

#include "gdtb/aligner.hpp"
#include "gdtb/arg_spans.hpp"
#include "gdtb/conllu_reader.hpp"
#include "gdtb/coref_reader.hpp"
#include "gdtb/erst_reader.hpp"
#include "gdtb/relation_io.hpp"

namespace fs = std::filesystem;

namespace gdtb {

LoadedResources load_run_resources(const RunConfig& config) {
  fs::path dir(config.resources_dir);
  LoadedResources res;
  res.mapping = MappingResources::load((dir / "sense_hierarchy.tsv").string(),
                                       (dir / "connective_lexicon.tsv").string(),
                                       (dir / "rst_sense_map.tsv").string());
  std::string baseline = config.baseline_path.empty()
                             ? (dir / "baseline_connectives.tsv").string()
                             : config.baseline_path;
  res.baseline = BaselineTable::load(baseline);
  if (!config.hints_path.empty())
    res.hints = HintsFile::load(config.hints_path, res.mapping.hierarchy());
  res.altlex_patterns =
      load_altlex_patterns((dir / "altlex_patterns.tsv").string(),
                           res.mapping.hierarchy());
  res.altlexc_patterns =
      load_altlexc_patterns((dir / "altlexc_patterns.tsv").string(),
                            res.mapping.hierarchy());
  return res;
}

Document load_document(const std::string& doc_id, const std::string& rst_path,
                       const std::string& conllu_path,
                       const std::string& coref_path) {
  ErstLayer rst = parse_rst_file(rst_path);
  ConlluLayer syntax = parse_conllu_file(conllu_path);
  std::vector<Mention> mentions;
  if (!coref_path.empty() && fs::exists(coref_path))
    mentions = parse_coref_file(coref_path);
  return align_layers(doc_id, rst, syntax, std::move(mentions));
}

std::vector<PdtbRelation> convert_one(const Document& doc,
                                      const LoadedResources& res,
                                      const RunConfig& config) {
  CascadeConfig cc;
  cc.second_sense_threshold = config.second_sense_threshold;
  std::vector<CandidateRelation> candidates = convert_document(
      doc, res.mapping, res.baseline, res.hints ? &*res.hints : nullptr,
      res.altlex_patterns, res.altlexc_patterns, cc);
  std::vector<PdtbRelation> out;
  out.reserve(candidates.size());
  for (const CandidateRelation& c : candidates) {
    PdtbRelation r = finalize_relation(c, doc, res.mapping,
                                       config.include_connective_in_arg2);
    r.doc_id = doc.doc_id;
    out.push_back(std::move(r));
  }
  sort_relations(out);
  return out;
}

namespace {

struct DocPaths {
  std::string doc_id;
  std::string rst;
  std::string conllu;
  std::string coref;  // may be empty
};

std::vector<DocPaths> discover_documents(const RunConfig& config) {
  std::map<std::string, std::string> rst_files;
  for (const auto& entry : fs::directory_iterator(config.rst_dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".rs3" || ext == ".rs4" || ext == ".xml")
      rst_files[entry.path().stem().string()] = entry.path().string();
  }
  if (rst_files.empty())
    throw std::runtime_error("no .rs3/.rs4/.xml files in " + config.rst_dir);
  std::vector<DocPaths> out;
  for (const auto& [stem, rst_path] : rst_files) {
    if (!config.genre_filter.empty() &&
        genre_from_doc_id(stem) != config.genre_filter)
      continue;
    DocPaths d;
    d.doc_id = stem;
    d.rst = rst_path;
    fs::path conllu = fs::path(config.conllu_dir) / (stem + ".conllu");
    if (!fs::exists(conllu))
      throw std::runtime_error("missing syntax layer for " + stem + ": " +
                               conllu.string());
    d.conllu = conllu.string();
    if (!config.coref_dir.empty()) {
      fs::path coref = fs::path(config.coref_dir) / (stem + ".tsv");
      if (fs::exists(coref)) d.coref = coref.string();
    }
    out.push_back(std::move(d));
  }
  return out;
}

struct DocResult {
  std::vector<PdtbRelation> relations;
  std::string error;  // empty on success
};

DocResult convert_doc_paths(const DocPaths& paths, const LoadedResources& res,
                            const RunConfig& config) {
  DocResult r;
  try {
    Document doc = load_document(paths.doc_id, paths.rst, paths.conllu, paths.coref);
    r.relations = convert_one(doc, res, config);
  } catch (const std::exception& e) {
    r.error = paths.doc_id + ": " + e.what();
  }
  return r;
}

}  // namespace

ConvertResult convert_corpus(const RunConfig& config, const LoadedResources& res) {
  std::vector<DocPaths> docs = discover_documents(config);
  std::vector<DocResult> results(docs.size());

  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < docs.size(); ++i)
      results[i] = convert_doc_paths(docs[i], res, config);
  } else {
    // Fixed-size batches keep the output order independent of scheduling.
    std::vector<std::future<void>> workers;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= docs.size()) return;
          results[i] = convert_doc_paths(docs[i], res, config);
        }
      }));
    }
    for (auto& w : workers) w.get();
  }

  ConvertResult out;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (!results[i].error.empty()) {
      out.errors.push_back(results[i].error);
      continue;
    }
    ++out.documents_converted;
    out.relations.insert(out.relations.end(), results[i].relations.begin(),
                         results[i].relations.end());
  }
  return out;
}

std::map<std::string, std::map<std::string, int>> relation_stats(
    const std::vector<PdtbRelation>& relations) {
  std::map<std::string, std::map<std::string, int>> out;
  for (const PdtbRelation& r : relations)
    ++out[to_string(r.rel_type)][genre_from_doc_id(r.doc_id)];
  return out;
}

}  // namespace gdtb
