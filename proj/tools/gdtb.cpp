// gdtb: converts eRST discourse annotations to PDTB-style shallow
// relations and scores converted output against reference files.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "gdtb/eval.hpp"
#include "gdtb/pipeline.hpp"
#include "gdtb/relation_io.hpp"

namespace {

// exit codes: 0 ok, 1 some documents failed, 2 usage/resource error
constexpr int kOk = 0;
constexpr int kPartial = 1;
constexpr int kFatal = 2;

int run_convert(const gdtb::RunConfig& config) {
  gdtb::LoadedResources res = gdtb::load_run_resources(config);
  gdtb::ConvertResult result = gdtb::convert_corpus(config, res);
  for (const std::string& err : result.errors)
    std::cerr << "error: skipped document " << err << '\n';
  if (result.documents_converted == 0) {
    std::cerr << "error: no documents converted\n";
    return kFatal;
  }
  if (config.output_path.empty() || config.output_path == "-") {
    gdtb::write_relations(std::cout, result.relations);
  } else {
    gdtb::write_relations_file(config.output_path, result.relations);
  }
  std::cerr << "converted " << result.documents_converted << " document(s), "
            << result.relations.size() << " relation(s)\n";
  return result.errors.empty() ? kOk : kPartial;
}

int run_evaluate(const std::string& pred_path, const std::string& gold_path,
                 const std::string& hierarchy_path, int sense_level, bool strict,
                 const std::string& confusion_out, const std::string& genre_out) {
  gdtb::SenseHierarchy hierarchy = hierarchy_path.empty()
                                       ? gdtb::SenseHierarchy::builtin()
                                       : gdtb::SenseHierarchy::load(hierarchy_path);
  auto pred = gdtb::read_relations_file(pred_path, hierarchy);
  auto gold = gdtb::read_relations_file(gold_path, hierarchy);
  gdtb::ScoreOptions options;
  options.sense_level = sense_level;
  options.strict_all_senses = strict;
  gdtb::EvalReport report = gdtb::evaluate(pred, gold, options);
  std::cout << gdtb::report_to_text(report);
  if (!confusion_out.empty()) {
    std::ofstream out(confusion_out);
    if (!out) throw std::runtime_error("cannot write " + confusion_out);
    out << gdtb::confusion_to_tsv(report.confusion);
  }
  if (!genre_out.empty()) {
    std::ofstream out(genre_out);
    if (!out) throw std::runtime_error("cannot write " + genre_out);
    out << gdtb::genre_table_to_tsv(report.genres);
  }
  return kOk;
}

int run_stats(const std::string& relations_path, const std::string& hierarchy_path) {
  gdtb::SenseHierarchy hierarchy = hierarchy_path.empty()
                                       ? gdtb::SenseHierarchy::builtin()
                                       : gdtb::SenseHierarchy::load(hierarchy_path);
  auto relations = gdtb::read_relations_file(relations_path, hierarchy);
  auto table = gdtb::relation_stats(relations);
  std::set<std::string> genres;
  for (const auto& [type, row] : table)
    for (const auto& [genre, n] : row) genres.insert(genre);
  std::cout << "type";
  for (const std::string& g : genres) std::cout << '\t' << g;
  std::cout << "\ttotal\n";
  for (const auto& [type, row] : table) {
    std::cout << type;
    int total = 0;
    for (const std::string& g : genres) {
      auto it = row.find(g);
      int n = it == row.end() ? 0 : it->second;
      total += n;
      std::cout << '\t' << n;
    }
    std::cout << '\t' << total << '\n';
  }
  std::cout << "relations\t" << relations.size() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eRST-to-PDTB shallow discourse relation converter"};
  app.require_subcommand(1);

  gdtb::RunConfig config;
  CLI::App* convert = app.add_subcommand("convert", "convert a corpus");
  convert->add_option("--rst", config.rst_dir, "directory of .rs3/.rs4 files")
      ->required();
  convert->add_option("--conllu", config.conllu_dir, "directory of .conllu files")
      ->required();
  convert->add_option("--coref", config.coref_dir, "directory of mention TSVs");
  convert->add_option("--resources", config.resources_dir,
                      "directory with the mapping resource TSVs")
      ->required();
  convert->add_option("--baseline", config.baseline_path,
                      "baseline connective table (default: in resources dir)");
  convert->add_option("--hints", config.hints_path, "hints TSV for predictions");
  convert->add_option("-o,--output", config.output_path,
                      "output relation TSV ('-' for stdout)");
  convert->add_option("--genre", config.genre_filter, "only convert this genre");
  convert->add_option("--jobs", config.jobs, "parallel document workers")
      ->check(CLI::PositiveNumber);
  convert->add_option("--second-sense-threshold", config.second_sense_threshold,
                      "hint probability needed for a second sense");
  convert->add_flag("--include-connective", config.include_connective_in_arg2,
                    "keep explicit connective tokens inside Arg2");

  std::string pred_path, gold_path, hierarchy_path, confusion_out, genre_out;
  int sense_level = 2;
  bool strict = false;
  CLI::App* evaluate = app.add_subcommand("evaluate", "score against a reference");
  evaluate->add_option("--pred", pred_path, "predicted relation TSV")->required();
  evaluate->add_option("--gold", gold_path, "reference relation TSV")->required();
  evaluate->add_option("--hierarchy", hierarchy_path, "sense hierarchy TSV");
  evaluate->add_option("--sense-level", sense_level, "label granularity (1-3)")
      ->check(CLI::Range(1, 3));
  evaluate->add_flag("--strict", strict, "require all senses to match");
  evaluate->add_option("--confusion", confusion_out, "write confusion matrix TSV");
  evaluate->add_option("--genre-table", genre_out, "write genre accuracy TSV");

  std::string stats_path, stats_hierarchy;
  CLI::App* stats = app.add_subcommand("stats", "type-by-genre relation counts");
  stats->add_option("relations", stats_path, "relation TSV")->required();
  stats->add_option("--hierarchy", stats_hierarchy, "sense hierarchy TSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) return run_convert(config);
    if (evaluate->parsed())
      return run_evaluate(pred_path, gold_path, hierarchy_path, sense_level,
                          strict, confusion_out, genre_out);
    if (stats->parsed()) return run_stats(stats_path, stats_hierarchy);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFatal;
  }
  return kFatal;
}
