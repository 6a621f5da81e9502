#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gdtb/pipeline.hpp"
#include "gdtb/relation_io.hpp"

using namespace gdtb;

namespace {

const std::string kDataDir = GDTB_TEST_DATA_DIR;
const std::string kResDir = GDTB_RESOURCES_DIR;

RunConfig fixture_config() {
  RunConfig cfg;
  cfg.rst_dir = kDataDir + "/corpus/rst";
  cfg.conllu_dir = kDataDir + "/corpus/conllu";
  cfg.coref_dir = kDataDir + "/corpus/coref";
  cfg.resources_dir = kResDir;
  return cfg;
}

std::string brief(const PdtbRelation& r) {
  std::string senses;
  for (const SenseLabel& s : r.senses) {
    if (!senses.empty()) senses += ';';
    senses += s.full();
  }
  std::string flags;
  for (RelationFlag f : r.flags) {
    if (!flags.empty()) flags += ';';
    flags += to_string(f);
  }
  return to_string(r.rel_type) + "|" + r.conn_text + "|" +
         r.arg1_span.to_string() + "|" + r.arg2_span.to_string() + "|" + senses +
         "|" + flags;
}

}  // namespace

TEST_CASE("full corpus conversion reproduces the reference relations") {
  RunConfig cfg = fixture_config();
  LoadedResources res = load_run_resources(cfg);
  ConvertResult result = convert_corpus(cfg, res);

  CHECK(result.errors.empty());
  CHECK(result.documents_converted == 2);
  REQUIRE(result.relations.size() == 17);

  std::vector<std::string> expected = {
      // GUM_fiction_alice
      "Implicit|in order to|0-4|5-9|Contingency.Purpose.Arg2-as-goal|",
      "Implicit|in fact|0-9|20-26|Expansion.Level-of-detail.Arg2-as-detail|"
      "low-confidence",
      "Explicit|because|10-12|14-19|Contingency.Cause.Reason|",
      "Explicit|however|10-19|21-26|Comparison.Concession.Arg2-as-denier|",
      "Hypophora||27-31|32-39||",
      "Implicit|then|40-43|44-48|Temporal.Asynchronous.Precedence|",
      "Explicit|and|40-43|45-48|Expansion.Conjunction|",
      "AltLex|this caused|40-48|51-56|Contingency.Cause.Result|",
      "EntRel||57-70|71-78||",
      "AltLexC|had|63-70|58-62|Contingency.Condition.Arg2-as-cond|",
      // GUM_news_flood
      "Explicit|after|0-4|6-9|Temporal.Asynchronous.Succession|",
      "Implicit|and|0-9|12-21|Expansion.Conjunction|",
      "Explicit|although|12-16|18-21|Comparison.Concession.Arg1-as-denier|",
      "Implicit|however|22-26|27-30|Comparison.Contrast|",
      "Implicit|and|22-30|31-39|Expansion.Conjunction|",
      "Explicit|since|31-34|36-39|Contingency.Cause.Reason|",
      "NoRel||31-39|40-44||",
  };
  for (size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(brief(result.relations[i]) == expected[i]);
  }
  CHECK(result.relations[0].doc_id == "GUM_fiction_alice");
  CHECK(result.relations[16].doc_id == "GUM_news_flood");

  // surface connective spans survive
  CHECK(result.relations[7].conn_tokens == Span(49, 51));
  CHECK(result.relations[9].conn_tokens == Span(57, 58));
}

TEST_CASE("conversion is deterministic and parallel-safe") {
  RunConfig cfg = fixture_config();
  LoadedResources res = load_run_resources(cfg);
  ConvertResult once = convert_corpus(cfg, res);
  ConvertResult twice = convert_corpus(cfg, res);
  cfg.jobs = 4;
  ConvertResult parallel = convert_corpus(cfg, res);

  REQUIRE(once.relations.size() == twice.relations.size());
  REQUIRE(once.relations.size() == parallel.relations.size());
  for (size_t i = 0; i < once.relations.size(); ++i) {
    CHECK(brief(once.relations[i]) == brief(twice.relations[i]));
    CHECK(brief(once.relations[i]) == brief(parallel.relations[i]));
  }
}

TEST_CASE("documents without a coreference file still convert") {
  RunConfig cfg = fixture_config();
  cfg.genre_filter = "news";  // GUM_news_flood ships no coref layer
  LoadedResources res = load_run_resources(cfg);
  ConvertResult result = convert_corpus(cfg, res);
  CHECK(result.errors.empty());
  CHECK(result.documents_converted == 1);
  CHECK(result.relations.size() == 7);
  for (const PdtbRelation& r : result.relations)
    CHECK(r.doc_id == "GUM_news_flood");
}

TEST_CASE("genre filter can exclude everything") {
  RunConfig cfg = fixture_config();
  cfg.genre_filter = "voyage";
  LoadedResources res = load_run_resources(cfg);
  ConvertResult result = convert_corpus(cfg, res);
  CHECK(result.documents_converted == 0);
  CHECK(result.relations.empty());
}

TEST_CASE("hints file changes only the hinted junctions") {
  RunConfig cfg = fixture_config();
  cfg.hints_path = kDataDir + "/hints.tsv";
  LoadedResources res = load_run_resources(cfg);
  REQUIRE(res.hints.has_value());
  ConvertResult result = convert_corpus(cfg, res);
  REQUIRE(result.relations.size() == 17);
  CHECK(brief(result.relations[1]) ==
        "Implicit|because|0-9|20-26|Contingency.Cause.Reason|low-confidence");
  CHECK(brief(result.relations[13]) ==
        "Implicit|but|22-26|27-30|Comparison.Contrast|");
  // an unhinted relation is untouched
  CHECK(brief(result.relations[2]) ==
        "Explicit|because|10-12|14-19|Contingency.Cause.Reason|");
}

TEST_CASE("include_connective_in_arg2 keeps the connective tokens") {
  RunConfig cfg = fixture_config();
  cfg.include_connective_in_arg2 = true;
  LoadedResources res = load_run_resources(cfg);
  ConvertResult result = convert_corpus(cfg, res);
  const PdtbRelation* because = nullptr;
  for (const PdtbRelation& r : result.relations)
    if (r.rel_type == RelType::Explicit && r.conn_text == "because") because = &r;
  REQUIRE(because != nullptr);
  CHECK(because->arg2_span == Span(13, 20));
}

TEST_CASE("relation records round-trip through the TSV format") {
  RunConfig cfg = fixture_config();
  LoadedResources res = load_run_resources(cfg);
  ConvertResult result = convert_corpus(cfg, res);

  std::ostringstream out;
  write_relations(out, result.relations);
  std::istringstream in(out.str());
  std::vector<PdtbRelation> back =
      read_relations(in, res.mapping.hierarchy());

  REQUIRE(back.size() == result.relations.size());
  for (size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].doc_id == result.relations[i].doc_id);
    CHECK(back[i].rel_type == result.relations[i].rel_type);
    CHECK(back[i].conn_text == result.relations[i].conn_text);
    CHECK(back[i].conn_tokens == result.relations[i].conn_tokens);
    CHECK(back[i].arg1_span == result.relations[i].arg1_span);
    CHECK(back[i].arg2_span == result.relations[i].arg2_span);
    CHECK(back[i].senses == result.relations[i].senses);
    CHECK(back[i].rst_label == result.relations[i].rst_label);
    CHECK(back[i].flags == result.relations[i].flags);
  }
}

TEST_CASE("sort_relations orders by document, spans and type") {
  std::vector<PdtbRelation> rels;
  PdtbRelation a;
  a.doc_id = "GUM_b_doc";
  a.arg1_span = Span(0, 3);
  a.arg2_span = Span(4, 6);
  PdtbRelation b = a;
  b.doc_id = "GUM_a_doc";
  PdtbRelation c = b;
  c.arg1_span = Span(5, 8);
  rels = {a, c, b};
  sort_relations(rels);
  CHECK(rels[0].doc_id == "GUM_a_doc");
  CHECK(rels[0].arg1_span == Span(0, 3));
  CHECK(rels[1].arg1_span == Span(5, 8));
  CHECK(rels[2].doc_id == "GUM_b_doc");
}

TEST_CASE("relation_stats tallies types per genre") {
  RunConfig cfg = fixture_config();
  LoadedResources res = load_run_resources(cfg);
  ConvertResult result = convert_corpus(cfg, res);
  auto stats = relation_stats(result.relations);
  CHECK(stats.at("Explicit").at("fiction") == 3);
  CHECK(stats.at("Explicit").at("news") == 3);
  CHECK(stats.at("Implicit").at("fiction") == 3);
  CHECK(stats.at("Hypophora").at("fiction") == 1);
  CHECK(stats.at("NoRel").at("news") == 1);
  CHECK(stats.count("AltLexC") == 1);
}

TEST_CASE("a broken document is reported and skipped") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::path("broken_corpus_tmp");
  fs::create_directories(tmp / "rst");
  fs::create_directories(tmp / "conllu");
  fs::copy_file(kDataDir + "/corpus/rst/GUM_news_flood.rs4",
                tmp / "rst" / "GUM_news_flood.rs4",
                fs::copy_options::overwrite_existing);
  {
    std::ofstream bad(tmp / "conllu" / "GUM_news_flood.conllu");
    bad << "1\tWrong\twrong\tADJ\tJJ\t_\t0\troot\t_\t_\n";
  }

  RunConfig cfg = fixture_config();
  cfg.rst_dir = (tmp / "rst").string();
  cfg.conllu_dir = (tmp / "conllu").string();
  cfg.coref_dir = "";
  LoadedResources res = load_run_resources(cfg);
  ConvertResult result = convert_corpus(cfg, res);
  fs::remove_all(tmp);

  CHECK(result.documents_converted == 0);
  CHECK(result.relations.empty());
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].find("GUM_news_flood") != std::string::npos);
}

TEST_CASE("missing resources fail loudly") {
  RunConfig cfg = fixture_config();
  cfg.resources_dir = "/nonexistent";
  CHECK_THROWS_AS(load_run_resources(cfg), std::runtime_error);
}
