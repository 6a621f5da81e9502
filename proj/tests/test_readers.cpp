#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gdtb/aligner.hpp"
#include "gdtb/conllu_reader.hpp"
#include "gdtb/coref_reader.hpp"
#include "gdtb/erst_reader.hpp"

using namespace gdtb;

namespace {

const std::string kDataDir = GDTB_TEST_DATA_DIR;

std::string wrap_rst(const std::string& body) {
  return "<?xml version=\"1.0\"?><rst><header><relations>"
         "<rel name=\"joint-list\" type=\"multinuc\"/>"
         "<rel name=\"causal-cause\" type=\"rst\"/>"
         "<rel name=\"same-unit\" type=\"multinuc\"/>"
         "</relations></header><body>" +
         body + "</body></rst>";
}

}  // namespace

TEST_CASE("segments become EDUs numbered in text order") {
  ErstLayer layer = parse_rst(wrap_rst(
      "<segment id=\"7\" parent=\"20\" relname=\"span\">One two three</segment>"
      "<segment id=\"3\" parent=\"7\" relname=\"causal-cause\">four five .</segment>"
      "<group id=\"20\" type=\"span\"/>"));
  REQUIRE(layer.edus.size() == 2);
  CHECK(layer.edus[0].id == 1);
  CHECK(layer.edus[0].token_span == Range{0, 3});
  CHECK(layer.edus[1].token_span == Range{3, 6});
  CHECK(layer.token_forms ==
        std::vector<std::string>{"One", "two", "three", "four", "five", "."});
  CHECK(layer.edu_texts[1] == "four five .");
}

TEST_CASE("satellite relation: id is the satellite node, target excludes it") {
  ErstLayer layer = parse_rst(wrap_rst(
      "<segment id=\"1\" parent=\"10\" relname=\"span\">a b</segment>"
      "<segment id=\"2\" parent=\"1\" relname=\"causal-cause\">c d</segment>"
      "<group id=\"10\" type=\"span\"/>"));
  REQUIRE(layer.relations.size() == 1);
  const RstRelation& r = layer.relations[0];
  CHECK(r.id == "2");
  CHECK(r.label == "causal-cause");
  CHECK(r.nuclearity == Nuclearity::SatelliteNucleus);
  CHECK(r.edge_kind == EdgeKind::Tree);
  CHECK(r.source_edus == std::vector<int>{2});
  CHECK(r.target_edus == std::vector<int>{1});
  CHECK(r.source_head_edu == 2);
  CHECK(r.target_head_edu == 1);
}

TEST_CASE("multinuclear nodes decompose into adjacent pairs") {
  ErstLayer layer = parse_rst(wrap_rst(
      "<segment id=\"1\" parent=\"9\" relname=\"joint-list\">a</segment>"
      "<segment id=\"2\" parent=\"9\" relname=\"joint-list\">b</segment>"
      "<segment id=\"3\" parent=\"9\" relname=\"joint-list\">c</segment>"
      "<group id=\"9\" type=\"multinuc\"/>"));
  REQUIRE(layer.relations.size() == 2);
  CHECK(layer.relations[0].id == "2");
  CHECK(layer.relations[0].source_edus == std::vector<int>{1});
  CHECK(layer.relations[0].target_edus == std::vector<int>{2});
  CHECK(layer.relations[0].nuclearity == Nuclearity::Multinuclear);
  CHECK(layer.relations[1].id == "3");
  CHECK(layer.relations[1].source_edus == std::vector<int>{2});
  CHECK(layer.relations[1].target_edus == std::vector<int>{3});
}

TEST_CASE("same-unit spawns no relations") {
  ErstLayer layer = parse_rst(wrap_rst(
      "<segment id=\"1\" parent=\"9\" relname=\"same-unit\">a b</segment>"
      "<segment id=\"2\" parent=\"9\" relname=\"same-unit\">c</segment>"
      "<group id=\"9\" type=\"multinuc\"/>"));
  CHECK(layer.relations.empty());
}

TEST_CASE("parse errors: dangling parent and unknown label") {
  CHECK_THROWS_WITH_AS(
      parse_rst(wrap_rst(
          "<segment id=\"1\" parent=\"99\" relname=\"span\">a</segment>")),
      doctest::Contains("dangling node reference"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_rst(wrap_rst(
          "<segment id=\"1\" parent=\"10\" relname=\"span\">a</segment>"
          "<segment id=\"2\" parent=\"1\" relname=\"totally-bogus\">b</segment>"
          "<group id=\"10\" type=\"span\"/>")),
      doctest::Contains("totally-bogus"), std::runtime_error);
}

TEST_CASE("connective signal without tokens is rejected") {
  CHECK_THROWS_AS(
      parse_rst(wrap_rst(
          "<segment id=\"1\" parent=\"10\" relname=\"span\">a</segment>"
          "<segment id=\"2\" parent=\"1\" relname=\"causal-cause\">b</segment>"
          "<group id=\"10\" type=\"span\"/>"
          "<signals><signal source=\"2\" type=\"dm\" subtype=\"dm\" tokens=\"\"/>"
          "</signals>")),
      std::runtime_error);
}

TEST_CASE("fixture rs4: secedges, sibling signal resolution, token indexing") {
  ErstLayer layer = parse_rst_file(kDataDir + "/corpus/rst/GUM_news_flood.rs4");
  CHECK(layer.edus.size() == 10);
  CHECK(layer.token_forms.size() == 45);

  // the secedge survives as a tree-breaking relation under its own id
  const RstRelation* sec = nullptr;
  for (const RstRelation& r : layer.relations)
    if (r.edge_kind == EdgeKind::TreeBreaking) sec = &r;
  REQUIRE(sec != nullptr);
  CHECK(sec->id == "5-1");
  CHECK(sec->label == "causal-result");
  CHECK(sec->source_edus == std::vector<int>{5});

  // dm signals: rs4 token numbers are 1-based
  bool found_after = false;
  for (const Signal& s : layer.signals) {
    if (s.relation_id == "2" && s.signal_class == "dm") {
      found_after = true;
      CHECK(s.token_indices == std::vector<int>{5});
    }
  }
  CHECK(found_after);

  // a signal on the first member of a multinuc resolves to the pair relation
  // carried by its sibling, and non-dm signal classes are preserved
  bool found_chain = false;
  for (const Signal& s : layer.signals) {
    if (s.signal_type == "semantic") {
      found_chain = true;
      CHECK(s.relation_id == "7");
      CHECK(s.signal_subtype == "lexical_chain");
      CHECK(s.token_indices == std::vector<int>{22, 26});
    }
  }
  CHECK(found_chain);
}

TEST_CASE("conllu: sentences, paragraphs and document-wide heads") {
  ConlluLayer layer =
      parse_conllu_file(kDataDir + "/corpus/conllu/GUM_fiction_alice.conllu");
  CHECK(layer.doc_id == "GUM_fiction_alice");
  CHECK(layer.tokens.size() == 79);
  CHECK(layer.sentences.size() == 9);
  CHECK(layer.paragraphs.size() == 4);
  CHECK(layer.paragraphs[0] == Range{0, 27});
  CHECK(layer.paragraphs[1] == Range{27, 40});

  // "However" heads to "late", both in the third sentence
  const Token& however = layer.tokens[20];
  CHECK(however.form == "However");
  REQUIRE(however.head.has_value());
  CHECK(*however.head == 25);
  CHECK(however.sent_index == 2);
  CHECK(however.par_index == 0);

  // roots carry no head
  CHECK_FALSE(layer.tokens[1].head.has_value());
  CHECK(layer.tokens[1].deprel == "root");
}

TEST_CASE("conllu: multiword tokens and empty nodes are skipped") {
  ConlluLayer layer = parse_conllu(
      "# sent_id = x-1\n"
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\tVBP\t_\t3\taux\t_\t_\n"
      "2\tn't\tnot\tPART\tRB\t_\t3\tadvmod\t_\t_\n"
      "2.1\tghost\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "3\tgo\tgo\tVERB\tVB\t_\t0\troot\t_\t_\n");
  REQUIRE(layer.tokens.size() == 3);
  CHECK(layer.tokens[0].form == "do");
  CHECK(layer.tokens[2].form == "go");
  CHECK(*layer.tokens[0].head == 2);
  CHECK(layer.sentences.size() == 1);
}

TEST_CASE("conllu: malformed rows are rejected") {
  CHECK_THROWS_AS(parse_conllu("1\tonly-two-columns\n"), std::runtime_error);
  CHECK_THROWS_AS(
      parse_conllu("1\ta\ta\tX\tX\t_\t9\tdep\t_\t_\n"),  // head out of range
      std::runtime_error);
}

TEST_CASE("coref mentions parse with flags, sorted by span start") {
  std::vector<Mention> mentions =
      parse_coref_file(kDataDir + "/corpus/coref/GUM_fiction_alice.tsv");
  REQUIRE(mentions.size() == 7);
  CHECK(mentions[0].entity_id == "alice");
  CHECK(mentions[0].token_span == Range{0, 1});
  CHECK_FALSE(mentions[0].is_pronoun);
  CHECK(mentions[1].token_span == Range{7, 9});  // end column is inclusive
  CHECK(mentions[1].is_definite);
  CHECK(mentions[2].is_pronoun);
}

TEST_CASE("aligner merges layers and validates token forms") {
  ErstLayer rst = parse_rst_file(kDataDir + "/corpus/rst/GUM_fiction_alice.rs4");
  ConlluLayer syntax =
      parse_conllu_file(kDataDir + "/corpus/conllu/GUM_fiction_alice.conllu");
  std::vector<Mention> mentions =
      parse_coref_file(kDataDir + "/corpus/coref/GUM_fiction_alice.tsv");
  Document doc = align_layers("GUM_fiction_alice", rst, syntax, mentions);
  CHECK(doc.genre == "fiction");
  CHECK(doc.tokens.size() == 79);
  CHECK(doc.edus.size() == 13);
  CHECK(doc.mentions.size() == 7);
  CHECK(doc.sentence_of(20) == 2);
  CHECK(doc.text(Span(0, 2)) == "Alice wanted");
  CHECK(doc.edu_by_id(3)->token_span == Range{10, 13});
  REQUIRE(doc.relation_by_id("4") != nullptr);
  CHECK(doc.relation_by_id("4")->label == "causal-cause");
  CHECK(doc.edu_span({1, 2}) == Span(0, 10));
}

TEST_CASE("aligner rejects diverging token forms and counts") {
  ErstLayer rst = parse_rst(wrap_rst(
      "<segment id=\"1\" parent=\"10\" relname=\"span\">Hello world</segment>"
      "<segment id=\"2\" parent=\"1\" relname=\"causal-cause\">again .</segment>"
      "<group id=\"10\" type=\"span\"/>"));
  ConlluLayer good = parse_conllu(
      "1\tHello\thello\tINTJ\tUH\t_\t0\troot\t_\t_\n"
      "2\tworld\tworld\tNOUN\tNN\t_\t1\tdep\t_\t_\n"
      "3\tagain\tagain\tADV\tRB\t_\t1\tdep\t_\t_\n"
      "4\t.\t.\tPUNCT\t.\t_\t1\tpunct\t_\t_\n");
  CHECK_NOTHROW(align_layers("d", rst, good, {}));

  ConlluLayer bad_form = parse_conllu(
      "1\tHello\thello\tINTJ\tUH\t_\t0\troot\t_\t_\n"
      "2\tplanet\tplanet\tNOUN\tNN\t_\t1\tdep\t_\t_\n"
      "3\tagain\tagain\tADV\tRB\t_\t1\tdep\t_\t_\n"
      "4\t.\t.\tPUNCT\t.\t_\t1\tpunct\t_\t_\n");
  CHECK_THROWS_AS(align_layers("d", rst, bad_form, {}), std::runtime_error);

  ConlluLayer short_doc = parse_conllu(
      "1\tHello\thello\tINTJ\tUH\t_\t0\troot\t_\t_\n"
      "2\tworld\tworld\tNOUN\tNN\t_\t1\tdep\t_\t_\n");
  CHECK_THROWS_AS(align_layers("d", rst, short_doc, {}), std::runtime_error);

  std::vector<Mention> oob{{"e", Range{90, 95}, false, false, 0}};
  CHECK_THROWS_AS(align_layers("d", rst, good, oob), std::runtime_error);
}

TEST_CASE("genre comes from the document id") {
  CHECK(genre_from_doc_id("GUM_academic_art") == "academic");
  CHECK(genre_from_doc_id("GUM_news_flood") == "news");
  CHECK(genre_from_doc_id("nodashes") == "unknown");
  CHECK(genre_from_doc_id("GUM_only") == "unknown");
}
