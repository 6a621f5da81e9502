#include "gdtb/aligner.hpp"

#include <set>
#include <stdexcept>

namespace gdtb {

std::string genre_from_doc_id(const std::string& doc_id) {
  size_t first = doc_id.find('_');
  if (first == std::string::npos) return "unknown";
  size_t second = doc_id.find('_', first + 1);
  if (second == std::string::npos) return "unknown";
  return doc_id.substr(first + 1, second - first - 1);
}

Document align_layers(const std::string& doc_id, const ErstLayer& rst,
                      const ConlluLayer& syntax, std::vector<Mention> mentions) {
  const size_t n_rst = rst.token_forms.size();
  const size_t n_syn = syntax.tokens.size();
  size_t n = std::min(n_rst, n_syn);
  for (size_t i = 0; i < n; ++i) {
    if (rst.token_forms[i] != syntax.tokens[i].form)
      throw std::runtime_error(doc_id + ": layer alignment error at token index " +
                               std::to_string(i) + ": RST '" + rst.token_forms[i] +
                               "' vs syntax '" + syntax.tokens[i].form + "'");
  }
  if (n_rst != n_syn)
    throw std::runtime_error(doc_id + ": layer alignment error at token index " +
                             std::to_string(n) + ": RST layer has " +
                             std::to_string(n_rst) + " tokens, syntax layer " +
                             std::to_string(n_syn));

  Document doc;
  doc.doc_id = doc_id;
  doc.genre = genre_from_doc_id(doc_id);
  doc.tokens = syntax.tokens;
  doc.sentences = syntax.sentences;
  doc.paragraphs = syntax.paragraphs;
  doc.edus = rst.edus;
  doc.rst_relations = rst.relations;
  doc.signals = rst.signals;
  doc.mentions = std::move(mentions);

  // EDU partition check + sentence sets
  std::vector<bool> covered(n, false);
  for (Edu& e : doc.edus) {
    e.sent_indices.clear();
    std::set<int> sents;
    for (int i = e.token_span.begin; i < e.token_span.end; ++i) {
      if (i < 0 || i >= static_cast<int>(n))
        throw std::runtime_error(doc_id + ": EDU " + std::to_string(e.id) +
                                 " span out of document range");
      if (covered[i])
        throw std::runtime_error(doc_id + ": EDU spans overlap at token " +
                                 std::to_string(i));
      covered[i] = true;
      sents.insert(doc.tokens[i].sent_index);
    }
    e.sent_indices.assign(sents.begin(), sents.end());
  }
  for (size_t i = 0; i < n; ++i)
    if (!covered[i])
      throw std::runtime_error(doc_id + ": token " + std::to_string(i) +
                               " belongs to no EDU");

  for (const Signal& s : doc.signals) {
    if (!doc.relation_by_id(s.relation_id))
      throw std::runtime_error(doc_id + ": signal references unknown relation '" +
                               s.relation_id + "'");
    for (int ti : s.token_indices)
      if (ti < 0 || ti >= static_cast<int>(n))
        throw std::runtime_error(doc_id + ": signal token out of range");
  }

  for (Mention& m : doc.mentions) {
    if (m.token_span.begin < 0 || m.token_span.end > static_cast<int>(n))
      throw std::runtime_error(doc_id + ": mention span " + std::to_string(m.token_span.begin) +
                               "-" + std::to_string(m.token_span.end - 1) +
                               " outside document");
    m.sent_index = doc.tokens[m.token_span.begin].sent_index;
  }
  return doc;
}

}  // namespace gdtb
