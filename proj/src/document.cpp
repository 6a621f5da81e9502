#include "gdtb/document.hpp"

namespace gdtb {

const Edu* Document::edu_by_id(int id) const {
  for (const Edu& e : edus)
    if (e.id == id) return &e;
  return nullptr;
}

const RstRelation* Document::relation_by_id(const std::string& id) const {
  for (const RstRelation& r : rst_relations)
    if (r.id == id) return &r;
  return nullptr;
}

Span Document::edu_span(const std::vector<int>& edu_ids) const {
  Span out;
  for (int id : edu_ids) {
    const Edu* e = edu_by_id(id);
    if (e) out.add(e->token_span);
  }
  return out;
}

std::string Document::text(const Span& span) const {
  std::string out;
  for (int i : span.tokens()) {
    if (i < 0 || i >= static_cast<int>(tokens.size())) continue;
    if (!out.empty()) out += ' ';
    out += tokens[i].form;
  }
  return out;
}

}  // namespace gdtb
