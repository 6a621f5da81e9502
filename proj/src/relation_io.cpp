#include "gdtb/relation_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gdtb {

namespace {

constexpr const char* kHeader =
    "doc_id\trel_type\tconn_text\tconn_spans\targ1_spans\targ2_spans\t"
    "arg1_text\targ2_text\tsense1\tsense2\trst_label\tflags";

std::string field_or_blank(const std::string& s) { return s.empty() ? "_" : s; }

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t pos = 0;
  for (;;) {
    size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

}  // namespace

void sort_relations(std::vector<PdtbRelation>& relations) {
  std::stable_sort(relations.begin(), relations.end(),
                   [](const PdtbRelation& a, const PdtbRelation& b) {
                     if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
                     int a1 = a.arg1_span.empty() ? -1 : a.arg1_span.first();
                     int b1 = b.arg1_span.empty() ? -1 : b.arg1_span.first();
                     if (a1 != b1) return a1 < b1;
                     int a2 = a.arg2_span.empty() ? -1 : a.arg2_span.first();
                     int b2 = b.arg2_span.empty() ? -1 : b.arg2_span.first();
                     if (a2 != b2) return a2 < b2;
                     return to_string(a.rel_type) < to_string(b.rel_type);
                   });
}

void write_relations(std::ostream& out, const std::vector<PdtbRelation>& relations,
                     const Document* doc) {
  out << kHeader << '\n';
  for (const PdtbRelation& r : relations) {
    std::string flags;
    for (RelationFlag f : r.flags) {
      if (!flags.empty()) flags += ';';
      flags += to_string(f);
    }
    std::string arg1_text = doc ? doc->text(r.arg1_span) : "";
    std::string arg2_text = doc ? doc->text(r.arg2_span) : "";
    out << r.doc_id << '\t' << to_string(r.rel_type) << '\t'
        << field_or_blank(r.conn_text) << '\t' << r.conn_tokens.to_string() << '\t'
        << r.arg1_span.to_string() << '\t' << r.arg2_span.to_string() << '\t'
        << field_or_blank(arg1_text) << '\t' << field_or_blank(arg2_text) << '\t'
        << (r.senses.empty() ? "_" : r.senses[0].full()) << '\t'
        << (r.senses.size() > 1 ? r.senses[1].full() : "_") << '\t'
        << field_or_blank(r.rst_label) << '\t' << field_or_blank(flags) << '\n';
  }
}

void write_relations_file(const std::string& path,
                          const std::vector<PdtbRelation>& relations) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write relation file: " + path);
  write_relations(out, relations);
}

std::vector<PdtbRelation> read_relations(std::istream& in,
                                         const SenseHierarchy& hierarchy) {
  std::vector<PdtbRelation> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("doc_id\t", 0) == 0) continue;  // header
    auto cols = split_tabs(line);
    if (cols.size() != 12)
      throw std::runtime_error("relation line " + std::to_string(lineno) +
                               ": expected 12 columns, got " +
                               std::to_string(cols.size()));
    try {
      PdtbRelation r;
      r.doc_id = cols[0];
      r.rel_type = rel_type_from_string(cols[1]);
      if (cols[2] != "_") r.conn_text = cols[2];
      r.conn_tokens = Span::parse(cols[3]);
      r.arg1_span = Span::parse(cols[4]);
      r.arg2_span = Span::parse(cols[5]);
      if (cols[8] != "_") r.senses.push_back(hierarchy.normalize(cols[8]));
      if (cols[9] != "_") r.senses.push_back(hierarchy.normalize(cols[9]));
      if (cols[10] != "_") r.rst_label = cols[10];
      if (cols[11] != "_") {
        std::stringstream fs(cols[11]);
        std::string f;
        while (std::getline(fs, f, ';')) r.flags.insert(flag_from_string(f));
      }
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error("relation line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return out;
}

std::vector<PdtbRelation> read_relations_file(const std::string& path,
                                              const SenseHierarchy& hierarchy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open relation file: " + path);
  try {
    return read_relations(in, hierarchy);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace gdtb
