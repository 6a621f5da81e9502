#include "gdtb/conllu_reader.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gdtb {

namespace {

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

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ConlluLayer parse_conllu(const std::string& text) {
  ConlluLayer layer;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int par_index = 0;
  bool pending_newpar = false;
  int sent_start_tok = -1;        // doc-wide index of current sentence start
  int par_start_tok = 0;
  std::vector<std::pair<int, int>> pending_heads;  // (token index, local head)

  auto close_sentence = [&]() {
    if (sent_start_tok < 0) return;
    int sent_index = static_cast<int>(layer.sentences.size());
    Range sent{sent_start_tok, static_cast<int>(layer.tokens.size())};
    for (auto [ti, local_head] : pending_heads) {
      if (local_head == 0) {
        layer.tokens[ti].head.reset();
      } else {
        int head_doc = sent.begin + local_head - 1;
        if (!sent.contains(head_doc))
          throw std::runtime_error("line " + std::to_string(lineno) +
                                   ": head index " + std::to_string(local_head) +
                                   " out of sentence range");
        layer.tokens[ti].head = head_doc;
      }
    }
    pending_heads.clear();
    layer.sentences.push_back(sent);
    (void)sent_index;
    sent_start_tok = -1;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      close_sentence();
      continue;
    }
    if (line[0] == '#') {
      std::string meta = trim(line.substr(1));
      if (meta.rfind("newdoc", 0) == 0) {
        size_t eq = meta.find('=');
        if (eq != std::string::npos) layer.doc_id = trim(meta.substr(eq + 1));
      } else if (meta.rfind("newpar", 0) == 0) {
        pending_newpar = true;
      }
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != 10)
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 10 columns, got " +
                               std::to_string(cols.size()));
    // skip multiword-token ranges and empty (ellipsis) nodes
    if (!is_integer(cols[0])) continue;

    if (sent_start_tok < 0) {
      sent_start_tok = static_cast<int>(layer.tokens.size());
      if (pending_newpar && !layer.tokens.empty()) {
        layer.paragraphs.push_back({par_start_tok, sent_start_tok});
        par_start_tok = sent_start_tok;
        ++par_index;
      }
      pending_newpar = false;
    }

    Token t;
    t.index = static_cast<int>(layer.tokens.size());
    t.form = cols[1];
    t.upos = cols[3];
    t.xpos = cols[4];
    t.feats = cols[5];
    t.deprel = cols[7];
    t.sent_index = static_cast<int>(layer.sentences.size());
    t.par_index = par_index;
    if (cols[6] != "_") {
      if (!is_integer(cols[6]))
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": bad head field '" + cols[6] + "'");
      pending_heads.emplace_back(t.index, std::stoi(cols[6]));
    }
    layer.tokens.push_back(std::move(t));
  }
  close_sentence();
  if (!layer.tokens.empty())
    layer.paragraphs.push_back({par_start_tok, static_cast<int>(layer.tokens.size())});
  return layer;
}

ConlluLayer parse_conllu_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CoNLL-U file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_conllu(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace gdtb
