#include "gdtb/coref_reader.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gdtb {

std::vector<Mention> parse_coref(const std::string& text) {
  std::vector<Mention> mentions;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    size_t pos = 0;
    for (;;) {
      size_t tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() != 6)
      throw std::runtime_error("mention line " + std::to_string(lineno) +
                               ": expected 6 columns, got " + std::to_string(cols.size()));
    Mention m;
    m.entity_id = cols[1];
    try {
      int start = std::stoi(cols[2]);
      int end = std::stoi(cols[3]);
      m.token_span = {start, end + 1};
    } catch (const std::exception&) {
      throw std::runtime_error("mention line " + std::to_string(lineno) + ": bad span");
    }
    if (m.token_span.empty())
      throw std::runtime_error("mention line " + std::to_string(lineno) + ": empty span");
    m.is_pronoun = (cols[4] == "1" || cols[4] == "true");
    m.is_definite = (cols[5] == "1" || cols[5] == "true");
    mentions.push_back(std::move(m));
  }
  std::sort(mentions.begin(), mentions.end(), [](const Mention& a, const Mention& b) {
    if (a.token_span.begin != b.token_span.begin) return a.token_span.begin < b.token_span.begin;
    return a.token_span.end < b.token_span.end;
  });
  return mentions;
}

std::vector<Mention> parse_coref_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coref file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_coref(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace gdtb
