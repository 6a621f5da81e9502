#include "gdtb/sense.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gdtb {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string strip_variant(std::string s) {
  for (const char* suffix : {"+belief", "+speechact"}) {
    std::string l = lower(s);
    size_t pos = l.find(suffix);
    if (pos != std::string::npos) s.erase(pos, std::string(suffix).size());
  }
  return s;
}

std::vector<std::string> split_dots(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, '.')) parts.push_back(piece);
  return parts;
}

}  // namespace

std::string SenseLabel::full() const {
  std::string s = level1 + "." + level2;
  if (!level3.empty()) s += "." + level3;
  return s;
}

std::string SenseLabel::at_level(int level) const {
  if (level <= 1) return level1;
  if (level == 2) return level1 + "." + level2;
  return full();
}

void SenseHierarchy::insert(const SenseLabel& s) {
  nodes_[{s.level1, s.level2}].insert(s.level3);
  canon_[lower(s.level1)] = s.level1;
  canon_[lower(s.level2)] = s.level2;
  if (!s.level3.empty()) canon_[lower(s.level3)] = s.level3;
}

SenseHierarchy SenseHierarchy::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sense hierarchy: " + path);
  SenseHierarchy h;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto parts = split_dots(line);
    if (parts.size() < 2 || parts.size() > 3)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": sense must have 2 or 3 levels: " + line);
    SenseLabel s{parts[0], parts[1], parts.size() == 3 ? parts[2] : ""};
    h.insert(s);
  }
  if (h.nodes_.empty())
    throw std::runtime_error("sense hierarchy is empty: " + path);
  return h;
}

SenseHierarchy SenseHierarchy::builtin() {
  static const char* kSenses[] = {
      "Temporal.Synchronous",
      "Temporal.Asynchronous.Precedence",
      "Temporal.Asynchronous.Succession",
      "Contingency.Cause.Reason",
      "Contingency.Cause.Result",
      "Contingency.Cause.NegResult",
      "Contingency.Condition.Arg1-as-cond",
      "Contingency.Condition.Arg2-as-cond",
      "Contingency.Negative-condition.Arg1-as-negCond",
      "Contingency.Negative-condition.Arg2-as-negCond",
      "Contingency.Purpose.Arg1-as-goal",
      "Contingency.Purpose.Arg2-as-goal",
      "Comparison.Concession.Arg1-as-denier",
      "Comparison.Concession.Arg2-as-denier",
      "Comparison.Contrast",
      "Comparison.Similarity",
      "Expansion.Conjunction",
      "Expansion.Disjunction",
      "Expansion.Equivalence",
      "Expansion.Exception.Arg1-as-excpt",
      "Expansion.Exception.Arg2-as-excpt",
      "Expansion.Instantiation.Arg1-as-instance",
      "Expansion.Instantiation.Arg2-as-instance",
      "Expansion.Level-of-detail.Arg1-as-detail",
      "Expansion.Level-of-detail.Arg2-as-detail",
      "Expansion.Manner.Arg1-as-manner",
      "Expansion.Manner.Arg2-as-manner",
      "Expansion.Substitution.Arg1-as-subst",
      "Expansion.Substitution.Arg2-as-subst",
  };
  SenseHierarchy h;
  for (const char* s : kSenses) {
    auto parts = split_dots(s);
    h.insert({parts[0], parts[1], parts.size() == 3 ? parts[2] : ""});
  }
  return h;
}

bool SenseHierarchy::valid(const SenseLabel& s) const {
  auto it = nodes_.find({s.level1, s.level2});
  if (it == nodes_.end()) return false;
  if (s.level3.empty()) return true;
  return it->second.count(s.level3) > 0;
}

bool SenseHierarchy::directional(const std::string& level1,
                                 const std::string& level2) const {
  auto it = nodes_.find({level1, level2});
  if (it == nodes_.end()) return false;
  for (const std::string& l3 : it->second)
    if (!l3.empty()) return true;
  return false;
}

SenseLabel SenseHierarchy::normalize(const std::string& raw) const {
  auto parts = split_dots(raw);
  if (parts.size() < 2 || parts.size() > 3)
    throw std::runtime_error("not a dotted PDTB v3 sense: '" + raw + "'");
  for (std::string& p : parts) {
    p = strip_variant(p);
    auto it = canon_.find(lower(p));
    if (it != canon_.end()) p = it->second;
  }
  SenseLabel s{parts[0], parts[1], parts.size() == 3 ? parts[2] : ""};
  if (!valid(s))
    throw std::runtime_error("sense not in PDTB v3 hierarchy: '" + raw + "'");
  return s;
}

std::vector<SenseLabel> SenseHierarchy::all() const {
  std::vector<SenseLabel> out;
  for (const auto& [key, l3s] : nodes_)
    for (const std::string& l3 : l3s) out.push_back({key.first, key.second, l3});
  return out;
}

}  // namespace gdtb
