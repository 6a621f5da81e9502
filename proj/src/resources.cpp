#include "gdtb/resources.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gdtb/erst_reader.hpp"

namespace gdtb {

std::string to_lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, sep)) out.push_back(piece);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Tab-separated data rows, '#' comments and blank lines skipped.
std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open resource file: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split(line, '\t'));
  }
  return rows;
}

// Two senses are compatible when they agree at Level-2 and neither pins a
// conflicting Level-3; the merge keeps the more specific Level-3.
bool merge_senses(const SenseLabel& a, const SenseLabel& b, SenseLabel* out) {
  if (a.level1 != b.level1 || a.level2 != b.level2) return false;
  if (!a.level3.empty() && !b.level3.empty() && a.level3 != b.level3) return false;
  *out = a;
  if (out->level3.empty()) out->level3 = b.level3;
  return true;
}

DirectionRule parse_direction(const std::string& spec, const std::string& path,
                              const std::string& label) {
  if (spec.empty() || spec == "-") return DirectionRule::None;
  if (spec == "role:sat") return DirectionRule::RoleOnSatellite;
  if (spec == "role:nuc") return DirectionRule::RoleOnNucleus;
  if (spec == "cause:sat") return DirectionRule::CauseOnSatellite;
  if (spec == "cause:nuc") return DirectionRule::CauseOnNucleus;
  throw std::runtime_error(path + ": bad direction spec '" + spec + "' for " + label);
}

}  // namespace

MappingResources MappingResources::load(const std::string& hierarchy_file,
                                        const std::string& lexicon_file,
                                        const std::string& map_file) {
  MappingResources res;
  res.hierarchy_ = SenseHierarchy::load(hierarchy_file);

  // lexicon: connective <TAB> class <TAB> senses (semicolon list, rank order)
  for (const auto& row : read_tsv(lexicon_file)) {
    if (row.size() != 3)
      throw std::runtime_error(lexicon_file + ": lexicon rows need 3 columns");
    ConnectiveEntry e;
    e.connective = to_lower(trim(row[0]));
    std::string cls = trim(row[1]);
    if (cls == "subordinator") e.syntactic_class = ConnectiveClass::Subordinator;
    else if (cls == "coordinator") e.syntactic_class = ConnectiveClass::Coordinator;
    else if (cls == "adverbial") e.syntactic_class = ConnectiveClass::Adverbial;
    else throw std::runtime_error(lexicon_file + ": unknown class '" + cls + "'");
    for (const std::string& s : split(row[2], ';')) {
      std::string t = trim(s);
      if (!t.empty()) e.allowed_senses.push_back(res.hierarchy_.normalize(t));
    }
    if (e.allowed_senses.empty())
      throw std::runtime_error(lexicon_file + ": connective '" + e.connective +
                               "' has no senses");
    res.lexicon_[e.connective] = std::move(e);
  }
  if (res.lexicon_.empty())
    throw std::runtime_error(lexicon_file + ": connective lexicon is empty");

  // map: rst_label <TAB> senses (semicolon list; may be empty) <TAB> direction
  for (const auto& row : read_tsv(map_file)) {
    if (row.size() != 3)
      throw std::runtime_error(map_file + ": map rows need 3 columns");
    RstMapEntry e;
    e.rst_label = trim(row[0]);
    if (!is_gum_relation(e.rst_label))
      throw std::runtime_error(map_file + ": '" + e.rst_label +
                               "' is not a GUM v10 relation label");
    for (const std::string& s : split(row[1], ';')) {
      std::string t = trim(s);
      if (!t.empty() && t != "-") e.senses.push_back(res.hierarchy_.normalize(t));
    }
    e.direction = parse_direction(trim(row[2]), map_file, e.rst_label);
    res.rst_map_[e.rst_label] = std::move(e);
  }
  for (const std::string& label : gum_relation_inventory()) {
    if (label == "same-unit") continue;
    if (!res.rst_map_.count(label))
      throw std::runtime_error(map_file + ": missing entry for GUM relation '" +
                               label + "'");
  }
  return res;
}

const ConnectiveEntry* MappingResources::connective(const std::string& text) const {
  auto it = lexicon_.find(to_lower(text));
  return it == lexicon_.end() ? nullptr : &it->second;
}

const RstMapEntry* MappingResources::map_entry(const std::string& rst_label) const {
  auto it = rst_map_.find(rst_label);
  return it == rst_map_.end() ? nullptr : &it->second;
}

AllowedSenses MappingResources::allowed_senses(
    const std::optional<std::string>& connective_text,
    const std::string& rst_label) const {
  const RstMapEntry* entry = map_entry(rst_label);
  if (!entry)
    throw std::runtime_error("RST label '" + rst_label + "' has no map entry");

  AllowedSenses out;
  if (!connective_text) {
    out.senses = entry->senses;
    return out;
  }
  const ConnectiveEntry* conn = connective(*connective_text);
  if (!conn) {
    out.senses = entry->senses;
    out.unknown_connective = true;
    return out;
  }
  for (const SenseLabel& cs : conn->allowed_senses) {
    for (const SenseLabel& ms : entry->senses) {
      SenseLabel merged;
      if (merge_senses(cs, ms, &merged)) {
        if (std::find(out.senses.begin(), out.senses.end(), merged) == out.senses.end())
          out.senses.push_back(merged);
        break;
      }
    }
  }
  if (out.senses.empty()) {
    out.senses = conn->allowed_senses;
    out.map_conflict = true;
  }
  return out;
}

}  // namespace gdtb
