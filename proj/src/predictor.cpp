#include "gdtb/predictor.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gdtb {

namespace {

constexpr const char* kGlobalMajority = "and";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, sep)) out.push_back(piece);
  return out;
}

std::string hint_key(const std::string& doc_id, const Span& src, const Span& tgt) {
  return doc_id + "\t" + src.to_string() + "\t" + tgt.to_string();
}

}  // namespace

BaselineTable BaselineTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open baseline table: " + path);
  std::map<std::string, std::map<std::string, int>> counts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 3 columns");
    counts[cols[0]][to_lower(cols[1])] += std::stoi(cols[2]);
  }
  return from_counts(counts);
}

BaselineTable BaselineTable::from_counts(
    const std::map<std::string, std::map<std::string, int>>& counts) {
  BaselineTable table;
  for (const auto& [label, conns] : counts) {
    Entry best;
    for (const auto& [conn, count] : conns) {
      if (count > best.count || (count == best.count && conn < best.connective) ||
          best.connective.empty()) {
        best.connective = conn;
        best.count = count;
      }
    }
    table.entries_[label] = best;
  }
  return table;
}

void BaselineTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write baseline table: " + path);
  for (const auto& [label, e] : entries_)
    out << label << '\t' << e.connective << '\t' << e.count << '\n';
}

BaselineTable::Entry BaselineTable::lookup(const std::string& rst_label) const {
  auto it = entries_.find(rst_label);
  if (it != entries_.end()) return it->second;
  return Entry{kGlobalMajority, 0, true};
}

HintsFile HintsFile::load(const std::string& path, const SenseHierarchy& hierarchy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hints file: " + path);
  HintsFile hints;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 5)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 5 columns");
    Record rec;
    if (cols[3] != "_") rec.connective = to_lower(cols[3]);
    if (cols[4] != "_") {
      for (const std::string& piece : split(cols[4], ';')) {
        size_t colon = piece.rfind(':');
        if (colon == std::string::npos)
          throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                   ": expected sense:prob, got '" + piece + "'");
        SenseLabel sense = hierarchy.normalize(piece.substr(0, colon));
        double prob = std::stod(piece.substr(colon + 1));
        if (prob < 0.0 || prob > 1.0)
          throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                   ": probability out of [0,1]");
        rec.sense_probs.emplace_back(sense, prob);
      }
    }
    std::string key = cols[0] + "\t" + Span::parse(cols[1]).to_string() + "\t" +
                      Span::parse(cols[2]).to_string();
    hints.records_[key] = std::move(rec);
  }
  return hints;
}

const HintsFile::Record* HintsFile::find(const std::string& doc_id, const Span& src,
                                         const Span& tgt) const {
  auto it = records_.find(hint_key(doc_id, src, tgt));
  return it == records_.end() ? nullptr : &it->second;
}

std::pair<std::string, ConnectiveOrigin> predict_connective(
    const BaselineTable& table, const HintsFile* hints, const std::string& doc_id,
    const Span& src, const Span& tgt, const std::string& rst_label) {
  if (hints) {
    const HintsFile::Record* rec = hints->find(doc_id, src, tgt);
    if (rec && !rec->connective.empty())
      return {rec->connective, ConnectiveOrigin::Hint};
  }
  BaselineTable::Entry e = table.lookup(rst_label);
  return {e.connective,
          e.fallback ? ConnectiveOrigin::BaselineFallback : ConnectiveOrigin::Baseline};
}

ResolvedSenses resolve_sense(const std::vector<SenseLabel>& candidate_senses,
                             const HintsFile::Record* hint,
                             double second_sense_threshold) {
  if (candidate_senses.empty())
    throw std::runtime_error("resolve_sense requires a non-empty candidate list");
  ResolvedSenses out;
  if (candidate_senses.size() == 1 || !hint || hint->sense_probs.empty()) {
    out.senses.push_back(candidate_senses.front());
    return out;
  }
  // hinted senses restricted to the candidate list, highest probability first
  std::vector<std::pair<SenseLabel, double>> scored;
  for (const auto& [sense, prob] : hint->sense_probs) {
    for (const SenseLabel& cand : candidate_senses) {
      if (cand.level1 == sense.level1 && cand.level2 == sense.level2 &&
          (sense.level3.empty() || cand.level3.empty() || sense.level3 == cand.level3)) {
        scored.emplace_back(cand, prob);
        break;
      }
    }
  }
  if (scored.empty()) {
    out.senses.push_back(candidate_senses.front());
    out.map_conflict = true;
    return out;
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  out.senses.push_back(scored[0].first);
  if (scored.size() > 1 && scored[1].second > second_sense_threshold &&
      !(scored[1].first == scored[0].first))
    out.senses.push_back(scored[1].first);
  return out;
}

bool fuzzy_connective_match(const MappingResources& resources,
                            const std::string& predicted,
                            const SenseLabel& gold_sense) {
  const ConnectiveEntry* entry = resources.connective(predicted);
  if (!entry) return false;
  for (const SenseLabel& s : entry->allowed_senses) {
    if (s.level1 != gold_sense.level1 || s.level2 != gold_sense.level2) continue;
    if (s.level3.empty() || gold_sense.level3.empty() || s.level3 == gold_sense.level3)
      return true;
  }
  return false;
}

}  // namespace gdtb
