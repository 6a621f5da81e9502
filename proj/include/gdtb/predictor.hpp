#ifndef GDTB_PREDICTOR_HPP
#define GDTB_PREDICTOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdtb/resources.hpp"
#include "gdtb/span.hpp"

namespace gdtb {

enum class ConnectiveOrigin { Hint, Baseline, BaselineFallback };

// Majority-baseline implicit connective per RST label.
class BaselineTable {
 public:
  struct Entry {
    std::string connective;
    int count = 0;
    bool fallback = false;  // no observations, global-majority default
  };

  // TSV rows: rst_label <TAB> connective <TAB> count
  static BaselineTable load(const std::string& path);
  static BaselineTable from_counts(
      const std::map<std::string, std::map<std::string, int>>& counts);

  void save(const std::string& path) const;

  // Argmax connective for the label; ties lexicographic; unseen labels get
  // "and" with fallback=true.
  Entry lookup(const std::string& rst_label) const;

  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

// External predictions standing in for the neural components, keyed by
// document and junction argument spans.
class HintsFile {
 public:
  struct Record {
    std::string connective;  // may be empty
    std::vector<std::pair<SenseLabel, double>> sense_probs;
  };

  // TSV rows: doc_id <TAB> src_span <TAB> tgt_span <TAB> connective
  //           <TAB> sense:prob[;sense:prob...]   ("_" for absent fields)
  static HintsFile load(const std::string& path, const SenseHierarchy& hierarchy);

  const Record* find(const std::string& doc_id, const Span& src,
                     const Span& tgt) const;
  bool empty() const { return records_.empty(); }

 private:
  std::map<std::string, Record> records_;
};

std::pair<std::string, ConnectiveOrigin> predict_connective(
    const BaselineTable& table, const HintsFile* hints, const std::string& doc_id,
    const Span& src, const Span& tgt, const std::string& rst_label);

struct ResolvedSenses {
  std::vector<SenseLabel> senses;  // 1-2 entries
  bool map_conflict = false;       // hint senses disjoint from candidates
};

// Picks 1-2 senses from the candidate list: hint-probability argmax inside
// the candidates when a hint distribution exists (second sense when another
// candidate clears the threshold), frequency-rank first otherwise.
ResolvedSenses resolve_sense(const std::vector<SenseLabel>& candidate_senses,
                             const HintsFile::Record* hint,
                             double second_sense_threshold);

// Appendix-C style fuzzy match: the predicted connective is valid for the
// gold sense per the lexicon (Level-2 comparison, Level-3 when both pin it).
bool fuzzy_connective_match(const MappingResources& resources,
                            const std::string& predicted,
                            const SenseLabel& gold_sense);

}  // namespace gdtb

#endif
