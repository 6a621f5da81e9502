#ifndef GDTB_EVAL_HPP
#define GDTB_EVAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdtb/relation.hpp"

namespace gdtb {

enum class MatchRegime { Exact, SpanOnly };

struct AlignedPair {
  PdtbRelation pred;
  PdtbRelation gold;
};

struct Alignment {
  std::vector<AlignedPair> matched;
  std::vector<PdtbRelation> unmatched_pred;  // false positives
  std::vector<PdtbRelation> unmatched_gold;  // false negatives
};

// Pairs relations on (relation type, arg1 span, arg2 span) exact equality
// within each document. Throws on duplicate identical keys in one file.
Alignment align_relations(const std::vector<PdtbRelation>& pred,
                          const std::vector<PdtbRelation>& gold);

struct TypeScore {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_defined = true;
  bool recall_defined = true;
};

struct ScoreOptions {
  int sense_level = 2;            // label granularity for exact matching
  bool strict_all_senses = false; // require every sense to match, not any
};

// Label match for the exact regime: any predicted sense equals any gold
// sense at the configured level (all senses pairwise in strict mode);
// relations without senses match on type alone.
bool labels_match(const PdtbRelation& pred, const PdtbRelation& gold,
                  const ScoreOptions& options);

std::map<RelType, TypeScore> score(const Alignment& alignment, MatchRegime regime,
                                   const ScoreOptions& options = {});
TypeScore micro_average(const std::map<RelType, TypeScore>& per_type);

// Cohen's kappa over aligned pairs where both sides carry exactly one
// sense, at the configured level. Empty when degenerate (p_e = 1) or when
// no such pairs exist.
std::optional<double> cohen_kappa(const Alignment& alignment, int sense_level = 2);
std::optional<double> kappa_from_matrix(const std::vector<std::vector<double>>& m);

// gold sense x predicted sense counts at Level-2 over single-sense pairs.
using ConfusionMatrix = std::map<std::pair<std::string, std::string>, int>;
ConfusionMatrix emit_confusion(const Alignment& alignment, int sense_level = 2);
std::string confusion_to_tsv(const ConfusionMatrix& matrix);

// accuracy per genre x relation type, exact regime: (hits, gold count)
using GenreTable = std::map<std::string, std::map<RelType, std::pair<int, int>>>;
GenreTable genre_breakdown(const Alignment& alignment,
                           const ScoreOptions& options = {});
std::string genre_table_to_tsv(const GenreTable& table);

struct EvalReport {
  std::map<RelType, TypeScore> exact;
  std::map<RelType, TypeScore> span_only;
  TypeScore exact_micro;
  TypeScore span_micro;
  std::optional<double> kappa;
  int kappa_pairs = 0;
  ConfusionMatrix confusion;
  GenreTable genres;
};

EvalReport evaluate(const std::vector<PdtbRelation>& pred,
                    const std::vector<PdtbRelation>& gold,
                    const ScoreOptions& options = {});

std::string report_to_text(const EvalReport& report);

}  // namespace gdtb

#endif
