#include "gdtb/eval.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gdtb/aligner.hpp"

namespace gdtb {

namespace {

std::string align_key(const PdtbRelation& r) {
  return r.doc_id + "|" + to_string(r.rel_type) + "|" + r.arg1_span.to_string() +
         "|" + r.arg2_span.to_string();
}

std::string sense_at(const SenseLabel& s, int level) { return s.at_level(level); }

}  // namespace

Alignment align_relations(const std::vector<PdtbRelation>& pred,
                          const std::vector<PdtbRelation>& gold) {
  std::map<std::string, const PdtbRelation*> gold_index;
  for (const PdtbRelation& g : gold) {
    std::string key = align_key(g);
    if (gold_index.count(key))
      throw std::runtime_error("duplicate relation in gold file: doc " + g.doc_id +
                               " spans " + g.arg1_span.to_string() + " / " +
                               g.arg2_span.to_string());
    gold_index[key] = &g;
  }
  std::set<std::string> seen_pred;
  std::set<std::string> used_gold;
  Alignment out;
  for (const PdtbRelation& p : pred) {
    std::string key = align_key(p);
    if (seen_pred.count(key))
      throw std::runtime_error("duplicate relation in predicted file: doc " +
                               p.doc_id + " spans " + p.arg1_span.to_string() +
                               " / " + p.arg2_span.to_string());
    seen_pred.insert(key);
    auto it = gold_index.find(key);
    if (it != gold_index.end()) {
      out.matched.push_back({p, *it->second});
      used_gold.insert(key);
    } else {
      out.unmatched_pred.push_back(p);
    }
  }
  for (const PdtbRelation& g : gold)
    if (!used_gold.count(align_key(g))) out.unmatched_gold.push_back(g);
  return out;
}

bool labels_match(const PdtbRelation& pred, const PdtbRelation& gold,
                  const ScoreOptions& options) {
  if (pred.senses.empty() && gold.senses.empty()) return true;
  if (pred.senses.empty() || gold.senses.empty()) return false;
  if (options.strict_all_senses) {
    if (pred.senses.size() != gold.senses.size()) return false;
    std::set<std::string> a, b;
    for (const SenseLabel& s : pred.senses) a.insert(sense_at(s, options.sense_level));
    for (const SenseLabel& s : gold.senses) b.insert(sense_at(s, options.sense_level));
    return a == b;
  }
  for (const SenseLabel& p : pred.senses)
    for (const SenseLabel& g : gold.senses)
      if (sense_at(p, options.sense_level) == sense_at(g, options.sense_level))
        return true;
  return false;
}

std::map<RelType, TypeScore> score(const Alignment& alignment, MatchRegime regime,
                                   const ScoreOptions& options) {
  std::map<RelType, TypeScore> out;
  auto bump = [&](RelType t) -> TypeScore& { return out[t]; };

  for (const AlignedPair& pair : alignment.matched) {
    bool hit = (regime == MatchRegime::SpanOnly) ||
               labels_match(pair.pred, pair.gold, options);
    if (hit) {
      ++bump(pair.gold.rel_type).tp;
    } else {
      ++bump(pair.pred.rel_type).fp;
      ++bump(pair.gold.rel_type).fn;
    }
  }
  for (const PdtbRelation& p : alignment.unmatched_pred) ++bump(p.rel_type).fp;
  for (const PdtbRelation& g : alignment.unmatched_gold) ++bump(g.rel_type).fn;

  for (auto& [type, s] : out) {
    int pred_n = s.tp + s.fp;
    int gold_n = s.tp + s.fn;
    s.precision_defined = pred_n > 0;
    s.recall_defined = gold_n > 0;
    s.precision = pred_n > 0 ? static_cast<double>(s.tp) / pred_n : 0.0;
    s.recall = gold_n > 0 ? static_cast<double>(s.tp) / gold_n : 0.0;
    s.f1 = (s.precision + s.recall) > 0
               ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
               : 0.0;
  }
  return out;
}

TypeScore micro_average(const std::map<RelType, TypeScore>& per_type) {
  TypeScore m;
  for (const auto& [type, s] : per_type) {
    m.tp += s.tp;
    m.fp += s.fp;
    m.fn += s.fn;
  }
  int pred_n = m.tp + m.fp;
  int gold_n = m.tp + m.fn;
  m.precision_defined = pred_n > 0;
  m.recall_defined = gold_n > 0;
  m.precision = pred_n > 0 ? static_cast<double>(m.tp) / pred_n : 0.0;
  m.recall = gold_n > 0 ? static_cast<double>(m.tp) / gold_n : 0.0;
  m.f1 = (m.precision + m.recall) > 0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

std::optional<double> kappa_from_matrix(const std::vector<std::vector<double>>& m) {
  size_t k = m.size();
  double total = 0.0, agree = 0.0;
  std::vector<double> row_sum(k, 0.0), col_sum(k, 0.0);
  for (size_t i = 0; i < k; ++i) {
    if (m[i].size() != k) throw std::runtime_error("kappa matrix must be square");
    for (size_t j = 0; j < k; ++j) {
      total += m[i][j];
      row_sum[i] += m[i][j];
      col_sum[j] += m[i][j];
      if (i == j) agree += m[i][j];
    }
  }
  if (total <= 0.0) return std::nullopt;
  double po = agree / total;
  double pe = 0.0;
  for (size_t i = 0; i < k; ++i) pe += (row_sum[i] / total) * (col_sum[i] / total);
  if (std::abs(1.0 - pe) < 1e-15) return std::nullopt;  // degenerate
  return (po - pe) / (1.0 - pe);
}

std::optional<double> cohen_kappa(const Alignment& alignment, int sense_level) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const AlignedPair& p : alignment.matched) {
    if (p.pred.senses.size() != 1 || p.gold.senses.size() != 1) continue;
    pairs.emplace_back(sense_at(p.gold.senses[0], sense_level),
                       sense_at(p.pred.senses[0], sense_level));
  }
  if (pairs.empty()) return std::nullopt;
  std::set<std::string> cats;
  for (const auto& [g, pr] : pairs) {
    cats.insert(g);
    cats.insert(pr);
  }
  std::vector<std::string> order(cats.begin(), cats.end());
  auto index_of = [&](const std::string& c) {
    return std::distance(order.begin(), std::find(order.begin(), order.end(), c));
  };
  std::vector<std::vector<double>> m(order.size(),
                                     std::vector<double>(order.size(), 0.0));
  for (const auto& [g, pr] : pairs) m[index_of(g)][index_of(pr)] += 1.0;
  return kappa_from_matrix(m);
}

ConfusionMatrix emit_confusion(const Alignment& alignment, int sense_level) {
  ConfusionMatrix out;
  for (const AlignedPair& p : alignment.matched) {
    if (p.pred.senses.size() != 1 || p.gold.senses.size() != 1) continue;
    ++out[{sense_at(p.gold.senses[0], sense_level),
           sense_at(p.pred.senses[0], sense_level)}];
  }
  return out;
}

std::string confusion_to_tsv(const ConfusionMatrix& matrix) {
  std::set<std::string> golds, preds;
  for (const auto& [key, n] : matrix) {
    golds.insert(key.first);
    preds.insert(key.second);
  }
  std::ostringstream out;
  out << "gold\\pred";
  for (const std::string& p : preds) out << '\t' << p;
  out << '\n';
  for (const std::string& g : golds) {
    out << g;
    for (const std::string& p : preds) {
      auto it = matrix.find({g, p});
      out << '\t' << (it == matrix.end() ? 0 : it->second);
    }
    out << '\n';
  }
  return out.str();
}

GenreTable genre_breakdown(const Alignment& alignment, const ScoreOptions& options) {
  GenreTable table;
  auto genre_of = [](const PdtbRelation& r) { return genre_from_doc_id(r.doc_id); };
  for (const AlignedPair& p : alignment.matched) {
    auto& cell = table[genre_of(p.gold)][p.gold.rel_type];
    ++cell.second;
    if (labels_match(p.pred, p.gold, options)) ++cell.first;
  }
  for (const PdtbRelation& g : alignment.unmatched_gold) {
    auto& cell = table[genre_of(g)][g.rel_type];
    ++cell.second;
  }
  return table;
}

std::string genre_table_to_tsv(const GenreTable& table) {
  static const RelType kTypes[] = {RelType::Explicit,  RelType::Implicit,
                                   RelType::AltLex,    RelType::AltLexC,
                                   RelType::EntRel,    RelType::Hypophora,
                                   RelType::NoRel};
  std::ostringstream out;
  out << "genre";
  for (RelType t : kTypes) out << '\t' << to_string(t);
  out << '\n';
  for (const auto& [genre, cells] : table) {
    out << genre;
    for (RelType t : kTypes) {
      auto it = cells.find(t);
      if (it == cells.end() || it->second.second == 0) {
        out << "\t--";
      } else {
        out << '\t'
            << static_cast<double>(it->second.first) / it->second.second;
      }
    }
    out << '\n';
  }
  return out.str();
}

EvalReport evaluate(const std::vector<PdtbRelation>& pred,
                    const std::vector<PdtbRelation>& gold,
                    const ScoreOptions& options) {
  Alignment alignment = align_relations(pred, gold);
  EvalReport report;
  report.exact = score(alignment, MatchRegime::Exact, options);
  report.span_only = score(alignment, MatchRegime::SpanOnly, options);
  report.exact_micro = micro_average(report.exact);
  report.span_micro = micro_average(report.span_only);
  report.kappa = cohen_kappa(alignment, options.sense_level);
  for (const AlignedPair& p : alignment.matched)
    if (p.pred.senses.size() == 1 && p.gold.senses.size() == 1) ++report.kappa_pairs;
  report.confusion = emit_confusion(alignment, options.sense_level);
  report.genres = genre_breakdown(alignment, options);
  return report;
}

namespace {

void print_scores(std::ostringstream& out, const std::string& title,
                  const std::map<RelType, TypeScore>& scores,
                  const TypeScore& micro) {
  out << title << '\n';
  out << "type\tP\tR\tF1\n";
  for (const auto& [type, s] : scores) {
    out << to_string(type) << '\t';
    if (s.precision_defined) out << s.precision; else out << "n/a";
    out << '\t';
    if (s.recall_defined) out << s.recall; else out << "n/a";
    out << '\t' << s.f1 << '\n';
  }
  out << "micro-avg\t" << micro.precision << '\t';
  if (micro.recall_defined) out << micro.recall; else out << "n/a";
  out << '\t' << micro.f1 << '\n';
}

}  // namespace

std::string report_to_text(const EvalReport& report) {
  std::ostringstream out;
  print_scores(out, "Relation scores (exact match)", report.exact,
               report.exact_micro);
  out << '\n';
  print_scores(out, "Span scores (relation type, spans, no label)",
               report.span_only, report.span_micro);
  out << '\n';
  if (report.kappa)
    out << "Cohen's kappa (single-sense pairs, n=" << report.kappa_pairs
        << "): " << *report.kappa << '\n';
  else
    out << "Cohen's kappa: n/a\n";
  return out.str();
}

}  // namespace gdtb
