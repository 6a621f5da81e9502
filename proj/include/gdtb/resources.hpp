#ifndef GDTB_RESOURCES_HPP
#define GDTB_RESOURCES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdtb/sense.hpp"

namespace gdtb {

enum class ConnectiveClass { Subordinator, Coordinator, Adverbial };

struct ConnectiveEntry {
  std::string connective;  // lowercased, possibly multiword
  ConnectiveClass syntactic_class = ConnectiveClass::Coordinator;
  std::vector<SenseLabel> allowed_senses;  // frequency-rank order
};

// Who carries the argX-as-* (or cause) role when restoring Level-3
// directionality for a map entry's senses.
enum class DirectionRule {
  None,           // symmetric senses, or Level-3 already pinned in the map
  RoleOnSatellite,
  RoleOnNucleus,
  CauseOnSatellite,  // Reason iff the cause side lands on Arg2
  CauseOnNucleus,
};

struct RstMapEntry {
  std::string rst_label;
  std::vector<SenseLabel> senses;  // preference order; may be empty
  DirectionRule direction = DirectionRule::None;
};

struct AllowedSenses {
  std::vector<SenseLabel> senses;
  bool map_conflict = false;       // connective and map intersect to nothing
  bool unknown_connective = false; // connective absent from the lexicon
};

class MappingResources {
 public:
  static MappingResources load(const std::string& hierarchy_file,
                               const std::string& lexicon_file,
                               const std::string& map_file);

  const SenseHierarchy& hierarchy() const { return hierarchy_; }
  const ConnectiveEntry* connective(const std::string& text) const;
  const RstMapEntry* map_entry(const std::string& rst_label) const;
  const std::map<std::string, ConnectiveEntry>& lexicon() const { return lexicon_; }
  const std::map<std::string, RstMapEntry>& rst_map() const { return rst_map_; }

  // Intersection of the connective's lexicon senses (when given) with the
  // RST label's mapped senses, ordered by the connective's frequency rank.
  // Empty intersection falls back to the connective's own senses with
  // map_conflict set; an unknown connective falls back to the map senses
  // with unknown_connective set.
  AllowedSenses allowed_senses(const std::optional<std::string>& connective,
                               const std::string& rst_label) const;

 private:
  SenseHierarchy hierarchy_;
  std::map<std::string, ConnectiveEntry> lexicon_;
  std::map<std::string, RstMapEntry> rst_map_;
};

std::string to_lower(const std::string& s);

}  // namespace gdtb

#endif
