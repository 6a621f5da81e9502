#ifndef GDTB_SENSE_HPP
#define GDTB_SENSE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gdtb {

// A node in the three-level PDTB v3 sense hierarchy. level3 is empty for
// symmetric Level-2 senses and for Level-2-only labels accepted on input.
struct SenseLabel {
  std::string level1;
  std::string level2;
  std::string level3;

  std::string full() const;
  std::string at_level(int level) const;  // 1, 2, or 3
  bool operator==(const SenseLabel&) const = default;
  auto operator<=>(const SenseLabel&) const = default;
};

class SenseHierarchy {
 public:
  // One dotted sense per line; '#' comments allowed.
  static SenseHierarchy load(const std::string& path);
  static SenseHierarchy builtin();  // the shipped PDTB v3 inventory

  void insert(const SenseLabel& s);

  bool valid(const SenseLabel& s) const;
  // True when the Level-2 sense carries directional Level-3 children.
  bool directional(const std::string& level1, const std::string& level2) const;

  // Strips +Belief/+SpeechAct variants, canonicalizes case, validates.
  // Throws std::runtime_error on labels outside the hierarchy.
  SenseLabel normalize(const std::string& raw) const;

  std::vector<SenseLabel> all() const;

 private:
  // (level1, level2) -> set of level3 values ("" allowed for L2-only)
  std::map<std::pair<std::string, std::string>, std::set<std::string>> nodes_;
  std::map<std::string, std::string> canon_;  // lowercased component -> canonical
};

}  // namespace gdtb

#endif
