#ifndef GDTB_SPAN_HPP
#define GDTB_SPAN_HPP

#include <string>
#include <vector>

namespace gdtb {

// Half-open token index range [begin, end), document-wide 0-based.
struct Range {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool contains(int i) const { return i >= begin && i < end; }

  friend bool operator==(const Range&, const Range&) = default;
  friend auto operator<=>(const Range&, const Range&) = default;
};

// Possibly discontinuous token span: sorted, merged, non-adjacent ranges.
class Span {
 public:
  Span() = default;
  explicit Span(Range r) { add(r); }
  Span(int begin, int end) { add(Range{begin, end}); }

  void add(Range r);
  void add(const Span& other);

  bool empty() const { return ranges_.empty(); }
  int size() const;
  int first() const { return ranges_.front().begin; }
  int last() const { return ranges_.back().end - 1; }
  bool contains(int i) const;
  bool overlaps(const Span& other) const;
  bool contains(const Span& other) const;

  Span intersect(const Span& other) const;
  Span subtract(const Span& other) const;

  const std::vector<Range>& ranges() const { return ranges_; }
  std::vector<int> tokens() const;

  // "a-b" inclusive endpoints, comma-joined; "_" when empty.
  std::string to_string() const;
  static Span parse(const std::string& text);

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;

 private:
  std::vector<Range> ranges_;
};

}  // namespace gdtb

#endif
