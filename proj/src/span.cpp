#include "gdtb/span.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdtb {

void Span::add(Range r) {
  if (r.empty()) return;
  ranges_.push_back(r);
  std::sort(ranges_.begin(), ranges_.end());
  std::vector<Range> merged;
  for (const Range& x : ranges_) {
    if (!merged.empty() && x.begin <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, x.end);
    } else {
      merged.push_back(x);
    }
  }
  ranges_ = std::move(merged);
}

void Span::add(const Span& other) {
  for (const Range& r : other.ranges_) add(r);
}

int Span::size() const {
  int n = 0;
  for (const Range& r : ranges_) n += r.size();
  return n;
}

bool Span::contains(int i) const {
  for (const Range& r : ranges_)
    if (r.contains(i)) return true;
  return false;
}

bool Span::overlaps(const Span& other) const {
  for (const Range& a : ranges_)
    for (const Range& b : other.ranges_)
      if (a.begin < b.end && b.begin < a.end) return true;
  return false;
}

bool Span::contains(const Span& other) const {
  for (const Range& b : other.ranges_) {
    bool covered = false;
    for (const Range& a : ranges_) {
      if (a.begin <= b.begin && b.end <= a.end) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

Span Span::intersect(const Span& other) const {
  Span out;
  for (const Range& a : ranges_) {
    for (const Range& b : other.ranges_) {
      Range r{std::max(a.begin, b.begin), std::min(a.end, b.end)};
      if (!r.empty()) out.add(r);
    }
  }
  return out;
}

Span Span::subtract(const Span& other) const {
  Span out;
  for (const Range& a : ranges_) {
    int pos = a.begin;
    for (const Range& b : other.ranges_) {
      if (b.end <= pos || b.begin >= a.end) continue;
      if (b.begin > pos) out.add(Range{pos, b.begin});
      pos = std::max(pos, b.end);
    }
    if (pos < a.end) out.add(Range{pos, a.end});
  }
  return out;
}

std::vector<int> Span::tokens() const {
  std::vector<int> out;
  for (const Range& r : ranges_)
    for (int i = r.begin; i < r.end; ++i) out.push_back(i);
  return out;
}

std::string Span::to_string() const {
  if (ranges_.empty()) return "_";
  std::string out;
  for (const Range& r : ranges_) {
    if (!out.empty()) out += ',';
    out += std::to_string(r.begin) + "-" + std::to_string(r.end - 1);
  }
  return out;
}

Span Span::parse(const std::string& text) {
  Span out;
  if (text.empty() || text == "_") return out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t dash = piece.find('-', 1);  // allow for single numbers, not negatives
    try {
      if (dash == std::string::npos) {
        int a = std::stoi(piece);
        out.add(Range{a, a + 1});
      } else {
        int a = std::stoi(piece.substr(0, dash));
        int b = std::stoi(piece.substr(dash + 1));
        out.add(Range{a, b + 1});
      }
    } catch (const std::exception&) {
      throw std::runtime_error("bad span syntax: '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace gdtb
