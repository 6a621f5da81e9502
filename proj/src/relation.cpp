#include "gdtb/relation.hpp"

#include <stdexcept>

namespace gdtb {

std::string to_string(RelType t) {
  switch (t) {
    case RelType::Explicit: return "Explicit";
    case RelType::Implicit: return "Implicit";
    case RelType::AltLex: return "AltLex";
    case RelType::AltLexC: return "AltLexC";
    case RelType::EntRel: return "EntRel";
    case RelType::Hypophora: return "Hypophora";
    case RelType::NoRel: return "NoRel";
  }
  return "NoRel";
}

RelType rel_type_from_string(const std::string& s) {
  if (s == "Explicit") return RelType::Explicit;
  if (s == "Implicit") return RelType::Implicit;
  if (s == "AltLex" || s == "altLex") return RelType::AltLex;
  if (s == "AltLexC" || s == "altLexC") return RelType::AltLexC;
  if (s == "EntRel") return RelType::EntRel;
  if (s == "Hypophora") return RelType::Hypophora;
  if (s == "NoRel" || s == "Norel") return RelType::NoRel;
  throw std::runtime_error("unknown relation type '" + s + "'");
}

std::string to_string(RelationFlag f) {
  switch (f) {
    case RelationFlag::UnknownConnective: return "unknown-connective";
    case RelationFlag::MapConflict: return "map-conflict";
    case RelationFlag::LowConfidence: return "low-confidence";
  }
  return "low-confidence";
}

RelationFlag flag_from_string(const std::string& s) {
  if (s == "unknown-connective") return RelationFlag::UnknownConnective;
  if (s == "map-conflict") return RelationFlag::MapConflict;
  if (s == "low-confidence") return RelationFlag::LowConfidence;
  throw std::runtime_error("unknown relation flag '" + s + "'");
}

}  // namespace gdtb
