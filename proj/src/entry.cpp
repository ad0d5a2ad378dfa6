#include "ctn/entry.hpp"

#include <stdexcept>

namespace ctn {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: break;
  }
  return "unknown";
}

char label_char(Label label) {
  switch (label) {
    case Label::P: return 'P';
    case Label::L: return 'L';
    case Label::M: break;
  }
  return 'M';
}

Label parse_label(std::string_view text) {
  if (text == "P") return Label::P;
  if (text == "L") return Label::L;
  if (text == "M") return Label::M;
  throw std::invalid_argument("unknown label '" + std::string(text) + "'");
}

std::string interval_string(const Rational& lo, const Rational& hi) {
  return "(" + lo.str() + ", " + hi.str() + ")";
}

std::string entry_string(const SignatureEntry& e) {
  return std::string(1, label_char(e.label)) + " " + interval_string(e.lo, e.hi);
}

bool prec(const SignatureEntry& a, const SignatureEntry& b) {
  if (a.hi <= b.lo) return true;
  if (b.hi <= a.lo) return false;
  throw std::invalid_argument("prec: overlapping intervals " + interval_string(a.lo, a.hi) + " and " +
                              interval_string(b.lo, b.hi));
}

}  // namespace ctn
