#include "ctn/signature.hpp"

#include <algorithm>
#include <sstream>

namespace ctn {

std::vector<Label> Signature::labels() const {
  std::vector<Label> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.label);
  return out;
}

Signature compute_signature(const TNorm& t, std::size_t depth) {
  Signature sig;
  if (t.is_finite()) {
    Rational cursor(0);
    for (const Piece& p : t.finite().pieces()) {
      if (cursor < p.lo) sig.entries.push_back({cursor, p.lo, Label::M});
      sig.entries.push_back({p.lo, p.hi, kind_label(p.kind)});
      cursor = p.hi;
    }
    if (cursor < Rational(1)) sig.entries.push_back({cursor, Rational(1), Label::M});
    return sig;
  }

  const PieceGenerator& g = t.generator();
  std::size_t count = depth;
  if (const auto total = g.piece_count()) count = std::min<std::size_t>(count, *total);
  for (std::size_t n = 0; n < count; ++n) {
    const Piece p = g.piece_at(n);
    sig.entries.push_back({p.lo, p.hi, kind_label(p.kind)});
  }
  for (const SignatureEntry& e : g.certified_m_entries(depth)) sig.entries.push_back(e);
  std::sort(sig.entries.begin(), sig.entries.end(),
            [](const SignatureEntry& a, const SignatureEntry& b) { return a.lo < b.lo; });
  sig.complete = false;
  sig.truncation_depth = depth;
  return sig;
}

bool validate_in_S(std::span<const SignatureEntry> entries) {
  if (entries.empty()) return false;
  std::vector<SignatureEntry> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const SignatureEntry& a, const SignatureEntry& b) { return a.lo < b.lo; });
  for (const auto& e : sorted)
    if (!(e.lo < e.hi) || e.lo < Rational(0) || Rational(1) < e.hi) return false;
  if (sorted.front().lo != Rational(0) || sorted.back().hi != Rational(1)) return false;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1].hi != sorted[i].lo) return false;  // overlap or an uncovered gap
  return true;
}

std::string signature_invariant_violation(const Signature& s) {
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    if (!(e.lo < e.hi)) return "empty entry " + entry_string(e);
    if (i == 0) continue;
    const auto& prev = s.entries[i - 1];
    if (!(prev.hi <= e.lo)) return "entries out of order or overlapping at " + entry_string(e);
    if (prev.label == Label::M && e.label == Label::M && prev.hi == e.lo)
      return "adjacent M entries at " + entry_string(e);
  }
  return {};
}

SignatureShape shape_of(const Signature& s) {
  SignatureShape shape;
  if (s.entries.empty()) {
    shape.has_min = shape.has_max = Tri::False;
    shape.dense_no_endpoints = Tri::True;
    return shape;
  }
  shape.has_min = shape.has_max = Tri::True;
  shape.min_entry = s.entries.front();
  shape.max_entry = s.entries.back();
  shape.dense_no_endpoints = Tri::False;
  if (s.entries.size() >= 2) shape.successor_pair = {s.entries[0], s.entries[1]};
  const Label first = s.entries.front().label;
  if (std::all_of(s.entries.begin(), s.entries.end(), [&](const auto& e) { return e.label == first; }))
    shape.uniform_label = first;
  return shape;
}

SignatureShape shape_of(const TNorm& t, std::size_t depth) {
  if (t.is_finite()) return shape_of(compute_signature(t));
  return t.generator().shape(depth);
}

std::string dump_signature(const Signature& s) {
  std::ostringstream os;
  os << "signature v1 complete=" << (s.complete ? "true" : "false") << " depth=";
  if (s.truncation_depth) os << *s.truncation_depth;
  else os << '-';
  os << '\n';
  for (const auto& e : s.entries) os << label_char(e.label) << ' ' << e.lo << ' ' << e.hi << '\n';
  return os.str();
}

}  // namespace ctn
