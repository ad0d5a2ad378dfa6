#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ctn/rational.hpp"

namespace ctn {

/// Three-valued answer for questions that a depth-bounded search may not settle.
enum class Tri { False, True, Unknown };

inline Tri to_tri(bool b) { return b ? Tri::True : Tri::False; }
std::string_view to_string(Tri t);

/// Which basic t-norm governs an interval of the signature.
enum class Label { P, L, M };

char label_char(Label label);
/// Accepts "P", "L" (Łukasiewicz) or "M". Throws std::invalid_argument.
Label parse_label(std::string_view text);

/// A labeled open interval (lo, hi) of [0,1].
struct SignatureEntry {
  Rational lo;
  Rational hi;
  Label label = Label::M;

  bool contains_open(const Rational& x) const { return lo < x && x < hi; }
  bool contains_closed(const Rational& x) const { return lo <= x && x <= hi; }
  bool operator==(const SignatureEntry&) const = default;
};

/// "(lo, hi)"
std::string interval_string(const Rational& lo, const Rational& hi);
/// "P (lo, hi)"
std::string entry_string(const SignatureEntry& e);

/// The interval order: (a,b) ≺ (c,d) iff b ≤ c. Throws std::invalid_argument
/// when the two open intervals overlap.
bool prec(const SignatureEntry& a, const SignatureEntry& b);

/// Order-theoretic facts about a signature that a family can certify without
/// enumerating it completely. A True flag always comes with its witness.
struct SignatureShape {
  Tri has_min = Tri::Unknown;
  std::optional<SignatureEntry> min_entry;
  Tri has_max = Tri::Unknown;
  std::optional<SignatureEntry> max_entry;
  Tri dense_no_endpoints = Tri::Unknown;
  std::optional<Label> uniform_label;
  std::optional<std::pair<SignatureEntry, SignatureEntry>> successor_pair;
};

/// Whether an idempotent point lies in the closure of some M entry.
struct MMembership {
  Tri member = Tri::Unknown;
  std::optional<SignatureEntry> entry;
};

}  // namespace ctn
