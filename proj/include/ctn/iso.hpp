#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctn/signature.hpp"
#include "ctn/tnorm.hpp"

namespace ctn {

using EntryPair = std::pair<SignatureEntry, SignatureEntry>;

/// φ on [from_lo, from_hi], mapped affinely onto [to_lo, to_hi].
struct AffineSegment {
  Rational from_lo, from_hi, to_lo, to_hi;
  bool operator==(const AffineSegment&) const = default;
};

/// Evidence for an ISO verdict: a label-preserving ≺-bijection between
/// signature entries and, for finite signatures, the piecewise-affine
/// extension φ : [0,1] → [0,1].
struct IsoWitness {
  std::vector<EntryPair> entry_map;
  std::vector<AffineSegment> map_pieces;
  bool identity = false;  // both sides are the same family

  /// φ(x); requires map_pieces (std::logic_error otherwise).
  Rational apply(const Rational& x) const;
};

struct DistinguishingInvariant {
  enum class Kind {
    MinimumExistsMismatch,
    MaximumExistsMismatch,
    SuccessorPairPresent,
    DensityMismatch,
    FiniteLabelSequenceMismatch,
  };
  Kind kind = Kind::DensityMismatch;
  std::optional<Label> label;                // min/max mismatch
  std::optional<SignatureEntry> endpoint;    // the extreme entry that exists
  bool on_left = true;                       // which side carries `endpoint` / the pair
  std::optional<EntryPair> successor_pair;   // SuccessorPairPresent
  std::size_t position = 0;                  // FiniteLabelSequenceMismatch

  /// e.g. "MinimumExistsMismatch(P)", "FiniteLabelSequenceMismatch(1)".
  std::string tag() const;
};

struct IsoVerdict {
  enum class Kind { Iso, NotIso, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<IsoWitness> witness;
  std::optional<DistinguishingInvariant> reason;
  std::size_t depth = 0;

  /// "ISO" / "NOT_ISO <tag>" / "UNKNOWN depth=<k>" plus an indented witness dump.
  std::string format() const;
};

/// Exact decision for two complete signatures: isomorphic iff the ≺-sorted
/// label sequences coincide. Throws std::invalid_argument on incomplete input.
IsoVerdict decide_iso_finite(const Signature& a, const Signature& b);

/// The isomorphism φ between two isomorphic finite presentations. Throws
/// std::invalid_argument when they are not isomorphic.
IsoWitness build_iso_map(const TNorm& a, const TNorm& b);

/// Three-valued decision from certified family structure. Finite pairs go to
/// decide_iso_finite; never extrapolates from an uncertified prefix.
IsoVerdict decide_iso_lazy(const TNorm& a, const TNorm& b, std::size_t depth);
/// Pairs tried for the back-and-forth witness of a lazy ISO verdict.
inline constexpr std::size_t kBackAndForthPairs = 8;

/// k rounds of the back-and-forth construction between two prefixes of dense
/// orders without endpoints carrying one uniform label. Odd rounds extend
/// forth from `a`, even rounds back from `b`; each round takes the next
/// unmatched entry in midpoint-first order and pairs it with the middle
/// candidate of the matching cut. Throws std::runtime_error when a label
/// breaks uniformity or a cut has no candidate in the prefix.
std::vector<EntryPair> back_and_forth(const Signature& a, const Signature& b, std::size_t k);

}  // namespace ctn
