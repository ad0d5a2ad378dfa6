#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctn/entry.hpp"
#include "ctn/tnorm.hpp"

namespace ctn {

/// The labeled interval collection of a t-norm, ≺-sorted.
///
/// For a finite presentation the P and L entries are the declared pieces and
/// the M entries are the maximal open gaps between them, including gaps that
/// touch 0 or 1; such a signature is `complete`. For a lazy presentation it
/// holds the first `depth` pieces plus the M entries the family certifies,
/// and `complete` is false. Consumers must branch on `complete`.
struct Signature {
  std::vector<SignatureEntry> entries;
  bool complete = true;
  std::optional<std::size_t> truncation_depth;

  std::vector<Label> labels() const;
};

/// `depth` is ignored for finite presentations.
Signature compute_signature(const TNorm& t, std::size_t depth = 0);

/// Nonempty, pairwise disjoint open intervals whose closures cover [0,1].
bool validate_in_S(std::span<const SignatureEntry> entries);

/// Empty string when the ≺-sorted, disjoint, no-adjacent-M invariants hold;
/// otherwise a description of the first violation.
std::string signature_invariant_violation(const Signature& s);

/// Order facts read off a complete signature.
SignatureShape shape_of(const Signature& s);
/// shape_of for finite presentations, the family's certificate otherwise.
SignatureShape shape_of(const TNorm& t, std::size_t depth);

/// "signature v1 complete=<bool> depth=<n|->" followed by "<label> <lo> <hi>" lines.
std::string dump_signature(const Signature& s);

}  // namespace ctn
