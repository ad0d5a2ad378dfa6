#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ctn/entry.hpp"
#include "ctn/rational.hpp"

namespace ctn {

enum class PieceKind { Product, Lukasiewicz };

char kind_char(PieceKind kind);  // 'P' or 'L'
Label kind_label(PieceKind kind);

/// One ordinal-sum summand: on [lo, hi] the operation is a rescaled copy of
/// the product or the Łukasiewicz t-norm.
struct Piece {
  Rational lo;
  Rational hi;
  PieceKind kind = PieceKind::Product;

  bool operator==(const Piece&) const = default;
};

/// Throws std::invalid_argument unless 0 ≤ lo < hi ≤ 1.
void validate_piece(const Piece& p);

/// x * y for x, y ∈ [p.lo, p.hi]:
///   Product:     lo + (x−lo)(y−lo)/(hi−lo)
///   Łukasiewicz: max(lo, x+y−hi)
Rational apply_piece(const Piece& p, const Rational& x, const Rational& y);

/// Least l with the l-th power of q equal to p.lo, for q in the open
/// Łukasiewicz piece p: ⌈(hi−lo)/(hi−q)⌉.
std::uint64_t lukasiewicz_nilpotency_index(const Piece& p, const Rational& q);

/// Result of placing a rational relative to the pieces of a presentation.
struct Location {
  enum class Kind { InPiece, Idempotent, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Piece> piece;
  std::uint64_t index = 0;  // position of `piece` in the presentation

  static Location in_piece(Piece p, std::uint64_t index) { return {Kind::InPiece, std::move(p), index}; }
  static Location idempotent() { return {Kind::Idempotent, std::nullopt, 0}; }
  static Location unknown() { return {Kind::Unknown, std::nullopt, 0}; }
};

/// A finite ordinal sum. Pieces are kept sorted by lo and must be pairwise
/// disjoint as open intervals. The empty list is the minimum t-norm.
class FinitePresentation {
 public:
  FinitePresentation() = default;
  explicit FinitePresentation(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  /// Exact: InPiece when q is in some open piece, Idempotent otherwise.
  Location locate(const Rational& q) const;

  bool operator==(const FinitePresentation&) const = default;

 private:
  std::vector<Piece> pieces_;
};

/// A countable ordinal sum produced on demand. Implementations must be
/// deterministic; internal caches may not change observable results.
class PieceGenerator {
 public:
  virtual ~PieceGenerator() = default;

  /// Stable identifier of the family and its parameters ("limit-left",
  /// "theta omega", ...). Equal keys denote identical t-norms.
  virtual std::string family_key() const = 0;

  /// Number of pieces, or nullopt when infinite.
  virtual std::optional<std::uint64_t> piece_count() const { return std::nullopt; }

  virtual Piece piece_at(std::uint64_t n) const = 0;

  /// Upper bound on Σ_{k≥n} |piece_k|; tends to 0.
  virtual Rational tail_length_bound(std::uint64_t n) const = 0;

  /// Place q using at most `depth` units of search (family specific).
  virtual Location locate(const Rational& q, std::size_t depth) const = 0;

  /// M entries of the signature certified from the structure, using the
  /// first `depth` pieces.
  virtual std::vector<SignatureEntry> certified_m_entries(std::size_t /*depth*/) const { return {}; }

  /// Closed-M-entry membership of an idempotent point.
  virtual MMembership m_membership(const Rational& q, std::size_t depth) const;

  virtual SignatureShape shape(std::size_t depth) const = 0;
};

/// Thrown when a lazy presentation cannot place a point within its depth.
class UnresolvedLocate : public std::runtime_error {
 public:
  explicit UnresolvedLocate(const Rational& q)
      : std::runtime_error("cannot locate " + q.str() + " at the configured depth") {}
};

/// A continuous t-norm given by a finite or a lazily generated ordinal sum.
class TNorm {
 public:
  static constexpr std::size_t kDefaultLocateDepth = 12;

  TNorm() = default;  // minimum t-norm
  explicit TNorm(FinitePresentation p) : rep_(std::move(p)) {}
  explicit TNorm(std::shared_ptr<const PieceGenerator> g, std::size_t locate_depth = kDefaultLocateDepth);

  bool is_finite() const { return std::holds_alternative<FinitePresentation>(rep_); }
  const FinitePresentation& finite() const;
  const PieceGenerator& generator() const;
  std::size_t locate_depth() const { return locate_depth_; }
  TNorm with_locate_depth(std::size_t depth) const;

  Location locate(const Rational& q) const;

 private:
  std::variant<FinitePresentation, std::shared_ptr<const PieceGenerator>> rep_;
  std::size_t locate_depth_ = kDefaultLocateDepth;
};

/// Exact x * y. Requires a finite presentation (std::logic_error otherwise).
UnitRational eval(const TNorm& t, const UnitRational& x, const UnitRational& y);
UnitRational eval(const FinitePresentation& p, const Rational& x, const Rational& y);

/// The finite ordinal sum of pieces 0..n−1 of a generator.
FinitePresentation truncate(const PieceGenerator& g, std::uint64_t n);

struct Approximation {
  UnitRational value;
  Rational error_bound;
};

/// x * y on the truncation to n pieces, with |value − x*y| ≤ error_bound =
/// 2·tail_length_bound(n). Finite presentations evaluate exactly with bound 0.
/// Throws std::invalid_argument("empty truncation") for n = 0.
Approximation eval_approx(const TNorm& t, const UnitRational& x, const UnitRational& y, std::uint64_t n);

/// q * q * ... * q (l factors). Throws UnresolvedLocate for lazy t when q
/// cannot be placed, std::invalid_argument for l = 0.
UnitRational power(const TNorm& t, const UnitRational& q, std::uint64_t l);

Tri is_idempotent(const TNorm& t, const UnitRational& q);

struct PowerIdempotency {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::uint64_t l = 0;  // meaningful for Yes

  bool operator==(const PowerIdempotency&) const = default;
};

/// Least l ≥ 1 with power(t, q, l) idempotent. Searches l ≤ max_l by
/// iteration; beyond that the piece structure decides (Product: no,
/// Łukasiewicz: closed-form index). Unknown only for unplaceable lazy points.
PowerIdempotency is_eventually_idempotent_power(const TNorm& t, const UnitRational& q, std::uint64_t max_l);

using BinaryOperation = std::function<Rational(const Rational&, const Rational&)>;

struct AxiomViolation {
  std::string axiom;  // "commutativity", "associativity", "monotonicity", "neutrality", "range"
  std::vector<Rational> args;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::uint64_t checks = 0;
  bool ok() const { return violations.empty(); }
};

/// Exact axiom check over all pairs/triples of the samples: commutativity,
/// associativity, monotonicity in each argument, neutrality of 1, closure in
/// [0,1].
AxiomReport check_axioms(const BinaryOperation& op, std::span<const UnitRational> samples);
AxiomReport check_axioms(const TNorm& t, std::span<const UnitRational> samples);

/// Product or Łukasiewicz, decided from whether interior samples are nilpotent
/// under t's own operation. Used to cross-check declared kinds.
PieceKind classify_piece_empirically(const TNorm& t, const UnitRational& lo, const UnitRational& hi,
                                     std::size_t samples);

/// The evenly spaced grid {k/(count−1)} of [0,1]; count ≥ 2.
std::vector<UnitRational> unit_grid(std::size_t count);

}  // namespace ctn
