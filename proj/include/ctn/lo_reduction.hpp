#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ctn/tnorm.hpp"

namespace ctn {

enum class OrderCmp { Less, Greater };

enum class NamedOrder { Omega, OmegaStar, Zeta, Eta, OmegaPlusOmegaStar };

std::string order_name(NamedOrder tag);

/// Comparator of a named order on ω. Throws std::invalid_argument for m = n.
OrderCmp named_order_cmp(NamedOrder tag, std::uint64_t m, std::uint64_t n);

/// A strict linear order ⋖ on ω (named) or on {0..k−1} (finite, by ranks:
/// i ⋖ j iff ranks[i] < ranks[j]).
class LinearOrder {
 public:
  static LinearOrder named(NamedOrder tag) { return LinearOrder(tag); }
  /// ranks must be a permutation of 0..k−1 (std::invalid_argument otherwise).
  static LinearOrder finite(std::vector<std::uint64_t> ranks);
  /// "finite:3,0,2,1", "omega", "omega_star", "zeta", "eta", "omega_plus_omega_star".
  static LinearOrder parse(const std::string& spec);

  bool is_named() const { return tag_.has_value(); }
  NamedOrder tag() const { return *tag_; }
  const std::vector<std::uint64_t>& ranks() const { return ranks_; }
  /// nullopt for named orders.
  std::optional<std::uint64_t> size() const;
  std::string spec() const;

  /// m ⋖ n. Throws std::out_of_range beyond a finite order's domain.
  bool less(std::uint64_t m, std::uint64_t n) const;

  /// Structure of named orders; finite orders always have min and max and
  /// successors except at the top.
  std::optional<std::uint64_t> min_element() const;
  std::optional<std::uint64_t> max_element() const;
  std::optional<std::uint64_t> successor(std::uint64_t n) const;
  bool dense() const;

  /// Both orders coincide on {0..n−1}².
  bool agrees_with(const LinearOrder& other, std::uint64_t n) const;

 private:
  explicit LinearOrder(NamedOrder tag) : tag_(tag) {}
  explicit LinearOrder(std::vector<std::uint64_t> ranks) : ranks_(std::move(ranks)) {}

  std::optional<NamedOrder> tag_;
  std::vector<std::uint64_t> ranks_;
};

/// Open intervals I_n = (a_n, b_n), n < N, all Product pieces.
struct ThetaIntervals {
  std::vector<Piece> pieces;
  LinearOrder order;
  std::uint64_t depth = 0;
};

/// I_0 = (1/3, 2/3); for n ≥ 1 with x_n = max({0} ∪ {b_k : k ⋖ n, k < n}),
/// y_n = min({a_k : n ⋖ k, k < n} ∪ {1}):
///   a_n = (x_n + y_n − 3^{−(n+1)})/2,  b_n = (x_n + y_n + 3^{−(n+1)})/2.
ThetaIntervals build_intervals(const LinearOrder& order, std::uint64_t n);

/// Lazy ordinal sum of the intervals of a named order.
class ThetaGenerator final : public PieceGenerator {
 public:
  explicit ThetaGenerator(LinearOrder order);

  std::string family_key() const override { return "theta " + order_.spec(); }
  Piece piece_at(std::uint64_t n) const override;
  /// Σ_{k≥n} 3^{−(k+1)} = 3^{−n}/2.
  Rational tail_length_bound(std::uint64_t n) const override;
  /// Checks the first `depth` pieces; their endpoints and 0, 1 are idempotent.
  Location locate(const Rational& q, std::size_t depth) const override;
  /// Gaps (b_m, a_succ(m)), (0, a_min) and (b_max, 1) among the first pieces.
  std::vector<SignatureEntry> certified_m_entries(std::size_t depth) const override;
  SignatureShape shape(std::size_t depth) const override;

  const LinearOrder& order() const { return order_; }

 private:
  void ensure(std::uint64_t n) const;

  LinearOrder order_;
  mutable std::mutex mutex_;
  mutable std::vector<Piece> cache_;
};

/// Named orders give a lazy t-norm, finite orders a finite presentation.
TNorm build_tnorm(const LinearOrder& order);

struct BallCheck {
  Rational sampled_distance;
  Rational bound;  // 3^{−N}
  bool within = false;
};

/// Sampled sup distance between the θ-images of two orders that agree on
/// N×N, each evaluated at truncation N+10 over the lattice {i/(grid−1)}².
/// Throws std::invalid_argument when the orders disagree on N×N.
BallCheck agreement_ball_check(const LinearOrder& a, const LinearOrder& b, std::uint64_t n, std::uint64_t grid);

struct RoundTrip {
  /// Piece indices 0..n−1 listed in the order recovered from the structure.
  std::vector<std::uint64_t> recovered;
  /// Least enumeration index of each piece.
  std::vector<std::uint64_t> indices;
  bool rl_empty = false;
  bool pass = false;
  std::string report() const;
};

/// Recover ⋖ on piece indices 0..n−1 from the structure of the θ-image:
/// each piece contributes its least index, which must be rp-active in the
/// lazy t-norm, and those indices ordered by `less` must reproduce ⋖.
RoundTrip roundtrip(const LinearOrder& order, std::uint64_t n);

}  // namespace ctn
