#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctn/tnorm.hpp"

namespace ctn {

enum class CantorRule {
  MiddleThird,
  SVC,           // level n removes a centered gap of length 4^{−(n+1)}
  NonE,          // children [l+w/4, l+w/2] and [l+3w/4, l+w]
  NonEInterior,  // NonE at the node "1" only, middle third elsewhere
};

/// "cantor:middle-third", "cantor:svc", "cantor:non-e", "cantor:non-e-interior";
/// the "cantor:" prefix is optional. Throws std::invalid_argument.
CantorRule parse_cantor_rule(const std::string& spec);
std::string cantor_rule_name(CantorRule rule);  // without prefix

/// Expansion limit: endpoint denominators grow geometrically with depth.
inline constexpr std::size_t kCantorDepthGuard = 16;

struct ClosedInterval {
  Rational lo, hi;
  bool operator==(const ClosedInterval&) const = default;
};

/// The interval J_u of a node: level |u| and position u read as a binary
/// number (left child 2p, right child 2p+1).
struct CantorNode {
  std::size_t level = 0;
  std::uint64_t position = 0;
  ClosedInterval interval;
  /// Open intervals of J_u outside both children, left to right.
  std::vector<ClosedInterval> gaps;
};

struct CantorExpansion {
  std::size_t depth = 0;
  std::vector<std::vector<CantorNode>> levels;  // levels[k] holds all |u| = k, k ≤ depth
  /// Gaps of levels < depth, ≺-sorted.
  std::vector<ClosedInterval> gaps;
};

/// Children of J_u under the rule.
std::pair<ClosedInterval, ClosedInterval> cantor_children(CantorRule rule, const CantorNode& node);

/// All J_u for |u| ≤ depth and the gaps removed to produce level `depth`.
/// Throws std::invalid_argument beyond kCantorDepthGuard.
CantorExpansion expand(CantorRule rule, std::size_t depth);

/// l(J_u) = l(J_{u0}) and r(J_u) = r(J_{u1}) for all |u| < depth.
bool has_property_E(CantorRule rule, std::size_t depth);

struct GapOrderAnalysis {
  Tri dense = Tri::Unknown;
  Tri has_min = Tri::Unknown;
  Tri has_max = Tri::Unknown;
  std::optional<ClosedInterval> min_gap, max_gap;
  std::optional<std::pair<ClosedInterval, ClosedInterval>> successor_witness;
};

/// Certified facts about (K_A, ≺) from the rule and the gaps up to `depth`.
GapOrderAnalysis analyze_gap_order(CantorRule rule, std::size_t depth);

/// The t-norm whose pieces are the gaps, as Product pieces, level by level
/// and left to right within a level.
class CantorGenerator final : public PieceGenerator {
 public:
  explicit CantorGenerator(CantorRule rule) : rule_(rule) {}

  std::string family_key() const override { return "cantor:" + cantor_rule_name(rule_); }
  /// std::out_of_range past the pieces of level kCantorDepthGuard − 1.
  Piece piece_at(std::uint64_t n) const override;
  Rational tail_length_bound(std::uint64_t n) const override;
  /// Descends at most `depth` levels: gap → InPiece, node endpoint →
  /// Idempotent, still inside a node afterwards → Unknown.
  Location locate(const Rational& q, std::size_t depth) const override;
  MMembership m_membership(const Rational&, std::size_t) const override { return {Tri::False, {}}; }
  SignatureShape shape(std::size_t depth) const override;

  CantorRule rule() const { return rule_; }

 private:
  struct Level {
    std::vector<CantorNode> nodes;
    std::vector<std::uint64_t> first_gap;  // index of each node's first gap
    std::uint64_t first_index = 0;         // index of the level's first gap
    std::uint64_t gap_count = 0;
    Rational removed;
  };
  const Level& level(std::size_t k) const;  // caller holds mutex_

  CantorRule rule_;
  mutable std::mutex mutex_;
  mutable std::vector<Level> levels_;
};

TNorm build_tnorm_A(CantorRule rule, std::size_t locate_depth = TNorm::kDefaultLocateDepth);

/// "gaps depth=<d> count=<k>" then "( lo , hi )" lines, then the analysis.
std::string dump_cantor(CantorRule rule, std::size_t depth);

}  // namespace ctn
