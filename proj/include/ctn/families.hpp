#pragma once

#include <memory>

#include "ctn/tnorm.hpp"

namespace ctn {

/// Product pieces (1 − 1/(n+1), 1 − 1/(n+2)), n ∈ ω: accumulate at 1, so the
/// signature has a ≺-least entry (0, 1/2) and no greatest one.
class LimitLeftFamily final : public PieceGenerator {
 public:
  std::string family_key() const override { return "limit-left"; }
  Piece piece_at(std::uint64_t n) const override;
  Rational tail_length_bound(std::uint64_t n) const override;
  /// Closed form; `depth` is not needed.
  Location locate(const Rational& q, std::size_t depth) const override;
  MMembership m_membership(const Rational&, std::size_t) const override { return {Tri::False, {}}; }
  SignatureShape shape(std::size_t depth) const override;
};

/// Product pieces (1/(n+2), 1/(n+1)): the mirror image, accumulating at 0.
class LimitRightFamily final : public PieceGenerator {
 public:
  std::string family_key() const override { return "limit-right"; }
  Piece piece_at(std::uint64_t n) const override;
  Rational tail_length_bound(std::uint64_t n) const override;
  Location locate(const Rational& q, std::size_t depth) const override;
  MMembership m_membership(const Rational&, std::size_t) const override { return {Tri::False, {}}; }
  SignatureShape shape(std::size_t depth) const override;
};

TNorm limit_left_tnorm();
TNorm limit_right_tnorm();

}  // namespace ctn
