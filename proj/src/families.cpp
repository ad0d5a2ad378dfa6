#include "ctn/families.hpp"

namespace ctn {

namespace {

Rational ratio(std::uint64_t p, std::uint64_t q) {
  return {mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(q))};
}

SignatureEntry as_entry(const Piece& p) { return {p.lo, p.hi, kind_label(p.kind)}; }

}  // namespace

Piece LimitLeftFamily::piece_at(std::uint64_t n) const {
  return {ratio(n, n + 1), ratio(n + 1, n + 2), PieceKind::Product};
}

Rational LimitLeftFamily::tail_length_bound(std::uint64_t n) const { return ratio(1, n + 1); }

Location LimitLeftFamily::locate(const Rational& q, std::size_t) const {
  if (q == Rational(1)) return Location::idempotent();
  // q ∈ (n/(n+1), (n+1)/(n+2)) iff 1/(1−q) ∈ (n+1, n+2)
  const Rational t = Rational(1) / (Rational(1) - q);
  if (t.is_integer()) return Location::idempotent();
  const std::uint64_t n = t.floor().get_ui() - 1;
  return Location::in_piece(piece_at(n), n);
}

SignatureShape LimitLeftFamily::shape(std::size_t depth) const {
  SignatureShape s;
  s.has_max = Tri::False;
  s.dense_no_endpoints = Tri::False;
  s.uniform_label = Label::P;
  if (depth >= 1) {
    s.has_min = Tri::True;
    s.min_entry = as_entry(piece_at(0));
  }
  if (depth >= 2) s.successor_pair = {as_entry(piece_at(0)), as_entry(piece_at(1))};
  return s;
}

Piece LimitRightFamily::piece_at(std::uint64_t n) const {
  return {ratio(1, n + 2), ratio(1, n + 1), PieceKind::Product};
}

Rational LimitRightFamily::tail_length_bound(std::uint64_t n) const { return ratio(1, n + 1); }

Location LimitRightFamily::locate(const Rational& q, std::size_t) const {
  if (q == Rational(0)) return Location::idempotent();
  // q ∈ (1/(n+2), 1/(n+1)) iff 1/q ∈ (n+1, n+2)
  const Rational t = Rational(1) / q;
  if (t.is_integer()) return Location::idempotent();
  const std::uint64_t n = t.floor().get_ui() - 1;
  return Location::in_piece(piece_at(n), n);
}

SignatureShape LimitRightFamily::shape(std::size_t depth) const {
  SignatureShape s;
  s.has_min = Tri::False;
  s.dense_no_endpoints = Tri::False;
  s.uniform_label = Label::P;
  if (depth >= 1) {
    s.has_max = Tri::True;
    s.max_entry = as_entry(piece_at(0));
  }
  if (depth >= 2) s.successor_pair = {as_entry(piece_at(1)), as_entry(piece_at(0))};
  return s;
}

TNorm limit_left_tnorm() { return TNorm(std::make_shared<LimitLeftFamily>()); }
TNorm limit_right_tnorm() { return TNorm(std::make_shared<LimitRightFamily>()); }

}  // namespace ctn
