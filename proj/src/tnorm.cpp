#include "ctn/tnorm.hpp"

#include <algorithm>

namespace ctn {

namespace {

const Rational kZero(0);
const Rational kOne(1);

}  // namespace

char kind_char(PieceKind kind) { return kind == PieceKind::Product ? 'P' : 'L'; }
Label kind_label(PieceKind kind) { return kind == PieceKind::Product ? Label::P : Label::L; }

void validate_piece(const Piece& p) {
  if (p.lo < kZero || kOne < p.hi || !(p.lo < p.hi))
    throw std::invalid_argument("invalid piece " + interval_string(p.lo, p.hi));
}

Rational apply_piece(const Piece& p, const Rational& x, const Rational& y) {
  if (p.kind == PieceKind::Product) return p.lo + (x - p.lo) * (y - p.lo) / (p.hi - p.lo);
  return max(p.lo, x + y - p.hi);
}

std::uint64_t lukasiewicz_nilpotency_index(const Piece& p, const Rational& q) {
  if (!(p.lo < q && q < p.hi)) throw std::invalid_argument("point not interior to piece");
  const mpz_class l = ((p.hi - p.lo) / (p.hi - q)).ceil();
  if (!l.fits_ulong_p()) throw std::overflow_error("nilpotency index too large");
  return l.get_ui();
}

FinitePresentation::FinitePresentation(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (const Piece& p : pieces_) validate_piece(p);
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].lo < pieces_[i - 1].hi)
      throw std::invalid_argument("overlapping pieces " + interval_string(pieces_[i - 1].lo, pieces_[i - 1].hi) +
                                  " and " + interval_string(pieces_[i].lo, pieces_[i].hi));
  }
}

Location FinitePresentation::locate(const Rational& q) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), q,
                             [](const Rational& v, const Piece& p) { return v < p.lo; });
  if (it == pieces_.begin()) return Location::idempotent();
  --it;
  if (q < it->hi && it->lo < q)
    return Location::in_piece(*it, static_cast<std::uint64_t>(it - pieces_.begin()));
  return Location::idempotent();
}

MMembership PieceGenerator::m_membership(const Rational& q, std::size_t depth) const {
  for (const SignatureEntry& e : certified_m_entries(depth))
    if (e.contains_closed(q)) return {Tri::True, e};
  return {Tri::Unknown, std::nullopt};
}

TNorm::TNorm(std::shared_ptr<const PieceGenerator> g, std::size_t locate_depth)
    : rep_(std::move(g)), locate_depth_(locate_depth) {
  if (!std::get<1>(rep_)) throw std::invalid_argument("null piece generator");
}

const FinitePresentation& TNorm::finite() const {
  if (!is_finite()) throw std::logic_error("t-norm is not finitely presented");
  return std::get<FinitePresentation>(rep_);
}

const PieceGenerator& TNorm::generator() const {
  if (is_finite()) throw std::logic_error("t-norm is finitely presented");
  return *std::get<1>(rep_);
}

TNorm TNorm::with_locate_depth(std::size_t depth) const {
  TNorm copy = *this;
  copy.locate_depth_ = depth;
  return copy;
}

Location TNorm::locate(const Rational& q) const {
  if (is_finite()) return finite().locate(q);
  return generator().locate(q, locate_depth_);
}

UnitRational eval(const FinitePresentation& p, const Rational& x, const Rational& y) {
  const Rational& lower = min(x, y);
  const Rational& upper = max(x, y);
  const auto& pieces = p.pieces();
  // the piece with lo ≤ lower < hi, if any
  auto it = std::upper_bound(pieces.begin(), pieces.end(), lower,
                             [](const Rational& v, const Piece& pc) { return v < pc.lo; });
  if (it != pieces.begin()) {
    --it;
    if (lower < it->hi && upper <= it->hi) return {apply_piece(*it, x, y)};
  }
  return {lower};
}

UnitRational eval(const TNorm& t, const UnitRational& x, const UnitRational& y) {
  if (!t.is_finite())
    throw std::logic_error("exact evaluation needs a finite presentation; use eval_approx");
  return eval(t.finite(), x, y);
}

FinitePresentation truncate(const PieceGenerator& g, std::uint64_t n) {
  if (const auto count = g.piece_count()) n = std::min(n, *count);
  std::vector<Piece> pieces;
  pieces.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) pieces.push_back(g.piece_at(k));
  return FinitePresentation(std::move(pieces));
}

Approximation eval_approx(const TNorm& t, const UnitRational& x, const UnitRational& y, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty truncation");
  if (t.is_finite()) return {eval(t.finite(), x, y), Rational(0)};
  const PieceGenerator& g = t.generator();
  return {eval(truncate(g, n), x, y), Rational(2) * g.tail_length_bound(n)};
}

UnitRational power(const TNorm& t, const UnitRational& q, std::uint64_t l) {
  if (l == 0) throw std::invalid_argument("power needs at least one factor");
  if (t.is_finite()) {
    UnitRational acc = q;
    for (std::uint64_t k = 1; k < l; ++k) acc = eval(t.finite(), acc, q);
    return acc;
  }
  const Location loc = t.locate(q);
  switch (loc.kind) {
    case Location::Kind::Idempotent: return q;
    case Location::Kind::Unknown: throw UnresolvedLocate(q);
    case Location::Kind::InPiece: break;
  }
  Rational acc = q;
  for (std::uint64_t k = 1; k < l; ++k) acc = apply_piece(*loc.piece, acc, q);
  return {acc};
}

Tri is_idempotent(const TNorm& t, const UnitRational& q) {
  if (t.is_finite()) return to_tri(eval(t.finite(), q, q) == q);
  switch (t.locate(q).kind) {
    case Location::Kind::Idempotent: return Tri::True;
    case Location::Kind::InPiece: return Tri::False;
    case Location::Kind::Unknown: break;
  }
  return Tri::Unknown;
}

PowerIdempotency is_eventually_idempotent_power(const TNorm& t, const UnitRational& q, std::uint64_t max_l) {
  using V = PowerIdempotency::Verdict;
  const Location loc = t.locate(q);
  if (loc.kind == Location::Kind::Idempotent) return {V::Yes, 1};
  if (loc.kind == Location::Kind::Unknown) return {V::Unknown, 0};
  const Piece& piece = *loc.piece;
  // Products inside a Product piece approach lo but never reach it.
  if (piece.kind == PieceKind::Product) return {V::No, 0};
  Rational acc = q;
  for (std::uint64_t l = 2; l <= max_l; ++l) {
    acc = apply_piece(piece, acc, q);
    if (acc == piece.lo) return {V::Yes, l};
  }
  return {V::Yes, lukasiewicz_nilpotency_index(piece, q)};
}

AxiomReport check_axioms(const BinaryOperation& op, std::span<const UnitRational> samples) {
  AxiomReport report;
  std::vector<Rational> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t n = xs.size();

  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = op(xs[i], xs[j]);
      ++report.checks;
      if (table[i][j] < kZero || kOne < table[i][j]) report.violations.push_back({"range", {xs[i], xs[j]}});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    ++report.checks;
    if (op(xs[i], kOne) != xs[i] || op(kOne, xs[i]) != xs[i])
      report.violations.push_back({"neutrality", {xs[i]}});
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.checks;
      if (table[i][j] != table[j][i]) report.violations.push_back({"commutativity", {xs[i], xs[j]}});
    }
    // nondecreasing along rows and columns; transitivity covers all pairs
    for (std::size_t j = 0; j + 1 < n; ++j) {
      report.checks += 2;
      if (table[i][j + 1] < table[i][j]) report.violations.push_back({"monotonicity", {xs[i], xs[j], xs[j + 1]}});
      if (table[j + 1][i] < table[j][i]) report.violations.push_back({"monotonicity", {xs[j], xs[j + 1], xs[i]}});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checks;
        if (op(table[i][j], xs[k]) != op(xs[i], table[j][k]))
          report.violations.push_back({"associativity", {xs[i], xs[j], xs[k]}});
      }
    }
  }
  return report;
}

AxiomReport check_axioms(const TNorm& t, std::span<const UnitRational> samples) {
  const FinitePresentation& p = t.finite();
  return check_axioms([&p](const Rational& x, const Rational& y) -> Rational { return eval(p, x, y); }, samples);
}

PieceKind classify_piece_empirically(const TNorm& t, const UnitRational& lo, const UnitRational& hi,
                                     std::size_t samples) {
  const Rational& a = lo;
  const Rational& b = hi;
  for (std::size_t k = 1; k <= samples; ++k) {
    const UnitRational q{a + (b - a) * Rational(static_cast<long long>(k), static_cast<long long>(samples + 1))};
    // A Łukasiewicz-like piece reaches its bottom within ⌈(b−a)/(b−q)⌉ factors.
    const mpz_class bound = ((b - a) / (b - q.value())).ceil();
    bool nilpotent = false;
    UnitRational acc = q;
    for (mpz_class l = 1; l <= bound + 1; ++l) {
      if (acc.value() == a) {
        nilpotent = true;
        break;
      }
      acc = t.is_finite() ? eval(t.finite(), acc, q) : power(t, q, l.get_ui() + 1);
    }
    if (!nilpotent) return PieceKind::Product;
  }
  return PieceKind::Lukasiewicz;
}

std::vector<UnitRational> unit_grid(std::size_t count) {
  if (count < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<UnitRational> grid;
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    grid.emplace_back(Rational(static_cast<long long>(k), static_cast<long long>(count - 1)));
  return grid;
}

}  // namespace ctn
