#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace ctn::test {

namespace {

Piece P(long long a, long long b, long long c, long long d) {
  return {Rational(a, b), Rational(c, d), PieceKind::Product};
}
Piece L(long long a, long long b, long long c, long long d) {
  return {Rational(a, b), Rational(c, d), PieceKind::Lukasiewicz};
}

}  // namespace

TNorm finite_tnorm(std::vector<Piece> pieces) { return TNorm(FinitePresentation(std::move(pieces))); }

std::vector<CorpusEntry> finite_corpus() {
  std::vector<CorpusEntry> c;
  const auto add = [&](std::string name, std::vector<Piece> pieces) {
    c.push_back({std::move(name), finite_tnorm(std::move(pieces))});
  };
  add("minimum", {});
  add("product", {P(0, 1, 1, 1)});
  add("lukasiewicz", {L(0, 1, 1, 1)});
  add("product-upper", {P(1, 2, 1, 1)});
  add("lukasiewicz-lower", {L(0, 1, 1, 2)});
  add("mplm-a", {P(1, 4, 1, 2), L(1, 2, 3, 4)});
  add("mplm-b", {P(1, 10, 1, 5), L(1, 5, 9, 10)});
  add("mlpm", {L(1, 4, 1, 2), P(1, 2, 3, 4)});
  add("p-gap-l", {P(0, 1, 1, 3), L(2, 3, 1, 1)});
  add("product-middle", {P(1, 3, 2, 3)});
  add("p-p", {P(0, 1, 1, 2), P(1, 2, 1, 1)});
  add("l-l", {L(0, 1, 1, 2), L(1, 2, 1, 1)});
  add("l-gap-p", {L(1, 5, 2, 5), P(3, 5, 4, 5)});
  add("plpl", {P(0, 1, 1, 4), L(1, 4, 1, 2), P(1, 2, 3, 4), L(3, 4, 1, 1)});
  add("p-p-l", {P(1, 8, 1, 4), P(3, 8, 1, 2), L(5, 8, 3, 4)});
  add("l-sevenths", {L(2, 7, 3, 7)});
  add("l-wide", {L(1, 6, 5, 6)});
  add("l-l-l", {L(0, 1, 1, 3), L(1, 3, 2, 3), L(2, 3, 1, 1)});
  add("p-edges-l", {P(1, 16, 1, 8), L(7, 8, 15, 16)});
  add("theta-finite", build_intervals(LinearOrder::finite({1, 0, 2}), 3).pieces);
  add("product-tenths", {P(3, 10, 7, 10)});
  add("l-p-top", {L(1, 2, 2, 3), P(2, 3, 1, 1)});
  return c;
}

const std::vector<Piece>& pieces_of(const TNorm& t) { return t.finite().pieces(); }

std::string data_path(const std::string& name) { return std::string(CTN_DATA_DIR) + "/" + name; }

Rational random_unit_rational(Rng& rng, std::uint64_t max_den) {
  std::uniform_int_distribution<long long> den(1, static_cast<long long>(max_den));
  const long long d = den(rng);
  std::uniform_int_distribution<long long> num(0, d);
  return Rational(num(rng), d);
}

FinitePresentation random_presentation(Rng& rng, std::size_t max_pieces, std::uint64_t den) {
  // Pick 2k distinct cut points on the grid and pair them up; optionally
  // glue consecutive pieces by reusing an endpoint.
  std::uniform_int_distribution<std::size_t> count(0, max_pieces);
  const std::size_t k = std::min<std::size_t>(count(rng), den / 2);
  std::vector<long long> cuts(den + 1);
  std::iota(cuts.begin(), cuts.end(), 0);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(2 * k);
  std::sort(cuts.begin(), cuts.end());
  std::bernoulli_distribution coin(0.5);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < k; ++i) {
    long long lo = cuts[2 * i];
    if (i > 0 && coin(rng)) lo = cuts[2 * i - 1];  // touch the previous piece
    pieces.push_back({Rational(lo, static_cast<long long>(den)), Rational(cuts[2 * i + 1], static_cast<long long>(den)),
                      coin(rng) ? PieceKind::Product : PieceKind::Lukasiewicz});
  }
  return FinitePresentation(std::move(pieces));
}

LinearOrder random_finite_order(Rng& rng, std::size_t size) {
  std::vector<std::uint64_t> ranks(size);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return LinearOrder::finite(std::move(ranks));
}

}  // namespace ctn::test
