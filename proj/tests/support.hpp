#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ctn/lo_reduction.hpp"
#include "ctn/presentation_io.hpp"
#include "ctn/tnorm.hpp"

namespace ctn::test {

struct CorpusEntry {
  std::string name;
  TNorm t;
};

/// Finite presentations with small-denominator endpoints.
std::vector<CorpusEntry> finite_corpus();

/// Declared pieces of a finite t-norm.
const std::vector<Piece>& pieces_of(const TNorm& t);

TNorm finite_tnorm(std::vector<Piece> pieces);

std::string data_path(const std::string& name);

/// Hand-rolled generators; every caller passes its own seeded engine.
using Rng = std::mt19937_64;

Rational random_unit_rational(Rng& rng, std::uint64_t max_den);
/// Random finite presentation: up to `max_pieces` pieces with endpoints on
/// the grid {k/den}.
FinitePresentation random_presentation(Rng& rng, std::size_t max_pieces, std::uint64_t den);
LinearOrder random_finite_order(Rng& rng, std::size_t size);

}  // namespace ctn::test
