#include "ctn/presentation_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ctn/cantor.hpp"
#include "ctn/families.hpp"
#include "ctn/lo_reduction.hpp"

namespace ctn {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

PieceKind parse_kind(std::size_t line, const std::string& word) {
  if (word == "P") return PieceKind::Product;
  if (word == "L" || word == "Ł") return PieceKind::Lukasiewicz;
  throw ParseError(line, "piece kind must be P or L, got '" + word + "'");
}

Rational parse_rational(std::size_t line, const std::string& word) {
  try {
    return Rational::parse(word);
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational '" + word + "'");
  }
}

TNorm parse_family(std::size_t line, const std::vector<std::string>& words) {
  const std::string& name = words.at(1);
  const auto expect_args = [&](std::size_t n) {
    if (words.size() != 2 + n) throw ParseError(line, "family " + name + " takes " + std::to_string(n) + " argument(s)");
  };
  try {
    if (name == "limit-left") {
      expect_args(0);
      return limit_left_tnorm();
    }
    if (name == "limit-right") {
      expect_args(0);
      return limit_right_tnorm();
    }
    if (name == "theta") {
      expect_args(1);
      return build_tnorm(LinearOrder::parse(words[2]));
    }
    if (name == "cantor") {
      expect_args(1);
      return build_tnorm_A(parse_cantor_rule(words[2]));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
  throw ParseError(line, "unknown family '" + name + "'");
}

}  // namespace

TNorm parse_presentation(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  std::vector<Piece> pieces;
  std::optional<TNorm> family;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = split_words(raw);
    if (words.empty()) continue;
    if (!header) {
      if (words != std::vector<std::string>{"tnorm", "v1"}) throw ParseError(line, "expected header 'tnorm v1'");
      header = true;
      continue;
    }
    if (words[0] == "piece") {
      if (words.size() != 4) throw ParseError(line, "expected 'piece <lo> <hi> <P|L>'");
      if (family) throw ParseError(line, "pieces cannot follow a family line");
      Piece p{parse_rational(line, words[1]), parse_rational(line, words[2]), parse_kind(line, words[3])};
      try {
        validate_piece(p);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
      pieces.push_back(std::move(p));
    } else if (words[0] == "family") {
      if (words.size() < 2) throw ParseError(line, "family needs a name");
      if (family || !pieces.empty()) throw ParseError(line, "a family line must stand alone");
      family = parse_family(line, words);
    } else {
      throw ParseError(line, "unknown directive '" + words[0] + "'");
    }
  }
  if (!header) throw ParseError(line, "missing header 'tnorm v1'");
  if (family) return *family;
  try {
    return TNorm(FinitePresentation(std::move(pieces)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

TNorm parse_presentation_string(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

TNorm load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_presentation(in);
}

std::string format_presentation(const FinitePresentation& p) {
  std::ostringstream os;
  os << "tnorm v1\n";
  for (const auto& piece : p.pieces()) os << "piece " << piece.lo << ' ' << piece.hi << ' ' << kind_char(piece.kind) << '\n';
  return os.str();
}

}  // namespace ctn
