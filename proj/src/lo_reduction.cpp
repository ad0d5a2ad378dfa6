#include "ctn/lo_reduction.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ctn/enumeration.hpp"

namespace ctn {

namespace {

// Position of n in ℤ under the zeta coding.
long long zeta_image(std::uint64_t n) {
  const auto v = static_cast<long long>(n);
  return n % 2 == 0 ? v / 2 : -(v + 1) / 2;
}

std::vector<std::uint64_t> parse_ranks(std::string_view text) {
  std::vector<std::uint64_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw std::invalid_argument("bad rank '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing comma in finite order");
  }
  return out;
}

Piece next_interval(const LinearOrder& order, const std::vector<Piece>& prev) {
  const std::uint64_t n = prev.size();
  const Rational half_len = Rational::inverse_power(3, n + 1) / Rational(2);
  if (n == 0) return {Rational(1, 2) - half_len, Rational(1, 2) + half_len, PieceKind::Product};
  Rational x(0), y(1);
  for (std::uint64_t k = 0; k < n; ++k) {
    if (order.less(k, n)) x = max(x, prev[k].hi);
    else y = min(y, prev[k].lo);
  }
  const Rational mid = (x + y) / Rational(2);
  return {mid - half_len, mid + half_len, PieceKind::Product};
}

}  // namespace

std::string order_name(NamedOrder tag) {
  switch (tag) {
    case NamedOrder::Omega: return "omega";
    case NamedOrder::OmegaStar: return "omega_star";
    case NamedOrder::Zeta: return "zeta";
    case NamedOrder::Eta: return "eta";
    case NamedOrder::OmegaPlusOmegaStar: return "omega_plus_omega_star";
  }
  return "?";
}

OrderCmp named_order_cmp(NamedOrder tag, std::uint64_t m, std::uint64_t n) {
  if (m == n) throw std::invalid_argument("named_order_cmp needs distinct elements");
  bool less = false;
  switch (tag) {
    case NamedOrder::Omega: less = m < n; break;
    case NamedOrder::OmegaStar: less = m > n; break;
    case NamedOrder::Zeta: less = zeta_image(m) < zeta_image(n); break;
    case NamedOrder::Eta:
      less = enumerate_rationals(m + 2).value() < enumerate_rationals(n + 2).value();
      break;
    case NamedOrder::OmegaPlusOmegaStar:
      if (m % 2 != n % 2) less = m % 2 == 0;
      else less = m % 2 == 0 ? m < n : m > n;
      break;
  }
  return less ? OrderCmp::Less : OrderCmp::Greater;
}

LinearOrder LinearOrder::finite(std::vector<std::uint64_t> ranks) {
  std::vector<std::uint64_t> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("finite order ranks must be a permutation of 0..k-1");
  if (ranks.empty()) throw std::invalid_argument("finite order must be nonempty");
  return LinearOrder(std::move(ranks));
}

LinearOrder LinearOrder::parse(const std::string& spec) {
  for (NamedOrder tag : {NamedOrder::Omega, NamedOrder::OmegaStar, NamedOrder::Zeta, NamedOrder::Eta,
                         NamedOrder::OmegaPlusOmegaStar})
    if (spec == order_name(tag)) return named(tag);
  constexpr std::string_view prefix = "finite:";
  if (spec.starts_with(prefix)) return finite(parse_ranks(std::string_view(spec).substr(prefix.size())));
  throw std::invalid_argument("unknown order spec '" + spec + "'");
}

std::optional<std::uint64_t> LinearOrder::size() const {
  if (is_named()) return std::nullopt;
  return ranks_.size();
}

std::string LinearOrder::spec() const {
  if (is_named()) return order_name(*tag_);
  std::string out = "finite:";
  for (std::size_t i = 0; i < ranks_.size(); ++i) out += (i ? "," : "") + std::to_string(ranks_[i]);
  return out;
}

bool LinearOrder::less(std::uint64_t m, std::uint64_t n) const {
  if (m == n) return false;
  if (is_named()) return named_order_cmp(*tag_, m, n) == OrderCmp::Less;
  return ranks_.at(m) < ranks_.at(n);
}

std::optional<std::uint64_t> LinearOrder::min_element() const {
  if (!is_named()) return std::min_element(ranks_.begin(), ranks_.end()) - ranks_.begin();
  switch (*tag_) {
    case NamedOrder::Omega:
    case NamedOrder::OmegaPlusOmegaStar: return 0;
    default: return std::nullopt;
  }
}

std::optional<std::uint64_t> LinearOrder::max_element() const {
  if (!is_named()) return std::max_element(ranks_.begin(), ranks_.end()) - ranks_.begin();
  switch (*tag_) {
    case NamedOrder::OmegaStar: return 0;
    case NamedOrder::OmegaPlusOmegaStar: return 1;
    default: return std::nullopt;
  }
}

std::optional<std::uint64_t> LinearOrder::successor(std::uint64_t n) const {
  if (!is_named()) {
    const std::uint64_t r = ranks_.at(n) + 1;
    const auto it = std::find(ranks_.begin(), ranks_.end(), r);
    if (it == ranks_.end()) return std::nullopt;
    return it - ranks_.begin();
  }
  switch (*tag_) {
    case NamedOrder::Omega: return n + 1;
    case NamedOrder::OmegaStar:
      if (n == 0) return std::nullopt;
      return n - 1;
    case NamedOrder::Zeta: {
      // z ↦ z + 1 in the coding
      const long long z = zeta_image(n) + 1;
      return z >= 0 ? static_cast<std::uint64_t>(2 * z) : static_cast<std::uint64_t>(-2 * z - 1);
    }
    case NamedOrder::Eta: return std::nullopt;
    case NamedOrder::OmegaPlusOmegaStar:
      if (n % 2 == 0) return n + 2;
      if (n == 1) return std::nullopt;
      return n - 2;
  }
  return std::nullopt;
}

bool LinearOrder::dense() const { return is_named() && *tag_ == NamedOrder::Eta; }

bool LinearOrder::agrees_with(const LinearOrder& other, std::uint64_t n) const {
  for (std::uint64_t m = 0; m < n; ++m)
    for (std::uint64_t k = m + 1; k < n; ++k)
      if (less(m, k) != other.less(m, k)) return false;
  return true;
}

ThetaIntervals build_intervals(const LinearOrder& order, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("build_intervals needs N >= 1");
  if (auto size = order.size(); size && n > *size)
    throw std::invalid_argument("finite order has fewer than " + std::to_string(n) + " elements");
  ThetaIntervals out{{}, order, n};
  out.pieces.reserve(n);
  while (out.pieces.size() < n) out.pieces.push_back(next_interval(order, out.pieces));
  return out;
}

ThetaGenerator::ThetaGenerator(LinearOrder order) : order_(std::move(order)) {
  if (!order_.is_named()) throw std::invalid_argument("ThetaGenerator needs a named order");
}

void ThetaGenerator::ensure(std::uint64_t n) const {
  while (cache_.size() <= n) cache_.push_back(next_interval(order_, cache_));
}

Piece ThetaGenerator::piece_at(std::uint64_t n) const {
  std::lock_guard lock(mutex_);
  ensure(n);
  return cache_[n];
}

Rational ThetaGenerator::tail_length_bound(std::uint64_t n) const {
  return Rational::inverse_power(3, n) / Rational(2);
}

Location ThetaGenerator::locate(const Rational& q, std::size_t depth) const {
  if (q == Rational(0) || q == Rational(1)) return Location::idempotent();
  for (std::uint64_t k = 0; k < depth; ++k) {
    const Piece p = piece_at(k);
    if (p.lo < q && q < p.hi) return Location::in_piece(p, k);
    if (q == p.lo || q == p.hi) return Location::idempotent();
  }
  return Location::unknown();
}

std::vector<SignatureEntry> ThetaGenerator::certified_m_entries(std::size_t depth) const {
  std::vector<SignatureEntry> out;
  if (depth == 0) return out;
  if (auto m = order_.min_element(); m && *m < depth) out.push_back({Rational(0), piece_at(*m).lo, Label::M});
  for (std::uint64_t k = 0; k < depth; ++k) {
    const auto s = order_.successor(k);
    if (s && *s < depth) out.push_back({piece_at(k).hi, piece_at(*s).lo, Label::M});
  }
  if (auto m = order_.max_element(); m && *m < depth) out.push_back({piece_at(*m).hi, Rational(1), Label::M});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

SignatureShape ThetaGenerator::shape(std::size_t depth) const {
  SignatureShape s;
  if (const auto m = order_.min_element()) {
    s.has_min = Tri::True;
    s.min_entry = SignatureEntry{Rational(0), piece_at(*m).lo, Label::M};
  } else {
    s.has_min = Tri::False;
  }
  if (const auto m = order_.max_element()) {
    s.has_max = Tri::True;
    s.max_entry = SignatureEntry{piece_at(*m).hi, Rational(1), Label::M};
  } else {
    s.has_max = Tri::False;
  }
  if (order_.dense()) {
    s.dense_no_endpoints = Tri::True;
    s.uniform_label = Label::P;
    return s;
  }
  s.dense_no_endpoints = Tri::False;
  // A piece and the M gap up to its successor: nothing fits between them.
  for (std::uint64_t k = 0; k < std::max<std::size_t>(depth, 1); ++k) {
    if (const auto succ = order_.successor(k)) {
      const Piece p = piece_at(k);
      s.successor_pair = std::make_pair(SignatureEntry{p.lo, p.hi, Label::P},
                                        SignatureEntry{p.hi, piece_at(*succ).lo, Label::M});
      break;
    }
  }
  return s;
}

TNorm build_tnorm(const LinearOrder& order) {
  if (order.is_named()) return TNorm(std::make_shared<ThetaGenerator>(order));
  return TNorm(FinitePresentation(build_intervals(order, *order.size()).pieces));
}

BallCheck agreement_ball_check(const LinearOrder& a, const LinearOrder& b, std::uint64_t n, std::uint64_t grid) {
  if (n == 0 || grid < 2) throw std::invalid_argument("agreement_ball_check needs N >= 1 and grid >= 2");
  if (!a.agrees_with(b, n))
    throw std::invalid_argument(a.spec() + " and " + b.spec() + " disagree on the first " + std::to_string(n) +
                                " elements");
  const auto truncated = [&](const LinearOrder& o) {
    std::uint64_t depth = n + 10;
    if (auto size = o.size()) depth = std::min(depth, *size);
    return FinitePresentation(build_intervals(o, depth).pieces);
  };
  const FinitePresentation ta = truncated(a);
  const FinitePresentation tb = truncated(b);
  const auto points = unit_grid(grid);
  BallCheck out{Rational(0), Rational::inverse_power(3, n), false};
  for (const auto& x : points)
    for (const auto& y : points) {
      const Rational d = abs(eval(ta, x, y).value() - eval(tb, x, y).value());
      if (out.sampled_distance < d) out.sampled_distance = d;
    }
  out.within = out.sampled_distance <= out.bound;
  return out;
}

std::string RoundTrip::report() const {
  std::ostringstream os;
  os << "order:";
  for (auto k : recovered) os << ' ' << k;
  os << "\nindices:";
  for (auto m : indices) os << ' ' << m;
  os << "\nrl: " << (rl_empty ? "empty" : "nonempty") << '\n' << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

RoundTrip roundtrip(const LinearOrder& order, std::uint64_t n) {
  if (auto size = order.size(); size && n > *size)
    throw std::invalid_argument("finite order has fewer than " + std::to_string(n) + " elements");
  const TNorm t = build_tnorm(order).with_locate_depth(std::max<std::size_t>(n, TNorm::kDefaultLocateDepth));
  RoundTrip out;
  out.rl_empty = true;
  bool active = true;
  std::vector<SignatureEntry> entries;
  const std::vector<Piece> pieces = build_intervals(order, n).pieces;
  for (std::uint64_t k = 0; k < n; ++k) {
    const Piece& piece = pieces[k];
    const std::uint64_t m = min_index_in(UnitRational(piece.lo), UnitRational(piece.hi), false);
    out.indices.push_back(m);
    // m is active with label P iff q_m sits in this very piece.
    const Location loc = t.locate(enumerate_rationals(m).value());
    if (loc.kind != Location::Kind::InPiece || loc.piece->lo != piece.lo || loc.piece->hi != piece.hi) active = false;
    else if (loc.piece->kind == PieceKind::Lukasiewicz) out.rl_empty = false;
    entries.push_back({piece.lo, piece.hi, kind_label(piece.kind)});
  }
  out.recovered.resize(n);
  std::iota(out.recovered.begin(), out.recovered.end(), 0);
  // ordered by less on the active indices, i.e. by ≺ on their entries
  std::sort(out.recovered.begin(), out.recovered.end(),
            [&](std::uint64_t i, std::uint64_t j) { return prec(entries[i], entries[j]); });
  bool reproduces = true;
  for (std::size_t i = 0; i + 1 < out.recovered.size(); ++i)
    reproduces = reproduces && order.less(out.recovered[i], out.recovered[i + 1]);
  out.pass = active && out.rl_empty && reproduces;
  return out;
}

}  // namespace ctn
