#include "ctn/iso.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace ctn {

namespace {

using Kind = DistinguishingInvariant::Kind;

IsoVerdict not_iso(DistinguishingInvariant reason, std::size_t depth = 0) {
  IsoVerdict v;
  v.kind = IsoVerdict::Kind::NotIso;
  v.reason = std::move(reason);
  v.depth = depth;
  return v;
}

IsoVerdict iso(IsoWitness w, std::size_t depth = 0) {
  IsoVerdict v;
  v.kind = IsoVerdict::Kind::Iso;
  v.witness = std::move(w);
  v.depth = depth;
  return v;
}

std::vector<AffineSegment> segments_for(const std::vector<EntryPair>& pairs) {
  std::vector<AffineSegment> segs;
  segs.reserve(pairs.size());
  for (const auto& [from, to] : pairs) segs.push_back({from.lo, from.hi, to.lo, to.hi});
  return segs;
}

// An extreme entry present on one side only, or present with different labels.
std::optional<DistinguishingInvariant> extreme_mismatch(Tri has_a, const std::optional<SignatureEntry>& a, Tri has_b,
                                                        const std::optional<SignatureEntry>& b, Kind kind) {
  if (has_a == Tri::Unknown || has_b == Tri::Unknown) return std::nullopt;
  if (has_a == Tri::False && has_b == Tri::False) return std::nullopt;
  DistinguishingInvariant inv;
  inv.kind = kind;
  if (has_a == Tri::True && (has_b == Tri::False || a->label != b->label)) {
    inv.label = a->label;
    inv.endpoint = a;
    inv.on_left = true;
    return inv;
  }
  if (has_b == Tri::True && has_a == Tri::False) {
    inv.label = b->label;
    inv.endpoint = b;
    inv.on_left = false;
    return inv;
  }
  return std::nullopt;
}

// Indices of 0..n−1 visited midpoint-first: the middle, then the middles of
// the two halves, and so on.
std::vector<std::size_t> midpoint_order(std::size_t n) {
  std::vector<std::size_t> order;
  std::deque<std::pair<std::size_t, std::size_t>> ranges{{0, n}};
  while (!ranges.empty()) {
    auto [lo, hi] = ranges.front();
    ranges.pop_front();
    if (lo >= hi) continue;
    const std::size_t mid = lo + (hi - lo) / 2;
    order.push_back(mid);
    ranges.emplace_back(lo, mid);
    ranges.emplace_back(mid + 1, hi);
  }
  return order;
}

}  // namespace

Rational IsoWitness::apply(const Rational& x) const {
  if (map_pieces.empty()) throw std::logic_error("witness has no affine extension");
  for (const auto& s : map_pieces) {
    if (s.from_lo <= x && x <= s.from_hi)
      return s.to_lo + (x - s.from_lo) * (s.to_hi - s.to_lo) / (s.from_hi - s.from_lo);
  }
  throw std::domain_error("point " + x.str() + " outside the witness domain");
}

std::string DistinguishingInvariant::tag() const {
  switch (kind) {
    case Kind::MinimumExistsMismatch: return std::string("MinimumExistsMismatch(") + label_char(*label) + ")";
    case Kind::MaximumExistsMismatch: return std::string("MaximumExistsMismatch(") + label_char(*label) + ")";
    case Kind::SuccessorPairPresent: return "SuccessorPairPresent";
    case Kind::DensityMismatch: return "DensityMismatch";
    case Kind::FiniteLabelSequenceMismatch: return "FiniteLabelSequenceMismatch(" + std::to_string(position) + ")";
  }
  return "?";
}

std::string IsoVerdict::format() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Iso: {
      os << "ISO\n";
      if (witness->identity) os << "  identity (same family)\n";
      else if (witness->map_pieces.empty()) os << "  back-and-forth pairs=" << witness->entry_map.size() << '\n';
      for (const auto& [a, b] : witness->entry_map) os << "  " << entry_string(a) << " -> " << entry_string(b) << '\n';
      for (const auto& s : witness->map_pieces)
        os << "  phi [" << s.from_lo << ", " << s.from_hi << "] -> [" << s.to_lo << ", " << s.to_hi << "]\n";
      break;
    }
    case Kind::NotIso: {
      os << "NOT_ISO " << reason->tag() << '\n';
      const char* side = reason->on_left ? "left" : "right";
      const char* other = reason->on_left ? "right" : "left";
      switch (reason->kind) {
        case DistinguishingInvariant::Kind::MinimumExistsMismatch:
          os << "  minimum " << entry_string(*reason->endpoint) << " on " << side << "; no such minimum on " << other
             << '\n';
          break;
        case DistinguishingInvariant::Kind::MaximumExistsMismatch:
          os << "  maximum " << entry_string(*reason->endpoint) << " on " << side << "; no such maximum on " << other
             << '\n';
          break;
        case DistinguishingInvariant::Kind::SuccessorPairPresent:
          os << "  successor pair on " << side << ": " << entry_string(reason->successor_pair->first) << " < "
             << entry_string(reason->successor_pair->second) << "; " << other << " is dense\n";
          break;
        case DistinguishingInvariant::Kind::DensityMismatch:
          os << "  " << side << " is dense without endpoints; " << other << " is not\n";
          break;
        case DistinguishingInvariant::Kind::FiniteLabelSequenceMismatch:
          os << "  first differing position " << reason->position << '\n';
          break;
      }
      break;
    }
    case Kind::Unknown: os << "UNKNOWN depth=" << depth << '\n'; break;
  }
  return os.str();
}

IsoVerdict decide_iso_finite(const Signature& a, const Signature& b) {
  if (!a.complete || !b.complete) throw std::invalid_argument("decide_iso_finite needs complete signatures");
  const std::size_t common = std::min(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.entries[i].label != b.entries[i].label) {
      DistinguishingInvariant inv;
      inv.kind = Kind::FiniteLabelSequenceMismatch;
      inv.position = i;
      return not_iso(inv);
    }
  }
  if (a.entries.size() != b.entries.size()) {
    DistinguishingInvariant inv;
    inv.kind = Kind::FiniteLabelSequenceMismatch;
    inv.position = common;
    return not_iso(inv);
  }
  IsoWitness w;
  for (std::size_t i = 0; i < common; ++i) w.entry_map.emplace_back(a.entries[i], b.entries[i]);
  // Complete signatures chain over [0,1], so the entries' closures tile it.
  w.map_pieces = segments_for(w.entry_map);
  return iso(std::move(w));
}

IsoWitness build_iso_map(const TNorm& a, const TNorm& b) {
  IsoVerdict v = decide_iso_finite(compute_signature(a), compute_signature(b));
  if (v.kind != IsoVerdict::Kind::Iso) throw std::invalid_argument("t-norms are not isomorphic: " + v.reason->tag());
  return std::move(*v.witness);
}

std::vector<EntryPair> back_and_forth(const Signature& a, const Signature& b, std::size_t k) {
  if (k == 0) return {};
  if (a.entries.empty() || b.entries.empty()) throw std::runtime_error("back_and_forth: empty prefix");
  const Label label = a.entries.front().label;
  for (const auto* s : {&a, &b})
    for (const auto& e : s->entries)
      if (e.label != label) throw std::runtime_error("back_and_forth: label uniformity violated at " + entry_string(e));

  const std::vector<SignatureEntry>& left = a.entries;
  const std::vector<SignatureEntry>& right = b.entries;
  // matched index pairs, kept sorted by left index (and so by right index)
  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::vector<bool> used_left(left.size()), used_right(right.size());
  const auto order_left = midpoint_order(left.size());
  const auto order_right = midpoint_order(right.size());
  std::size_t next_left = 0, next_right = 0;

  const auto extend = [&](bool forth) {
    const auto& order = forth ? order_left : order_right;
    auto& cursor = forth ? next_left : next_right;
    auto& used_from = forth ? used_left : used_right;
    auto& used_to = forth ? used_right : used_left;
    const std::size_t to_size = forth ? right.size() : left.size();
    while (cursor < order.size() && used_from[order[cursor]]) ++cursor;
    if (cursor == order.size()) throw std::runtime_error("back_and_forth: prefix exhausted");
    const std::size_t x = order[cursor];
    // the cut of x among the matched pairs
    std::size_t lower = 0, upper = to_size;  // candidate partner indices in [lower, upper)
    for (const auto& [l, r] : matched) {
      const std::size_t from = forth ? l : r;
      const std::size_t to = forth ? r : l;
      if (from < x) lower = std::max(lower, to + 1);
      else upper = std::min(upper, to);
    }
    if (lower >= upper) throw std::runtime_error("back_and_forth: no candidate in the matching cut");
    const std::size_t y = lower + (upper - lower) / 2;
    used_from[x] = true;
    used_to[y] = true;
    matched.emplace_back(forth ? x : y, forth ? y : x);
    std::sort(matched.begin(), matched.end());
  };

  for (std::size_t round = 0; round < k; ++round) extend(round % 2 == 0);

  std::vector<EntryPair> out;
  out.reserve(matched.size());
  for (const auto& [l, r] : matched) out.emplace_back(left[l], right[r]);
  return out;
}

IsoVerdict decide_iso_lazy(const TNorm& a, const TNorm& b, std::size_t depth) {
  if (a.is_finite() && b.is_finite()) return decide_iso_finite(compute_signature(a), compute_signature(b));
  if (!a.is_finite() && !b.is_finite() && a.generator().family_key() == b.generator().family_key()) {
    IsoWitness w;
    w.identity = true;
    return iso(std::move(w), depth);
  }

  const SignatureShape sa = shape_of(a, depth);
  const SignatureShape sb = shape_of(b, depth);
  if (auto inv = extreme_mismatch(sa.has_min, sa.min_entry, sb.has_min, sb.min_entry, Kind::MinimumExistsMismatch))
    return not_iso(*inv, depth);
  if (auto inv = extreme_mismatch(sa.has_max, sa.max_entry, sb.has_max, sb.max_entry, Kind::MaximumExistsMismatch))
    return not_iso(*inv, depth);

  const auto successor_against_dense = [&](const SignatureShape& with_pair, const SignatureShape& dense,
                                           bool pair_on_left) -> std::optional<DistinguishingInvariant> {
    if (!with_pair.successor_pair || dense.dense_no_endpoints != Tri::True) return std::nullopt;
    DistinguishingInvariant inv;
    inv.kind = Kind::SuccessorPairPresent;
    inv.successor_pair = with_pair.successor_pair;
    inv.on_left = pair_on_left;
    return inv;
  };
  if (auto inv = successor_against_dense(sa, sb, true)) return not_iso(*inv, depth);
  if (auto inv = successor_against_dense(sb, sa, false)) return not_iso(*inv, depth);

  if (sa.dense_no_endpoints != Tri::Unknown && sb.dense_no_endpoints != Tri::Unknown &&
      sa.dense_no_endpoints != sb.dense_no_endpoints) {
    DistinguishingInvariant inv;
    inv.kind = Kind::DensityMismatch;
    inv.on_left = sa.dense_no_endpoints == Tri::True;
    return not_iso(inv, depth);
  }

  if (sa.dense_no_endpoints == Tri::True && sb.dense_no_endpoints == Tri::True && sa.uniform_label &&
      sa.uniform_label == sb.uniform_label) {
    // Countable dense orders without endpoints are isomorphic; the prefix
    // back-and-forth run is the certificate we can show.
    const std::size_t prefix = std::max(depth, 2 * kBackAndForthPairs);
    const Signature pa = compute_signature(a, prefix);
    const Signature pb = compute_signature(b, prefix);
    IsoWitness w;
    for (std::size_t k = std::min({kBackAndForthPairs, pa.entries.size(), pb.entries.size()}); k > 0; --k) {
      try {
        w.entry_map = back_and_forth(pa, pb, k);
        break;
      } catch (const std::runtime_error&) {
      }
    }
    return iso(std::move(w), depth);
  }

  IsoVerdict v;
  v.kind = IsoVerdict::Kind::Unknown;
  v.depth = depth;
  return v;
}

}  // namespace ctn
