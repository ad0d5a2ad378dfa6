#include "ctn/cantor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ctn {

namespace {

bool rule_has_E(CantorRule rule) { return rule == CantorRule::MiddleThird || rule == CantorRule::SVC; }

std::vector<ClosedInterval> gaps_between(const ClosedInterval& parent, const ClosedInterval& left,
                                         const ClosedInterval& right) {
  std::vector<ClosedInterval> out;
  if (parent.lo < left.lo) out.push_back({parent.lo, left.lo});
  out.push_back({left.hi, right.lo});
  if (right.hi < parent.hi) out.push_back({right.hi, parent.hi});
  return out;
}

CantorNode child_node(CantorRule rule, const CantorNode& parent, int bit) {
  const auto [l, r] = cantor_children(rule, parent);
  CantorNode c;
  c.level = parent.level + 1;
  c.position = 2 * parent.position + static_cast<std::uint64_t>(bit);
  c.interval = bit == 0 ? l : r;
  const auto [cl, cr] = cantor_children(rule, c);
  c.gaps = gaps_between(c.interval, cl, cr);
  return c;
}

CantorNode root_node(CantorRule rule) {
  CantorNode root{0, 0, {Rational(0), Rational(1)}, {}};
  const auto [l, r] = cantor_children(rule, root);
  root.gaps = gaps_between(root.interval, l, r);
  return root;
}

std::string gap_string(const ClosedInterval& g) { return "( " + g.lo.str() + " , " + g.hi.str() + " )"; }

std::string_view tri_word(Tri t) { return to_string(t); }

}  // namespace

CantorRule parse_cantor_rule(const std::string& spec) {
  std::string_view name = spec;
  if (name.starts_with("cantor:")) name.remove_prefix(7);
  for (CantorRule r : {CantorRule::MiddleThird, CantorRule::SVC, CantorRule::NonE, CantorRule::NonEInterior})
    if (name == cantor_rule_name(r)) return r;
  throw std::invalid_argument("unknown Cantor system '" + spec + "'");
}

std::string cantor_rule_name(CantorRule rule) {
  switch (rule) {
    case CantorRule::MiddleThird: return "middle-third";
    case CantorRule::SVC: return "svc";
    case CantorRule::NonE: return "non-e";
    case CantorRule::NonEInterior: return "non-e-interior";
  }
  return "?";
}

std::pair<ClosedInterval, ClosedInterval> cantor_children(CantorRule rule, const CantorNode& node) {
  const Rational& l = node.interval.lo;
  const Rational w = node.interval.hi - l;
  const auto middle_third = [&] {
    return std::make_pair(ClosedInterval{l, l + w / Rational(3)}, ClosedInterval{l + w * Rational(2, 3), l + w});
  };
  const auto non_e = [&] {
    return std::make_pair(ClosedInterval{l + w / Rational(4), l + w / Rational(2)},
                          ClosedInterval{l + w * Rational(3, 4), l + w});
  };
  switch (rule) {
    case CantorRule::MiddleThird: return middle_third();
    case CantorRule::SVC: {
      const Rational half_gap = Rational::inverse_power(4, node.level + 1) / Rational(2);
      const Rational mid = l + w / Rational(2);
      return {ClosedInterval{l, mid - half_gap}, ClosedInterval{mid + half_gap, l + w}};
    }
    case CantorRule::NonE: return non_e();
    case CantorRule::NonEInterior:
      if (node.level == 1 && node.position == 1) return non_e();
      return middle_third();
  }
  throw std::logic_error("unhandled Cantor rule");
}

CantorExpansion expand(CantorRule rule, std::size_t depth) {
  if (depth > kCantorDepthGuard)
    throw std::invalid_argument("Cantor expansion depth " + std::to_string(depth) + " exceeds the guard " +
                                std::to_string(kCantorDepthGuard));
  CantorExpansion out;
  out.depth = depth;
  out.levels.push_back({root_node(rule)});
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<CantorNode> next;
    next.reserve(2 * out.levels[k].size());
    for (const auto& node : out.levels[k]) {
      out.gaps.insert(out.gaps.end(), node.gaps.begin(), node.gaps.end());
      next.push_back(child_node(rule, node, 0));
      next.push_back(child_node(rule, node, 1));
    }
    out.levels.push_back(std::move(next));
  }
  std::sort(out.gaps.begin(), out.gaps.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

bool has_property_E(CantorRule rule, std::size_t depth) {
  if (depth == 0) return true;
  const CantorExpansion e = expand(rule, depth - 1);
  for (const auto& level : e.levels)
    for (const auto& node : level) {
      const auto [l, r] = cantor_children(rule, node);
      if (l.lo != node.interval.lo || r.hi != node.interval.hi) return false;
    }
  return true;
}

GapOrderAnalysis analyze_gap_order(CantorRule rule, std::size_t depth) {
  GapOrderAnalysis a;
  if (rule_has_E(rule)) {
    a.dense = Tri::True;
    a.has_min = Tri::False;
    a.has_max = Tri::False;
    return a;
  }
  const CantorExpansion e = expand(rule, depth);
  if (!e.gaps.empty() && e.gaps.front().lo == Rational(0)) {
    a.has_min = Tri::True;
    a.min_gap = e.gaps.front();
  }
  if (!e.gaps.empty() && e.gaps.back().hi == Rational(1)) {
    a.has_max = Tri::True;
    a.max_gap = e.gaps.back();
  }
  for (std::size_t i = 0; i + 1 < e.gaps.size(); ++i)
    if (e.gaps[i].hi == e.gaps[i + 1].lo) {
      a.successor_witness = std::make_pair(e.gaps[i], e.gaps[i + 1]);
      a.dense = Tri::False;
      break;
    }
  return a;
}

const CantorGenerator::Level& CantorGenerator::level(std::size_t k) const {
  if (k >= kCantorDepthGuard) throw std::out_of_range("Cantor level beyond the depth guard");
  while (levels_.size() <= k) {
    Level next;
    if (levels_.empty()) {
      next.nodes.push_back(root_node(rule_));
    } else {
      const Level& prev = levels_.back();
      next.first_index = prev.first_index + prev.gap_count;
      next.nodes.reserve(2 * prev.nodes.size());
      for (const auto& node : prev.nodes) {
        next.nodes.push_back(child_node(rule_, node, 0));
        next.nodes.push_back(child_node(rule_, node, 1));
      }
    }
    next.removed = Rational(0);
    for (const auto& node : next.nodes) {
      next.first_gap.push_back(next.first_index + next.gap_count);
      next.gap_count += node.gaps.size();
      for (const auto& g : node.gaps) next.removed = next.removed + (g.hi - g.lo);
    }
    levels_.push_back(std::move(next));
  }
  return levels_[k];
}

Piece CantorGenerator::piece_at(std::uint64_t n) const {
  std::lock_guard lock(mutex_);
  for (std::size_t k = 0;; ++k) {
    const Level& lv = level(k);
    if (n >= lv.first_index + lv.gap_count) continue;
    const auto it = std::upper_bound(lv.first_gap.begin(), lv.first_gap.end(), n) - 1;
    const CantorNode& node = lv.nodes[static_cast<std::size_t>(it - lv.first_gap.begin())];
    const ClosedInterval& g = node.gaps[n - *it];
    return {g.lo, g.hi, PieceKind::Product};
  }
}

Rational CantorGenerator::tail_length_bound(std::uint64_t n) const {
  Rational remaining = rule_ == CantorRule::SVC ? Rational(1, 2) : Rational(1);
  std::lock_guard lock(mutex_);
  for (std::size_t k = 0;; ++k) {
    const Level& lv = level(k);
    if (n >= lv.first_index + lv.gap_count) {
      remaining = remaining - lv.removed;
      continue;
    }
    for (std::size_t i = 0; i < lv.nodes.size(); ++i)
      for (std::size_t j = 0; j < lv.nodes[i].gaps.size(); ++j)
        if (lv.first_gap[i] + j < n) remaining = remaining - (lv.nodes[i].gaps[j].hi - lv.nodes[i].gaps[j].lo);
    return remaining;
  }
}

Location CantorGenerator::locate(const Rational& q, std::size_t depth) const {
  if (q == Rational(0) || q == Rational(1)) return Location::idempotent();
  std::lock_guard lock(mutex_);
  std::uint64_t position = 0;
  for (std::size_t k = 0; k < std::min(depth, kCantorDepthGuard); ++k) {
    const Level& lv = level(k);
    const CantorNode& node = lv.nodes[position];
    for (std::size_t j = 0; j < node.gaps.size(); ++j) {
      const ClosedInterval& g = node.gaps[j];
      if (g.lo < q && q < g.hi) return Location::in_piece({g.lo, g.hi, PieceKind::Product}, lv.first_gap[position] + j);
    }
    const auto [l, r] = cantor_children(rule_, node);
    if (q == l.lo || q == l.hi || q == r.lo || q == r.hi) return Location::idempotent();
    position = 2 * position + (q < l.hi ? 0 : 1);
  }
  return Location::unknown();
}

SignatureShape CantorGenerator::shape(std::size_t depth) const {
  const GapOrderAnalysis a = analyze_gap_order(rule_, std::clamp<std::size_t>(depth, 1, kCantorDepthGuard));
  SignatureShape s;
  s.uniform_label = Label::P;
  s.has_min = a.has_min;
  s.has_max = a.has_max;
  if (a.min_gap) s.min_entry = SignatureEntry{a.min_gap->lo, a.min_gap->hi, Label::P};
  if (a.max_gap) s.max_entry = SignatureEntry{a.max_gap->lo, a.max_gap->hi, Label::P};
  if (a.successor_witness)
    s.successor_pair = std::make_pair(SignatureEntry{a.successor_witness->first.lo, a.successor_witness->first.hi, Label::P},
                                      SignatureEntry{a.successor_witness->second.lo, a.successor_witness->second.hi, Label::P});
  if (a.dense == Tri::True) s.dense_no_endpoints = Tri::True;
  else if (a.dense == Tri::False || a.has_min == Tri::True || a.has_max == Tri::True) s.dense_no_endpoints = Tri::False;
  return s;
}

TNorm build_tnorm_A(CantorRule rule, std::size_t locate_depth) {
  return TNorm(std::make_shared<CantorGenerator>(rule), locate_depth);
}

std::string dump_cantor(CantorRule rule, std::size_t depth) {
  const CantorExpansion e = expand(rule, depth);
  const GapOrderAnalysis a = analyze_gap_order(rule, depth);
  std::ostringstream os;
  os << "gaps depth=" << depth << " count=" << e.gaps.size() << '\n';
  for (const auto& g : e.gaps) os << gap_string(g) << '\n';
  os << "property_E: " << (has_property_E(rule, depth) ? "true" : "false") << '\n';
  os << "dense: " << tri_word(a.dense) << '\n';
  os << "has_min: " << tri_word(a.has_min);
  if (a.min_gap) os << ' ' << gap_string(*a.min_gap);
  os << "\nhas_max: " << tri_word(a.has_max);
  if (a.max_gap) os << ' ' << gap_string(*a.max_gap);
  os << "\nsuccessor: ";
  if (a.successor_witness)
    os << gap_string(a.successor_witness->first) << ' ' << gap_string(a.successor_witness->second) << '\n';
  else
    os << "none\n";
  return os.str();
}

}  // namespace ctn
