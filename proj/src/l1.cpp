#include "ctn/l1.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ctn/enumeration.hpp"
#include "ctn/signature.hpp"

namespace ctn {

namespace {

struct Placement {
  enum class Kind { Entry, None, Unresolved } kind = Kind::None;
  SignatureEntry entry;
};

// Entry whose (open, or closed for M) interval holds q in a complete signature.
Placement place_in_signature(const Signature& sig, const Rational& q) {
  for (const auto& e : sig.entries) {
    if (e.label == Label::M ? e.contains_closed(q) : e.contains_open(q)) return {Placement::Kind::Entry, e};
    if (q < e.lo) break;
  }
  return {};
}

Placement place_lazy(const TNorm& t, const Rational& q) {
  const Location loc = t.locate(q);
  switch (loc.kind) {
    case Location::Kind::InPiece:
      return {Placement::Kind::Entry, {loc.piece->lo, loc.piece->hi, kind_label(loc.piece->kind)}};
    case Location::Kind::Unknown: return {Placement::Kind::Unresolved, {}};
    case Location::Kind::Idempotent: break;
  }
  const MMembership m = t.generator().m_membership(q, t.locate_depth());
  if (m.member == Tri::True) return {Placement::Kind::Entry, *m.entry};
  if (m.member == Tri::Unknown) return {Placement::Kind::Unresolved, {}};
  return {};
}

void push_label(L1Structure& s, Label label, std::uint64_t n) {
  switch (label) {
    case Label::P: s.rp.push_back(n); break;
    case Label::L: s.rl.push_back(n); break;
    case Label::M: s.rm.push_back(n); break;
  }
}

// Active indices with their values, in index order.
std::vector<std::pair<std::uint64_t, Rational>> actives(const L1Structure& s) {
  std::vector<std::uint64_t> idx;
  idx.insert(idx.end(), s.rp.begin(), s.rp.end());
  idx.insert(idx.end(), s.rl.begin(), s.rl.end());
  idx.insert(idx.end(), s.rm.begin(), s.rm.end());
  std::sort(idx.begin(), idx.end());
  std::vector<std::pair<std::uint64_t, Rational>> out;
  for (auto n : idx) out.emplace_back(n, enumerate_rationals(n).value());
  return out;
}

void fill_less_by_value(L1Structure& s) {
  const auto act = actives(s);
  for (const auto& [m, qm] : act)
    for (const auto& [n, qn] : act)
      if (qm < qn) s.less.emplace_back(m, n);
  std::sort(s.less.begin(), s.less.end());
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto n : v) out += " " + std::to_string(n);
  return out;
}

}  // namespace

L1Structure theta(const TNorm& t, std::uint64_t size) {
  if (size == 0) throw std::invalid_argument("theta needs size >= 1");
  L1Structure s;
  s.size = size;
  std::optional<Signature> sig;
  if (t.is_finite()) sig = compute_signature(t);

  std::map<std::pair<Rational, Rational>, std::uint64_t> least;  // per entry
  std::vector<std::pair<std::uint64_t, SignatureEntry>> active;
  RationalSequence seq;
  for (std::uint64_t n = 0; n < size; ++n, seq.advance()) {
    const Rational& q = seq.value();
    const Placement p = sig ? place_in_signature(*sig, q) : place_lazy(t, q);
    if (p.kind == Placement::Kind::Unresolved) {
      s.qualified = true;
      continue;
    }
    if (p.kind == Placement::Kind::None) continue;
    const auto key = std::make_pair(p.entry.lo, p.entry.hi);
    auto it = least.find(key);
    if (it == least.end())
      it = least.emplace(key, min_index_in(UnitRational(p.entry.lo), UnitRational(p.entry.hi), p.entry.label == Label::M))
               .first;
    if (it->second != n) continue;
    push_label(s, p.entry.label, n);
    active.emplace_back(n, p.entry);
  }
  for (const auto& [m, em] : active)
    for (const auto& [n, en] : active)
      if (m != n && prec(em, en)) s.less.emplace_back(m, n);
  std::sort(s.less.begin(), s.less.end());
  return s;
}

LemmaTheta theta_via_lemma(const TNorm& t, std::uint64_t size, std::uint64_t power_bound,
                           std::uint64_t denominator_bound) {
  if (!t.is_finite()) throw std::logic_error("theta_via_lemma needs a finite presentation");
  if (size == 0 || denominator_bound == 0) throw std::invalid_argument("theta_via_lemma needs positive bounds");
  LemmaTheta out;
  L1Structure& s = out.structure;
  s.size = size;

  // The Farey points of order D with idempotency flags.
  std::vector<Rational> farey;
  for (std::uint64_t d = 1; d <= denominator_bound; ++d)
    for (std::uint64_t p = 0; p <= d; ++p)
      if (std::gcd(p, d) == 1) farey.emplace_back(static_cast<long long>(p), static_cast<long long>(d));
  std::sort(farey.begin(), farey.end());
  std::vector<bool> idem(farey.size());
  std::vector<std::size_t> non_idem_prefix(farey.size() + 1, 0);
  for (std::size_t i = 0; i < farey.size(); ++i) {
    idem[i] = is_idempotent(t, UnitRational(farey[i])) == Tri::True;
    non_idem_prefix[i + 1] = non_idem_prefix[i] + (idem[i] ? 0 : 1);
  }
  // A piece without a scanned point inside is invisible to the scans.
  for (const auto& piece : t.finite().pieces()) {
    auto it = std::upper_bound(farey.begin(), farey.end(), piece.lo);
    if (it == farey.end() || !(*it < piece.hi))
      out.indeterminate.push_back("denominator bound " + std::to_string(denominator_bound) + " misses piece " +
                                  interval_string(piece.lo, piece.hi));
  }
  // Positions strictly between two values: [first, last).
  const auto between = [&](const Rational& a, const Rational& b) {
    const Rational& lo = a < b ? a : b;
    const Rational& hi = a < b ? b : a;
    const auto first = std::upper_bound(farey.begin(), farey.end(), lo) - farey.begin();
    const auto last = std::lower_bound(farey.begin(), farey.end(), hi) - farey.begin();
    return std::make_pair(static_cast<std::size_t>(first), std::max(static_cast<std::size_t>(first),
                                                                    static_cast<std::size_t>(last)));
  };

  std::vector<UnitRational> q;
  for (RationalSequence seq; seq.index() < size; seq.advance()) q.push_back(seq.value());

  for (std::uint64_t n = 0; n < size; ++n) {
    const Rational& qn = q[n];
    if (is_idempotent(t, q[n]) == Tri::True) {
      // (b): an idempotent scanned neighbour on either side
      const auto lo_pos = std::lower_bound(farey.begin(), farey.end(), qn) - farey.begin();
      const auto hi_pos = std::upper_bound(farey.begin(), farey.end(), qn) - farey.begin();
      const bool left = lo_pos > 0 && idem[lo_pos - 1];
      const bool right = static_cast<std::size_t>(hi_pos) < farey.size() && idem[hi_pos];
      if (!left && !right) continue;
      // (c): a non-idempotent scanned point separates q_n from every earlier q_i
      bool separated = true;
      for (std::uint64_t i = 0; i < n && separated; ++i) {
        const auto [first, last] = between(q[i], qn);
        if (first == last) {
          out.indeterminate.push_back("denominator bound " + std::to_string(denominator_bound) +
                                      " has no point between q_" + std::to_string(i) + " and q_" + std::to_string(n));
          separated = false;
        } else {
          separated = non_idem_prefix[last] - non_idem_prefix[first] > 0;
        }
      }
      if (separated) s.rm.push_back(n);
      continue;
    }
    bool min_with_earlier = true;
    for (std::uint64_t i = 0; i < n && min_with_earlier; ++i)
      min_with_earlier = eval(t, q[i], q[n]).value() == min(q[i].value(), qn);
    if (!min_with_earlier) continue;
    const PowerIdempotency pw = is_eventually_idempotent_power(t, q[n], power_bound);
    if (pw.verdict == PowerIdempotency::Verdict::No) s.rp.push_back(n);
    else if (pw.verdict == PowerIdempotency::Verdict::Yes) s.rl.push_back(n);
    else out.indeterminate.push_back("power condition unresolved for q_" + std::to_string(n));
  }
  fill_less_by_value(s);
  return out;
}

bool l1_iso_finite(const L1Structure& a, const L1Structure& b) {
  if (a.size != b.size) throw std::invalid_argument("l1_iso_finite needs structures of equal size");
  if (a.qualified || b.qualified) throw std::invalid_argument("l1_iso_finite rejects qualified structures");
  const auto canonical = [](const L1Structure& s) {
    std::map<std::uint64_t, char> label;
    for (auto n : s.rp) label[n] = 'P';
    for (auto n : s.rl) label[n] = 'L';
    for (auto n : s.rm) label[n] = 'M';
    // rank of n = number of active predecessors under less
    std::map<std::uint64_t, std::size_t> rank;
    for (const auto& [n, _] : label) rank[n] = 0;
    for (const auto& [m, n] : s.less) ++rank[n];
    std::string seq(label.size(), '?');
    for (const auto& [n, r] : rank) {
      if (r >= seq.size() || seq[r] != '?') throw std::invalid_argument("less is not a linear order on the active set");
      seq[r] = label[n];
    }
    return std::make_pair(seq, s.size - label.size());
  };
  return canonical(a) == canonical(b);
}

SubbasisPredicates subbasis_predicates(const TNorm& t, std::uint64_t m, std::uint64_t n) {
  if (!t.is_finite()) throw std::logic_error("subbasis_predicates needs a finite presentation");
  const UnitRational qm = enumerate_rationals(m);
  const UnitRational qn = enumerate_rationals(n);
  SubbasisPredicates p;
  p.v_qn = is_idempotent(t, qn) == Tri::True;
  p.u_mn = eval(t, qm, qn).value() == min(qm.value(), qn.value());
  p.w_mn = qm.value() < qn.value();
  return p;
}

std::string l1_invariant_violation(const L1Structure& s) {
  std::set<std::uint64_t> seen;
  for (const auto* rel : {&s.rp, &s.rl, &s.rm})
    for (auto n : *rel) {
      if (n >= s.size) return "index " + std::to_string(n) + " out of range";
      if (!seen.insert(n).second) return "index " + std::to_string(n) + " carries two labels";
    }
  std::set<std::pair<std::uint64_t, std::uint64_t>> rel(s.less.begin(), s.less.end());
  for (const auto& [m, n] : s.less) {
    if (!seen.count(m) || !seen.count(n)) return "less touches an inactive index";
    if (m == n) return "less is reflexive at " + std::to_string(m);
    if (rel.count({n, m})) return "less is symmetric on " + std::to_string(m) + ", " + std::to_string(n);
    if (!(enumerate_rationals(m).value() < enumerate_rationals(n).value()))
      return "less " + std::to_string(m) + " " + std::to_string(n) + " disagrees with the enumeration values";
  }
  for (auto m : seen)
    for (auto n : seen)
      if (m != n && !rel.count({m, n}) && !rel.count({n, m}))
        return "less is not total on " + std::to_string(m) + ", " + std::to_string(n);
  for (const auto& [a, b] : s.less)
    for (const auto& [c, d] : s.less)
      if (b == c && !rel.count({a, d})) return "less is not transitive";
  return {};
}

std::string dump_l1(const L1Structure& s) {
  std::ostringstream os;
  os << "l1 v1 n=" << s.size << " qualified=" << (s.qualified ? "true" : "false") << '\n';
  os << "rp:" << join(s.rp) << '\n';
  os << "rl:" << join(s.rl) << '\n';
  os << "rm:" << join(s.rm) << '\n';
  for (const auto& [m, n] : s.less) os << "less: " << m << ' ' << n << '\n';
  return os.str();
}

}  // namespace ctn
