#include "ctn/enumeration.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ctn {

namespace {

constexpr std::uint64_t kSieveLimit = 1u << 20;
// Largest denominator whose index still fits in 64 bits with room to spare.
constexpr std::uint64_t kMaxDenominator = 0xffffffffULL;

const std::vector<std::uint64_t>& small_totient_sums() {
  static const std::vector<std::uint64_t> sums = [] {
    std::vector<std::uint64_t> phi(kSieveLimit + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::uint64_t p = 2; p <= kSieveLimit; ++p) {
      if (phi[p] != p) continue;
      for (std::uint64_t k = p; k <= kSieveLimit; k += p) phi[k] -= phi[k] / p;
    }
    std::vector<std::uint64_t> prefix(kSieveLimit + 1, 0);
    for (std::uint64_t k = 1; k <= kSieveLimit; ++k) prefix[k] = prefix[k - 1] + phi[k];
    return prefix;
  }();
  return sums;
}

std::uint64_t totient_sum_large(std::uint64_t n, std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (n <= kSieveLimit) return small_totient_sums()[n];
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // Φ(n) = n(n+1)/2 − Σ_{d=2}^{n} Φ(⌊n/d⌋), grouping equal quotients.
  auto total = static_cast<unsigned __int128>(n) * (n + 1) / 2;
  for (std::uint64_t d = 2; d <= n;) {
    const std::uint64_t quotient = n / d;
    const std::uint64_t last = n / quotient;
    total -= static_cast<unsigned __int128>(last - d + 1) * totient_sum_large(quotient, memo);
    d = last + 1;
  }
  const auto result = static_cast<std::uint64_t>(total);
  memo.emplace(n, result);
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t d) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    primes.push_back(p);
    while (d % p == 0) d /= p;
  }
  if (d > 1) primes.push_back(d);
  return primes;
}

// #{1 ≤ j ≤ p : gcd(j, d) = 1} by inclusion–exclusion over the primes of d.
std::uint64_t coprime_count(std::uint64_t p, const std::vector<std::uint64_t>& primes) {
  std::int64_t count = 0;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t prod = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        prod *= primes[i];
        ++bits;
      }
    }
    const auto term = static_cast<std::int64_t>(p / prod);
    count += (bits % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(count);
}

// Number of enumeration slots used by denominators 2..d.
std::uint64_t slots_through(std::uint64_t d) { return totient_sum(d) - 1; }

std::uint64_t to_u64(const mpz_class& z) {
  if (z < 0 || z > mpz_class(std::to_string(kMaxDenominator)))
    throw std::overflow_error("denominator too large to index: " + z.get_str());
  return z.get_ui();
}

}  // namespace

std::uint64_t totient_sum(std::uint64_t n) {
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  return totient_sum_large(n, memo);
}

UnitRational enumerate_rationals(std::uint64_t n) {
  if (n < 2) return {Rational(static_cast<long long>(n))};
  const std::uint64_t slot = n - 2;
  std::uint64_t hi = 2;
  while (slots_through(hi) <= slot) {
    if (hi > kMaxDenominator / 2) throw std::overflow_error("enumeration index too large");
    hi *= 2;
  }
  std::uint64_t lo = 2;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (slots_through(mid) > slot) hi = mid;
    else lo = mid + 1;
  }
  const std::uint64_t den = lo;
  const std::uint64_t rank = slot - slots_through(den - 1);  // 0-based among numerators of den
  const auto primes = prime_factors(den);
  std::uint64_t a = 1, b = den - 1;
  while (a < b) {
    const std::uint64_t mid = a + (b - a) / 2;
    if (coprime_count(mid, primes) >= rank + 1) b = mid;
    else a = mid + 1;
  }
  return {Rational(mpz_class(static_cast<unsigned long>(a)), mpz_class(static_cast<unsigned long>(den)))};
}

std::uint64_t rational_index(const UnitRational& q) {
  const Rational& v = q.value();
  const std::uint64_t den = to_u64(v.denominator());
  const std::uint64_t num = to_u64(v.numerator());
  if (den == 1) return num;
  return 2 + slots_through(den - 1) + coprime_count(num - 1, prime_factors(den));
}

std::uint64_t min_index_in(const UnitRational& lo_u, const UnitRational& hi_u, bool closed) {
  const Rational& lo = lo_u;
  const Rational& hi = hi_u;
  if (!(lo < hi)) throw std::invalid_argument("min_index_in: empty interval");
  if (closed && lo == Rational(0)) return 0;
  if (closed && hi == Rational(1)) return 1;

  // Stern–Brocot descent with batched steps. The fraction of least
  // denominator in an interval is unique once the denominator exceeds 1,
  // and the enumeration orders by denominator first, so that fraction is
  // the one with the least index.
  // p/q against lo and hi by cross-multiplication (all denominators positive)
  const auto too_small = [&](const mpz_class& p, const mpz_class& q) {
    const int c = cmp(p * lo.denominator(), lo.numerator() * q);
    return closed ? c < 0 : c <= 0;
  };
  const auto too_big = [&](const mpz_class& p, const mpz_class& q) {
    const int c = cmp(p * hi.denominator(), hi.numerator() * q);
    return closed ? c > 0 : c >= 0;
  };
  const auto least_k = [&](const mpz_class& num, const mpz_class& den) {
    // least k ≥ 1 with k·den ≥ num (closed) or k·den > num (open)
    mpz_class k;
    if (closed) mpz_cdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else {
      mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      k += 1;
    }
    return k < 1 ? mpz_class(1) : k;
  };

  const mpz_class& lp = lo.numerator();
  const mpz_class& lq = lo.denominator();
  const mpz_class& hp = hi.numerator();
  const mpz_class& hq = hi.denominator();
  mpz_class a = 0, b = 1, c = 1, d = 1;  // left a/b, right c/d
  for (;;) {
    const mpz_class mp = a + c, mq = b + d;
    if (!too_small(mp, mq) && !too_big(mp, mq))
      return rational_index(UnitRational(Rational(mp, mq)));
    if (too_small(mp, mq)) {
      // advance the left bound toward c/d: least k with (a+kc)/(b+kd) past lo
      const mpz_class k = least_k(lp * b - lq * a, lq * c - lp * d);
      const mpz_class xp = a + k * c, xq = b + k * d;
      if (!too_big(xp, xq)) return rational_index(UnitRational(Rational(xp, xq)));
      a += (k - 1) * c;
      b += (k - 1) * d;
      c = xp;
      d = xq;
    } else {
      // symmetric: least k with (c+ka)/(d+kb) below hi
      const mpz_class k = least_k(hq * c - hp * d, hp * b - hq * a);
      const mpz_class xp = c + k * a, xq = d + k * b;
      if (!too_small(xp, xq)) return rational_index(UnitRational(Rational(xp, xq)));
      c += (k - 1) * a;
      d += (k - 1) * b;
      a = xp;
      b = xq;
    }
  }
}

RationalSequence::RationalSequence(std::uint64_t start) : index_(start), value_(enumerate_rationals(start)) {
  num_ = value_.value().numerator().get_ui();
  den_ = value_.value().denominator().get_ui();
}

void RationalSequence::advance() {
  ++index_;
  if (den_ == 1 && num_ == 0) {
    num_ = 1;
  } else if (den_ == 1) {
    den_ = 2;
    num_ = 1;
  } else {
    do {
      ++num_;
    } while (num_ < den_ && std::gcd(num_, den_) != 1);
    if (num_ >= den_) {
      ++den_;
      num_ = 1;
    }
  }
  value_ = UnitRational(Rational(mpz_class(static_cast<unsigned long>(num_)),
                                 mpz_class(static_cast<unsigned long>(den_))));
}

}  // namespace ctn
