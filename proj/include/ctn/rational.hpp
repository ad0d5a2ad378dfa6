#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ctn {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_class. Every value that flows through the library is
/// one of these; there is no floating point anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v);

  /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// "p/q" in lowest terms; integers print without "/1".
  std::string str() const;

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_integer() const { return denominator() == 1; }
  mpz_class floor() const;
  mpz_class ceil() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// 1 / base^exp for a positive integer base.
  static Rational inverse_power(unsigned long base, unsigned long exp);

 private:
  mpq_class value_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational known to lie in [0,1].
class UnitRational {
 public:
  UnitRational() = default;
  /// Throws std::domain_error when the value is outside [0,1].
  UnitRational(Rational v);  // NOLINT(google-explicit-constructor)
  UnitRational(long long num, long long den) : UnitRational(Rational(num, den)) {}

  static UnitRational parse(std::string_view text) { return {Rational::parse(text)}; }

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT(google-explicit-constructor)
  std::string str() const { return value_.str(); }

  friend bool operator==(const UnitRational& a, const UnitRational& b) = default;
  friend auto operator<=>(const UnitRational& a, const UnitRational& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const UnitRational& r) { return os << r.value(); }

}  // namespace ctn
