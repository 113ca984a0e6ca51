#pragma once

// Exact rational numbers on top of GMP's mpq_class.  Values are always kept
// in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace orbiq {

class Ratio {
 public:
  Ratio() = default;
  Ratio(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Ratio(int n) : v_(static_cast<long>(n)) {}  // NOLINT
  Ratio(long num, long den);
  Ratio(const mpz_class& num, const mpz_class& den);
  explicit Ratio(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on bad input or q = 0.
  static Ratio parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  /// Smallest integer >= this value.
  mpz_class ceil() const;

  /// Canonical "p/q" text, "/q" omitted when q = 1.
  std::string str() const;

  Ratio operator-() const { return Ratio(mpq_class(-v_)); }
  Ratio& operator+=(const Ratio& o) { v_ += o.v_; return *this; }
  Ratio& operator-=(const Ratio& o) { v_ -= o.v_; return *this; }
  Ratio& operator*=(const Ratio& o) { v_ *= o.v_; return *this; }
  Ratio& operator/=(const Ratio& o);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

Ratio pow(const Ratio& base, unsigned exponent);
Ratio binomial(long n, long k);
Ratio factorial(long n);

// Generic ring helpers shared with MPoly and QSeries so that matrix code can
// be written once.
inline bool is_zero(const Ratio& r) { return r.is_zero(); }
inline Ratio zero_like(const Ratio&) { return Ratio(0); }
inline Ratio one_like(const Ratio&) { return Ratio(1); }
inline Ratio exact_div(const Ratio& a, const Ratio& b) { return a / b; }

}  // namespace orbiq
