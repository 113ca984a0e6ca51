#include "ratio.hpp"

#include <cctype>
#include <stdexcept>

namespace orbiq {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(text, 10);
}

}  // namespace

Ratio::Ratio(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_.canonicalize();
}

Ratio::Ratio(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_.canonicalize();
}

Ratio Ratio::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(parse_integer(text), mpz_class(1));
  auto den = text.substr(slash + 1);
  if (!den.empty() && den[0] == '-') throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
  return Ratio(parse_integer(text.substr(0, slash)), parse_integer(den));
}

mpz_class Ratio::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Ratio::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Ratio& Ratio::operator/=(const Ratio& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Ratio pow(const Ratio& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Ratio(n, d);
}

Ratio binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Ratio(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Ratio(r, 1);
}

Ratio factorial(long n) {
  if (n < 0) throw std::invalid_argument("negative factorial");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Ratio(r, 1);
}

}  // namespace orbiq
