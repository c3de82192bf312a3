#include "freecert/rational.hpp"

#include <cmath>
#include <sstream>

namespace freecert {

long padic_valuation(BigInt n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (n < 0) n = -n;
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long padic_valuation(const Rational& q, const BigInt& p) {
  if (q == 0) throw std::invalid_argument("valuation of zero");
  return padic_valuation(num(q), p) - padic_valuation(den(q), p);
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

double padic_abs(const Rational& q, const BigInt& p) {
  if (q == 0) return 0.0;
  long v = padic_valuation(q, p);
  return std::pow(p.convert_to<double>(), static_cast<double>(-v));
}

std::string to_string(const BigInt& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << num(q) << "/" << den(q);
  return os.str();
}

}  // namespace freecert
