#ifndef FREECERT_RATIONAL_HPP
#define FREECERT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace freecert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// p-adic valuation of a nonzero integer.
long padic_valuation(BigInt n, const BigInt& p);

// p-adic valuation of a nonzero rational: v(num) - v(den).
long padic_valuation(const Rational& q, const BigInt& p);

BigInt pow_int(const BigInt& base, unsigned long e);

// |q|_p = p^{-v_p(q)}, as a double; 0 for q = 0.
double padic_abs(const Rational& q, const BigInt& p);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

}  // namespace freecert

#endif  // FREECERT_RATIONAL_HPP
