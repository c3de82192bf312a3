#ifndef FREECERT_FIELD_HPP
#define FREECERT_FIELD_HPP

#include <complex>
#include <cstdint>
#include <string>

#include "freecert/outcome.hpp"
#include "freecert/rational.hpp"

namespace freecert {

enum class FieldKind { Real, Complex, Padic };

const char* field_kind_name(FieldKind k);

bool is_prime(std::uint64_t n);

// Describes which local field scalars live in. For Q_p, `precision` is the
// number of significant p-adic digits tracked per scalar.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Real;
  long p = 0;
  int precision = 0;
  double eta = 1e-9;

  static FieldDescriptor real(double eta = 1e-9) { return {FieldKind::Real, 0, 0, eta}; }
  static FieldDescriptor complex_field(double eta = 1e-9) {
    return {FieldKind::Complex, 0, 0, eta};
  }
  static FieldDescriptor padic(long p, int precision) {
    return {FieldKind::Padic, p, precision, 0.0};
  }

  bool archimedean() const { return kind != FieldKind::Padic; }
  void validate() const;  // throws std::invalid_argument on a malformed descriptor
  bool operator==(const FieldDescriptor& o) const {
    return kind == o.kind && p == o.p && precision == o.precision;
  }
};

// A Q_p scalar in one of three states:
//   Zero     -- the exact zero element (valuation +infinity by convention)
//   Regular  -- p^v * u with u a unit mod p^N, of which `digits` are certified
//   Below    -- only |x| <= p^{-bound} is known (all tracked digits cancelled)
// Regular arithmetic is exact on representatives modulo p^N; additions track
// the digits lost to valuation cancellation.
class PadicScalar {
 public:
  enum class State { Zero, Regular, Below };

  PadicScalar() = default;

  static PadicScalar zero(long p, int N);
  static PadicScalar from_rational(const Rational& q, long p, int N);
  static PadicScalar from_int(std::int64_t n, long p, int N) {
    return from_rational(Rational(n), p, N);
  }
  static PadicScalar from_parts(long p, int N, long valuation, BigInt unit, int digits);
  static PadicScalar below(long p, int N, long bound);  // |x| <= p^{-bound}

  State state() const { return state_; }
  bool is_zero() const { return state_ == State::Zero; }
  bool is_below() const { return state_ == State::Below; }
  bool is_regular() const { return state_ == State::Regular; }

  long p() const { return p_; }
  int precision() const { return N_; }
  long valuation() const;       // Regular only
  const BigInt& unit() const;   // Regular only, in [1, p^N), not divisible by p
  int digits() const;           // Regular only
  long below_bound() const;     // Below only

  // |x|; total on Zero/Regular, throws PrecisionExhausted on Below.
  double abs() const;
  double abs_upper() const;  // total: p^{-bound} for Below
  double abs_lower() const;  // 0 for Zero and Below

  PadicScalar operator-() const;
  PadicScalar operator+(const PadicScalar& o) const;
  PadicScalar operator-(const PadicScalar& o) const { return *this + (-o); }
  PadicScalar operator*(const PadicScalar& o) const;
  PadicScalar inv() const;

  // Indistinguishable at the tracked precision.
  bool eq(const PadicScalar& o) const;

  // The exact rational p^v * u represented by the tracked digits.
  Rational to_rational() const;

  std::string str() const;

 private:
  State state_ = State::Zero;
  long p_ = 2;
  int N_ = 1;
  long v_ = 0;       // Regular: valuation; Below: bound exponent
  BigInt unit_ = 0;  // Regular only
  int digits_ = 0;   // Regular only

  void check_compatible(const PadicScalar& o) const;
};

BigInt mod_inverse(const BigInt& a, const BigInt& m);

// --- spec surface: abs_value / field_arithmetic / rational_embed ---

inline double abs_value(double x) { return std::abs(x); }
inline double abs_value(const std::complex<double>& x) { return std::abs(x); }
inline double abs_value(const PadicScalar& x) { return x.abs(); }
inline double abs_value(const Rational& q) { return std::abs(to_double(q)); }

enum class RingOp { Add, Mul, Inv };

// Checked arithmetic with the field module's error semantics: Inv of zero
// throws DivisionByZero; a p-adic addition whose result drops below the
// tracked precision throws PrecisionExhausted. `digits_lost`, when non-null,
// receives the number of p-adic digits lost to cancellation (0 for floats).
double field_arithmetic(double x, double y, RingOp op);
std::complex<double> field_arithmetic(const std::complex<double>& x,
                                      const std::complex<double>& y, RingOp op);
PadicScalar field_arithmetic(const PadicScalar& x, const PadicScalar& y, RingOp op,
                             int* digits_lost = nullptr);
Rational field_arithmetic(const Rational& x, const Rational& y, RingOp op);

double rational_embed_real(const Rational& q);
std::complex<double> rational_embed_complex(const Rational& q);
PadicScalar rational_embed_padic(const Rational& q, const FieldDescriptor& field);

}  // namespace freecert

#endif  // FREECERT_FIELD_HPP
