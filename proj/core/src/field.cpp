#include "freecert/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace freecert {

const char* field_kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Real: return "real";
    case FieldKind::Complex: return "complex";
    case FieldKind::Padic: return "padic";
  }
  return "?";
}

const char* why_name(Why w) {
  switch (w) {
    case Why::NotContracting: return "NotContracting";
    case Why::NotProximal: return "NotProximal";
    case Why::NoConvergence: return "NoConvergence";
    case Why::RegimeViolation: return "RegimeViolation";
    case Why::NotVeryProximal: return "NotVeryProximal";
    case Why::GapViolation: return "GapViolation";
    case Why::AttractorCollision: return "AttractorCollision";
    case Why::NoWitness: return "NoWitness";
    case Why::SearchFailed: return "SearchFailed";
    case Why::BudgetExceeded: return "BudgetExceeded";
    case Why::DiscOverlap: return "DiscOverlap";
    case Why::FixedPointCollision: return "FixedPointCollision";
    case Why::NotContractive: return "NotContractive";
    case Why::ParabolicElement: return "ParabolicElement";
    case Why::MissingFreenessPrerequisite: return "MissingFreenessPrerequisite";
    case Why::CoverGap: return "CoverGap";
    case Why::StateExplosion: return "StateExplosion";
    case Why::InsufficientData: return "InsufficientData";
    case Why::VerificationFailed: return "VerificationFailed";
    case Why::RootIsolationFailure: return "RootIsolationFailure";
    case Why::PrecisionEscalationNeeded: return "PrecisionEscalationNeeded";
    case Why::InputError: return "InputError";
  }
  return "?";
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witnesses for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void FieldDescriptor::validate() const {
  if (kind == FieldKind::Padic) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("p-adic descriptor: p must be prime");
    if (precision < 1) throw std::invalid_argument("p-adic descriptor: precision >= 1 required");
  } else {
    if (eta < 0) throw std::invalid_argument("float margin eta must be >= 0");
  }
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  // extended Euclid
  BigInt old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw DivisionByZero();
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

// --- PadicScalar ---

PadicScalar PadicScalar::zero(long p, int N) {
  PadicScalar x;
  x.state_ = State::Zero;
  x.p_ = p;
  x.N_ = N;
  return x;
}

PadicScalar PadicScalar::below(long p, int N, long bound) {
  PadicScalar x;
  x.state_ = State::Below;
  x.p_ = p;
  x.N_ = N;
  x.v_ = bound;
  return x;
}

PadicScalar PadicScalar::from_parts(long p, int N, long valuation, BigInt unit, int digits) {
  BigInt pN = pow_int(BigInt(p), static_cast<unsigned long>(N));
  unit %= pN;
  if (unit < 0) unit += pN;
  if (unit == 0) throw std::invalid_argument("p-adic unit must be nonzero mod p^N");
  if (unit % p == 0) throw std::invalid_argument("p-adic unit must not be divisible by p");
  PadicScalar x;
  x.state_ = State::Regular;
  x.p_ = p;
  x.N_ = N;
  x.v_ = valuation;
  x.unit_ = std::move(unit);
  x.digits_ = std::min(digits, N);
  if (x.digits_ < 1) throw std::invalid_argument("p-adic scalar needs >= 1 digit");
  return x;
}

PadicScalar PadicScalar::from_rational(const Rational& q, long p, int N) {
  if (q == 0) return zero(p, N);
  BigInt P(p);
  long v = padic_valuation(q, P);
  BigInt n = num(q), d = den(q);
  bool neg = n < 0;
  if (neg) n = -n;
  // strip the p-part
  long vn = (n == 0) ? 0 : padic_valuation(n, P);
  for (long i = 0; i < vn; ++i) n /= P;
  long vd = padic_valuation(d, P);
  for (long i = 0; i < vd; ++i) d /= P;
  BigInt pN = pow_int(P, static_cast<unsigned long>(N));
  BigInt u = (n % pN) * mod_inverse(d, pN) % pN;
  if (neg) u = pN - u;
  return from_parts(p, N, v, u, N);
}

long PadicScalar::valuation() const {
  if (state_ != State::Regular) throw std::logic_error("valuation of non-regular p-adic scalar");
  return v_;
}

const BigInt& PadicScalar::unit() const {
  if (state_ != State::Regular) throw std::logic_error("unit of non-regular p-adic scalar");
  return unit_;
}

int PadicScalar::digits() const {
  if (state_ != State::Regular) throw std::logic_error("digits of non-regular p-adic scalar");
  return digits_;
}

long PadicScalar::below_bound() const {
  if (state_ != State::Below) throw std::logic_error("below_bound of non-Below scalar");
  return v_;
}

double PadicScalar::abs() const {
  switch (state_) {
    case State::Zero: return 0.0;
    case State::Regular: return std::pow(static_cast<double>(p_), static_cast<double>(-v_));
    case State::Below: throw PrecisionExhausted("abs of a below-precision value");
  }
  return 0.0;
}

double PadicScalar::abs_upper() const {
  if (state_ == State::Zero) return 0.0;
  return std::pow(static_cast<double>(p_), static_cast<double>(-v_));
}

double PadicScalar::abs_lower() const {
  return state_ == State::Regular ? abs_upper() : 0.0;
}

void PadicScalar::check_compatible(const PadicScalar& o) const {
  if (p_ != o.p_ || N_ != o.N_) throw FieldMismatch();
}

PadicScalar PadicScalar::operator-() const {
  if (state_ != State::Regular) return *this;
  BigInt pN = pow_int(BigInt(p_), static_cast<unsigned long>(N_));
  return from_parts(p_, N_, v_, pN - unit_, digits_);
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
  check_compatible(o);
  if (state_ == State::Zero) return o;
  if (o.state_ == State::Zero) return *this;

  if (state_ == State::Below && o.state_ == State::Below)
    return below(p_, N_, std::min(v_, o.v_));
  if (state_ == State::Below || o.state_ == State::Below) {
    const PadicScalar& reg = (state_ == State::Regular) ? *this : o;
    long bound = (state_ == State::Below) ? v_ : o.v_;
    if (reg.v_ < bound) {
      int d = std::min<long>(reg.digits_, bound - reg.v_);
      return from_parts(p_, N_, reg.v_, reg.unit_, static_cast<int>(d));
    }
    return below(p_, N_, bound);
  }

  const PadicScalar& lo = (v_ <= o.v_) ? *this : o;
  const PadicScalar& hi = (v_ <= o.v_) ? o : *this;
  long delta = hi.v_ - lo.v_;
  int prec = std::min<long>(lo.digits_, delta + hi.digits_);
  BigInt P(p_);
  BigInt pN = pow_int(P, static_cast<unsigned long>(N_));
  if (delta >= N_) return from_parts(p_, N_, lo.v_, lo.unit_, prec);
  BigInt s = (lo.unit_ + pow_int(P, static_cast<unsigned long>(delta)) * hi.unit_) % pN;
  if (delta > 0) return from_parts(p_, N_, lo.v_, s, prec);

  // equal valuations: cancellation possible
  int noise = std::min(digits_, o.digits_);
  if (s == 0) return below(p_, N_, lo.v_ + noise);
  long sv = padic_valuation(s, P);
  if (sv >= noise) return below(p_, N_, lo.v_ + noise);
  BigInt u = s / pow_int(P, static_cast<unsigned long>(sv));
  return from_parts(p_, N_, lo.v_ + sv, u, noise - static_cast<int>(sv));
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
  check_compatible(o);
  if (state_ == State::Zero || o.state_ == State::Zero) return zero(p_, N_);
  if (state_ == State::Below || o.state_ == State::Below) {
    // |xy| <= p^{-(b1+b2)} with b = valuation lower bound on each side
    return below(p_, N_, v_ + o.v_);
  }
  BigInt pN = pow_int(BigInt(p_), static_cast<unsigned long>(N_));
  BigInt u = unit_ * o.unit_ % pN;
  return from_parts(p_, N_, v_ + o.v_, u, std::min(digits_, o.digits_));
}

PadicScalar PadicScalar::inv() const {
  if (state_ == State::Zero) throw DivisionByZero();
  if (state_ == State::Below) throw PrecisionExhausted("inverse of a below-precision value");
  BigInt pN = pow_int(BigInt(p_), static_cast<unsigned long>(N_));
  return from_parts(p_, N_, -v_, mod_inverse(unit_, pN), digits_);
}

bool PadicScalar::eq(const PadicScalar& o) const {
  PadicScalar d = *this - o;
  return !d.is_regular();
}

Rational PadicScalar::to_rational() const {
  switch (state_) {
    case State::Zero: return Rational(0);
    case State::Below: return Rational(0);
    case State::Regular: break;
  }
  Rational r(unit_);
  BigInt pv = pow_int(BigInt(p_), static_cast<unsigned long>(v_ >= 0 ? v_ : -v_));
  if (v_ >= 0) return r * Rational(pv);
  return r / Rational(pv);
}

std::string PadicScalar::str() const {
  std::ostringstream os;
  switch (state_) {
    case State::Zero: os << "0 (p=" << p_ << ")"; break;
    case State::Below: os << "O(p^" << v_ << ")"; break;
    case State::Regular:
      os << unit_ << "*" << p_ << "^" << v_ << " (+" << digits_ << " digits)";
      break;
  }
  return os.str();
}

// --- checked arithmetic ---

double field_arithmetic(double x, double y, RingOp op) {
  switch (op) {
    case RingOp::Add: return x + y;
    case RingOp::Mul: return x * y;
    case RingOp::Inv:
      if (x == 0.0) throw DivisionByZero();
      return 1.0 / x;
  }
  return 0.0;
}

std::complex<double> field_arithmetic(const std::complex<double>& x,
                                      const std::complex<double>& y, RingOp op) {
  switch (op) {
    case RingOp::Add: return x + y;
    case RingOp::Mul: return x * y;
    case RingOp::Inv:
      if (x == std::complex<double>(0, 0)) throw DivisionByZero();
      return 1.0 / x;
  }
  return {};
}

PadicScalar field_arithmetic(const PadicScalar& x, const PadicScalar& y, RingOp op,
                             int* digits_lost) {
  int before = 0;
  if (x.is_regular()) before = x.digits();
  if (y.is_regular()) before = before ? std::min(before, y.digits()) : y.digits();
  PadicScalar r = PadicScalar::zero(x.p(), x.precision());
  switch (op) {
    case RingOp::Add: r = x + y; break;
    case RingOp::Mul: r = x * y; break;
    case RingOp::Inv: r = x.inv(); break;
  }
  if (r.is_below())
    throw PrecisionExhausted("all " + std::to_string(before) + " tracked digits cancelled");
  if (digits_lost) *digits_lost = (r.is_regular() && before) ? before - r.digits() : 0;
  return r;
}

Rational field_arithmetic(const Rational& x, const Rational& y, RingOp op) {
  switch (op) {
    case RingOp::Add: return x + y;
    case RingOp::Mul: return x * y;
    case RingOp::Inv:
      if (x == 0) throw DivisionByZero();
      return 1 / x;
  }
  return {};
}

double rational_embed_real(const Rational& q) { return to_double(q); }

std::complex<double> rational_embed_complex(const Rational& q) {
  return {to_double(q), 0.0};
}

PadicScalar rational_embed_padic(const Rational& q, const FieldDescriptor& field) {
  field.validate();
  return PadicScalar::from_rational(q, field.p, field.precision);
}

}  // namespace freecert
