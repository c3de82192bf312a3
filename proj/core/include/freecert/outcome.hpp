#ifndef FREECERT_OUTCOME_HPP
#define FREECERT_OUTCOME_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace freecert {

// Hard errors: malformed inputs or arithmetic that cannot proceed.
struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};
struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what)
      : std::runtime_error("p-adic precision exhausted: " + what) {}
};
struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what)
      : std::runtime_error("dimension mismatch: " + what) {}
};
struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix singular within margin") {}
};
struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("operands belong to different fields") {}
};

// Soft outcomes: a certifier declining to certify is a normal result, not an
// exception. The code names the binding constraint.
enum class Why {
  NotContracting,
  NotProximal,
  NoConvergence,
  RegimeViolation,
  NotVeryProximal,
  GapViolation,
  AttractorCollision,
  NoWitness,
  SearchFailed,
  BudgetExceeded,
  DiscOverlap,
  FixedPointCollision,
  NotContractive,
  ParabolicElement,
  MissingFreenessPrerequisite,
  CoverGap,
  StateExplosion,
  InsufficientData,
  VerificationFailed,
  RootIsolationFailure,
  PrecisionEscalationNeeded,
  InputError,
};

const char* why_name(Why w);

struct Refusal {
  Why why;
  std::string detail;
};

template <typename T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}          // NOLINT(runtime/explicit)
  Outcome(Refusal refusal) : v_(std::move(refusal)) {}  // NOLINT(runtime/explicit)
  Outcome(Why why, std::string detail) : v_(Refusal{why, std::move(detail)}) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Outcome::value on refusal: " + refusal().detail);
    return std::get<T>(v_);
  }
  T& value() & {
    if (!ok()) throw std::logic_error("Outcome::value on refusal: " + refusal().detail);
    return std::get<T>(v_);
  }
  T&& take() && {
    if (!ok()) throw std::logic_error("Outcome::take on refusal: " + refusal().detail);
    return std::get<T>(std::move(v_));
  }
  const Refusal& refusal() const {
    if (ok()) throw std::logic_error("Outcome::refusal on success");
    return std::get<Refusal>(v_);
  }
  Why why() const { return refusal().why; }

 private:
  std::variant<T, Refusal> v_;
};

}  // namespace freecert

#endif  // FREECERT_OUTCOME_HPP
