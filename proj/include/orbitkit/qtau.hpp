#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbitkit {

/// Exact element a + b·τ of the golden field ℚ(τ), τ = (1+√5)/2.
///
/// Both components are arbitrary-precision rationals kept in lowest terms
/// with positive denominators. Products are reduced with τ² = τ + 1, so no
/// representable value carries a τ² component. Ordering follows the real
/// embedding τ ↦ (1+√5)/2 and is decided exactly.
class QTau {
 public:
  QTau() = default;

  template <std::integral I>
  QTau(I value) : rat_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  explicit QTau(mpq_class rat, mpq_class tau_coef = 0);

  static QTau tau() { return QTau(mpq_class(0), mpq_class(1)); }

  /// Parses the scalar grammar: a signed sum of terms `R`, `R*t`, `Rt`,
  /// `t` or `t/R`, where R is `p` or `p/q` and `t` denotes τ.
  static QTau parse(std::string_view text);

  const mpq_class& rational_part() const noexcept { return rat_; }
  const mpq_class& tau_part() const noexcept { return tau_; }

  bool is_zero() const noexcept { return sgn(rat_) == 0 && sgn(tau_) == 0; }
  bool is_rational() const noexcept { return sgn(tau_) == 0; }
  /// True for elements of ℤ[τ] (both components integral).
  bool is_algebraic_integer() const noexcept;

  /// Exact sign of the real value: -1, 0 or +1.
  int sign() const;

  /// Galois conjugate a + b·τ' with τ' = 1 - τ.
  QTau conjugate() const;
  /// Field norm N(a + bτ) = a² + ab - b².
  mpq_class norm() const;
  /// Multiplicative inverse; throws DivisionByZero on zero.
  QTau inverse() const;

  double to_double() const;

  /// Canonical text `a+b*t` with zero parts suppressed (`0` for zero).
  std::string str() const;

  std::size_t hash() const noexcept;

  QTau& operator+=(const QTau& other);
  QTau& operator-=(const QTau& other);
  QTau& operator*=(const QTau& other);
  QTau& operator/=(const QTau& other);

  friend QTau operator+(QTau lhs, const QTau& rhs) { return lhs += rhs; }
  friend QTau operator-(QTau lhs, const QTau& rhs) { return lhs -= rhs; }
  friend QTau operator*(QTau lhs, const QTau& rhs) { return lhs *= rhs; }
  friend QTau operator/(QTau lhs, const QTau& rhs) { return lhs /= rhs; }
  QTau operator-() const;

  friend bool operator==(const QTau& lhs, const QTau& rhs) {
    return lhs.rat_ == rhs.rat_ && lhs.tau_ == rhs.tau_;
  }
  friend std::strong_ordering operator<=>(const QTau& lhs, const QTau& rhs);

 private:
  void canonicalize();

  mpq_class rat_{0};
  mpq_class tau_{0};
};

std::ostream& operator<<(std::ostream& out, const QTau& value);

/// Integer power with non-negative exponent.
QTau pow(const QTau& base, unsigned exponent);

std::size_t hash_mpz(mpz_srcptr value) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace orbitkit

template <>
struct std::hash<orbitkit::QTau> {
  std::size_t operator()(const orbitkit::QTau& value) const noexcept { return value.hash(); }
};
