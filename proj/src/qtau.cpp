#include "orbitkit/qtau.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <utility>
#include <vector>

#include "orbitkit/error.hpp"

namespace orbitkit {

namespace {

int compare_to_zero(const mpq_class& value) { return sgn(value); }

// Scanner over the input with whitespace removed; positions refer to the
// original text so error messages point at the offending character.
class ScalarScanner {
 public:
  explicit ScalarScanner(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.emplace_back(text[i], i);
      }
    }
    end_position_ = text.size();
  }

  bool done() const { return index_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[index_].first; }
  std::size_t position() const { return done() ? end_position_ : chars_[index_].second; }
  char take() { return chars_[index_++].first; }

  bool accept(char c) {
    if (peek() == c && !done()) {
      ++index_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, position()); }

  mpz_class integer() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::string digits;
    std::size_t last = position();
    digits.push_back(take());
    // digits separated by blanks are two numbers, not one
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())) && position() == last + 1) {
      last = position();
      digits.push_back(take());
    }
    return mpz_class(digits, 10);
  }

  mpq_class rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (peek() == '/') {
      std::size_t slash = position();
      take();
      den = integer();
      if (den == 0) throw ParseError("division by zero in rational literal", slash);
    }
    mpq_class value(num, den);
    value.canonicalize();
    return value;
  }

 private:
  std::vector<std::pair<char, std::size_t>> chars_;
  std::size_t index_ = 0;
  std::size_t end_position_ = 0;
};

}  // namespace

QTau::QTau(mpq_class rat, mpq_class tau_coef) : rat_(std::move(rat)), tau_(std::move(tau_coef)) {
  canonicalize();
}

void QTau::canonicalize() {
  if (rat_.get_den() == 0 || tau_.get_den() == 0) throw DivisionByZero();
  rat_.canonicalize();
  tau_.canonicalize();
}

QTau QTau::parse(std::string_view text) {
  ScalarScanner in(text);
  if (in.done()) in.fail("empty scalar");
  mpq_class rat = 0;
  mpq_class tau = 0;
  bool first = true;
  while (!in.done()) {
    int sign = 1;
    if (in.accept('+')) {
    } else if (in.accept('-')) {
      sign = -1;
    } else if (!first) {
      in.fail("expected '+' or '-'");
    }
    first = false;

    if (in.accept('t')) {
      mpq_class coef = 1;
      if (in.accept('/')) {
        std::size_t at = in.position();
        mpq_class den = in.rational();
        if (den == 0) throw ParseError("division by zero in rational literal", at);
        coef = 1 / den;
      } else if (in.accept('*')) {
        coef = in.rational();
      }
      tau += sign * coef;
    } else if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      mpq_class coef = in.rational();
      if (in.accept('*')) {
        if (!in.accept('t')) in.fail("expected 't' after '*'");
        tau += sign * coef;
      } else if (in.accept('t')) {
        tau += sign * coef;
      } else {
        rat += sign * coef;
      }
    } else {
      in.fail("expected a number or 't'");
    }
  }
  return QTau(rat, tau);
}

bool QTau::is_algebraic_integer() const noexcept {
  return rat_.get_den() == 1 && tau_.get_den() == 1;
}

int QTau::sign() const {
  int sb = compare_to_zero(tau_);
  if (sb == 0) return compare_to_zero(rat_);
  // value = (p + q√5)/2 with p = 2a + b, q = b
  mpq_class p = 2 * rat_ + tau_;
  int sp = compare_to_zero(p);
  if (sp == 0) return sb;
  if (sp == sb) return sp;
  mpq_class disc = p * p - 5 * tau_ * tau_;
  return sp * compare_to_zero(disc);
}

QTau QTau::conjugate() const { return QTau(rat_ + tau_, -tau_); }

mpq_class QTau::norm() const { return rat_ * rat_ + rat_ * tau_ - tau_ * tau_; }

QTau QTau::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return QTau((rat_ + tau_) / n, -tau_ / n);
}

double QTau::to_double() const {
  static const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  return rat_.get_d() + tau_.get_d() * golden;
}

std::string QTau::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(rat_) != 0) out = rat_.get_str();
  if (sgn(tau_) != 0) {
    if (sgn(tau_) > 0 && !out.empty()) out += '+';
    if (tau_ == 1) {
      out += "t";
    } else if (tau_ == -1) {
      out += "-t";
    } else {
      out += tau_.get_str() + "*t";
    }
  }
  return out;
}

std::size_t hash_mpz(mpz_srcptr value) noexcept {
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(value) + 1);
  const std::size_t limbs = mpz_size(value);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(value, static_cast<mp_size_t>(i))));
  }
  return seed;
}

std::size_t QTau::hash() const noexcept {
  std::size_t seed = hash_mpz(rat_.get_num_mpz_t());
  hash_combine(seed, hash_mpz(rat_.get_den_mpz_t()));
  hash_combine(seed, hash_mpz(tau_.get_num_mpz_t()));
  hash_combine(seed, hash_mpz(tau_.get_den_mpz_t()));
  return seed;
}

QTau& QTau::operator+=(const QTau& other) {
  rat_ += other.rat_;
  tau_ += other.tau_;
  return *this;
}

QTau& QTau::operator-=(const QTau& other) {
  rat_ -= other.rat_;
  tau_ -= other.tau_;
  return *this;
}

QTau& QTau::operator*=(const QTau& other) {
  // (a + bτ)(c + dτ) = (ac + bd) + (ad + bc + bd)τ
  if (is_rational() && other.is_rational()) {
    rat_ *= other.rat_;
    return *this;
  }
  mpq_class bd = tau_ * other.tau_;
  mpq_class rat = rat_ * other.rat_ + bd;
  mpq_class tau = rat_ * other.tau_ + tau_ * other.rat_ + bd;
  rat_ = std::move(rat);
  tau_ = std::move(tau);
  return *this;
}

QTau& QTau::operator/=(const QTau& other) {
  if (other.is_rational()) {
    if (sgn(other.rat_) == 0) throw DivisionByZero();
    rat_ /= other.rat_;
    tau_ /= other.rat_;
    return *this;
  }
  return *this *= other.inverse();
}

QTau QTau::operator-() const { return QTau(-rat_, -tau_); }

std::strong_ordering operator<=>(const QTau& lhs, const QTau& rhs) {
  int s;
  if (lhs.tau_ == rhs.tau_) {
    s = cmp(lhs.rat_, rhs.rat_);
  } else {
    s = (lhs - rhs).sign();
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const QTau& value) { return out << value.str(); }

QTau pow(const QTau& base, unsigned exponent) {
  QTau result = 1;
  QTau square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace orbitkit
