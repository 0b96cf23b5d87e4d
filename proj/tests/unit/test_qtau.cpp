#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orbitkit/error.hpp"
#include "orbitkit/qtau.hpp"

using orbitkit::QTau;

namespace {
QTau q(const char* s) { return QTau::parse(s); }
}  // namespace

TEST_CASE("tau satisfies its minimal polynomial") {
  const QTau t = QTau::tau();
  CHECK(t * t == t + 1);
  CHECK(pow(t, 3) == 2 * t + 1);
  CHECK(pow(t, 5) == 5 * t + 3);  // Fibonacci coefficients
  CHECK(pow(t, 0) == QTau(1));
}

TEST_CASE("multiplication follows the reduction rule") {
  // (a+bt)(c+dt) = (ac+bd) + (ad+bc+bd)t
  CHECK(q("2+3t") * q("5+7t") == q("31+50t"));
  CHECK(q("1/2+t/3") * q("-4+6t") == q("11/3t"));
}

TEST_CASE("inverse and division") {
  const QTau x = q("3-2t");
  CHECK(x * x.inverse() == QTau(1));
  CHECK(q("1+t") / QTau::tau() == QTau::tau());
  CHECK(QTau::tau().inverse() == QTau::tau() - 1);
  CHECK_THROWS_AS(QTau(0).inverse(), orbitkit::DivisionByZero);
  CHECK_THROWS_AS(q("1") / QTau(0), orbitkit::DivisionByZero);
}

TEST_CASE("conjugate and norm") {
  CHECK(QTau::tau().conjugate() == 1 - QTau::tau());
  CHECK(QTau::tau().norm() == -1);
  const QTau x = q("2/3-5t");
  CHECK(x * x.conjugate() == QTau(x.norm(), 0));
}

TEST_CASE("exact sign near cancellation") {
  CHECK(q("2t-3").sign() > 0);             // 0.236...
  CHECK(q("3-2t").sign() < 0);
  // F(n) t - F(n+1) = -(1-t)^n: tiny, sign alternating with n
  CHECK(q("987t-1597").sign() < 0);
  CHECK(q("1597-987t").sign() > 0);
  CHECK(q("1597t-2584").sign() > 0);
  CHECK(QTau(0).sign() == 0);
  CHECK(q("t-1") < q("1"));
  CHECK(q("t") > q("8/5"));
  CHECK(q("t") < q("13/8"));
}

TEST_CASE("parse and print round-trip") {
  for (const char* s : {"0", "1", "-3/4", "t", "-t", "1+t", "2-3*t", "1/2+5/7*t", "-t/3"}) {
    const QTau x = q(s);
    CHECK(QTau::parse(x.str()) == x);
  }
  CHECK(q("t").str() == "t");
  CHECK(q("-t").str() == "-t");
  CHECK(q("2t").str() == "2*t");
  CHECK(q(" 1 + 2 * t ").str() == "1+2*t");
  CHECK(q("t*3/2") == q("3/2t"));
  CHECK(q("t/2") == q("1/2*t"));
  CHECK(q("4/6").str() == "2/3");
  CHECK(q("t-1") == q("-1+t"));
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* s) -> std::size_t {
    try {
      QTau::parse(s);
    } catch (const orbitkit::ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("1+x") == 2);
  CHECK(position_of("1/0") == 1);
  CHECK(position_of("2*") == 2);
  CHECK(position_of("1 2") == 2);
  CHECK_THROWS_WITH_AS(QTau::parse("3/0"), doctest::Contains("division by zero"), orbitkit::ParseError);
}

TEST_CASE("algebraic integers and conversion") {
  CHECK(q("3-2t").is_algebraic_integer());
  CHECK_FALSE(q("1/2+t").is_algebraic_integer());
  CHECK(q("1+t").to_double() == doctest::Approx(1 + (1 + std::sqrt(5.0)) / 2));
  CHECK(q("5").is_rational());
}

TEST_CASE("hash agrees with equality") {
  CHECK(q("2/4+t").hash() == q("1/2+t").hash());
  CHECK(std::hash<QTau>{}(q("t")) == q("t").hash());
}
