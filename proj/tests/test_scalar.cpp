#include <random>

#include "doctest.h"
#include "qhopf/scalar.hpp"

using namespace qhopf;

namespace {

Scalar rat(long a, long b = 1) { return Field::rationals().from_rational(Rational(a, b)); }

// Random element of a field with small integer coefficients.
Scalar random_scalar(Field f, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), deg(0, 3);
  auto r = [&] { return f.from_rational(Rational(coef(rng), den(rng))); };
  Scalar x = f.zero();
  switch (f.kind()) {
    case FieldKind::rationals:
      return r();
    case FieldKind::cyclotomic:
      for (int k = 0; k < 4; ++k) x += r() * f.generator().pow(k);
      return x;
    case FieldKind::rational_functions: {
      Scalar num = f.zero(), d = f.one();
      for (int k = -1; k < 3; ++k) num += r() * f.generator().pow(k);
      for (int k = 1; k <= deg(rng); ++k) d += r() * f.generator().pow(k);
      if (d.is_zero()) d = f.one();
      return num / d;
    }
  }
  return x;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK((rat(5, 6) - rat(1, 2)).to_string() == "1/3");
  CHECK_THROWS_AS(rat(0).inv(), NotInvertible);
}

TEST_CASE("inverse of the indeterminate is 1/q") {
  Field f = Field::rational_functions("q");
  Scalar q = f.generator();
  Scalar qi = q.inv();
  CHECK(qi * q == f.one());
  CHECK(qi == Scalar::parse("1/q", f));
  CHECK(qi == Scalar::parse("q^-1", f));
}

TEST_CASE("cyclotomic reduction") {
  Field f = Field::cyclotomic(4);
  Scalar z = f.generator();
  CHECK(z * z.pow(2) == -z);
  CHECK((z * z.pow(2)).to_string() == "-z");
  Field f3 = Field::cyclotomic(3);
  Scalar w = f3.generator();
  CHECK(w.pow(3) == f3.one());
  CHECK(w * w + w + f3.one() == f3.zero());
  CHECK((w + f3.one()) * (w + f3.one()).inv() == f3.one());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == Poly({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == Poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == Poly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == Poly({1, 0, -1, 0, 1}));
}

TEST_CASE("parsing scalars") {
  CHECK(Scalar::parse("-3/4", Field::rationals()) == rat(-3, 4));
  Field fq = Field::rational_functions("q");
  Scalar q = fq.generator();
  CHECK(Scalar::parse("q^2 - q^-1", fq) == q * q - q.inv());
  CHECK(Scalar::parse("q^(-2)", fq) == q.pow(-2));
  Field f3 = Field::cyclotomic(3);
  CHECK(Scalar::parse("z + 1", f3) == f3.generator() + f3.one());
  CHECK(Scalar::parse("(1 + 2)*(3 - 1)/4", Field::rationals()) == rat(3, 2));
  CHECK(Scalar::parse(" - - 2", Field::rationals()) == rat(2));
}

TEST_CASE("parse errors carry positions") {
  try {
    (void)Scalar::parse("1 + q", Field::rationals());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS((void)Scalar::parse("1 +", Field::rationals()), ParseError);
  CHECK_THROWS_AS((void)Scalar::parse("2 )", Field::rationals()), ParseError);
  CHECK_THROWS_AS((void)Scalar::parse("1/0", Field::rationals()), ParseError);
  CHECK_THROWS_AS((void)Scalar::parse("z^", Field::cyclotomic(3)), ParseError);
}

TEST_CASE("field mismatch is reported") {
  Scalar a = Field::rationals().one();
  Scalar b = Field::cyclotomic(3).one();
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_FALSE(a == b);
}

TEST_CASE("field descriptors") {
  CHECK(Field::parse("rationals") == Field::rationals());
  CHECK(Field::parse("cyclotomic(3)") == Field::cyclotomic(3));
  CHECK(Field::parse("rational-functions(q)") == Field::rational_functions("q"));
  CHECK(Field::cyclotomic(5).to_string() == "cyclotomic(5)");
  CHECK_THROWS((void)Field::parse("cyclotomic(0)"));
  CHECK_THROWS((void)Field::parse("reals"));
}

TEST_CASE("field axioms and round trips on random values") {
  std::mt19937 rng(20261016);
  for (Field f : {Field::rationals(), Field::cyclotomic(3), Field::cyclotomic(8),
                  Field::rational_functions("q")}) {
    CAPTURE(f.to_string());
    for (int t = 0; t < 60; ++t) {
      Scalar x = random_scalar(f, rng), y = random_scalar(f, rng), w = random_scalar(f, rng);
      CHECK((x + y) + w == x + (y + w));
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * (y + w) == x * y + x * w);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x - x == f.zero());
      if (!x.is_zero()) CHECK(x * x.inv() == f.one());
      std::string s = x.to_string();
      CAPTURE(s);
      Scalar back = Scalar::parse(s, f);
      CHECK(back == x);
      CHECK(Scalar::parse(back.to_string(), f) == back);
    }
  }
}
