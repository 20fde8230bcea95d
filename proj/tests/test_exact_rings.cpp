#include <cmath>
#include <complex>

#include "arithver/exact_rings.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace arithver;

namespace {

const CycRat zeta = CycRat::zeta();
const CycRat alpha = GoldRat::alpha().to_cyc();
const CycRat th = to_rat(theta());

// Numeric value at ζ = exp(2πi/5), used as an independent oracle.
std::complex<double> numeric(const CycRat& x) {
  const std::complex<double> z = std::polar(1.0, 2 * M_PI / 5);
  std::complex<double> s = 0, p = 1;
  for (int i = 0; i < 4; ++i, p *= z) s += x.c[i].get_d() * p;
  return s;
}

}  // namespace

TEST_CASE("conjugation examples") {
  CHECK(conj_sigma(zeta) == zeta.galois(4));
  CHECK(conj_sigma(zeta) == CycRat(-1, -1, -1, -1));
  CHECK(conj_sigma(alpha) == alpha);
  CHECK(conj_sigma(th) == -th);
}

TEST_CASE("trace examples") {
  CHECK(trace_KQ(CycRat(1)) == 4);
  CHECK(trace_KQ(zeta) == -1);
  CHECK(trace_KQ(th) == 0);
}

TEST_CASE("embedding signs") {
  CHECK(embed_sign(GoldRat::alpha(), Embedding::plus) == 1);
  CHECK(embed_sign(GoldRat::alpha(), Embedding::minus) == -1);
  CHECK(embed_sign(GoldRat(0), Embedding::plus) == 0);
  CHECK(embed_sign(GoldRat(0), Embedding::minus) == 0);
  CHECK(embed_value(GoldRat::alpha(), Embedding::plus) == doctest::Approx(0.6180339887));
  CHECK(embed_value(GoldRat::alpha(), Embedding::minus) == doctest::Approx(-1.6180339887));
  // the plus embedding is the one at ζ = exp(2πi/5)
  CHECK(numeric(alpha).real() == doctest::Approx(embed_value(GoldRat::alpha(), Embedding::plus)));
}

TEST_CASE("embed_sign agrees with floating point away from zero") {
  gen::Rng rng(11);
  for (int n = 0; n < 2000; ++n) {
    GoldRat x = gen::gold_rat(rng, 50);
    for (Embedding e : {Embedding::plus, Embedding::minus}) {
      double v = embed_value(x, e);
      if (std::abs(v) < 1e-9) continue;
      CHECK(embed_sign(x, e) == (v > 0 ? 1 : -1));
    }
  }
  // near-cancellation: Fibonacci ratios approximate the golden ratio
  GoldRat near(Rational(89), Rational(-144));  // 89 − 144·0.618… ≈ +0.0077
  CHECK(embed_sign(near, Embedding::plus) == 1);
  GoldRat near2(Rational(-55), Rational(89));
  CHECK(embed_sign(near2, Embedding::plus) == 1);
  CHECK(embed_sign(GoldRat(Rational(-34), Rational(55)), Embedding::plus) == -1);
}

TEST_CASE("reduction mod theta") {
  CHECK(reduce_mod_theta(CycInt::zeta()) == 1);
  CHECK(reduce_mod_theta(GoldInt::alpha().to_cyc()) == 2);
  CHECK(reduce_mod_theta(theta()) == 0);
  // oracle: ζ − 1 is divisible by θ in O_K
  CHECK(is_integral((zeta - CycRat(1)) * inverse(th)));
  CHECK_FALSE(is_integral(CycRat(1) * inverse(th)));
}

TEST_CASE("tenth roots of unity") {
  CHECK(zeta10_power(0) == CycInt(1));
  CHECK(zeta10_power(5) == CycInt(-1));
  CHECK(zeta10_power(2) == CycInt::zeta());
  for (int k = 1; k < 10; ++k) CHECK(zeta10_power(k) != CycInt(1));
  CHECK(zeta10_power(10) == CycInt(1));
  for (int i = -12; i < 12; ++i)
    for (int j = -12; j < 12; ++j) CHECK(zeta10_power(i) * zeta10_power(j) == zeta10_power(i + j));
}

TEST_CASE("eta generates the different and theta has norm 3 + alpha") {
  CycRat e = eta();
  CHECK(e * th == CycRat(5));
  CHECK(is_integral(e));
  CHECK(norm_KQ(e) == 125);  // |disc Q(ζ₅)| = 5³
  CHECK(gold_from_cyc(th * conj_sigma(th)) == GoldRat(3, 1));
}

TEST_CASE("ring and conjugation laws on random elements") {
  gen::Rng rng(1);
  for (int n = 0; n < 300; ++n) {
    CycRat x = gen::cyc_rat(rng), y = gen::cyc_rat(rng), z = gen::cyc_rat(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(conj_sigma(x * y) == conj_sigma(x) * conj_sigma(y));
    CHECK(conj_sigma(conj_sigma(x)) == x);
    CHECK(trace_KQ(conj_sigma(x)) == trace_KQ(x));
    CHECK_NOTHROW(gold_from_cyc(x * conj_sigma(x)));
    if (!x.is_zero()) CHECK(x * inverse(x) == CycRat(1));
    auto nx = numeric(x), ny = numeric(y);
    auto nxy = numeric(x * y);
    CHECK(std::abs(nxy - nx * ny) < 1e-9 * (1 + std::abs(nx * ny)));
  }
}

TEST_CASE("reduction mod theta is a ring map killing sigma") {
  gen::Rng rng(2);
  for (int n = 0; n < 500; ++n) {
    CycInt x = gen::cyc_int(rng, 20), y = gen::cyc_int(rng, 20);
    CHECK(reduce_mod_theta(conj_sigma(x)) == reduce_mod_theta(x));
    CHECK(Fp5(reduce_mod_theta(x * y)) == Fp5(reduce_mod_theta(x)) * Fp5(reduce_mod_theta(y)));
    CHECK(Fp5(reduce_mod_theta(x + y)) == Fp5(reduce_mod_theta(x)) + Fp5(reduce_mod_theta(y)));
    // kernel is exactly (θ)
    bool divisible = is_integral(to_rat(x) * inverse(th));
    CHECK(divisible == (reduce_mod_theta(x) == 0));
  }
}

TEST_CASE("golden subring") {
  CHECK(GoldRat::alpha() * GoldRat::alpha() + GoldRat::alpha() - GoldRat(1) == GoldRat(0));
  CHECK(alpha * alpha + alpha - CycRat(1) == CycRat(0));
  gen::Rng rng(3);
  for (int n = 0; n < 500; ++n) {
    GoldRat x = gen::gold_rat(rng), y = gen::gold_rat(rng);
    CHECK((x * y).to_cyc() == x.to_cyc() * y.to_cyc());
    CHECK(gold_from_cyc(x.to_cyc()) == x);
    CHECK(x.norm() == (x * x.conjugate()).a);
    for (Embedding e : {Embedding::plus, Embedding::minus})
      CHECK(embed_sign(x * y, e) == embed_sign(x, e) * embed_sign(y, e));
  }
  CHECK_THROWS_AS(gold_from_cyc(zeta), MathError);
}

TEST_CASE("F5 field laws") {
  for (int a = 0; a < 5; ++a) {
    Fp5 x(a);
    if (a) CHECK(x * x.inverse() == Fp5(1));
    for (int b = 0; b < 5; ++b) CHECK((x + Fp5(b)) - Fp5(b) == x);
  }
  CHECK(Fp5(1).is_square());
  CHECK(Fp5(4).is_square());
  CHECK_FALSE(Fp5(2).is_square());
  CHECK_FALSE(Fp5(3).is_square());
  CHECK(Fp5(-7) == Fp5(3));
}

TEST_CASE("text round trip") {
  gen::Rng rng(4);
  for (int n = 0; n < 100; ++n) {
    CycRat x = gen::cyc_rat(rng);
    CHECK(parse_cyc(to_string(x)) == x);
    GoldRat y = gen::gold_rat(rng);
    CHECK(parse_gold(to_string(y)) == y);
  }
  CHECK(to_string(theta()) == "1,2,1,1");
  CHECK(parse_cyc(" 1/2, -3 ,0,4/6") == CycRat(Rational(1, 2), -3, 0, Rational(2, 3)));
  CHECK_THROWS_AS(parse_cyc("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cyc("1,2,x,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gold("1/0,1"), std::invalid_argument);
}
