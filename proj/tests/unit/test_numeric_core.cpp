#include "doctest.h"
#include "gen.hpp"
#include "starspec/error.hpp"
#include "starspec/rational.hpp"
#include "starspec/roots.hpp"

using namespace starspec;

namespace {

Rational q(const char* s) { return parse_rational(s); }
Polynomial z() { return Polynomial::z(); }
Polynomial c(const Rational& v) { return Polynomial::constant(v); }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(q("0.5") == Rational(1, 2));
  CHECK(q("-1.25") == Rational(-5, 4));
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(q(" 7 ") == 7);
  CHECK(q("+.5") == Rational(1, 2));
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK_THROWS_AS(q("abc"), Error);
  CHECK_THROWS_AS(q("1/-2"), Error);
  CHECK(to_string(q("-3/6")) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
  CHECK(sqrt_decimal(Rational(2), 6) == "1.414214");
  CHECK(sqrt_decimal(Rational(1, 4), 3) == "0.500");
}

TEST_CASE("polynomial arithmetic") {
  Polynomial one_minus_z = c(1) - z();
  CHECK(one_minus_z * c(1) == one_minus_z);
  CHECK((c(2) - z()).derivative() == c(-1));
  CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
  CHECK(Polynomial{}.degree() == -1);
  CHECK(to_string(Polynomial{2, -3, 1}) == "z^2 - 3*z + 2");
}

TEST_CASE("divrem on the three-edge quotient numerator and denominator difference") {
  Polynomial p{q("3/4"), -2, 1};             // z^2 - 2z + 3/4
  Polynomial d = Polynomial{2, -3, 1} - p;    // -z + 5/4
  CHECK(d == Polynomial{q("5/4"), -1});
  DivRem dr = divrem(p, d);
  // Hand long division: (z^2 - 2z + 3/4) = (-z + 5/4)(-z + 3/4) - 3/16.
  CHECK(dr.quotient == Polynomial{q("3/4"), -1});
  CHECK(dr.remainder == c(q("-3/16")));
  for (const char* x : {"0", "1", "-7/3"}) {
    Rational t = q(x);
    CHECK(p(t) == d(t) * dr.quotient(t) + dr.remainder(t));
  }
  CHECK_THROWS_AS(divrem(p, Polynomial{}), Error);
  try {
    divrem(p, Polynomial{});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivZero);
  }
}

TEST_CASE("gcd") {
  Polynomial a = (c(1) - z()) * (c(2) - z());
  CHECK(gcd(a, c(2) - z()) == (z() - c(2)));
  CHECK(gcd(Polynomial{2, -3, 1}, Polynomial{q("3/4"), -2, 1}) == c(1));
  CHECK(gcd(a, Polynomial{}) == a.monic());
  CHECK_THROWS_AS(gcd(Polynomial{}, Polynomial{}), Error);
}

TEST_CASE("extended gcd Bezout identity") {
  gen::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = gen::poly(rng, 7), r = gen::poly(rng, 7);
    ExtendedGcd e = extended_gcd(p, r);
    CHECK(e.s * p + e.t * r == e.g);
    CHECK(e.g == gcd(p, r));
  }
}

TEST_CASE("square-free factorization") {
  Polynomial half = c(1) - z() * q("1/2");
  auto f = squarefree_factor(half * half * (c(1) - z()));
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == z() - c(1));
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].factor == z() - c(2));
  CHECK(f[1].multiplicity == 2);
  auto g = squarefree_factor(c(2) - z());
  REQUIRE(g.size() == 1);
  CHECK(g[0].factor == z() - c(2));
  CHECK(squarefree_part(half * half * half) == z() - c(2));
}

TEST_CASE("square-free factorization property") {
  gen::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = c(gen::positive(rng));
    int k = static_cast<int>(gen::uniform(rng, 1, 4));
    for (int j = 0; j < k; ++j) {
      Polynomial f = gen::poly(rng, 3);
      if (f.degree() < 1) f = z() - c(gen::any(rng));
      int m = static_cast<int>(gen::uniform(rng, 1, 3));
      for (int t = 0; t < m; ++t) p *= f;
    }
    auto factors = squarefree_factor(p);
    Polynomial prod = c(1);
    for (const auto& sf : factors) {
      for (int t = 0; t < sf.multiplicity; ++t) prod *= sf.factor;
      CHECK(gcd(sf.factor, sf.factor.derivative()).degree() == 0);
    }
    CHECK(prod == p.monic());
    for (std::size_t a = 0; a < factors.size(); ++a)
      for (std::size_t b = a + 1; b < factors.size(); ++b) CHECK(gcd(factors[a].factor, factors[b].factor).degree() == 0);
  }
}

TEST_CASE("divrem and gcd properties") {
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = gen::poly(rng, 12), d = gen::poly(rng, 12);
    if (d.is_zero()) continue;
    DivRem dr = divrem(p, d);
    CHECK(d * dr.quotient + dr.remainder == p);
    CHECK(dr.remainder.degree() < d.degree());
    Polynomial g = gcd(p, d);
    CHECK(divrem(p, g).remainder.is_zero());
    CHECK(divrem(d, g).remainder.is_zero());
  }
  for (int i = 0; i < 100; ++i) {
    Polynomial p = gen::poly(rng, 6), r = gen::poly(rng, 6), g = gen::poly(rng, 4);
    if (g.is_zero() || p.is_zero() || r.is_zero() || gcd(p, r).degree() > 0) continue;
    CHECK(gcd(p * g, r * g) == g.monic());
  }
}

TEST_CASE("isolate real roots") {
  RootList r = isolate_real_roots(c(2) - z(), Domain::positive());
  REQUIRE(r.size() == 1);
  CHECK(r[0].is_exact());
  CHECK(r[0].value() == 2);
  CHECK(r[0].multiplicity == 1);

  Polynomial p = (z() - c(1)) * (z() - c(2)) * (z() - c(2));
  r = isolate_real_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0].value() == 1);
  CHECK(r[0].multiplicity == 1);
  CHECK(r[1].value() == 2);
  CHECK(r[1].multiplicity == 2);

  // Roots outside the domain and the endpoint itself are excluded.
  r = isolate_real_roots(z() * (z() + c(3)) * (z() - c(q("1/3"))));
  REQUIRE(r.size() == 1);
  CHECK(r[0].value() == q("1/3"));

  r = isolate_real_roots(Polynomial{-2, 0, 1}, Domain::real_line());
  REQUIRE(r.size() == 2);
  CHECK_FALSE(r[0].is_exact());
  CHECK(r[0].hi <= 0);
  CHECK(r[1].lo >= 0);

  CHECK(isolate_real_roots(Polynomial{1, 0, 1}, Domain::real_line()).empty());
}

TEST_CASE("isolate recovers random rational roots with multiplicity") {
  gen::Rng rng(3);
  for (int i = 0; i < 150; ++i) {
    int k = static_cast<int>(gen::uniform(rng, 1, 5));
    auto roots = gen::distinct_positive(rng, k);
    std::vector<int> mult;
    Polynomial p = c(gen::positive(rng));
    for (const auto& x : roots) {
      int m = static_cast<int>(gen::uniform(rng, 1, 3));
      mult.push_back(m);
      for (int t = 0; t < m; ++t) p *= z() - c(x);
    }
    RootList got = isolate_real_roots(p);
    REQUIRE(got.size() == roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
      REQUIRE(got[j].is_exact());
      CHECK(got[j].value() == roots[j]);
      CHECK(got[j].multiplicity == mult[j]);
    }
  }
}

TEST_CASE("refine root") {
  RealRoot sqrt2{Polynomial{-2, 0, 1}, 1, 2, 1};
  RealRoot r = refine_root(Polynomial{-2, 0, 1}, sqrt2, Rational(1, 1024));
  CHECK(r.width() <= Rational(1, 1024));
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi > 2);

  RealRoot two = refine_root(c(2) - z(), RealRoot{Polynomial{}, 1, 3, 1}, Rational(1, 1000));
  CHECK(two.is_exact());
  CHECK(two.value() == 2);

  // (3 - sqrt 5)/2 lies in (lo, hi) iff (3 - 2 lo)^2 > 5 > (3 - 2 hi)^2 with both bases positive.
  RealRoot g = refine_root(Polynomial{1, -3, 1}, RealRoot{Polynomial{}, 0, 1, 1}, Rational(1, 1000000));
  CHECK(g.width() <= Rational(1, 1000000));
  Rational a = 3 - 2 * g.lo, b = 3 - 2 * g.hi;
  CHECK(sgn(b) > 0);
  CHECK(a * a > 5);
  CHECK(b * b < 5);

  CHECK_THROWS_AS(refine_root(Polynomial{-2, 0, 1}, RealRoot{Polynomial{}, 2, 3, 1}, Rational(1, 8)), Error);
}

TEST_CASE("refined intervals bracket a sign change") {
  gen::Rng rng(9);
  for (int i = 0; i < 60; ++i) {
    Polynomial p = gen::poly(rng, 8);
    if (p.degree() < 1) continue;
    for (const RealRoot& r : isolate_real_roots(p, Domain::real_line())) {
      RealRoot s = refine_root(p, r, Rational(1, 1 << 20));
      Polynomial f = squarefree_part(p);
      if (s.is_exact())
        CHECK(f.sign_at(s.lo) == 0);
      else
        CHECK(f.sign_at(s.lo) * f.sign_at(s.hi) < 0);
    }
  }
}

TEST_CASE("root comparison") {
  Polynomial w2{-2, 0, 1};
  RealRoot a{w2, 1, 2, 1};
  RealRoot b{w2 * Polynomial{-3, 1}, Rational(5, 4), Rational(3, 2), 1};
  CHECK(compare_roots(a, b, default_budget()) == Ordering::Equal);
  RealRoot c3{Polynomial{-3, 0, 1}, 1, 2, 1};
  CHECK(compare_roots(a, c3, default_budget()) == Ordering::Less);
  CHECK(compare_roots(c3, a, default_budget()) == Ordering::Greater);
  CHECK(compare_root_value(a, Rational(7, 5), default_budget()) == Ordering::Greater);
  CHECK(compare_root_value(a, Rational(3, 2), default_budget()) == Ordering::Less);
  CHECK(vanishes_at(w2 * w2, a));
  CHECK(multiplicity_at(w2 * w2 * Polynomial{1, 1}, a) == 2);
  CHECK(multiplicity_at(Polynomial{1, 1}, a) == 0);
}
