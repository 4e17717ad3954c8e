#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/arith.hpp"

using namespace lrn;

TEST_CASE("gcd basics") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 11) == 1);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-12, 18) == 6);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(10) == 3);
  CHECK(isqrt(1366561) == 1169);  // 1169^2 = 1366561
  CHECK(Int(1169) * 1169 == 1366561);
  CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt bracketing property") {
  for (Int n = 0; n <= 1'000'000; n += 997) {
    Int r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  // dense check on a small prefix
  for (Int n = 0; n <= 5000; ++n) {
    Int r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("perfect_root exact cases") {
  // expected values recomputed by repeated squaring
  Int nine7 = 1;
  for (int i = 0; i < 7; ++i) nine7 *= 9;
  CHECK(nine7 == 4782969);
  CHECK(perfect_root(4782969, 7) == Int(9));
  Int seven6 = 1;
  for (int i = 0; i < 6; ++i) seven6 *= 7;
  CHECK(seven6 == 117649);
  CHECK(perfect_root(117649, 6) == Int(7));
  CHECK_FALSE(perfect_root(10, 3).has_value());
  CHECK(perfect_root(1, 30) == Int(1));
  CHECK(perfect_root(12345, 1) == Int(12345));
}

TEST_CASE("perfect_root round trip property") {
  for (Int n = 2; n <= 100'000; n = n * 3 + 1) {
    for (unsigned e = 2; e <= 10; ++e) {
      Int p = pow_int(n, e);
      REQUIRE(perfect_root(p, e) == n);
      auto off = perfect_root(p + 1, e);
      if (off) REQUIRE(pow_int(*off, e) == p + 1);
    }
  }
}

TEST_CASE("factorize small") {
  auto f = factorize(77);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{7, 1});
  CHECK(f.factors[1] == PrimePower{11, 1});

  f = factorize(250);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{2, 1});
  CHECK(f.factors[1] == PrimePower{5, 3});

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).value() == 1);
}

TEST_CASE("factorize reconstructs input") {
  for (Int n = 1; n <= 1'000'000; n += 9973) {
    auto f = factorize(n);
    REQUIRE(f.value() == n);
    for (const auto& pp : f.factors) REQUIRE(is_prime(pp.prime));
    for (std::size_t i = 1; i < f.factors.size(); ++i)
      REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);
  }
}

TEST_CASE("factorize larger composites through rho") {
  // product of two primes beyond the trial-division bound
  Int p("1000003"), q("10000019");
  auto f = factorize(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == p);
  CHECK(f.factors[1].prime == q);

  Int big("2305843009213693951");  // 2^61 - 1, prime
  auto g = factorize(big * 7);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[1].prime == big);
}

TEST_CASE("is_squarefree") {
  CHECK(is_squarefree(77));
  CHECK_FALSE(is_squarefree(12));
  CHECK(is_squarefree(1));
  CHECK_FALSE(is_squarefree(25));
}

TEST_CASE("is_prime agrees with trial division") {
  auto trial = [](Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
      if (n % p == 0) return false;
    return true;
  };
  for (Int n = 0; n <= 20'000; ++n) REQUIRE(is_prime(n) == trial(n));
  for (Int n = 999'000; n <= 1'000'000; ++n) REQUIRE(is_prime(n) == trial(n));
}

TEST_CASE("is_prime named values") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1169));  // 7 * 167
  CHECK(is_prime(Int("2305843009213693951")));
  CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(Int("170141183460469231731687303715884105725")));
}

TEST_CASE("two_three_split") {
  CHECK(two_three_split(54) == TwoThreeSplit{1, 3, 1});
  CHECK(two_three_split(7) == TwoThreeSplit{0, 0, 7});
  CHECK(two_three_split(24) == TwoThreeSplit{3, 1, 1});
  CHECK(two_three_split(1) == TwoThreeSplit{0, 0, 1});
}

TEST_CASE("divisors in increasing order") {
  auto ds = divisors(factorize(60));
  std::vector<Int> want{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60};
  CHECK(ds == want);
  CHECK(divisors(factorize(1)) == std::vector<Int>{1});
}
