#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "biharmonic/factorization.hpp"
#include "biharmonic/sigma_sieve.hpp"

using namespace biharmonic;

TEST_CASE("factorize decomposes known values") {
  SECTION("units and primes") {
    REQUIRE(factorize(Integer(1)).factors.empty());
    const auto f2 = factorize(Integer(2));
    REQUIRE(f2.factors == std::vector<std::pair<Integer, unsigned>>{{2, 1}});
    const auto f97 = factorize(Integer(97));
    REQUIRE(f97.factors == std::vector<std::pair<Integer, unsigned>>{{97, 1}});
  }
  SECTION("composites") {
    const auto f12 = factorize(Integer(12));
    REQUIRE(f12.factors == std::vector<std::pair<Integer, unsigned>>{{2, 2}, {3, 1}});
    const auto f360 = factorize(Integer(360));
    REQUIRE(f360.factors ==
            std::vector<std::pair<Integer, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
    const auto f8128 = factorize(Integer(8128));
    REQUIRE(f8128.factors ==
            std::vector<std::pair<Integer, unsigned>>{{2, 6}, {127, 1}});
  }
  SECTION("semiprime beyond the trial-division horizon") {
    // 1000000007 and 1000000009 are both prime and both exceed 2^20
    const Integer p("1000000007"), q("1000000009");
    const auto f = factorize(p * q);
    REQUIRE(f.factors == std::vector<std::pair<Integer, unsigned>>{{p, 1}, {q, 1}});
    const auto fsq = factorize(p * p);
    REQUIRE(fsq.factors == std::vector<std::pair<Integer, unsigned>>{{p, 2}});
  }
  SECTION("domain") {
    REQUIRE_THROWS_AS(factorize(Integer(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(factorize(Integer(-6)), std::invalid_argument);
  }
}

TEST_CASE("factorize recomposes on random inputs") {
  std::mt19937_64 rng(0x5eedfac7);
  std::uniform_int_distribution<std::uint64_t> draw(1, 1'000'000'000'000ULL);
  for (int i = 0; i < 1000; ++i) {
    const Integer n = draw(rng);
    const auto f = factorize(n);
    Integer recomposed = 1;
    Integer last_prime = 1;
    for (const auto& [p, e] : f.factors) {
      REQUIRE(p > last_prime);  // strictly increasing primes
      REQUIRE(e >= 1);
      REQUIRE(is_prime(p));
      last_prime = p;
      recomposed *= ipow(p, e);
    }
    REQUIRE(recomposed == n);
  }
}

TEST_CASE("is_prime matches trial division") {
  auto slow_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 1; n <= 20000; ++n)
    REQUIRE(is_prime(Integer(n)) == slow_prime(n));
  REQUIRE(is_prime(Integer("1000000007")));
  REQUIRE_FALSE(is_prime(Integer("1000000007") * 3));
  REQUIRE_THROWS_AS(is_prime(Integer(0)), std::invalid_argument);
}

TEST_CASE("divisors are sorted, bounded and complete") {
  const auto f = factorize(Integer(360));
  const auto ds = divisors(f);
  REQUIRE(ds.size() == 24);  // (3+1)(2+1)(1+1)
  REQUIRE(ds.front() == 1);
  REQUIRE(ds.back() == 360);
  for (std::size_t i = 1; i < ds.size(); ++i) {
    REQUIRE(ds[i - 1] < ds[i]);
    REQUIRE(360 % ds[i] == 0);
  }
  REQUIRE(divisors(factorize(Integer(1))) == std::vector<Integer>{1});

  std::mt19937_64 rng(0x5eedd1f5);
  std::uniform_int_distribution<std::uint64_t> draw(1, 100000);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = draw(rng);
    const auto fn = factorize(Integer(n));
    std::vector<Integer> expected;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) expected.push_back(d);
    REQUIRE(divisors(fn) == expected);
  }
}

TEST_CASE("sigma closed form equals direct divisor sums") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto f = factorize(Integer(n));
    Integer s0 = 0, s1 = 0, s2 = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) {
        s0 += 1;
        s1 += d;
        s2 += Integer(d) * d;
      }
    REQUIRE(sigma(f, 0) == s0);
    REQUIRE(sigma(f, 1) == s1);
    REQUIRE(sigma(f, 2) == s2);
  }
  const auto f12 = factorize(Integer(12));
  REQUIRE(sigma(f12, 0) == 6);
  REQUIRE(sigma(f12, 1) == 28);
  REQUIRE(sigma(f12, 2) == 210);
  // 8128 is perfect: sigma1 = 2n
  REQUIRE(sigma(factorize(Integer(8128)), 1) == 16256);
  REQUIRE_THROWS_AS(sigma(f12, 3), std::invalid_argument);
}

TEST_CASE("divisor_stats bundles the sums") {
  const auto s = divisor_stats(Integer(12), true);
  REQUIRE(s.sigma0 == 6);
  REQUIRE(s.sigma1 == 28);
  REQUIRE(s.sigma2 == 210);
  REQUIRE(s.divisors.has_value());
  REQUIRE(*s.divisors == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  REQUIRE_FALSE(divisor_stats(Integer(12)).divisors.has_value());
}

TEST_CASE("sigma sieve agrees with per-n factorization") {
  SECTION("low window") {
    const auto block = sigma_sieve(1, 5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      const auto f = factorize(Integer(n));
      REQUIRE(Integer(block.s0(n)) == sigma(f, 0));
      REQUIRE(Integer(block.s1(n)) == sigma(f, 1));
      REQUIRE(Integer(block.s2(n)) == sigma(f, 2));
    }
  }
  SECTION("high window not starting at 1") {
    const std::uint64_t lo = 1'000'000, hi = 1'002'000;
    const auto block = sigma_sieve(lo, hi);
    for (std::uint64_t n = lo; n <= hi; n += 97) {
      const auto f = factorize(Integer(n));
      REQUIRE(Integer(block.s1(n)) == sigma(f, 1));
      REQUIRE(Integer(block.s2(n)) == sigma(f, 2));
    }
  }
  SECTION("output is independent of threading and segmentation") {
    const auto a = sigma_sieve(1, 30000, {.segment_size = 1u << 12, .threads = 1});
    const auto b = sigma_sieve(1, 30000, {.segment_size = 777, .threads = 4});
    REQUIRE(a.sigma0 == b.sigma0);
    REQUIRE(a.sigma1 == b.sigma1);
    REQUIRE(a.sigma2 == b.sigma2);
  }
  SECTION("domain") {
    REQUIRE_THROWS_AS(sigma_sieve(0, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(sigma_sieve(10, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(sigma_sieve(1, kSigmaSieveMaxHi + 1), std::invalid_argument);
  }
}
