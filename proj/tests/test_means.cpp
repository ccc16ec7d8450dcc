#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "biharmonic/means.hpp"

using namespace biharmonic;

namespace {

std::vector<Rational> random_list(std::mt19937_64& rng, std::size_t min_len,
                                  std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> part(1, 60);
  const std::size_t target = len(rng);
  std::set<Rational> seen;
  while (seen.size() < target) seen.insert(Rational(part(rng), part(rng)));
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("list means on fixed inputs") {
  const std::vector<Rational> xs{1, 2, 3};
  REQUIRE(arithmetic_mean(xs) == 2);
  REQUIRE(harmonic_mean(xs) == Rational(18, 11));
  REQUIRE(contraharmonic_mean(xs) == Rational(14, 6));
  REQUIRE(biharmonic_mean(xs) ==
          (Rational(18, 11) + Rational(7, 3)) / 2);

  const std::vector<Rational> halves{Rational(1, 2), Rational(3, 2)};
  REQUIRE(arithmetic_mean(halves) == 1);
  REQUIRE(harmonic_mean(halves) == Rational(3, 4));
  REQUIRE(contraharmonic_mean(halves) == Rational(5, 4));
  REQUIRE(biharmonic_mean(halves) == 1);  // (H + C)/2 collapses for pairs

  REQUIRE(arithmetic_mean({Rational(7)}) == 7);
  REQUIRE(harmonic_mean({Rational(7)}) == 7);
  REQUIRE(contraharmonic_mean({Rational(7)}) == 7);
}

TEST_CASE("geometric mean distinguishes exact values from radicals") {
  SECTION("perfect powers come out exact") {
    const auto g = geometric_mean({Rational(4), Rational(9)});
    REQUIRE(g.is_exact());
    REQUIRE(g.exact_value == 6);
    REQUIRE(g.index == 2);
    REQUIRE(g.approx == Catch::Approx(6.0).epsilon(1e-12));

    const auto f = geometric_mean({Rational(1, 4), Rational(1, 9)});
    REQUIRE(f.is_exact());
    REQUIRE(f.exact_value == Rational(1, 6));

    const auto single = geometric_mean({Rational(22, 7)});
    REQUIRE(single.is_exact());
    REQUIRE(single.exact_value == Rational(22, 7));

    const auto cubes = geometric_mean({Rational(2), Rational(4), Rational(27)});
    REQUIRE(cubes.is_exact());
    REQUIRE(cubes.exact_value == 6);  // 2*4*27 = 216 = 6^3
  }
  SECTION("everything else stays a radical") {
    const auto g = geometric_mean({Rational(2), Rational(3)});
    REQUIRE_FALSE(g.is_exact());
    REQUIRE(g.radicand == 6);
    REQUIRE(g.index == 2);
    REQUIRE(g.approx == Catch::Approx(std::sqrt(6.0)).epsilon(1e-12));
  }
}

TEST_CASE("domain errors") {
  REQUIRE_THROWS_AS(arithmetic_mean({}), std::invalid_argument);
  REQUIRE_THROWS_AS(harmonic_mean({}), std::invalid_argument);
  REQUIRE_THROWS_AS(geometric_mean({}), std::invalid_argument);
  REQUIRE_THROWS_AS(contraharmonic_mean({Rational(1), Rational(0)}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(biharmonic_mean({Rational(-1)}), std::invalid_argument);
}

TEST_CASE("mean inequality chain on random lists") {
  std::mt19937_64 rng(0x5eed0005);
  for (int i = 0; i < 1000; ++i) {
    const auto xs = random_list(rng, 2, 6);
    const unsigned t = static_cast<unsigned>(xs.size());
    const Rational h = harmonic_mean(xs);
    const Rational a = arithmetic_mean(xs);
    const Rational c = contraharmonic_mean(xs);
    const Rational b = biharmonic_mean(xs);
    Rational product = 1;
    for (const auto& x : xs) product *= x;

    // H <= G <= A, with G compared through exact t-th powers
    REQUIRE(rpow(h, t) <= product);
    REQUIRE(product <= rpow(a, t));
    REQUIRE(a <= c);
    REQUIRE(h <= b);
    REQUIRE(b <= c);
    REQUIRE(b == (h + c) / 2);
    REQUIRE(*std::min_element(xs.begin(), xs.end()) <= h);
    REQUIRE(c <= *std::max_element(xs.begin(), xs.end()));

    // strictness: the entries are distinct, so H < A
    REQUIRE(h < a);
  }

  SECTION("constant lists collapse every mean") {
    const std::vector<Rational> xs{Rational(5, 3), Rational(5, 3), Rational(5, 3)};
    REQUIRE(arithmetic_mean(xs) == Rational(5, 3));
    REQUIRE(harmonic_mean(xs) == Rational(5, 3));
    REQUIRE(contraharmonic_mean(xs) == Rational(5, 3));
    REQUIRE(biharmonic_mean(xs) == Rational(5, 3));
    const auto g = geometric_mean(xs);
    REQUIRE(g.is_exact());
    REQUIRE(g.exact_value == Rational(5, 3));
  }
}

TEST_CASE("means scale linearly") {
  std::mt19937_64 rng(0x5eed0006);
  std::uniform_int_distribution<int> part(1, 40);
  for (int i = 0; i < 1000; ++i) {
    const auto xs = random_list(rng, 2, 5);
    const Rational c(part(rng), part(rng));
    std::vector<Rational> scaled;
    scaled.reserve(xs.size());
    for (const auto& x : xs) scaled.push_back(c * x);

    REQUIRE(arithmetic_mean(scaled) == c * arithmetic_mean(xs));
    REQUIRE(harmonic_mean(scaled) == c * harmonic_mean(xs));
    REQUIRE(contraharmonic_mean(scaled) == c * contraharmonic_mean(xs));
    REQUIRE(biharmonic_mean(scaled) == c * biharmonic_mean(xs));

    const auto g = geometric_mean(xs);
    const auto gs = geometric_mean(scaled);
    const unsigned t = static_cast<unsigned>(xs.size());
    if (g.is_exact() && gs.is_exact())
      REQUIRE(gs.exact_value == c * g.exact_value);
    const Rational r = g.is_exact() ? rpow(g.exact_value, t) : g.radicand;
    const Rational rs = gs.is_exact() ? rpow(gs.exact_value, t) : gs.radicand;
    REQUIRE(rs == rpow(c, t) * r);
  }
}
