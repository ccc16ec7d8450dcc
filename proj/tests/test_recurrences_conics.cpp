#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "biharmonic/conics.hpp"
#include "biharmonic/recurrences.hpp"

using namespace biharmonic;

using Pair = std::pair<std::uint64_t, std::uint64_t>;

TEST_CASE("quadratic ring elements") {
  const QuadraticInt x(3, 2, 1);  // 2*sqrt(3)
  REQUIRE(x.square() == 12);
  REQUIRE(x.times_sqrt_w() == QuadraticInt(3, 6, 0));
  REQUIRE(QuadraticInt(3, 5, 0).times_sqrt_w() == QuadraticInt(3, 5, 1));
  REQUIRE(QuadraticInt(7, 3, 1).square() == 63);

  SECTION("zero is canonical regardless of requested parity") {
    REQUIRE(QuadraticInt(5, 0, 1) == QuadraticInt::zero(5));
    REQUIRE(QuadraticInt(5, 0, 1).parity() == 0);
  }
  SECTION("subtraction") {
    REQUIRE(QuadraticInt(3, 7, 1) - QuadraticInt(3, 2, 1) ==
            QuadraticInt(3, 5, 1));
    REQUIRE(QuadraticInt::zero(3) - QuadraticInt(3, 2, 1) ==
            QuadraticInt(3, -2, 1));
    REQUIRE(QuadraticInt(3, 2, 1) - QuadraticInt::zero(3) ==
            QuadraticInt(3, 2, 1));
    REQUIRE_THROWS_AS(QuadraticInt(3, 1, 0) - QuadraticInt(3, 1, 1),
                      std::logic_error);
    REQUIRE_THROWS_AS(QuadraticInt(3, 1, 0) - QuadraticInt(5, 1, 0),
                      std::invalid_argument);
  }
  SECTION("w = 0 rejected") {
    REQUIRE_THROWS_AS(QuadraticInt(0, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("theta is the degree-2 Chebyshev polynomial") {
  REQUIRE(chebyshev_t2(Integer(3)) == 17);
  REQUIRE(chebyshev_t2(Integer(0)) == -1);
  REQUIRE(chebyshev_t2(Rational(3, 2)) == Rational(7, 2));
  REQUIRE(chebyshev_t2(QuadraticInt(3, 2, 1)) == 23);
  REQUIRE(chebyshev_t2(QuadraticInt::unit(9)) == 1);
}

TEST_CASE("u-orbits for small w") {
  SECTION("w = 1 cycles with period 3") {
    const auto u = u_sequence(1, 12);
    for (std::size_t n = 0; n + 3 <= 12; ++n) REQUIRE(u[n + 3] == u[n]);
    REQUIRE(u[0] == 0);
    REQUIRE(u[1] == 1);
    REQUIRE(u[2] == 1);
  }
  SECTION("w = 2 cycles with period 4") {
    const auto u = u_sequence(2, 12);
    for (std::size_t n = 0; n + 4 <= 12; ++n) REQUIRE(u[n + 4] == u[n]);
    REQUIRE(u[2] == 2);
    REQUIRE(u[3] == 1);
  }
  SECTION("w = 3 cycles with period 6") {
    const auto u = u_sequence(3, 18);
    for (std::size_t n = 0; n + 6 <= 18; ++n) REQUIRE(u[n + 6] == u[n]);
    REQUIRE(u[2] == 3);
    REQUIRE(u[3] == 4);
    REQUIRE(u[4] == 3);
    REQUIRE(u[5] == 1);
  }
  SECTION("w = 4 gives the squares") {
    const auto u = u_sequence(4, 30);
    for (std::size_t n = 0; n <= 30; ++n) REQUIRE(u[n] == Integer(n) * n);
  }
  SECTION("w = 9 gives squared bisected Fibonacci numbers") {
    const auto u = u_sequence(9, 5);
    REQUIRE(u == std::vector<Integer>{0, 1, 9, 64, 441, 3025});
  }
  SECTION("w = 0 rejected") {
    REQUIRE_THROWS_AS(u_sequence(0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(u_sequence_order3(0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(a_sequence(0, 5), std::invalid_argument);
  }
}

TEST_CASE("order-3 form generates the same orbit") {
  for (std::uint64_t w = 1; w <= 50; ++w) {
    CAPTURE(w);
    REQUIRE(u_sequence(w, 200) == u_sequence_order3(w, 200));
  }
}

TEST_CASE("a-orbit squares to the u-orbit") {
  const auto a = a_sequence(9, 5);
  REQUIRE(a[2] == QuadraticInt(9, 1, 1));
  REQUIRE(a[3] == QuadraticInt(9, 8, 0));
  REQUIRE(a[4] == QuadraticInt(9, 7, 1));
  REQUIRE(a[5] == QuadraticInt(9, 55, 0));

  for (std::uint64_t w = 1; w <= 50; ++w) {
    CAPTURE(w);
    const auto u = u_sequence(w, 100);
    const auto aa = a_sequence(w, 100);
    for (std::size_t n = 0; n <= 100; ++n) REQUIRE(aa[n].square() == u[n]);
    REQUIRE(theta_u_link(w, 100));
  }
}

TEST_CASE("conic membership") {
  SECTION("consecutive a-pairs lie on C(w)") {
    for (const std::uint64_t w : {1, 2, 3, 4, 5, 9, 16, 25, 50}) {
      const ConicId c{ConicKind::C, w};
      const auto a = a_sequence(w, 8);
      for (std::size_t n = 1; n <= 8; ++n) {
        CAPTURE(w, n);
        REQUIRE(conic_contains(c, a[n], a[n - 1]));
      }
    }
  }
  SECTION("consecutive u-pairs lie on C2(w), shifted pairs on C3(w)") {
    for (const std::uint64_t w : {3, 4, 5, 9}) {
      const ConicId c2{ConicKind::C2, w}, c3{ConicKind::C3, w};
      const auto u = u_sequence(w, 8);
      for (std::size_t n = 1; n <= 8; ++n) {
        CAPTURE(w, n);
        const Rational x = u[n], y = u[n - 1];
        REQUIRE(conic_contains(c2, x, y));
        REQUIRE(conic_contains(c3, 2 * x - 1, 2 * y - 1));
      }
    }
  }
  SECTION("off-conic points") {
    for (const std::uint64_t w : {1, 2, 3, 4, 7, 12}) {
      CAPTURE(w);
      REQUIRE_FALSE(conic_contains({ConicKind::C, w}, QuadraticInt::unit(w),
                                   QuadraticInt::unit(w)));
      REQUIRE_FALSE(conic_contains({ConicKind::C2, w}, Rational(2), Rational(2)));
      REQUIRE_FALSE(conic_contains({ConicKind::C3, w}, Rational(2), Rational(2)));
    }
  }
  SECTION("each overload accepts only its own conics") {
    REQUIRE_THROWS_AS(conic_contains({ConicKind::C2, 3}, QuadraticInt::unit(3),
                                     QuadraticInt::unit(3)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(conic_contains({ConicKind::C, 3}, Rational(1), Rational(0)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(conic_contains({ConicKind::C, 3}, QuadraticInt::unit(5),
                                     QuadraticInt::unit(5)),
                      std::invalid_argument);
  }
  SECTION("correspondence checks pass across w") {
    for (const std::uint64_t w : {1, 2, 3, 4, 5, 9, 16, 25, 50}) {
      CAPTURE(w);
      REQUIRE(conic_maps_check(w, 40));
    }
  }
}

TEST_CASE("exhaustive C2 solutions") {
  SECTION("w = 1 has only the fixed point") {
    REQUIRE(solve_c2_bruteforce(1, 50) == std::vector<Pair>{{1, 1}});
  }
  SECTION("w = 4 pairs consecutive squares") {
    std::vector<Pair> expected;
    for (std::uint64_t k = 2; k * k <= 120; ++k) {
      expected.emplace_back((k - 1) * (k - 1), k * k);
      expected.emplace_back(k * k, (k - 1) * (k - 1));
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(solve_c2_bruteforce(4, 120) == expected);
  }
  SECTION("thread count does not change the result") {
    REQUIRE(solve_c2_bruteforce(3, 500, 1) == solve_c2_bruteforce(3, 500, 4));
  }
  SECTION("range guards") {
    REQUIRE_THROWS_AS(solve_c2_bruteforce(0, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(solve_c2_bruteforce(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(solve_c2_bruteforce(1, 2'000'000'001ULL),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(solve_c2_bruteforce(2'000'000'000ULL, 100'000),
                      std::invalid_argument);
  }
}

TEST_CASE("recurrence pairs within a window") {
  REQUIRE(consecutive_u_pairs(3, 10) ==
          std::vector<Pair>{{1, 3}, {3, 1}, {3, 4}, {4, 3}});
  REQUIRE(consecutive_u_pairs(9, 5000) ==
          std::vector<Pair>{{9, 1}, {64, 9}, {441, 64}, {3025, 441}});
  REQUIRE(consecutive_u_pairs(1, 10) == std::vector<Pair>{{1, 1}});
  REQUIRE_THROWS_AS(consecutive_u_pairs(0, 10), std::invalid_argument);
}

TEST_CASE("brute-force and recurrence solution sets agree") {
  for (std::uint64_t w = 1; w <= 30; ++w) {
    CAPTURE(w);
    const auto report = check_c2_solutions(w, 1500);
    REQUIRE(report.brute_only.empty());
    REQUIRE(report.recurrence_only.empty());
    REQUIRE(report.complete);
  }
}
