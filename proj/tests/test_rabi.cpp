#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "iongate/rabi.hpp"

using namespace iongate;

namespace {
// values frozen from an independent operator-exponential evaluation of
// 0.5 <m| exp(i eta (a + a^dag)) |m+k> with the (-i)^k phase stripped
struct Frozen {
  double eta;
  int k;
  int m;
  double value;
};
constexpr Frozen kFrozen[] = {
    {0.96920, 1, 0, 0.302974755962181},
    {0.96920, 0, 1, 0.018959792607072},
    {0.96920, 0, 0, 0.312602926085618},
    {0.56625, 1, 1, 0.286405517927914},
    {0.17379, 1, 0, 0.085592615436971},
    {0.5, 0, 0, 0.441248451292298},
    {0.3, 2, 0, 0.030419653599065},
};
}  // namespace

TEST_CASE("rabi frequencies reproduce frozen reference values") {
  for (const Frozen& f : kFrozen) {
    const RabiQuery q{f.eta, f.k, f.m};
    CHECK(std::abs(rabi_sum(q) - f.value) < 1e-12);
    CHECK(std::abs(rabi_laguerre(q) - f.value) < 1e-12);
  }
}

TEST_CASE("binomial sum and laguerre closed form agree everywhere") {
  for (double eta = 0.05; eta < 0.96; eta += 0.05) {
    for (int k = 0; k <= 5; ++k) {
      for (int m = 0; m <= 20; ++m) {
        const RabiQuery q{eta, k, m};
        const double a = rabi_sum(q);
        const double b = rabi_laguerre(q);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)));
      }
    }
  }
}

TEST_CASE("both closed forms agree with the exponential oracle") {
  for (double eta : {0.15, 0.55, 0.95}) {
    for (int k : {0, 1, 3}) {
      for (int m : {0, 2, 7}) {
        const RabiQuery q{eta, k, m};
        const double oracle = rabi_oracle(q, m + k + 40);
        CHECK(std::abs(rabi_sum(q) - oracle) < 1e-10);
        CHECK(std::abs(rabi_laguerre(q) - oracle) < 1e-10);
      }
    }
  }
}

TEST_CASE("the frequency changes sign at laguerre roots") {
  // L_2(0.95^2) < 0, so the m=2 carrier frequency is negative there
  const RabiQuery q{0.95, 0, 2};
  CHECK(rabi_sum(q) < 0.0);
  CHECK(rabi_oracle(q, 50) < 0.0);
  // lowest-pair frequencies have no sign changes
  for (double eta = 0.05; eta < 0.96; eta += 0.05)
    for (int k = 0; k <= 5; ++k) CHECK(rabi_sum({eta, k, 0}) > 0.0);
}

TEST_CASE("oracle rejects truncations that cannot hold the pair") {
  CHECK_THROWS_AS(rabi_oracle({0.5, 2, 3}, 4), std::invalid_argument);
  CHECK_NOTHROW(rabi_oracle({0.5, 2, 3}, 45));
}

TEST_CASE("rabi queries validate their arguments") {
  CHECK_THROWS_AS(rabi_sum({-0.1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(rabi_sum({0.5, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(rabi_sum({0.5, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(rabi_laguerre({0.5, 0, -1}), std::invalid_argument);
}

TEST_CASE("associated laguerre recurrence matches small closed forms") {
  const double x = 0.3;
  CHECK(laguerre_assoc(0, 3, x) == 1.0);
  CHECK(laguerre_assoc(1, 2, x) == doctest::Approx(3.0 - x).epsilon(1e-14));
  CHECK(laguerre_assoc(2, 0, x) ==
        doctest::Approx(1.0 - 2.0 * x + 0.5 * x * x).epsilon(1e-14));
  CHECK(laguerre_assoc(3, 1, x) ==
        doctest::Approx(4.0 - 6.0 * x + 2.0 * x * x - x * x * x / 6.0).epsilon(1e-14));
  CHECK_THROWS_AS(laguerre_assoc(-1, 0, x), std::invalid_argument);
}
