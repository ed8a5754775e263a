#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tvgrid/params.hpp"

using namespace tvgrid;

namespace {

// Oracle: full trial factorization; a prime power has one distinct prime.
bool prime_power_oracle(long long p) {
  long long rest = p;
  int distinct = 0;
  for (long long f = 2; f * f <= rest; ++f) {
    if (rest % f == 0) {
      ++distinct;
      while (rest % f == 0) rest /= f;
    }
  }
  if (rest > 1) ++distinct;
  return distinct == 1;
}

}  // namespace

TEST_CASE("required_n matches the stated values") {
  CHECK(required_n(3, 2, 2) == 3);  // the 3x3 array in R^3
  CHECK(required_n(2, 1, 2) == 4);  // (d+1)(p-1)+1 at d=2, p=2
  CHECK(required_n(3, 3, 2) == 3);  // ceil(2 + 1/3)
}

TEST_CASE("required_n reduces to (d+1)(p-1)+1 for one axis") {
  for (int d = 1; d <= 20; ++d) {
    for (int p = 2; p <= 20; ++p) {
      CHECK(required_n(d, 1, p) == (d + 1) * (p - 1) + 1);
    }
  }
}

TEST_CASE("required_n rejects bad input") {
  CHECK_THROWS_AS(required_n(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(required_n(1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(required_n(1, 1, 1), std::invalid_argument);
}

TEST_CASE("prime power decomposition on the stated values") {
  auto four = prime_power_decomposition(4);
  REQUIRE(four.has_value());
  CHECK(four->base == 2);
  CHECK(four->exponent == 2);

  CHECK_FALSE(prime_power_decomposition(6).has_value());

  auto seven = prime_power_decomposition(7);
  REQUIRE(seven.has_value());
  CHECK(seven->base == 7);
  CHECK(seven->exponent == 1);

  CHECK_THROWS_AS(prime_power_decomposition(1), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_decomposition(0), std::invalid_argument);
}

TEST_CASE("prime power test agrees with the factorization oracle to 10^4") {
  for (long long p = 2; p <= 10000; ++p) {
    CAPTURE(p);
    const auto decomposition = prime_power_decomposition(p);
    REQUIRE(decomposition.has_value() == prime_power_oracle(p));
    if (decomposition) {
      long long value = 1;
      for (int e = 0; e < decomposition->exponent; ++e) {
        value *= decomposition->base;
      }
      REQUIRE(value == p);
    }
  }
}

TEST_CASE("target connectivity") {
  CHECK(target_connectivity(3, 2) == 3);
  CHECK(target_connectivity(1, 2) == 1);
  CHECK(target_connectivity(2, 3) == 5);
}

TEST_CASE("join connectivity inequality on the stated values") {
  CHECK(join_connectivity_check(3, 2, 2, 3));        // 3 >= 3
  CHECK_FALSE(join_connectivity_check(3, 2, 2, 2));  // 1 < 3
  for (int d = 1; d <= 6; ++d) {
    for (int p = 2; p <= 6; ++p) {
      const int n = (d + 1) * (p - 1) + 1;  // m = 1 reduces the LHS to n-2
      CHECK(join_connectivity_lhs(1, p, n) == target_connectivity(d, p));
      CHECK(join_connectivity_check(d, 1, p, n));
    }
  }
}

TEST_CASE("the theorem bound always satisfies the join inequality") {
  for (int d = 1; d <= 6; ++d) {
    for (int m = 1; m <= 6; ++m) {
      for (int p = 2; p <= 9; ++p) {
        CAPTURE(d);
        CAPTURE(m);
        CAPTURE(p);
        CHECK(join_connectivity_check(d, m, p, required_n(d, m, p)));
      }
    }
  }
}

TEST_CASE("params validation") {
  CHECK_NOTHROW(validate_params(Params{3, 2, 2, 3}));
  CHECK_THROWS_AS(validate_params(Params{3, 2, 1, 3}), std::invalid_argument);
  const Params params = make_params(2, 2, 3);
  CHECK(params.n == 5);
}
