#include "core/poly.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"

using daa::IntPoly;

TEST_CASE("construction trims and reports degree") {
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly({0, 0, 0}).is_zero());
  CHECK(IntPoly({5, 0, 1, 0}).degree() == 2);
  CHECK(IntPoly({-1, 0, 1}).is_monic());
  CHECK_FALSE(IntPoly({1, 2}).is_monic());
  CHECK(IntPoly::monomial(3) == IntPoly({0, 0, 0, 1}));
}

TEST_CASE("evaluation and arithmetic") {
  const IntPoly p({-288, 24, -12, 1});  // x^3 - 12x^2 + 24x - 288
  CHECK(p(mpz_class(12)) == 0);
  CHECK(p(mpz_class(0)) == -288);

  CHECK(IntPoly({-1, 1}) * IntPoly({1, 1}) == IntPoly({-1, 0, 1}));
  CHECK(IntPoly({-12, 1}) * IntPoly({24, 0, 1}) == p);
  CHECK(IntPoly({1, 2}) + IntPoly({3, -2}) == IntPoly({4}));
  CHECK(IntPoly({1, 1}).shifted(2) == IntPoly({0, 0, 1, 1}));
}

TEST_CASE("scale_roots") {
  CHECK(daa::scale_roots(IntPoly({24, 0, 1}), 3) == IntPoly({216, 0, 1}));
  CHECK(daa::scale_roots(IntPoly({-1, 0, 1}), 2) == IntPoly({-4, 0, 1}));
  const IntPoly p({7, -3, 0, 1});
  CHECK(daa::scale_roots(p, 1) == p);
  CHECK_THROWS_AS(daa::scale_roots(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(daa::scale_roots(IntPoly({1, 2}), 3), std::invalid_argument);

  // q(x) = c^deg · p(x/c), so q(c·x) = c^deg · p(x).
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-8, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPoly q({dist(rng), dist(rng), dist(rng), 1});
    const long c = dist(rng) | 1;  // nonzero
    const IntPoly scaled = daa::scale_roots(q, c);
    const mpz_class x = dist(rng);
    mpz_class cpow = 1;
    for (int i = 0; i < q.degree(); ++i) cpow *= c;
    CHECK(scaled(mpz_class(c * x)) == cpow * q(x));
  }
}

TEST_CASE("divide_by_linear") {
  CHECK(daa::divide_by_linear(IntPoly({-1, 0, 1}), 1) == IntPoly({1, 1}));
  CHECK(daa::divide_by_linear(IntPoly({-288, 24, -12, 1}), 12) == IntPoly({24, 0, 1}));
  CHECK_THROWS_AS(daa::divide_by_linear(IntPoly({1, 0, 1}), 1), std::domain_error);

  // quotient times divisor reproduces the original
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPoly q({dist(rng), dist(rng), dist(rng), 1});
    const mpz_class root = dist(rng);
    const IntPoly p = q * IntPoly(std::vector<mpz_class>{-root, 1});
    CHECK(daa::divide_by_linear(p, root) == q);
  }
}

TEST_CASE("printing") {
  CHECK(IntPoly({-288, 24, -12, 1}).str() == "x^3 - 12x^2 + 24x - 288");
  CHECK(IntPoly({0, 0, 1}).str() == "x^2");
  CHECK(IntPoly({0, -1}).str() == "-x");
  CHECK(IntPoly({}).str() == "0");
  CHECK(IntPoly({42}).str() == "42");
}
