#include <doctest.h>

#include "oracles.hpp"
#include "superroot/errors.hpp"
#include "superroot/hyperalg.hpp"

using namespace superroot;

TEST_CASE("normal_order") {
  const auto one = normal_order(1, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].a == 1);
  CHECK(one[0].c == 1);
  CHECK(one[0].h_binoms.empty());
  CHECK(one[1].a == 0);
  CHECK(one[1].c == 0);
  REQUIRE(one[1].h_binoms.size() == 1);
  CHECK(one[1].h_binoms[0] == HBinom{0, 1});

  for (std::int64_t k : {0, 1, 4}) {
    const auto left = normal_order(0, k);
    REQUIRE(left.size() == 1);
    CHECK(left[0].a == k);
    CHECK(left[0].c == 0);
    const auto right = normal_order(k, 0);
    REQUIRE(right.size() == 1);
    CHECK(right[0].c == k);
  }

  const auto t = normal_order(2, 3);
  REQUIRE(t.size() == 3);
  for (std::int64_t i = 1; i <= 2; ++i) {
    CHECK(t[static_cast<std::size_t>(i)].h_binoms[0] == HBinom{5 - 2 * i, i});
    CHECK(t[static_cast<std::size_t>(i)].a == 3 - i);
    CHECK(t[static_cast<std::size_t>(i)].c == 2 - i);
  }
  CHECK(verify_commutator_formula(2, 3, 12, 0).ok);
  CHECK_THROWS_AS(normal_order(-1, 0), ParameterError);
}

TEST_CASE("operator model is integral and matches the sl2 relation") {
  // X X_- - X_- X = H on every monomial.
  for (std::int64_t a = 0; a <= 6; ++a) {
    for (std::int64_t b = 0; b <= 6; ++b) {
      const Poly f{{{a, b}, Integer(1)}};
      const Poly lhs = poly_operator::raise(poly_operator::lower(f, 1), 1);
      const Poly rhs = poly_operator::lower(poly_operator::raise(f, 1), 1);
      Poly diff = lhs;
      for (const auto& [e, c] : rhs) diff[e] -= c;
      Integer coeff = diff.count({a, b}) ? diff[{a, b}] : Integer(0);
      CHECK(coeff == a - b);
    }
  }
}

TEST_CASE("bw_multiply") {
  CHECK(bw_multiply(1, 1) == std::make_pair(Integer(2), std::int64_t(2)));
  CHECK(bw_multiply(0, 5) == std::make_pair(Integer(1), std::int64_t(5)));
  const auto [c, e] = bw_multiply(3, 4);
  CHECK(c == 35);
  CHECK(e == 7);
  CHECK(lucas_binom(7, 3, 7) == 0);
  CHECK(c % 7 == 0);
  CHECK_THROWS_AS(bw_multiply(-1, 2), ParameterError);
}

TEST_CASE("bw_multiply agrees with the operator model") {
  for (std::int64_t n = 0; n <= 4; ++n) {
    for (std::int64_t m = 0; m <= 4; ++m) {
      const auto [coeff, total] = bw_multiply(n, m);
      for (std::int64_t b = 0; b <= 10; ++b) {
        const Poly f{{{0, b}, Integer(1)}};
        Poly expected = poly_operator::raise(f, total);
        for (auto& [k, v] : expected) v *= coeff;
        CHECK(poly_operator::raise(poly_operator::raise(f, m), n) == expected);
      }
    }
  }
}

TEST_CASE("lucas_binom") {
  CHECK(lucas_binom(3, 3, 3) == 1);
  CHECK(lucas_binom(12345, 0, 7) == 1);
  CHECK(lucas_binom(5, 1, 5) == 0);
  CHECK(lucas_binom(2, 5, 3) == 0);
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (std::int64_t n = 0; n <= 60; ++n) {
      for (std::int64_t k = 0; k <= n + 2; ++k) {
        CHECK(lucas_binom(n, k, p) == oracle::factorial_binom(n, k) % p);
      }
    }
  }
  CHECK_THROWS_AS(lucas_binom(3, 1, 4), ParameterError);
  CHECK_THROWS_AS(lucas_binom(-1, 1, 3), ParameterError);
}

TEST_CASE("commutator formula sweeps") {
  CHECK(verify_commutator_formula(4, 4, 16, 0).ok);
  CHECK(verify_commutator_formula(4, 4, 16, 3).ok);
  const auto rep = verify_commutator_formula(6, 6, 10, 0);
  CHECK(rep.ok);
  CHECK(rep.cases == 7 * 7 * 66);
  CHECK_THROWS_AS(verify_commutator_formula(1, 1, 1, 4), ParameterError);
}

TEST_CASE("a perturbed shift is caught") {
  const Expander bad = [](std::int64_t m, std::int64_t n) {
    NormalFormSum s = normal_order(m, n);
    for (auto& t : s) {
      for (auto& h : t.h_binoms) h.shift = m + n - h.degree;  // H - m - n + i
    }
    return s;
  };
  const auto rep = verify_commutator_formula(4, 4, 16, 0, bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.counterexample);
  // On 1 the i = 1 term becomes binom(H - 1, 1) = -1 instead of 0.
  CHECK(rep.counterexample->m == 1);
  CHECK(rep.counterexample->n == 1);
  CHECK(rep.counterexample->a == 0);
  CHECK(rep.counterexample->b == 0);
  CHECK(rep.counterexample->lhs != rep.counterexample->rhs);
}
