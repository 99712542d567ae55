#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace dichromate;

namespace {

RatMatrix rat(std::size_t rows, std::size_t cols, std::vector<long> values) {
  std::vector<Rational> entries(values.begin(), values.end());
  return RatMatrix(rows, cols, std::move(entries));
}

EpsPoly eps(int degree) { return EpsPoly::monomial(1, degree); }

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("4/-6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("EpsPoly arithmetic and sign") {
  const EpsPoly p = eps(2) - eps(3);
  CHECK(p.sign() == 1);
  CHECK((-p).sign() == -1);
  CHECK(EpsPoly().sign() == 0);
  CHECK(EpsPoly().is_zero());
  CHECK(EpsPoly(5).is_constant());
  CHECK_FALSE(p.is_constant());
  CHECK(p.lowest_degree() == 2);
  CHECK(p.highest_degree() == 3);
  CHECK((p + eps(3)) == eps(2));
  CHECK((eps(1) * eps(2)) == eps(3));
  CHECK((p - p).is_zero());

  // (1 + e)(1 - e) = 1 - e^2
  const EpsPoly a = EpsPoly(1) + eps(1);
  const EpsPoly b = EpsPoly(1) - eps(1);
  CHECK((a * b) == EpsPoly(1) - eps(2));
  CHECK(exact_divide(a * b, a) == b);
  CHECK_THROWS_AS(exact_divide(EpsPoly(1), a), ContractViolation);
  CHECK_THROWS_AS(exact_divide(EpsPoly(1), EpsPoly()), ContractViolation);
}

TEST_CASE("det_sign_eps examples") {
  EpsMatrix id(2, 2);
  id(0, 0) = 1;
  id(1, 1) = 1;
  CHECK(det_sign_eps(id) == 1);

  EpsMatrix ones(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones(i, j) = 1;
  CHECK(det_sign_eps(ones) == 0);

  EpsMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = eps(3);
  m(1, 1) = eps(2);
  CHECK(det_sign_eps(m) == 1);
  CHECK(bareiss_determinant(m) == eps(2) - eps(3));

  CHECK_THROWS_AS(det_sign_eps(EpsMatrix(2, 3)), DimensionError);
  CHECK(det_sign_eps(EpsMatrix(0, 0)) == 1);
}

TEST_CASE("Bareiss determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const RatMatrix m = oracle::random_rational_matrix(rng, n, n);
    CHECK(det_rat(m) == oracle::leibniz_determinant(m));
  }
}

TEST_CASE("EpsPoly determinants agree with the Leibniz expansion") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> degree(0, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 4;
    EpsMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = EpsPoly::monomial(coeff(rng), degree(rng)) + EpsPoly::monomial(coeff(rng), degree(rng));
    const EpsPoly expected = oracle::leibniz_determinant(m);
    CHECK(bareiss_determinant(m) == expected);
    CHECK(det_sign_eps(m) == expected.sign());
  }
}

TEST_CASE("rank examples") {
  CHECK(rank_rat(RatMatrix(0, 0)) == 0);
  CHECK(rank_rat(rat(2, 2, {1, -1, -1, 1})) == 1);
  CHECK(rank_rat(rat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == 3);
  CHECK(rank_rat(RatMatrix(3, 4)) == 0);
}

TEST_CASE("rank agrees with the largest nonsingular minor and with the transpose") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = 1 + (trial / 3) % 4;
    // Small entries make rank deficiency common.
    const RatMatrix m = oracle::random_rational_matrix(rng, rows, cols, 1, false);
    const std::size_t r = rank_rat(m);
    CHECK(r == oracle::minor_rank(m));
    CHECK(r == rank_rat(m.transpose()));
    CHECK(r == rank_eps(to_eps(m)));
  }
}

TEST_CASE("standard_form examples") {
  // Digon incidence after row reduction: (1 | -1).
  const RatMatrix digon = rat(2, 2, {1, -1, -1, 1});
  const StandardForm f = standard_form(digon, std::vector<std::size_t>{0});
  CHECK(f.rank == 1);
  CHECK(f.perm == std::vector<std::size_t>{0, 1});
  CHECK(f.c == rat(1, 1, {-1}));

  // Directed 3-cycle incidence: arcs 0->1, 1->2, 2->0.
  const RatMatrix cycle = rat(3, 3, {1, 0, -1, -1, 1, 0, 0, -1, 1});
  const StandardForm g = standard_form(cycle, std::vector<std::size_t>{0, 1});
  CHECK(g.c == rat(2, 1, {-1, -1}));
  CHECK(g.assemble() == rat(2, 3, {1, 0, -1, 0, 1, -1}));

  // Default basis is the lexicographically smallest one.
  const StandardForm h = standard_form(rat(2, 3, {0, 1, 1, 0, 2, 3}));
  CHECK(h.perm == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("standard_form rejects invalid bases") {
  const RatMatrix cycle = rat(3, 3, {1, 0, -1, -1, 1, 0, 0, -1, 1});
  CHECK_THROWS_AS(standard_form(cycle, std::vector<std::size_t>{0}), InvalidBasisError);
  CHECK_THROWS_AS(standard_form(cycle, std::vector<std::size_t>{0, 0}), InvalidBasisError);
  CHECK_THROWS_AS(standard_form(cycle, std::vector<std::size_t>{0, 5}), InvalidBasisError);
  const RatMatrix parallel = rat(2, 3, {1, 2, 0, 0, 0, 1});
  CHECK_THROWS_AS(standard_form(parallel, std::vector<std::size_t>{0, 1}), InvalidBasisError);
}

TEST_CASE("standard_form preserves the independent sets") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = rows + (trial / 3) % 4;
    const RatMatrix m = oracle::random_rational_matrix(rng, rows, cols, 1, false);
    if (rank_rat(m) == 0) continue;
    const StandardForm f = standard_form(m);
    const RatMatrix s = f.assemble();
    REQUIRE(s.rows() == f.rank);
    for (Mask sub = 0; sub < bit(cols); ++sub) {
      std::vector<std::size_t> original;
      std::vector<std::size_t> permuted;
      for (std::size_t j = 0; j < cols; ++j)
        if (contains(sub, f.perm[j])) {
          original.push_back(f.perm[j]);
          permuted.push_back(j);
        }
      CHECK(rank_rat(m.select_columns(original)) == rank_rat(s.select_columns(permuted)));
    }
  }
}
