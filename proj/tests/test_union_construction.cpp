#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "dichromate/union_construction.hpp"

using namespace dichromate;

namespace {

RatMatrix rat(std::size_t rows, std::size_t cols, std::vector<long> values) {
  std::vector<Rational> entries(values.begin(), values.end());
  return RatMatrix(rows, cols, std::move(entries));
}

EpsPoly eps(int degree) { return EpsPoly::monomial(1, degree); }

RealizedOM random_standard_om(std::mt19937& rng, std::size_t max_cols) {
  std::uniform_int_distribution<std::size_t> cols_d(1, max_cols);
  const std::size_t cols = cols_d(rng);
  std::uniform_int_distribution<std::size_t> rows_d(1, std::min<std::size_t>(cols, 3));
  while (true) {
    const RatMatrix m = oracle::random_rational_matrix(rng, rows_d(rng), cols, 1, false);
    if (rank_rat(m) > 0) return standardize(realize(m));
  }
}

std::vector<Mask> lattice_supports(const FaceLattice& l) {
  std::vector<Mask> out;
  for (const auto& f : l.faces()) out.push_back(f.support);
  return out;
}

}  // namespace

TEST_CASE("build_hat: coloop") {
  const HatMatroid h = build_hat(realize(rat(1, 1, {1})));
  CHECK(h.n == 1);
  CHECK(h.r == 1);
  CHECK(h.a == 0b10);
  CHECK(h.b == 0);
  CHECK(h.hat.rank() == 1);
  CHECK(h.hat.matrix() == to_eps(rat(1, 2, {1, 1})));
}

TEST_CASE("build_hat: digon") {
  const HatMatroid h = build_hat(realize(rat(1, 2, {1, -1})));
  CHECK(h.n == 2);
  CHECK(h.a == 0b0100);
  CHECK(h.b == 0b1000);
  CHECK(h.hat.rank() == 2);
  const EpsMatrix& m = h.hat.matrix();
  REQUIRE(m.rows() == 2);
  CHECK(m(0, 0) == EpsPoly(1));
  CHECK(m(0, 1) == EpsPoly(-1));
  CHECK(m(0, 2) == EpsPoly(1));
  CHECK(m(0, 3) == EpsPoly());
  CHECK(m(1, 0) == eps(3));
  CHECK(m(1, 1) == eps(2));
  CHECK(m(1, 2) == EpsPoly());
  CHECK(m(1, 3) == eps(0));
}

TEST_CASE("build_hat: empty ground set and non-standard input") {
  const RealizedOM empty(EpsMatrix(0, 0), Chirotope(0, 0, {1}));
  const HatMatroid h = build_hat(empty);
  CHECK(h.hat.size() == 0);
  CHECK_THROWS_AS(build_hat(realize(rat(1, 2, {0, 1}))), ContractViolation);
}

TEST_CASE("Laplace-expanded chirotope equals the generic determinant route") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const RealizedOM base = realize(oracle::random_rational_matrix(rng, 1 + trial % 3, 1 + trial % 3 + (trial / 3) % 3));
    // Every basis in turn.
    for (Mask b : base.chirotope().bases()) {
      const RealizedOM om = standardize(base, elements_of(b));
      const HatMatroid h = build_hat(om);
      CHECK(h.hat.chirotope() == chirotope_from_matrix(h.hat.matrix()));
    }
  }
}

TEST_CASE("minor examples") {
  const HatMatroid coloop = build_hat(realize(rat(1, 1, {1})));
  const RealizedOM m1 = minor(coloop.hat, coloop.a, coloop.b);
  CHECK(m1.size() == 1);
  CHECK(m1.chirotope() == coloop.base.chirotope());

  const RealizedOM same = minor(coloop.base, 0, 0);
  CHECK(same.chirotope() == coloop.base.chirotope());

  const HatMatroid digon = build_hat(realize(rat(1, 2, {1, -1})));
  const RealizedOM m2 = minor(digon.hat, digon.b, digon.a);
  CHECK(m2.chirotope() == realize(rat(1, 2, {1, 1})).chirotope());
  const RealizedOM m3 = minor(digon.hat, digon.a, digon.b);
  CHECK(m3.chirotope() == digon.base.chirotope());

  CHECK_THROWS_AS(minor(digon.hat, 0b1, 0b1), ContractViolation);
  CHECK_THROWS_AS(minor(digon.hat, bit(7), 0), DimensionError);
}

TEST_CASE("minors of a rational matrix match deletion and contraction by rank") {
  std::mt19937 rng(32);
  std::uniform_int_distribution<Mask> pick(0, 63);
  for (int trial = 0; trial < 60; ++trial) {
    const RealizedOM om = realize(oracle::random_rational_matrix(rng, 1 + trial % 3, 6, 1, false));
    const RatMatrix m = *to_rational(om.matrix());
    const Mask del = pick(rng);
    const Mask con = pick(rng) & ~del;
    const Mask rest = om.ground() & ~del & ~con;
    if (rest == 0) continue;
    RealizedOM mm = [&] {
      return minor(om, del, con);
    }();
    const std::vector<std::size_t> rest_elems = elements_of(rest);
    REQUIRE(mm.size() == rest_elems.size());
    // Rank in M/C \ D of S is rank(S u C) - rank(C).
    const std::size_t rc = rank_rat(m.select_columns(elements_of(con)));
    for (Mask s = 0; s < bit(rest_elems.size()); ++s) {
      Mask original = con;
      for (auto j : elements_of(s)) original |= bit(rest_elems[j]);
      CHECK(mm.rank_of(s) == rank_rat(m.select_columns(elements_of(original))) - rc);
    }
  }
}

TEST_CASE("extracted minors of the union matroid are M and its dual") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const RealizedOM om = random_standard_om(rng, 5);
    const HatMatroid h = build_hat(om);
    CHECK(minor(h.hat, h.a, h.b).chirotope() == om.chirotope());
    if (om.rank() < om.size()) {
      CHECK(minor(h.hat, h.b, h.a).chirotope() == h.dual.chirotope());
    }
  }
}

TEST_CASE("lifting examples") {
  const HatMatroid coloop = build_hat(realize(rat(1, 1, {1})));
  CHECK(lift_primal(SignVector(1), coloop) == SignVector(2));
  CHECK(lift_primal(SignVector::parse("+"), coloop).to_string() == "++");

  const HatMatroid digon = build_hat(realize(rat(1, 2, {1, -1})));
  CHECK(lift_primal(SignVector(2), digon) == SignVector(4));
  CHECK_THROWS_AS(lift_primal(SignVector::parse("++"), digon), ContractViolation);
  CHECK(lift_dual(SignVector::parse("++"), digon).to_string() == "++0+");
  CHECK_THROWS_AS(lift_dual(SignVector::parse("+"), digon), DimensionError);

  const HatMatroid coloops = build_hat(realize(rat(2, 2, {1, 0, 0, 1})));
  CHECK(coloops.dual_nonneg_cocircuits.empty());
  CHECK(lift_dual(SignVector(2), coloops) == SignVector(4));
}

TEST_CASE("restriction examples") {
  const HatMatroid coloop = build_hat(realize(rat(1, 1, {1})));
  const Restriction zero = restrict_covector(SignVector(2), coloop);
  CHECK(zero.side == Side::Primal);
  CHECK(*zero.covector == SignVector(1));
  const Restriction r1 = restrict_covector(SignVector::parse("++"), coloop);
  CHECK(r1.side == Side::Primal);
  CHECK(r1.covector->to_string() == "+");

  const HatMatroid digon = build_hat(realize(rat(1, 2, {1, -1})));
  const Restriction r2 = restrict_covector(SignVector::parse("++0+"), digon);
  CHECK(r2.side == Side::Dual);
  CHECK(r2.covector->to_string() == "++");
  CHECK(restrict_covector(SignVector::parse("++++"), digon).side == Side::Neither);
  CHECK_THROWS_AS(restrict_covector(SignVector::parse("-+0+"), digon), ContractViolation);
}

TEST_CASE("union matroid lattice equals the nonnegative vectors orthogonal to its circuits") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const RealizedOM om = random_standard_om(rng, 4);
    const HatMatroid h = build_hat(om);
    const FaceLattice l = nonneg_face_lattice(h.hat);
    // Circuits from the chirotope of the generic determinant route.
    const auto circuits = oracle::circuits_by_chirotope(chirotope_from_matrix(h.hat.matrix()));
    auto expected = oracle::nonneg_covectors_by_orthogonality(h.hat.size(), circuits);
    auto got = lattice_supports(l);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("lifts land in the union lattice with equal rank and Moebius value") {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const RealizedOM om = random_standard_om(rng, 5);
    const HatMatroid h = build_hat(om);
    const FaceLattice hat = nonneg_face_lattice(h.hat);
    const FaceLattice primal = nonneg_face_lattice(h.base);
    const FaceLattice dual = nonneg_face_lattice(h.dual);
    for (const auto& f : primal.faces()) {
      const SignVector lifted = lift_primal(f.covector, h);
      const Face* g = hat.find(lifted.support());
      REQUIRE(g != nullptr);
      CHECK(g->rank == f.rank);
      CHECK(g->mobius == f.mobius);
      const Restriction back = restrict_covector(lifted, h);
      CHECK(back.side == Side::Primal);
      CHECK(*back.covector == f.covector);
    }
    for (const auto& f : dual.faces()) {
      const SignVector lifted = lift_dual(f.covector, h);
      const Face* g = hat.find(lifted.support());
      REQUIRE(g != nullptr);
      CHECK(g->rank == f.rank);
      CHECK(g->mobius == f.mobius);
    }
    for (const auto& g : hat.faces()) {
      const Restriction r = restrict_covector(g.covector, h);
      if (r.side == Side::Primal) CHECK(primal.contains(r.covector->support()));
      if (r.side == Side::Dual) CHECK(dual.contains(r.covector->support()));
    }
  }
}
