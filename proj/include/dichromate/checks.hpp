#pragma once

// Executable forms of the structural facts the polynomials rest on: minor
// identities of the union matroid, lifting and restriction of covectors,
// rank preservation, exponent identities, the two specialization identities
// and the graphic-case oracles. Each check returns a pass/fail record.

#include <optional>
#include <string>
#include <vector>

#include "dichromate/digraph.hpp"
#include "dichromate/nl_polynomials.hpp"

namespace dichromate {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure found, empty on success
};

// Sum of mu over every lower interval is 1 at the bottom and 0 elsewhere.
CheckResult check_mobius_identity(const FaceLattice& lattice, const std::string& which);
// Lattice rank equals the longest chain length from the bottom.
CheckResult check_chain_rank(const FaceLattice& lattice, const std::string& which);

CheckResult check_minor_identities(const HatMatroid& h);
// Nonnegative cocircuits of M and M* lift to cocircuits of M^ with empty
// negative part.
CheckResult check_cocircuit_lifting(const HatMatroid& h);
// Nonnegative covectors lift into the lattice of M^ with the same rank, and
// restrict back to themselves.
CheckResult check_covector_lifting(const HatMatroid& h, const FaceLattice& hat_lattice);
// A-elements of a B-free nonnegative cocircuit of M^ match their E1 partners
// (and dually).
CheckResult check_parallelism(const HatMatroid& h);
// A-free / B-free members of the lattice of M^ restrict into the dual /
// primal lattices; cocircuits restrict to cocircuits.
CheckResult check_restriction(const HatMatroid& h, const FaceLattice& hat_lattice);
CheckResult check_exponent_identities(const HatMatroid& h, const FaceLattice& hat_lattice);

// Omega(x,0,1) = x^(n-r) psi(x) and Omega(x,1,0) = x^r phi(x).
CheckResult check_specializations(const RealizedOM& om, const HatMatroid& h);
CheckResult check_duality(const RealizedOM& om);

CheckResult check_oracle_agreement(const Digraph& d, std::size_t cap = kDefaultEnumerationCap);
// count(D, k) = k^(|V| - rk) psi(k) for the given k (self-loop free D), or
// count = 0 for every k when D has a self-loop.
CheckResult check_coloring_law(const Digraph& d, const std::vector<unsigned>& ks,
                               std::uint64_t budget = kDefaultColoringBudget);

// Every structural check on one union matroid.
std::vector<CheckResult> check_hat(const RealizedOM& om, const HatMatroid& h);

struct CheckOptions {
  std::optional<std::vector<std::size_t>> basis;  // 0-based; lexicographic if absent
  bool all_bases = false;
  std::size_t cap = kDefaultEnumerationCap;
  std::vector<unsigned> colors{1, 2, 3};
  std::uint64_t coloring_budget = kDefaultColoringBudget;
};

/// Runs the whole suite on om (and, when given, on the digraph it came
/// from). Results with the same name across bases are merged.
std::vector<CheckResult> run_checks(const RealizedOM& om, const std::optional<Digraph>& digraph,
                                    const CheckOptions& options = {});

}  // namespace dichromate
