#pragma once

// The union matroid M^ = M1 u M2 on 2n elements that carries M and its dual
// as complementary minors, and the maps that move nonnegative covectors
// between M, M* and M^.
//
// Ground set layout (0-based): E1 = [0, r), E2 = [r, n), A = [n, n + r),
// B = [n + r, 2n). Element n + i is parallel to i in M1 when i < r and in M2
// when i >= r.

#include <optional>
#include <vector>

#include "dichromate/om_core.hpp"

namespace dichromate {

struct HatMatroid {
  RealizedOM base;  // M in standard form (I_r | C)
  RealizedOM dual;  // M* realized by (-C^T | I_{n-r})
  RealizedOM hat;   // M^ realized by the eps-scaled block matrix
  std::size_t n = 0;
  std::size_t r = 0;
  Mask e1 = 0;
  Mask e2 = 0;
  Mask a = 0;
  Mask b = 0;
  // parallel[x] is the partner of x: A <-> E1 and B <-> E2.
  std::vector<std::size_t> parallel;
  std::vector<Mask> base_nonneg_cocircuits;
  std::vector<Mask> dual_nonneg_cocircuits;

  Mask ground() const { return full_mask(n); }
};

// The 2n-column block matrix whose top r rows are (I_r | C | I_r | 0) and
// whose bottom n - r rows are (-C^T | I_{n-r} | 0 | I_{n-r}) with column i
// (1-based) multiplied by eps^(2n - i).
EpsMatrix hat_matrix(const RatMatrix& c);

/// Chirotope of a matrix whose first `top.rows()` rows are rational and whose
/// remaining rows are rational with column j scaled by eps^degrees[j].
/// Evaluates each maximal minor by Laplace expansion along the top block.
Chirotope two_block_chirotope(const RatMatrix& top, const RatMatrix& bottom,
                              const std::vector<int>& degrees);

// Requires om in standard form; throws ContractViolation otherwise.
HatMatroid build_hat(const RealizedOM& om);

// Deletes and contracts the given elements (disjoint sets). The result keeps
// the surviving elements in their original order and labels.
RealizedOM minor(const RealizedOM& om, Mask delete_set, Mask contract_set);

// True if the nonnegative sign vector is a union of nonnegative cocircuit
// supports, i.e. a member of the nonnegative covector lattice.
bool is_nonneg_covector(Mask support, const std::vector<Mask>& nonneg_cocircuits);

SignVector lift_primal(const SignVector& x, const HatMatroid& h);
SignVector lift_dual(const SignVector& x, const HatMatroid& h);

enum class Side { Primal, Dual, Neither };

struct Restriction {
  Side side;
  std::optional<SignVector> covector;  // absent when side is Neither
};

// Restriction of a nonnegative covector of M^ to E. A support avoiding both A
// and B is reported as Primal.
Restriction restrict_covector(const SignVector& xhat, const HatMatroid& h);

}  // namespace dichromate
