#pragma once

// NL-coflow and NL-flow polynomials of a realized oriented matroid and the
// trivariate dichromate built on the union matroid.

#include <optional>
#include <vector>

#include "dichromate/om_core.hpp"
#include "dichromate/tri_poly.hpp"
#include "dichromate/union_construction.hpp"

namespace dichromate {

// psi(x) = sum over nonnegative covectors X of the dual of
// mu*(0, X) x^rk(M / supp X).
TriPoly nl_coflow_matroid(const RealizedOM& om);

// phi(x) = sum over nonnegative covectors X of mu(0, X) x^rk*(M \ supp X).
TriPoly nl_flow_matroid(const RealizedOM& om);

struct DichromateResult {
  TriPoly omega;
  // The basis the union matroid was built from, as 0-based columns of the
  // input in the order they were placed.
  std::vector<std::size_t> basis;
};

// Sum over the nonnegative covectors X of M^ of
// mu^(0, X) x^(rk(X) + |E \ supp X|) y^|supp X n A| z^|supp X n B|.
TriPoly dichromate_of_hat(const HatMatroid& h);

/// Builds M^ from om with the given basis (0-based columns; lexicographically
/// smallest basis if absent) and evaluates the dichromate on it. Throws
/// InvalidBasisError for an invalid basis.
DichromateResult dichromate(const RealizedOM& om,
                            const std::optional<std::vector<std::size_t>>& basis = std::nullopt);

}  // namespace dichromate
