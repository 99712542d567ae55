#include "dichromate/nl_polynomials.hpp"

#include <algorithm>

namespace dichromate {

TriPoly nl_coflow_matroid(const RealizedOM& om) {
  const RealizedOM m = standardize(om);
  const FaceLattice dual_lattice = nonneg_face_lattice(dual_realization(m));
  TriPoly psi;
  for (const auto& face : dual_lattice.faces()) {
    const auto exponent = static_cast<unsigned>(m.rank() - m.rank_of(face.support));
    psi.add_term({exponent, 0, 0}, face.mobius);
  }
  return psi;
}

TriPoly nl_flow_matroid(const RealizedOM& om) {
  const FaceLattice lattice = nonneg_face_lattice(om);
  TriPoly phi;
  for (const auto& face : lattice.faces()) {
    const Mask rest = om.ground() & ~face.support;
    const auto exponent = static_cast<unsigned>(popcount(rest) - om.rank_of(rest));
    phi.add_term({exponent, 0, 0}, face.mobius);
  }
  return phi;
}

TriPoly dichromate_of_hat(const HatMatroid& h) {
  const FaceLattice lattice = nonneg_face_lattice(h.hat);
  TriPoly omega;
  for (const auto& face : lattice.faces()) {
    const Mask on_e = face.support & h.ground();
    const auto x = static_cast<unsigned>(face.rank + (h.n - popcount(on_e)));
    const auto y = static_cast<unsigned>(popcount(face.support & h.a));
    const auto z = static_cast<unsigned>(popcount(face.support & h.b));
    omega.add_term({x, y, z}, face.mobius);
  }
  return omega;
}

DichromateResult dichromate(const RealizedOM& om,
                            const std::optional<std::vector<std::size_t>>& basis) {
  const StandardForm sf = standard_form(rational_matrix(om), basis);
  std::vector<std::size_t> labels;
  for (auto j : sf.perm) labels.push_back(om.labels()[j]);
  const HatMatroid h = build_hat(RealizedOM(to_eps(sf.assemble()), std::move(labels)));
  DichromateResult out;
  out.omega = dichromate_of_hat(h);
  out.basis.assign(sf.perm.begin(), sf.perm.begin() + static_cast<long>(sf.rank));
  return out;
}

}  // namespace dichromate
