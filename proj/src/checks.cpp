#include "dichromate/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dichromate {

namespace {

std::string mask_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto e : elements_of(m)) {
    if (!first) os << ',';
    os << e + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

CheckResult fail(CheckResult r, std::string detail) {
  r.passed = false;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

CheckResult check_mobius_identity(const FaceLattice& lattice, const std::string& which) {
  CheckResult r{"mobius identity (" + which + ")", true, {}};
  for (const auto& x : lattice.faces()) {
    BigInt sum = 0;
    for (const auto& y : lattice.faces())
      if (is_subset(y.support, x.support)) sum += y.mobius;
    const BigInt expected = x.support == 0 ? 1 : 0;
    if (sum != expected)
      return fail(r, "sum over [0, " + mask_string(x.support) + "] is " + sum.get_str());
  }
  return r;
}

CheckResult check_chain_rank(const FaceLattice& lattice, const std::string& which) {
  CheckResult r{"lattice rank = chain length (" + which + ")", true, {}};
  const auto& faces = lattice.faces();
  std::vector<std::size_t> chain(faces.size(), 0);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (faces[j].support != faces[i].support && is_subset(faces[j].support, faces[i].support))
        chain[i] = std::max(chain[i], chain[j] + 1);
    if (chain[i] != faces[i].rank)
      return fail(r, mask_string(faces[i].support) + ": rank " + std::to_string(faces[i].rank) +
                         ", longest chain " + std::to_string(chain[i]));
  }
  return r;
}

CheckResult check_minor_identities(const HatMatroid& h) {
  CheckResult r{"minor identities", true, {}};
  const RealizedOM primal = minor(h.hat, h.a, h.b);
  if (!primal.chirotope().equal_up_to_sign(h.base.chirotope()))
    return fail(r, "M^ \\ A / B differs from M");
  const RealizedOM dual = minor(h.hat, h.b, h.a);
  if (!dual.chirotope().equal_up_to_sign(h.dual.chirotope()))
    return fail(r, "M^ / A \\ B differs from M*");
  return r;
}

CheckResult check_cocircuit_lifting(const HatMatroid& h) {
  CheckResult r{"cocircuit lifting", true, {}};
  const auto hat_cocircuits = cocircuits(h.hat);
  const std::set<SignVector> members(hat_cocircuits.begin(), hat_cocircuits.end());
  for (Mask d : h.base_nonneg_cocircuits) {
    const SignVector lifted = lift_primal(SignVector::positive(h.n, d), h);
    if (!members.contains(lifted)) return fail(r, "lift of cocircuit " + mask_string(d) + " of M");
  }
  for (Mask d : h.dual_nonneg_cocircuits) {
    const SignVector lifted = lift_dual(SignVector::positive(h.n, d), h);
    if (!members.contains(lifted)) return fail(r, "lift of cocircuit " + mask_string(d) + " of M*");
  }
  return r;
}

CheckResult check_covector_lifting(const HatMatroid& h, const FaceLattice& hat_lattice) {
  CheckResult r{"covector lifting and rank preservation", true, {}};
  auto run = [&](const FaceLattice& lattice, bool primal) -> std::optional<std::string> {
    const char* side = primal ? "M" : "M*";
    for (const auto& face : lattice.faces()) {
      const SignVector lifted = primal ? lift_primal(face.covector, h) : lift_dual(face.covector, h);
      const Face* target = hat_lattice.find(lifted.support());
      if (!target || !lifted.is_nonnegative())
        return "lift of " + mask_string(face.support) + " of " + side + " is not in the lattice of M^";
      if (target->rank != face.rank)
        return "rank of " + mask_string(face.support) + " of " + side + " is " +
               std::to_string(face.rank) + ", of its lift " + std::to_string(target->rank);
      if (target->mobius != face.mobius)
        return "Moebius value of " + mask_string(face.support) + " of " + side + " changes under lifting";
      if (face.support != 0) {
        const Restriction back = restrict_covector(lifted, h);
        if (back.side != (primal ? Side::Primal : Side::Dual) || !back.covector ||
            *back.covector != face.covector)
          return "round trip of " + mask_string(face.support) + " of " + side;
      }
    }
    return std::nullopt;
  };
  if (auto err = run(nonneg_face_lattice(h.base), true)) return fail(r, *err);
  if (auto err = run(nonneg_face_lattice(h.dual), false)) return fail(r, *err);
  return r;
}

CheckResult check_parallelism(const HatMatroid& h) {
  CheckResult r{"parallel elements in cocircuits", true, {}};
  for (Mask d : nonnegative_cocircuits(h.hat)) {
    if ((d & h.b) == 0 && ((d & h.a) >> h.n) != (d & h.e1))
      return fail(r, "B-free cocircuit " + mask_string(d) + " splits a parallel A/E1 pair");
    if ((d & h.a) == 0 && ((d & h.b) >> h.n) != (d & h.e2))
      return fail(r, "A-free cocircuit " + mask_string(d) + " splits a parallel B/E2 pair");
  }
  return r;
}

CheckResult check_restriction(const HatMatroid& h, const FaceLattice& hat_lattice) {
  CheckResult r{"restriction to M and M*", true, {}};
  const FaceLattice primal = nonneg_face_lattice(h.base);
  const FaceLattice dual = nonneg_face_lattice(h.dual);
  for (const auto& face : hat_lattice.faces()) {
    const Restriction res = restrict_covector(face.covector, h);
    if (res.side == Side::Neither) continue;
    const Mask x = res.covector->support();
    if ((face.support & h.b) == 0 && !primal.contains(x))
      return fail(r, "B-free " + mask_string(face.support) + " does not restrict into L+ of M");
    if ((face.support & h.a) == 0 && !dual.contains(x))
      return fail(r, "A-free " + mask_string(face.support) + " does not restrict into L+ of M*");
  }
  const auto base_set = std::set<Mask>(h.base_nonneg_cocircuits.begin(), h.base_nonneg_cocircuits.end());
  const auto dual_set = std::set<Mask>(h.dual_nonneg_cocircuits.begin(), h.dual_nonneg_cocircuits.end());
  for (Mask d : nonnegative_cocircuits(h.hat)) {
    if ((d & h.b) == 0 && !base_set.contains(d & h.ground()))
      return fail(r, "B-free cocircuit " + mask_string(d) + " does not restrict to a cocircuit of M");
    if ((d & h.a) == 0 && !dual_set.contains(d & h.ground()))
      return fail(r, "A-free cocircuit " + mask_string(d) + " does not restrict to a cocircuit of M*");
  }
  return r;
}

CheckResult check_exponent_identities(const HatMatroid& h, const FaceLattice& hat_lattice) {
  CheckResult r{"exponent identities", true, {}};
  const long n = static_cast<long>(h.n);
  const long rk = static_cast<long>(h.r);
  for (const auto& face : hat_lattice.faces()) {
    const Mask x = face.support & h.ground();
    const long outside = n - static_cast<long>(popcount(x));
    const long lattice_rank = static_cast<long>(face.rank);
    if ((face.support & h.a) == 0) {
      const long contracted = rk - static_cast<long>(h.base.rank_of(x));
      if (contracted != lattice_rank + outside - (n - rk))
        return fail(r, "rk(M / X) mismatch at " + mask_string(face.support));
    }
    if ((face.support & h.b) == 0) {
      const Mask rest = h.ground() & ~x;
      const long corank = static_cast<long>(popcount(rest)) - static_cast<long>(h.base.rank_of(rest));
      if (corank != lattice_rank + outside - rk)
        return fail(r, "rk*(M \\ X) mismatch at " + mask_string(face.support));
    }
  }
  return r;
}

CheckResult check_specializations(const RealizedOM& om, const HatMatroid& h) {
  CheckResult r{"specialization identities", true, {}};
  const TriPoly omega = dichromate_of_hat(h);
  const auto n = static_cast<unsigned>(om.size());
  const auto rk = static_cast<unsigned>(om.rank());
  const TriPoly psi = nl_coflow_matroid(om);
  const TriPoly phi = nl_flow_matroid(om);
  const TriPoly lhs1 = specialize(omega, 0, 1);
  const TriPoly rhs1 = TriPoly::x_power(n - rk) * psi;
  if (lhs1 != rhs1)
    return fail(r, "Omega(x,0,1) = " + lhs1.to_string() + " but x^(n-r) psi = " + rhs1.to_string());
  const TriPoly lhs2 = specialize(omega, 1, 0);
  const TriPoly rhs2 = TriPoly::x_power(rk) * phi;
  if (lhs2 != rhs2)
    return fail(r, "Omega(x,1,0) = " + lhs2.to_string() + " but x^r phi = " + rhs2.to_string());
  return r;
}

CheckResult check_duality(const RealizedOM& om) {
  CheckResult r{"duality psi(M) = phi(M*)", true, {}};
  const TriPoly psi = nl_coflow_matroid(om);
  const TriPoly phi_dual = nl_flow_matroid(dual_realization(standardize(om)));
  if (psi != phi_dual) return fail(r, psi.to_string() + " vs " + phi_dual.to_string());
  return r;
}

CheckResult check_oracle_agreement(const Digraph& d, std::size_t cap) {
  CheckResult r{"graphic oracle agreement", true, {}};
  const TriPoly graphic = nl_coflow_graphic(d, cap);
  const TriPoly matroid = nl_coflow_matroid(matroid_from_digraph(d));
  if (graphic != matroid) return fail(r, "graphic " + graphic.to_string() + ", matroid " + matroid.to_string());
  return r;
}

CheckResult check_coloring_law(const Digraph& d, const std::vector<unsigned>& ks, std::uint64_t budget) {
  CheckResult r{"acyclic coloring count", true, {}};
  const TriPoly psi = nl_coflow_graphic(d);
  const std::size_t rk = rank_rat(incidence_matrix(d));
  const auto components = static_cast<unsigned>(d.vertex_count - rk);
  for (unsigned k : ks) {
    const BigInt count = count_acyclic_colorings(d, k, budget);
    BigInt expected = 0;
    if (!d.has_self_loop()) expected = evaluate(TriPoly::x_power(components) * psi, k, 0, 0);
    if (count != expected)
      return fail(r, "k = " + std::to_string(k) + ": counted " + count.get_str() + ", predicted " +
                         expected.get_str());
  }
  return r;
}

std::vector<CheckResult> check_hat(const RealizedOM& om, const HatMatroid& h) {
  const FaceLattice hat_lattice = nonneg_face_lattice(h.hat);
  return {check_minor_identities(h),
          check_cocircuit_lifting(h),
          check_covector_lifting(h, hat_lattice),
          check_parallelism(h),
          check_restriction(h, hat_lattice),
          check_exponent_identities(h, hat_lattice),
          check_mobius_identity(hat_lattice, "M^"),
          check_chain_rank(hat_lattice, "M^"),
          check_specializations(om, h)};
}

std::vector<CheckResult> run_checks(const RealizedOM& om, const std::optional<Digraph>& digraph,
                                    const CheckOptions& options) {
  std::vector<CheckResult> results;
  auto record = [&](CheckResult r, const std::string& context = {}) {
    if (!r.passed && !context.empty()) r.detail = context + ": " + r.detail;
    auto it = std::find_if(results.begin(), results.end(),
                           [&](const CheckResult& x) { return x.name == r.name; });
    if (it == results.end()) results.push_back(std::move(r));
    else if (it->passed && !r.passed) *it = std::move(r);
  };

  if (2 * om.size() > options.cap)
    throw ResourceError("union matroid would have " + std::to_string(2 * om.size()) +
                        " elements, above the cap of " + std::to_string(options.cap));

  const RealizedOM standard = standardize(om);
  const FaceLattice primal = nonneg_face_lattice(standard);
  const FaceLattice dual = nonneg_face_lattice(dual_realization(standard));
  record(check_mobius_identity(primal, "M"));
  record(check_mobius_identity(dual, "M*"));
  record(check_chain_rank(primal, "M"));
  record(check_chain_rank(dual, "M*"));
  record(check_duality(om));

  std::vector<std::vector<std::size_t>> bases;
  if (options.all_bases) {
    for (Mask b : om.chirotope().bases()) bases.push_back(elements_of(b));
  } else {
    bases.push_back(options.basis ? *options.basis : elements_of(om.chirotope().first_basis()));
  }
  for (const auto& basis : bases) {
    const RealizedOM m = standardize(om, basis);
    const HatMatroid h = build_hat(m);
    std::string context = "basis {";
    for (std::size_t i = 0; i < basis.size(); ++i) context += (i ? "," : "") + std::to_string(basis[i] + 1);
    context += "}";
    for (auto& r : check_hat(om, h)) record(std::move(r), context);
  }

  if (digraph) {
    record(check_oracle_agreement(*digraph, options.cap));
    record(check_coloring_law(*digraph, options.colors, options.coloring_budget));
  }
  return results;
}

}  // namespace dichromate
