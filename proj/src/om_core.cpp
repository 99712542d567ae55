#include "dichromate/om_core.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace dichromate {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (std::size_t i = 0; i <= 64; ++i) {
      t[i][0] = 1;
      for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (k > n || n > 64) return 0;
  return table[n][k];
}

std::uint64_t subset_rank(Mask m) {
  std::uint64_t rank = 0;
  std::size_t i = 1;
  while (m) {
    rank += binomial(static_cast<std::size_t>(std::countr_zero(m)), i++);
    m &= m - 1;
  }
  return rank;
}

// ---------------------------------------------------------------- SignVector

SignVector SignVector::positive(std::size_t size, Mask support) {
  SignVector v(size);
  for (auto e : elements_of(support)) v.signs_[e] = Sign::Plus;
  return v;
}

SignVector SignVector::parse(const std::string& text) {
  std::vector<Sign> signs;
  for (char ch : text) {
    switch (ch) {
      case '+': signs.push_back(Sign::Plus); break;
      case '-': signs.push_back(Sign::Minus); break;
      case '0': signs.push_back(Sign::Zero); break;
      default: throw std::invalid_argument("bad sign character in '" + text + "'");
    }
  }
  return SignVector(std::move(signs));
}

Mask SignVector::support() const {
  Mask m = 0;
  for (std::size_t e = 0; e < signs_.size(); ++e)
    if (signs_[e] != Sign::Zero) m |= bit(e);
  return m;
}

Mask SignVector::positive_part() const {
  Mask m = 0;
  for (std::size_t e = 0; e < signs_.size(); ++e)
    if (signs_[e] == Sign::Plus) m |= bit(e);
  return m;
}

Mask SignVector::negative_part() const {
  Mask m = 0;
  for (std::size_t e = 0; e < signs_.size(); ++e)
    if (signs_[e] == Sign::Minus) m |= bit(e);
  return m;
}

SignVector SignVector::operator-() const {
  SignVector out(*this);
  for (auto& s : out.signs_) s = static_cast<Sign>(-static_cast<int>(s));
  return out;
}

std::string SignVector::to_string() const {
  std::string out;
  for (auto s : signs_) out += s == Sign::Plus ? '+' : s == Sign::Minus ? '-' : '0';
  return out;
}

SignVector compose(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw DimensionError("composition of sign vectors of different sizes");
  SignVector out(x);
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x[e] == Sign::Zero) out.set(e, y[e]);
  return out;
}

// ----------------------------------------------------------------- Chirotope

namespace {

// Lexicographically first r-subset with a nonzero value.
Mask lex_first_nonzero(std::size_t n, std::size_t r, const std::vector<std::int8_t>& signs) {
  std::vector<std::size_t> combo(r);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    Mask m = mask_of(combo);
    if (signs[subset_rank(m)] != 0) return m;
    // Next combination in lexicographic order.
    std::size_t i = r;
    while (i > 0 && combo[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
  throw NotARealizationError("chirotope is identically zero");
}

}  // namespace

Chirotope::Chirotope(std::size_t ground_size, std::size_t rank, std::vector<std::int8_t> signs)
    : n_(ground_size), r_(rank), signs_(std::move(signs)) {
  if (n_ > kMaxGround) throw ResourceError("ground set larger than 64 elements");
  if (r_ > n_ || signs_.size() != binomial(n_, r_))
    throw DimensionError("chirotope table has the wrong size");
  const Mask first = lex_first_nonzero(n_, r_, signs_);
  if (signs_[subset_rank(first)] < 0)
    for (auto& s : signs_) s = static_cast<std::int8_t>(-s);
}

int Chirotope::sign_of_set(Mask subset) const {
  if (popcount(subset) != r_ || (subset & ~full_mask(n_)) != 0)
    throw DimensionError("chirotope argument is not an r-subset of the ground set");
  return signs_[subset_rank(subset)];
}

int Chirotope::sign_of(std::span<const std::size_t> tuple) const {
  if (tuple.size() != r_) throw DimensionError("chirotope argument has the wrong length");
  Mask m = 0;
  int parity = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= n_) throw DimensionError("chirotope argument out of range");
    if (contains(m, tuple[i])) return 0;
    m |= bit(tuple[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (tuple[j] > tuple[i]) parity = -parity;
  }
  return parity * signs_[subset_rank(m)];
}

std::vector<Mask> Chirotope::bases() const {
  std::vector<Mask> out;
  for_each_subset(n_, r_, [&](Mask m) {
    if (signs_[subset_rank(m)] != 0) out.push_back(m);
  });
  return out;
}

Mask Chirotope::first_basis() const { return lex_first_nonzero(n_, r_, signs_); }

bool Chirotope::equal_up_to_sign(const Chirotope& other) const {
  if (n_ != other.n_ || r_ != other.r_) return false;
  if (signs_ == other.signs_) return true;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] != -other.signs_[i]) return false;
  return true;
}

// ---------------------------------------------------------------- RealizedOM

namespace {

std::vector<std::size_t> default_labels(std::size_t n, std::vector<std::size_t> labels) {
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 1);
  }
  if (labels.size() != n) throw DimensionError("label count does not match the ground set");
  return labels;
}

}  // namespace

Chirotope chirotope_from_matrix(const EpsMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t r = m.rows();
  if (r > n) throw NotARealizationError("more rows than columns: not of full row rank");
  std::vector<std::int8_t> signs(binomial(n, r));
  const auto rational = to_rational(m);
  for_each_subset(n, r, [&](Mask s) {
    const auto cols = elements_of(s);
    const int sign = rational ? sgn(det_rat(rational->select_columns(cols)))
                              : det_sign_eps(m.select_columns(cols));
    signs[subset_rank(s)] = static_cast<std::int8_t>(sign);
  });
  if (std::all_of(signs.begin(), signs.end(), [](auto s) { return s == 0; }))
    throw NotARealizationError("matrix does not have full row rank");
  return Chirotope(n, r, std::move(signs));
}

RealizedOM::RealizedOM(EpsMatrix matrix, std::vector<std::size_t> labels)
    : RealizedOM(matrix, chirotope_from_matrix(matrix), std::move(labels)) {}

RealizedOM::RealizedOM(EpsMatrix matrix, Chirotope chirotope, std::vector<std::size_t> labels)
    : matrix_(std::move(matrix)),
      chirotope_(std::move(chirotope)),
      labels_(default_labels(matrix_.cols(), std::move(labels))),
      bases_(chirotope_.bases()) {
  if (chirotope_.ground_size() != matrix_.cols() || chirotope_.rank() != matrix_.rows())
    throw DimensionError("chirotope does not match the realization's shape");
}

std::size_t RealizedOM::rank_of(Mask subset) const {
  std::size_t best = 0;
  for (Mask b : bases_) best = std::max(best, popcount(b & subset));
  return best;
}

RealizedOM realize(const RatMatrix& m, std::vector<std::size_t> labels) {
  return RealizedOM(to_eps(reduced_row_echelon(m).reduced), std::move(labels));
}

RatMatrix rational_matrix(const RealizedOM& om) {
  auto m = to_rational(om.matrix());
  if (!m) throw ContractViolation("realization is not rational (it carries eps terms)");
  return *m;
}

bool is_standard_form(const RealizedOM& om) {
  auto m = to_rational(om.matrix());
  if (!m) return false;
  for (std::size_t i = 0; i < om.rank(); ++i)
    for (std::size_t j = 0; j < om.rank(); ++j)
      if ((*m)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RealizedOM standardize(const RealizedOM& om,
                       const std::optional<std::vector<std::size_t>>& basis) {
  const StandardForm sf = standard_form(rational_matrix(om), basis);
  std::vector<std::size_t> labels;
  for (auto j : sf.perm) labels.push_back(om.labels()[j]);
  return RealizedOM(to_eps(sf.assemble()), std::move(labels));
}

RealizedOM dual_realization(const RealizedOM& om) {
  if (!is_standard_form(om)) throw ContractViolation("dual_realization needs a standard-form input");
  const RatMatrix m = rational_matrix(om);
  const std::size_t n = om.size();
  const std::size_t r = om.rank();
  RatMatrix d(n - r, n);
  for (std::size_t i = 0; i < n - r; ++i) {
    for (std::size_t j = 0; j < r; ++j) d(i, j) = -m(j, r + i);
    d(i, r + i) = 1;
  }
  return RealizedOM(to_eps(d), om.labels());
}

// ---------------------------------------------------------------- cocircuits

std::vector<SignVector> cocircuits(const RealizedOM& om) {
  const std::size_t n = om.size();
  const std::size_t r = om.rank();
  const Chirotope& chi = om.chirotope();
  std::set<SignVector> found;
  std::unordered_set<Mask> supports;
  if (r == 0) return {};
  for_each_subset(n, r - 1, [&](Mask t) {
    SignVector d(n);
    Mask support = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (contains(t, e)) continue;
      // chi(e, t_1, ..., t_{r-1}) with t sorted: move e into place.
      const int below = static_cast<int>(popcount(t & (bit(e) - 1)));
      const int s = chi.sign_of_set(t | bit(e)) * (below % 2 == 0 ? 1 : -1);
      if (s != 0) {
        d.set(e, s > 0 ? Sign::Plus : Sign::Minus);
        support |= bit(e);
      }
    }
    if (support == 0 || !supports.insert(support).second) return;
    const std::size_t anchor = static_cast<std::size_t>(std::countr_zero(support));
    if (d[anchor] == Sign::Minus) d = -d;
    found.insert(-d);
    found.insert(std::move(d));
  });
  return {found.begin(), found.end()};
}

std::vector<Mask> nonnegative_cocircuits(const RealizedOM& om) {
  std::vector<Mask> out;
  for (const auto& d : cocircuits(om))
    if (d.is_nonnegative()) out.push_back(d.support());
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------- Moebius

std::vector<BigInt> mobius_from_bottom(std::span<const Mask> elements) {
  const std::size_t size = elements.size();
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return popcount(elements[a]) < popcount(elements[b]);
  });
  if (size == 0) throw InvalidPosetError("empty poset has no bottom element");
  for (std::size_t i = 0; i < size; ++i)
    if (!is_subset(elements[order[0]], elements[i]))
      throw InvalidPosetError("poset has no unique minimal element");
  for (std::size_t i = 1; i < size; ++i)
    if (elements[order[i]] == elements[order[i - 1]]) throw InvalidPosetError("poset has repeated elements");

  std::vector<BigInt> mu(size);
  mu[order[0]] = 1;
  for (std::size_t i = 1; i < size; ++i) {
    const Mask x = elements[order[i]];
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (is_subset(elements[order[j]], x)) sum += mu[order[j]];
    mu[order[i]] = -sum;
  }
  return mu;
}

// --------------------------------------------------------------- FaceLattice

FaceLattice::FaceLattice(std::size_t ground_size, std::vector<Face> faces)
    : n_(ground_size), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    const auto pa = popcount(a.support);
    const auto pb = popcount(b.support);
    return pa != pb ? pa < pb : a.support < b.support;
  });
}

const Face* FaceLattice::find(Mask support) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), support, [](const Face& f, Mask m) {
    const auto pf = popcount(f.support);
    const auto pm = popcount(m);
    return pf != pm ? pf < pm : f.support < m;
  });
  return it != faces_.end() && it->support == support ? &*it : nullptr;
}

std::vector<Mask> union_closure(const std::vector<Mask>& generators) {
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> frontier{0};
  std::vector<Mask> all{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask x : frontier)
      for (Mask g : generators) {
        const Mask y = x | g;
        if (seen.insert(y).second) {
          next.push_back(y);
          all.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

FaceLattice nonneg_face_lattice(const RealizedOM& om) {
  const std::size_t n = om.size();
  const std::vector<Mask> supports = union_closure(nonnegative_cocircuits(om));
  const std::vector<BigInt> mu = mobius_from_bottom(supports);
  const std::size_t r = om.rank();
  std::vector<Face> faces;
  faces.reserve(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    Face f;
    f.covector = SignVector::positive(n, supports[i]);
    f.support = supports[i];
    f.rank = r - om.rank_of(om.ground() & ~supports[i]);
    f.mobius = mu[i];
    faces.push_back(std::move(f));
  }
  return FaceLattice(n, std::move(faces));
}

}  // namespace dichromate
