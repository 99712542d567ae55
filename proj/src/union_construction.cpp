#include "dichromate/union_construction.hpp"

#include <algorithm>
#include <map>

namespace dichromate {

namespace {

RatMatrix top_block(const RatMatrix& c) {
  const std::size_t r = c.rows();
  const std::size_t n = r + c.cols();
  RatMatrix top(r, 2 * n);
  for (std::size_t i = 0; i < r; ++i) {
    top(i, i) = 1;
    for (std::size_t j = 0; j < c.cols(); ++j) top(i, r + j) = c(i, j);
    top(i, n + i) = 1;
  }
  return top;
}

RatMatrix bottom_block(const RatMatrix& c) {
  const std::size_t r = c.rows();
  const std::size_t k = c.cols();
  const std::size_t n = r + k;
  RatMatrix bottom(k, 2 * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) bottom(i, j) = -c(j, i);
    bottom(i, r + i) = 1;
    bottom(i, n + r + i) = 1;
  }
  return bottom;
}

std::vector<int> bottom_degrees(std::size_t n) {
  std::vector<int> degrees(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) degrees[j] = static_cast<int>(2 * n - (j + 1));
  return degrees;
}

// Determinants of all k-column minors of m, indexed by subset_rank.
std::vector<Rational> all_minors(const RatMatrix& m) {
  const std::size_t k = m.rows();
  std::vector<Rational> out(binomial(m.cols(), k));
  for_each_subset(m.cols(), k, [&](Mask s) {
    out[subset_rank(s)] = det_rat(m.select_columns(elements_of(s)));
  });
  return out;
}

}  // namespace

EpsMatrix hat_matrix(const RatMatrix& c) {
  const RatMatrix top = top_block(c);
  const RatMatrix bottom = bottom_block(c);
  const std::vector<int> degrees = bottom_degrees(c.rows() + c.cols());
  EpsMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = EpsPoly(top(i, j));
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j)
      out(top.rows() + i, j) = EpsPoly::monomial(bottom(i, j), degrees[j]);
  return out;
}

Chirotope two_block_chirotope(const RatMatrix& top, const RatMatrix& bottom,
                              const std::vector<int>& degrees) {
  const std::size_t cols = top.cols();
  const std::size_t rt = top.rows();
  const std::size_t rb = bottom.rows();
  const std::size_t rank = rt + rb;
  if (bottom.cols() != cols || degrees.size() != cols)
    throw DimensionError("two_block_chirotope: blocks disagree on the column count");
  if (rank > cols) throw NotARealizationError("more rows than columns: not of full row rank");

  const std::vector<Rational> top_minors = all_minors(top);
  const std::vector<Rational> bottom_minors = all_minors(bottom);
  std::vector<std::int8_t> signs(binomial(cols, rank));
  std::map<int, Rational> by_degree;

  for_each_subset(cols, rank, [&](Mask s) {
    const std::vector<std::size_t> elems = elements_of(s);
    by_degree.clear();
    // Laplace expansion along the top rt rows over the positions chosen for
    // the top block.
    for_each_subset(rank, rt, [&](Mask positions) {
      Mask u = 0;
      int position_sum = 0;
      for (auto p : elements_of(positions)) {
        u |= bit(elems[p]);
        position_sum += static_cast<int>(p);
      }
      const Rational& dt = top_minors[subset_rank(u)];
      if (sgn(dt) == 0) return;
      const Mask w = s & ~u;
      const Rational& db = bottom_minors[subset_rank(w)];
      if (sgn(db) == 0) return;
      int degree = 0;
      for (auto e : elements_of(w)) degree += degrees[e];
      const int base = static_cast<int>(rt * (rt - 1) / 2);
      const bool negate = (position_sum - base) % 2 != 0;
      Rational term = dt * db;
      if (negate) term = -term;
      by_degree[degree] += term;
    });
    int sign = 0;
    for (const auto& [degree, coeff] : by_degree)
      if (sgn(coeff) != 0) {
        sign = sgn(coeff);
        break;
      }
    signs[subset_rank(s)] = static_cast<std::int8_t>(sign);
  });
  if (std::all_of(signs.begin(), signs.end(), [](auto x) { return x == 0; }))
    throw NotARealizationError("matrix does not have full row rank");
  return Chirotope(cols, rank, std::move(signs));
}

HatMatroid build_hat(const RealizedOM& om) {
  if (!is_standard_form(om)) throw ContractViolation("build_hat needs a standard-form realization (I_r | C)");
  const std::size_t n = om.size();
  const std::size_t r = om.rank();
  const RatMatrix m = rational_matrix(om);
  RatMatrix c(r, n - r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < n; ++j) c(i, j - r) = m(i, j);

  Chirotope chi = two_block_chirotope(top_block(c), bottom_block(c), bottom_degrees(n));
  HatMatroid h{om, dual_realization(om), RealizedOM(hat_matrix(c), std::move(chi)), n, r, 0, 0, 0, 0, {}, {}, {}};
  h.e1 = full_mask(r);
  h.e2 = full_mask(n) & ~h.e1;
  h.a = h.e1 << n;
  h.b = h.e2 << n;
  h.parallel.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    h.parallel[i] = n + i;
    h.parallel[n + i] = i;
  }
  h.base_nonneg_cocircuits = nonnegative_cocircuits(h.base);
  h.dual_nonneg_cocircuits = nonnegative_cocircuits(h.dual);
  return h;
}

// ------------------------------------------------------------------- minors

namespace {

// Keeps a maximal independent set of rows, lowest indices first.
EpsMatrix independent_rows(const EpsMatrix& m) {
  std::vector<std::size_t> keep;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    keep.push_back(i);
    const std::size_t next = rank_eps(m.select_rows(keep));
    if (next == rank) keep.pop_back();
    else rank = next;
  }
  return m.select_rows(keep);
}

}  // namespace

RealizedOM minor(const RealizedOM& om, Mask delete_set, Mask contract_set) {
  if (delete_set & contract_set) throw ContractViolation("minor: delete and contract sets overlap");
  if ((delete_set | contract_set) & ~om.ground()) throw DimensionError("minor: element out of range");

  EpsMatrix m = om.matrix();
  // Column ids of the current matrix in terms of the original ground set.
  std::vector<std::size_t> ids(om.size());
  for (std::size_t j = 0; j < ids.size(); ++j) ids[j] = j;

  auto drop_column = [&](std::size_t col) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != col) keep.push_back(j);
    m = m.select_columns(keep);
    ids.erase(ids.begin() + static_cast<long>(col));
  };
  auto column_of = [&](std::size_t e) {
    return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), e) - ids.begin());
  };

  for (auto e : elements_of(delete_set)) drop_column(column_of(e));

  for (auto e : elements_of(contract_set)) {
    const std::size_t col = column_of(e);
    std::size_t pivot = 0;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot < m.rows()) {
      // Fraction-free elimination of the column; scales every other row by
      // the pivot, which changes all maximal minors by one common factor.
      const EpsPoly a = m(pivot, col);
      EpsMatrix next(m.rows() - 1, m.cols());
      std::size_t out_row = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == pivot) continue;
        const EpsPoly factor = m(i, col);
        for (std::size_t j = 0; j < m.cols(); ++j)
          next(out_row, j) = factor.is_zero() ? m(i, j) : a * m(i, j) - factor * m(pivot, j);
        ++out_row;
      }
      m = std::move(next);
    }
    drop_column(col);
  }

  std::vector<std::size_t> labels;
  for (auto id : ids) labels.push_back(om.labels()[id]);
  return RealizedOM(independent_rows(m), std::move(labels));
}

// ------------------------------------------------------- lifting/restriction

bool is_nonneg_covector(Mask support, const std::vector<Mask>& nonneg_cocircuits) {
  Mask covered = 0;
  for (Mask d : nonneg_cocircuits)
    if (is_subset(d, support)) covered |= d;
  return covered == support;
}

namespace {

void require_nonneg_covector(const SignVector& x, std::size_t n, const std::vector<Mask>& cocircuits,
                             const char* what) {
  if (x.size() != n) throw DimensionError(std::string(what) + ": sign vector has the wrong size");
  if (!x.is_nonnegative() || !is_nonneg_covector(x.support(), cocircuits))
    throw ContractViolation(std::string(what) + ": argument is not a nonnegative covector");
}

}  // namespace

SignVector lift_primal(const SignVector& x, const HatMatroid& h) {
  require_nonneg_covector(x, h.n, h.base_nonneg_cocircuits, "lift_primal");
  const Mask support = x.support();
  return SignVector::positive(2 * h.n, support | ((support & h.e1) << h.n));
}

SignVector lift_dual(const SignVector& x, const HatMatroid& h) {
  require_nonneg_covector(x, h.n, h.dual_nonneg_cocircuits, "lift_dual");
  const Mask support = x.support();
  return SignVector::positive(2 * h.n, support | ((support & h.e2) << h.n));
}

Restriction restrict_covector(const SignVector& xhat, const HatMatroid& h) {
  if (xhat.size() != 2 * h.n) throw DimensionError("restrict: sign vector has the wrong size");
  if (!xhat.is_nonnegative()) throw ContractViolation("restrict: argument is not nonnegative");
  const Mask support = xhat.support();
  const bool meets_a = (support & h.a) != 0;
  const bool meets_b = (support & h.b) != 0;
  if (meets_a && meets_b) return {Side::Neither, std::nullopt};
  SignVector x = SignVector::positive(h.n, support & h.ground());
  return {meets_b ? Side::Dual : Side::Primal, std::move(x)};
}

}  // namespace dichromate
