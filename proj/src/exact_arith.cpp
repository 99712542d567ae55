#include "dichromate/exact_arith.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dichromate {

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  BigInt n(num);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

EpsPoly::EpsPoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.push_back({0, constant});
}

EpsPoly::EpsPoly(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.degree < b.degree; });
  for (auto& t : terms) {
    if (t.degree < 0) throw std::invalid_argument("negative eps degree");
    if (!terms_.empty() && terms_.back().degree == t.degree)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
    if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
  }
}

EpsPoly EpsPoly::monomial(const Rational& coeff, int degree) {
  return EpsPoly(std::vector<Term>{{degree, coeff}});
}

bool EpsPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0);
}

int EpsPoly::lowest_degree() const { return terms_.front().degree; }
int EpsPoly::highest_degree() const { return terms_.back().degree; }

int EpsPoly::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

EpsPoly EpsPoly::operator-() const {
  EpsPoly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merges two sorted term lists with rhs scaled by sign (+1 or -1).
std::vector<EpsPoly::Term> merge_terms(const std::vector<EpsPoly::Term>& a,
                                       const std::vector<EpsPoly::Term>& b, int sign) {
  std::vector<EpsPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].degree < b[j].degree)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].degree < a[i].degree) {
      out.push_back({b[j].degree, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff)
                            : Rational(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].degree, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EpsPoly& EpsPoly::operator+=(const EpsPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

EpsPoly operator*(const EpsPoly& lhs, const EpsPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const int lo = lhs.lowest_degree() + rhs.lowest_degree();
  const int hi = lhs.highest_degree() + rhs.highest_degree();
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& a : lhs.terms())
    for (const auto& b : rhs.terms())
      dense[static_cast<std::size_t>(a.degree + b.degree - lo)] += a.coeff * b.coeff;
  EpsPoly out;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (sgn(dense[k]) != 0) out.terms_.push_back({lo + static_cast<int>(k), dense[k]});
  return out;
}

std::string EpsPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (t.degree == 0) {
      os << c.get_str();
    } else {
      if (c == -1) os << '-';
      else if (c != 1) os << c.get_str() << '*';
      os << "eps";
      if (t.degree != 1) os << '^' << t.degree;
    }
  }
  return os.str();
}

EpsPoly exact_divide(const EpsPoly& a, const EpsPoly& b) {
  if (b.is_zero()) throw ContractViolation("division of an eps-polynomial by zero");
  if (a.is_zero()) return {};
  if (b.terms().size() == 1) {
    const auto& d = b.terms().front();
    std::vector<EpsPoly::Term> q;
    q.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
      if (t.degree < d.degree)
        throw ContractViolation("inexact eps-polynomial division");
      q.push_back({t.degree - d.degree, t.coeff / d.coeff});
    }
    return EpsPoly(std::move(q));
  }
  // Long division from the top degree.
  EpsPoly rem = a;
  std::vector<EpsPoly::Term> quotient;
  const auto& lead = b.terms().back();
  while (!rem.is_zero() && rem.highest_degree() >= lead.degree) {
    const auto& top = rem.terms().back();
    EpsPoly step = EpsPoly::monomial(top.coeff / lead.coeff, top.degree - lead.degree);
    quotient.push_back(step.terms().front());
    rem -= step * b;
  }
  if (!rem.is_zero()) throw ContractViolation("inexact eps-polynomial division");
  return EpsPoly(std::move(quotient));
}

EpsMatrix to_eps(const RatMatrix& m) {
  std::vector<EpsPoly> entries;
  entries.reserve(m.entries().size());
  for (const auto& q : m.entries()) entries.emplace_back(q);
  return EpsMatrix(m.rows(), m.cols(), std::move(entries));
}

std::optional<RatMatrix> to_rational(const EpsMatrix& m) {
  std::vector<Rational> entries;
  entries.reserve(m.entries().size());
  for (const auto& p : m.entries()) {
    if (!p.is_constant()) return std::nullopt;
    entries.push_back(p.is_zero() ? Rational(0) : p.terms().front().coeff);
  }
  return RatMatrix(m.rows(), m.cols(), std::move(entries));
}

int det_sign_eps(const EpsMatrix& m) {
  if (!m.is_square()) throw DimensionError("det_sign_eps needs a square matrix");
  if (auto rational = to_rational(m)) return sgn(bareiss_determinant(*rational));
  return bareiss_determinant(m).sign();
}

Rational det_rat(const RatMatrix& m) { return bareiss_determinant(m); }

std::size_t rank_rat(const RatMatrix& m) { return bareiss_rank(m); }

std::size_t rank_eps(const EpsMatrix& m) {
  if (auto rational = to_rational(m)) return bareiss_rank(*rational);
  return bareiss_rank(m);
}

RowEchelon reduced_row_echelon(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::size_t> keep(row);
  for (std::size_t i = 0; i < row; ++i) keep[i] = i;
  return {a.select_rows(keep), std::move(pivots)};
}

RatMatrix StandardForm::assemble() const {
  const std::size_t n = perm.size();
  RatMatrix out(rank, n);
  for (std::size_t i = 0; i < rank; ++i) {
    out(i, i) = 1;
    for (std::size_t j = rank; j < n; ++j) out(i, j) = c(i, j - rank);
  }
  return out;
}

StandardForm standard_form(const RatMatrix& m,
                           const std::optional<std::vector<std::size_t>>& basis) {
  const std::size_t n = m.cols();
  std::vector<std::size_t> front;
  if (basis) {
    front = *basis;
    std::set<std::size_t> seen;
    for (auto b : front) {
      if (b >= n) throw InvalidBasisError("basis column " + std::to_string(b + 1) + " out of range");
      if (!seen.insert(b).second)
        throw InvalidBasisError("basis column " + std::to_string(b + 1) + " repeated");
    }
  } else {
    front = reduced_row_echelon(m).pivots;
  }
  std::vector<std::size_t> perm = front;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(front.begin(), front.end(), j) == front.end()) perm.push_back(j);

  RowEchelon echelon = reduced_row_echelon(m.select_columns(perm));
  const std::size_t r = echelon.pivots.size();
  if (front.size() != r)
    throw InvalidBasisError("basis has " + std::to_string(front.size()) +
                            " columns but the matrix has rank " + std::to_string(r));
  for (std::size_t i = 0; i < r; ++i)
    if (echelon.pivots[i] != i) throw InvalidBasisError("basis columns are dependent");

  StandardForm out;
  out.perm = std::move(perm);
  out.rank = r;
  out.c = RatMatrix(r, n - r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < n; ++j) out.c(i, j - r) = echelon.reduced(i, j);
  return out;
}

}  // namespace dichromate
