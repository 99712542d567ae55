#pragma once

#include <array>
#include <map>
#include <string>

#include "json.hpp"

#include "dichromate/exact_arith.hpp"

namespace dichromate {

// Exponents of x, y and z.
using Monomial = std::array<unsigned, 3>;

// Print order: x-degree descending, then y ascending, then z ascending.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a[0] != b[0]) return a[0] > b[0];
    if (a[1] != b[1]) return a[1] < b[1];
    return a[2] < b[2];
  }
};

/// Polynomial in x, y, z with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class TriPoly {
 public:
  using Terms = std::map<Monomial, BigInt, MonomialOrder>;

  TriPoly() = default;
  TriPoly(long constant);  // NOLINT
  static TriPoly monomial(const BigInt& coeff, unsigned x, unsigned y = 0, unsigned z = 0);
  static TriPoly x_power(unsigned k) { return monomial(1, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const BigInt& coeff);

  TriPoly& operator+=(const TriPoly& rhs);
  TriPoly& operator-=(const TriPoly& rhs);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  bool operator==(const TriPoly&) const = default;

  // e.g. "x^2 - 1", "x - x*y", "0".
  std::string to_string() const;
  // List of {"x": i, "y": j, "z": k, "c": coefficient} in print order.
  // Coefficients outside the int64 range are written as decimal strings.
  nlohmann::json to_json() const;
  static TriPoly from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

// Substitutes integers for y and z; the result is univariate in x.
TriPoly specialize(const TriPoly& p, long y, long z);

BigInt evaluate(const TriPoly& p, long x, long y, long z);

}  // namespace dichromate
