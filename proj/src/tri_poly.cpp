#include "dichromate/tri_poly.hpp"

#include <sstream>

namespace dichromate {

namespace {

BigInt power(long base, unsigned exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && exp % 2 == 1) out = -out;
  return out;
}

}  // namespace

TriPoly::TriPoly(long constant) {
  if (constant != 0) terms_[{0, 0, 0}] = constant;
}

TriPoly TriPoly::monomial(const BigInt& coeff, unsigned x, unsigned y, unsigned z) {
  TriPoly p;
  p.add_term({x, y, z}, coeff);
  return p;
}

BigInt TriPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TriPoly::add_term(const Monomial& m, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TriPoly& TriPoly::operator+=(const TriPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return out;
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  for (const auto& [m, c] : terms_) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m[0] == 0 && m[1] == 0 && m[2] == 0;
    bool need_star = false;
    if (constant || magnitude != 1) {
      os << magnitude.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (need_star) os << '*';
      os << kNames[v];
      if (m[v] > 1) os << '^' << m[v];
      need_star = true;
    }
  }
  return os.str();
}

nlohmann::json TriPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json term = {{"x", m[0]}, {"y", m[1]}, {"z", m[2]}};
    if (c.fits_slong_p()) term["c"] = c.get_si();
    else term["c"] = c.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

TriPoly TriPoly::from_json(const nlohmann::json& j) {
  TriPoly p;
  for (const auto& term : j) {
    const auto& c = term.at("c");
    BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long>());
    p.add_term({term.at("x").get<unsigned>(), term.at("y").get<unsigned>(),
                term.at("z").get<unsigned>()},
               coeff);
  }
  return p;
}

TriPoly specialize(const TriPoly& p, long y, long z) {
  TriPoly out;
  for (const auto& [m, c] : p.terms())
    out.add_term({m[0], 0, 0}, c * power(y, m[1]) * power(z, m[2]));
  return out;
}

BigInt evaluate(const TriPoly& p, long x, long y, long z) {
  BigInt sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c * power(x, m[0]) * power(y, m[1]) * power(z, m[2]);
  return sum;
}

}  // namespace dichromate
