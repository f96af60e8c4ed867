#include "addcomb/int_poly.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace addcomb {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(unsigned degree, BigInt coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const BigInt& IntPoly::leading() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

std::vector<Residue> IntPoly::residue_coeffs(const PrimeCtx& ctx) const {
  std::vector<Residue> r(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k] = ctx.reduce(coeffs_[k]);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int IntPoly::degree_mod(const PrimeCtx& ctx) const {
  return static_cast<int>(residue_coeffs(ctx).size()) - 1;
}

std::vector<Residue> IntPoly::value_table(const PrimeCtx& ctx) const {
  const auto rc = residue_coeffs(ctx);
  std::vector<Residue> table(ctx.p());
  for (Residue y = 0; y < ctx.p(); ++y) {
    Residue acc = 0;
    for (auto it = rc.rbegin(); it != rc.rend(); ++it) acc = ctx.add(ctx.mul(acc, y), *it);
    table[y] = acc;
  }
  return table;
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = -coeffs_[k];
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::to_literal() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ",";
    out += coeffs_[k].str();
  }
  return out;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "y";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPoly parse_poly_literal(std::string_view text) {
  std::vector<BigInt> c;
  for (auto tok : detail::split(text, ',')) {
    auto s = detail::trim(tok);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const bool neg = !s.empty() && s.front() == '-';
    auto digits = neg ? s.substr(1) : s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ContractError("bad polynomial coefficient: '" + std::string(tok) + "'");
    }
    const BigInt v{std::string(digits)};
    c.push_back(neg ? BigInt(-v) : v);
  }
  return IntPoly(std::move(c));
}

std::vector<IntPoly> parse_poly_list(std::string_view text) {
  std::vector<IntPoly> out;
  for (auto tok : detail::split(text, '|')) out.push_back(parse_poly_literal(tok));
  return out;
}

Residue poly_eval_mod(const IntPoly& poly, Residue y, const PrimeCtx& ctx) {
  const Residue yr = y % ctx.p();
  Residue acc = 0;
  for (int k = poly.degree(); k >= 0; --k) {
    acc = ctx.add(ctx.mul(acc, yr), ctx.reduce(poly.coeff(k)));
  }
  return acc;
}

IntPoly poly_shift(const IntPoly& poly, const BigInt& k) {
  // Horner in (y + k): acc <- acc * (y + k) + c_a.
  std::vector<BigInt> acc;
  for (int a = poly.degree(); a >= 0; --a) {
    std::vector<BigInt> next(acc.size() + 1);
    for (std::size_t b = 0; b < acc.size(); ++b) {
      next[b + 1] += acc[b];
      next[b] += acc[b] * k;
    }
    next[0] += poly.coeff(a);
    acc = std::move(next);
  }
  return IntPoly(std::move(acc));
}

IntPoly poly_partial(const IntPoly& poly, const BigInt& k) {
  return poly - poly_shift(poly, k);
}

}  // namespace addcomb
