#pragma once

// Integer polynomials in one variable y, kept exactly over Z.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addcomb/fpcore.hpp"

namespace addcomb {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly monomial(unsigned degree, BigInt coeff = 1);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& coeff(std::size_t k) const;
  const BigInt& leading() const;

  // Coefficients reduced into [0, p); the trailing entries that vanish mod p
  // are dropped, so the size is one more than the degree of P as a function on F_p.
  std::vector<Residue> residue_coeffs(const PrimeCtx& ctx) const;
  int degree_mod(const PrimeCtx& ctx) const;
  // P(0), P(1), ..., P(p-1) mod p.
  std::vector<Residue> value_table(const PrimeCtx& ctx) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

  // Comma-separated coefficients, ascending degree: "0,0,1" is y^2.
  std::string to_literal() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly parse_poly_literal(std::string_view text);
// "|"-separated list of polynomial literals.
std::vector<IntPoly> parse_poly_list(std::string_view text);

// Horner evaluation of P at y, reduced mod p.
Residue poly_eval_mod(const IntPoly& poly, Residue y, const PrimeCtx& ctx);

// P(y + k) by exact expansion over Z.
IntPoly poly_shift(const IntPoly& poly, const BigInt& k);

// The difference operator with the sign convention P(y) - P(y + k).
IntPoly poly_partial(const IntPoly& poly, const BigInt& k);

}  // namespace addcomb
