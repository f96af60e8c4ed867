#pragma once

// Polynomials in y whose coefficients are integer polynomials in one or more
// shift symbols h1, h2, ...  The symbols are transcendental: a coefficient
// vanishes only when it is identically zero in Z[h1, h2, ...].

#include <map>
#include <string>
#include <vector>

#include "addcomb/int_poly.hpp"

namespace addcomb {

struct ShiftSymbol {
  unsigned index = 1;  // h1 is index 1
};

// Element of Z[h1, h2, ...].
class HPoly {
 public:
  // Exponent of h_{k+1} at position k, trailing zeros trimmed.
  using Monomial = std::vector<unsigned>;

  HPoly() = default;
  HPoly(const BigInt& c);  // NOLINT: integers embed as constants
  static HPoly symbol(ShiftSymbol h);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  // Largest symbol index appearing; 0 when constant.
  unsigned max_symbol() const noexcept;
  BigInt max_abs_coefficient() const;
  bool depends_on(ShiftSymbol h) const noexcept;

  HPoly substitute(ShiftSymbol h, const BigInt& value) const;

  HPoly operator-() const;
  friend HPoly operator+(const HPoly& a, const HPoly& b);
  friend HPoly operator-(const HPoly& a, const HPoly& b);
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  bool operator==(const HPoly&) const = default;
  // A fixed total order (deterministic tie-breaks only).
  friend bool operator<(const HPoly& a, const HPoly& b);

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt> terms_;
};

class ShiftPoly {
 public:
  ShiftPoly() = default;
  explicit ShiftPoly(const IntPoly& p);
  explicit ShiftPoly(std::vector<HPoly> coeffs);

  // y-degree over Z[h...]; -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const HPoly& coeff(std::size_t k) const;
  const HPoly& leading() const;
  const std::vector<HPoly>& coeffs() const noexcept { return coeffs_; }
  unsigned max_symbol() const noexcept;

  // P(y + s).
  ShiftPoly shifted(const HPoly& s) const;
  ShiftPoly substitute(ShiftSymbol h, const BigInt& value) const;

  ShiftPoly operator-() const;
  friend ShiftPoly operator+(const ShiftPoly& a, const ShiftPoly& b);
  friend ShiftPoly operator-(const ShiftPoly& a, const ShiftPoly& b);
  bool operator==(const ShiftPoly&) const = default;
  // Lexicographic on the ascending coefficient tuple.
  friend bool operator<(const ShiftPoly& a, const ShiftPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<HPoly> coeffs_;
};

// P(y + h) and P(y) - P(y + h) for a symbolic shift h.
ShiftPoly poly_shift(const IntPoly& poly, ShiftSymbol h);
ShiftPoly poly_partial(const IntPoly& poly, ShiftSymbol h);

}  // namespace addcomb
