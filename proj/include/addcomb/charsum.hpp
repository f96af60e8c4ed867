#pragma once

// Complete exponential sums E_y e_p(P(y)) and the (d-1) p^{-1/2} bound.

#include <cstdint>
#include <vector>

#include "addcomb/int_poly.hpp"

namespace addcomb {

struct WeylResult {
  Complex value;
  double modulus = 0.0;
  // Degree of P reduced mod p; -1 when P vanishes identically on F_p.
  int degree = -1;
  double bound = 0.0;           // (degree - 1) p^{-1/2}
  bool bound_applies = false;   // 1 <= degree < p
  bool within_bound = true;     // modulus <= bound + 1e-12 whenever the bound applies
};

constexpr double kWeylSlack = 1e-12;

WeylResult weyl_sum(const IntPoly& poly, const PrimeCtx& ctx);

struct WeylScanCell {
  int degree = 0;
  std::uint64_t p = 0;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double max_modulus = 0.0;
  double max_ratio = 0.0;  // max modulus / bound, reported for degree >= 2
};

struct WeylScanReport {
  std::vector<WeylScanCell> cells;
  bool all_within_bound() const;
  double max_ratio() const;
};

// Samples `trials` polynomials per (degree, prime) with uniform coefficients
// in [0, p), resampling until the reduced degree equals the requested one.
// Degrees outside [1, p) are skipped for that prime.
WeylScanReport weyl_bound_scan(const std::vector<int>& degrees, const std::vector<std::uint64_t>& primes,
                               std::size_t trials, std::uint64_t seed);

}  // namespace addcomb
