#pragma once

// Gowers uniformity norms U^s(v) along a direction v in F_p^D.

#include <span>

#include "addcomb/grid.hpp"

namespace addcomb {

constexpr unsigned kMaxGowersDegree = 6;

struct NormResult {
  double value = 0.0;
  unsigned s = 0;
  FpVec v;
};

// x -> f(x) * conj(f(x + w))
GridFunction delta_mult(const GridFunction& f, const FpVec& w);

/// The 2^s-th power of ||f||_{U^s(v)}, i.e. the cube average
/// E_{x,h_1..h_s} prod_w C^{|w|} f(x + v(w.h)).
///
/// Computed by the derivative recursion
///   ||f||^{2^s} = E_h ||Delta_{vh} f||^{2^{s-1}},
/// bottoming out at E_{x,h} f(x) conj(f(x + vh)). The average is real and
/// nonnegative; rounding noise down to -1e-12 is clamped to zero and anything
/// more negative throws std::logic_error.
double gowers_norm_power(const GridFunction& f, const FpVec& v, unsigned s);

NormResult gowers_norm(const GridFunction& f, const FpVec& v, unsigned s);

// ||E(f|V)||_2, the U^1(v) seminorm through conditional expectation.
NormResult gowers_u1(const GridFunction& f, const FpVec& v);

/// Gowers U^s power of a function on Z/p given by its p values, by direct
/// enumeration of the 2^s-vertex cubes (cost p^{s+1} 2^s).
double gowers_power_1d(std::span<const Complex> values, unsigned s, const PrimeCtx& ctx);

struct SliceIdentity {
  double lhs = 0.0;  // ||f||_{U^s(v)}^{2^s}
  double rhs = 0.0;  // E_x ||f_x||_{U^s}^{2^s}, f_x(n) = f(x + vn)
};

SliceIdentity gowers_1d_slice_identity(const GridFunction& f, const FpVec& v, unsigned s);

}  // namespace addcomb
