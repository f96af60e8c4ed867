#include "addcomb/gowers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "addcomb/summation.hpp"

namespace addcomb {

namespace {

constexpr double kNegativeNoise = 1e-12;

void check_degree(unsigned s) {
  if (s == 0) throw ContractError("Gowers degree s must be at least 1");
  if (s > kMaxGowersDegree) {
    throw ContractError("Gowers degree s > " + std::to_string(kMaxGowersDegree) + " is not supported");
  }
}

// E_{x,h} f(x) conj(f(x + vh))
Complex pair_average(const GridFunction& f, const FpVec& v) {
  const GridShape& shape = f.shape();
  const PrimeCtx& ctx = shape.ctx();
  std::vector<Complex> per_shift(shape.p());
  std::vector<Complex> terms(shape.size());
  for (Residue h = 0; h < shape.p(); ++h) {
    const FpVec w = v.scaled(h, ctx);
    for (std::size_t x = 0; x < shape.size(); ++x) terms[x] = f[x] * std::conj(f[shape.translate(x, w)]);
    per_shift[h] = pairwise_mean<Complex>(terms);
  }
  return pairwise_mean<Complex>(per_shift);
}

Complex cube_average(const GridFunction& f, const FpVec& v, unsigned s) {
  if (s == 1) return pair_average(f, v);
  const PrimeCtx& ctx = f.shape().ctx();
  std::vector<Complex> per_shift(f.shape().p());
  for (Residue h = 0; h < f.shape().p(); ++h) {
    per_shift[h] = cube_average(delta_mult(f, v.scaled(h, ctx)), v, s - 1);
  }
  return pairwise_mean<Complex>(per_shift);
}

double clamp_nonnegative(double value) {
  if (value < -kNegativeNoise) {
    throw std::logic_error("Gowers cube average is negative beyond rounding noise: " + std::to_string(value));
  }
  return value < 0.0 ? 0.0 : value;
}

}  // namespace

GridFunction delta_mult(const GridFunction& f, const FpVec& w) {
  const GridShape& shape = f.shape();
  if (w.dim() != shape.dim()) throw ContractError("shift has wrong dimension");
  std::vector<Complex> out(shape.size());
  for (std::size_t x = 0; x < shape.size(); ++x) out[x] = f[x] * std::conj(f[shape.translate(x, w)]);
  return GridFunction(shape, std::move(out));
}

double gowers_norm_power(const GridFunction& f, const FpVec& v, unsigned s) {
  check_degree(s);
  require_direction(f.shape(), v);
  return clamp_nonnegative(cube_average(f, v, s).real());
}

NormResult gowers_norm(const GridFunction& f, const FpVec& v, unsigned s) {
  const double power = gowers_norm_power(f, v, s);
  return NormResult{std::pow(power, 1.0 / static_cast<double>(1u << s)), s, v};
}

NormResult gowers_u1(const GridFunction& f, const FpVec& v) {
  return NormResult{std::sqrt(l2_norm_squared(conditional_expectation(f, v))), 1, v};
}

double gowers_power_1d(std::span<const Complex> values, unsigned s, const PrimeCtx& ctx) {
  check_degree(s);
  const std::uint64_t p = ctx.p();
  if (values.size() != p) throw ContractError("1-D function must have p values");
  const std::size_t vertices = std::size_t{1} << s;
  std::vector<Residue> h(s, 0);
  std::vector<Complex> per_tuple;
  std::vector<Complex> terms(p);
  for (;;) {
    for (Residue n = 0; n < p; ++n) {
      Complex prod = 1.0;
      for (std::size_t w = 0; w < vertices; ++w) {
        Residue pos = n;
        unsigned weight = 0;
        for (unsigned b = 0; b < s; ++b) {
          if (w >> b & 1u) {
            pos = ctx.add(pos, h[b]);
            ++weight;
          }
        }
        prod *= (weight & 1u) ? std::conj(values[pos]) : values[pos];
      }
      terms[n] = prod;
    }
    per_tuple.push_back(pairwise_mean<Complex>(terms));
    unsigned b = 0;
    while (b < s && ++h[b] == p) h[b++] = 0;
    if (b == s) break;
  }
  return clamp_nonnegative(pairwise_mean<Complex>(per_tuple).real());
}

SliceIdentity gowers_1d_slice_identity(const GridFunction& f, const FpVec& v, unsigned s) {
  check_degree(s);
  const GridShape& shape = f.shape();
  SliceIdentity out;
  out.lhs = gowers_norm_power(f, v, s);
  // Every x on a coset sees a translate of the same slice, so averaging over
  // one representative per coset equals the average over all x.
  std::vector<double> per_coset;
  std::vector<Complex> slice(shape.p());
  for (std::size_t rep : coset_representatives(shape, v)) {
    const auto idx = line_indices(shape, rep, v);
    for (std::size_t n = 0; n < idx.size(); ++n) slice[n] = f[idx[n]];
    per_coset.push_back(gowers_power_1d(slice, s, shape.ctx()));
  }
  out.rhs = pairwise_mean<double>(per_coset);
  return out;
}

}  // namespace addcomb
