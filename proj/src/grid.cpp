#include "addcomb/grid.hpp"

#include <cmath>
#include <limits>

#include "addcomb/summation.hpp"

namespace addcomb {

GridShape::GridShape(const PrimeCtx& ctx, std::size_t dim) : ctx_(ctx), dim_(dim) {
  if (dim == 0) throw ContractError("dimension D must be at least 1");
  strides_.assign(dim, 1);
  std::size_t size = 1;
  for (std::size_t j = dim; j-- > 0;) {
    strides_[j] = size;
    if (size > (std::size_t{1} << 32) / ctx.p()) throw ContractError("p^D too large for a dense grid");
    size *= ctx.p();
  }
  size_ = size;
}

std::size_t GridShape::index(const FpVec& x) const {
  if (x.dim() != dim_) throw ContractError("point dimension mismatch");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (x[j] >= p()) throw ContractError("coordinate outside [0, p)");
    idx += x[j] * strides_[j];
  }
  return idx;
}

FpVec GridShape::point(std::size_t index) const {
  std::vector<Residue> c(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    c[j] = index / strides_[j];
    index %= strides_[j];
  }
  return FpVec(std::move(c));
}

std::size_t GridShape::translate(std::size_t index, const FpVec& offset) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    const Residue c = index / strides_[j];
    index %= strides_[j];
    out += ctx_.add(c, offset[j]) * strides_[j];
  }
  return out;
}

bool is_one_bounded(const GridFunction& f, double tol) {
  for (const Complex& z : f.values()) {
    if (!(std::abs(z) <= 1.0 + tol)) return false;
  }
  return true;
}

void require_one_bounded(const GridFunction& f, const std::string& what) {
  if (!is_one_bounded(f)) throw ContractError(what + " is not 1-bounded");
}

void require_direction(const GridShape& shape, const FpVec& v) {
  if (v.dim() != shape.dim()) throw ContractError("direction has wrong dimension");
  for (Residue c : v.coords()) {
    if (c >= shape.p()) throw ContractError("direction coordinate outside [0, p)");
  }
  if (v.is_zero()) throw ContractError("direction vanishes mod p");
}

std::vector<std::size_t> line_indices(const GridShape& shape, std::size_t x, const FpVec& v) {
  std::vector<std::size_t> out(shape.p());
  out[0] = x;
  for (std::size_t n = 1; n < out.size(); ++n) out[n] = shape.translate(out[n - 1], v);
  return out;
}

std::vector<std::size_t> coset_representatives(const GridShape& shape, const FpVec& v) {
  require_direction(shape, v);
  std::vector<std::uint8_t> seen(shape.size(), 0);
  std::vector<std::size_t> reps;
  reps.reserve(shape.size() / shape.p());
  for (std::size_t x = 0; x < shape.size(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (std::size_t i : line_indices(shape, x, v)) seen[i] = 1;
  }
  return reps;
}

GridFunction conditional_expectation(const GridFunction& f, const FpVec& v) {
  const GridShape& shape = f.shape();
  std::vector<Complex> out(shape.size());
  std::vector<Complex> line(shape.p());
  for (std::size_t rep : coset_representatives(shape, v)) {
    const auto idx = line_indices(shape, rep, v);
    for (std::size_t n = 0; n < idx.size(); ++n) line[n] = f[idx[n]];
    const Complex avg = pairwise_mean<Complex>(line);
    for (std::size_t i : idx) out[i] = avg;
  }
  return GridFunction(shape, std::move(out));
}

std::vector<Complex> fourier_line(const GridFunction& f, const FpVec& x, const FpVec& v) {
  const GridShape& shape = f.shape();
  require_direction(shape, v);
  const PrimeCtx& ctx = shape.ctx();
  const auto idx = line_indices(shape, shape.index(x), v);
  const auto table = ep_table(ctx);
  std::vector<Complex> coeffs(shape.p());
  std::vector<Complex> terms(shape.p());
  for (Residue k = 0; k < shape.p(); ++k) {
    for (Residue n = 0; n < shape.p(); ++n) {
      terms[n] = f[idx[n]] * table[ctx.neg(ctx.mul(k, n))];
    }
    coeffs[k] = pairwise_mean<Complex>(terms);
  }
  return coeffs;
}

Complex fourier_along(const GridFunction& f, const FpVec& x, const FpVec& v, Residue k) {
  const GridShape& shape = f.shape();
  require_direction(shape, v);
  const PrimeCtx& ctx = shape.ctx();
  const auto idx = line_indices(shape, shape.index(x), v);
  std::vector<Complex> terms(shape.p());
  for (Residue n = 0; n < shape.p(); ++n) {
    terms[n] = f[idx[n]] * ep(ctx.neg(ctx.mul(k % ctx.p(), n)), ctx);
  }
  return pairwise_mean<Complex>(terms);
}

Complex fourier_reconstruct(const GridFunction& f, const FpVec& x, const FpVec& v, Residue n) {
  const PrimeCtx& ctx = f.shape().ctx();
  const auto coeffs = fourier_line(f, x, v);
  std::vector<Complex> terms(coeffs.size());
  for (Residue k = 0; k < coeffs.size(); ++k) terms[k] = coeffs[k] * ep(ctx.mul(k, n % ctx.p()), ctx);
  return pairwise_sum<Complex>(terms);
}

Complex mean(const GridFunction& f) { return pairwise_mean(f.values()); }

Complex inner_product(const GridFunction& a, const GridFunction& b) {
  if (!(a.shape() == b.shape())) throw ContractError("inner product of differently shaped grids");
  std::vector<Complex> terms(a.shape().size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = a[i] * std::conj(b[i]);
  return pairwise_mean<Complex>(terms);
}

double l2_norm_squared(const GridFunction& f) {
  std::vector<double> terms(f.shape().size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = std::norm(f[i]);
  return pairwise_mean<double>(terms);
}

GridFunction translate(const GridFunction& f, const FpVec& a) {
  const GridShape& shape = f.shape();
  std::vector<Complex> out(shape.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[shape.translate(i, a)];
  return GridFunction(shape, std::move(out));
}

GridFunction mask_to_function(const SubsetMask& mask) {
  std::vector<Complex> out(mask.shape().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] ? 1.0 : 0.0;
  return GridFunction(mask.shape(), std::move(out));
}

}  // namespace addcomb
