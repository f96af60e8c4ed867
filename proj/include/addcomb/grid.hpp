#pragma once

// Dense functions on F_p^D, conditional expectation along a line and the
// Fourier transform along a direction.

#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "addcomb/fpcore.hpp"

namespace addcomb {

// Index layout of F_p^D: index(x) = sum_j x_j p^(D-j), x_1 most significant.
class GridShape {
 public:
  GridShape(const PrimeCtx& ctx, std::size_t dim);

  const PrimeCtx& ctx() const noexcept { return ctx_; }
  std::uint64_t p() const noexcept { return ctx_.p(); }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return size_; }
  // p^(D-1-j): the index stride of coordinate j (0-based).
  std::size_t stride(std::size_t j) const { return strides_[j]; }

  std::size_t index(const FpVec& x) const;
  FpVec point(std::size_t index) const;
  // index(point(index) + offset)
  std::size_t translate(std::size_t index, const FpVec& offset) const;

  bool operator==(const GridShape& o) const { return ctx_ == o.ctx_ && dim_ == o.dim_; }

 private:
  PrimeCtx ctx_;
  std::size_t dim_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

template <typename T>
class Grid {
 public:
  Grid(GridShape shape, std::vector<T> values) : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != shape_.size()) {
      throw ContractError("grid value count " + std::to_string(values_.size()) + " != p^D = " +
                          std::to_string(shape_.size()));
    }
    if constexpr (std::is_same_v<T, Residue>) {
      for (Residue r : values_) {
        if (r >= shape_.p()) throw ContractError("phase value outside [0, p)");
      }
    } else if constexpr (std::is_same_v<T, std::uint8_t>) {
      for (std::uint8_t b : values_) {
        if (b > 1) throw ContractError("mask value must be 0 or 1");
      }
    }
  }

  static Grid filled(const GridShape& shape, T value) {
    return Grid(shape, std::vector<T>(shape.size(), value));
  }

  // Builds values from a callable taking the point x.
  template <typename Fn>
  static Grid generate(const GridShape& shape, Fn&& fn) {
    std::vector<T> v(shape.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<T>(fn(shape.point(i)));
    return Grid(shape, std::move(v));
  }

  const GridShape& shape() const noexcept { return shape_; }
  std::span<const T> values() const noexcept { return values_; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  const T& at(const FpVec& x) const { return values_[shape_.index(x)]; }

 private:
  GridShape shape_;
  std::vector<T> values_;
};

using GridFunction = Grid<Complex>;
using PhaseFunction = Grid<Residue>;
using SubsetMask = Grid<std::uint8_t>;

constexpr double kOneBoundedTol = 1e-12;

bool is_one_bounded(const GridFunction& f, double tol = kOneBoundedTol);
// Throws ContractError naming `what` when f is not 1-bounded.
void require_one_bounded(const GridFunction& f, const std::string& what);

// Throws ContractError when v vanishes mod p or has the wrong dimension.
void require_direction(const GridShape& shape, const FpVec& v);

// x, x + v, ..., x + (p-1) v as grid indices.
std::vector<std::size_t> line_indices(const GridShape& shape, std::size_t x, const FpVec& v);
// One index per coset of span{v}, the smallest index of each coset.
std::vector<std::size_t> coset_representatives(const GridShape& shape, const FpVec& v);

GridFunction conditional_expectation(const GridFunction& f, const FpVec& v);

// E_n f(x + v n) e_p(-k n).
Complex fourier_along(const GridFunction& f, const FpVec& x, const FpVec& v, Residue k);
// The transform for all k = 0..p-1 at once.
std::vector<Complex> fourier_line(const GridFunction& f, const FpVec& x, const FpVec& v);
// sum_k f^(x; v; k) e_p(k n), anchored at the given x.
Complex fourier_reconstruct(const GridFunction& f, const FpVec& x, const FpVec& v, Residue n);

Complex mean(const GridFunction& f);
// E_x a(x) conj(b(x)).
Complex inner_product(const GridFunction& a, const GridFunction& b);
double l2_norm_squared(const GridFunction& f);
// x -> f(x + a)
GridFunction translate(const GridFunction& f, const FpVec& a);
GridFunction mask_to_function(const SubsetMask& mask);

}  // namespace addcomb
