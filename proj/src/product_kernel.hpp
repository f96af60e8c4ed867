#pragma once

// Row-oriented kernel for the averaged products behind every counting
// operator: adds, for every x in F_p^D,
//
//   prod_k F_k(x + a_k) * e_p(sum_l c_l phi_l(x + b_l)) * prod_r 1_{U_r}(x + u_r)
//
// into acc[x]. The grid is walked one row (fixed x_1..x_{D-1}) at a time so
// every factor is read from a contiguous row of p values, cyclically rotated.

#include <span>
#include <vector>

#include "addcomb/grid.hpp"

namespace addcomb::detail {

inline Complex cmul(const Complex& a, const Complex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

struct ShiftedFactor {
  const GridFunction* fn;
  FpVec offset;
  bool conjugate = false;
};

struct PhaseFactor {
  const PhaseFunction* phase;
  FpVec offset;
  Residue coeff;
};

struct MaskFactor {
  const SubsetMask* mask;
  FpVec offset;
};

class ProductKernel {
 public:
  explicit ProductKernel(const GridShape& shape) : shape_(shape), ep_(ep_table(shape.ctx())) {}

  void accumulate(std::span<const ShiftedFactor> factors, std::span<const PhaseFactor> phases,
                  std::span<const MaskFactor> masks, std::span<Complex> acc) const {
    const std::size_t p = shape_.p();
    const std::size_t dim = shape_.dim();
    const std::size_t rows = shape_.size() / p;

    struct RowRef {
      std::size_t base_shift;  // index offset of the shifted row start
      std::size_t last;        // offset in the last coordinate
    };
    auto row_ref = [&](std::size_t row, const FpVec& offset) {
      std::size_t rest = row;
      std::size_t base = 0;
      // Row r covers indices r*p .. r*p + p-1; its prefix coordinates are the
      // base-p digits of r.
      for (std::size_t j = 0; j + 1 < dim; ++j) {
        const std::size_t stride = shape_.stride(j) / p;
        const Residue c = rest / stride;
        rest %= stride;
        base += shape_.ctx().add(c, offset[j]) * shape_.stride(j);
      }
      return RowRef{base, offset[dim - 1]};
    };

    std::vector<const Complex*> fptr(factors.size());
    std::vector<std::size_t> fshift(factors.size());
    std::vector<const Residue*> pptr(phases.size());
    std::vector<std::size_t> pshift(phases.size());
    std::vector<const std::uint8_t*> mptr(masks.size());
    std::vector<std::size_t> mshift(masks.size());

    for (std::size_t row = 0; row < rows; ++row) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const RowRef r = row_ref(row, factors[k].offset);
        fptr[k] = factors[k].fn->values().data() + r.base_shift;
        fshift[k] = r.last;
      }
      for (std::size_t k = 0; k < phases.size(); ++k) {
        const RowRef r = row_ref(row, phases[k].offset);
        pptr[k] = phases[k].phase->values().data() + r.base_shift;
        pshift[k] = r.last;
      }
      for (std::size_t k = 0; k < masks.size(); ++k) {
        const RowRef r = row_ref(row, masks[k].offset);
        mptr[k] = masks[k].mask->values().data() + r.base_shift;
        mshift[k] = r.last;
      }
      Complex* out = acc.data() + row * p;
      for (std::size_t xd = 0; xd < p; ++xd) {
        bool inside = true;
        for (std::size_t k = 0; k < masks.size() && inside; ++k) {
          std::size_t j = xd + mshift[k];
          if (j >= p) j -= p;
          inside = mptr[k][j] != 0;
        }
        if (!inside) continue;
        Complex prod(1.0, 0.0);
        for (std::size_t k = 0; k < factors.size(); ++k) {
          std::size_t j = xd + fshift[k];
          if (j >= p) j -= p;
          const Complex z = fptr[k][j];
          prod = cmul(prod, factors[k].conjugate ? std::conj(z) : z);
        }
        if (!phases.empty()) {
          std::uint64_t e = 0;
          for (std::size_t k = 0; k < phases.size(); ++k) {
            std::size_t j = xd + pshift[k];
            if (j >= p) j -= p;
            e = (e + phases[k].coeff * pptr[k][j]) % p;
          }
          prod = cmul(prod, ep_[e]);
        }
        out[xd] += prod;
      }
    }
  }

 private:
  GridShape shape_;
  std::vector<Complex> ep_;
};

}  // namespace addcomb::detail
