#pragma once

// Averaged counting operators for configurations x, x + v_1 P_1(y), ..., x + v_t P_t(y)
// on F_p^D, their main terms, the twisted operators and dual functions, and
// exact set-level counting.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addcomb/grid.hpp"
#include "addcomb/int_poly.hpp"

namespace addcomb {

/// Integer data (D, v_1..v_t, P_1..P_t) of a configuration. The constructor
/// enforces 0 < deg P_1 < ... < deg P_t and nonzero integer vectors of
/// length D; reduction mod p is checked separately by validate().
class ConfigurationSpec {
 public:
  ConfigurationSpec(std::size_t dim, std::vector<IntVec> vectors, std::vector<IntPoly> polys);

  // (x1,x2), (x1+y,x2), (x1,x2+y^2)
  static ConfigurationSpec square_corners();
  // (x1,x2,x3), (x1+y,x2,x3), (x1,x2+y^2,x3), (x1,x2,x3+y^3)
  static ConfigurationSpec cubic_corners();

  std::size_t dim() const noexcept { return dim_; }
  std::size_t t() const noexcept { return polys_.size(); }
  const std::vector<IntVec>& vectors() const noexcept { return vectors_; }
  const std::vector<IntPoly>& polys() const noexcept { return polys_; }

 private:
  std::size_t dim_;
  std::vector<IntVec> vectors_;
  std::vector<IntPoly> polys_;
};

// Checkable stand-in for "p large enough": returns one message per violation
// (empty when p is admissible).
std::vector<std::string> validate(const ConfigurationSpec& spec, const PrimeCtx& ctx);
// Throws ContractError listing every violation.
void require_valid(const ConfigurationSpec& spec, const PrimeCtx& ctx);

// E_{x,y} f_0(x) prod_i f_i(x + v_i P_i(y)); fns holds f_0..f_t.
Complex counting_average(const ConfigurationSpec& spec, std::span<const GridFunction> fns);

// E_x f_0(x) prod_i E(f_i|V_i)(x).
Complex main_term(const ConfigurationSpec& spec, std::span<const GridFunction> fns);

struct CountReport {
  Complex counting_value;
  Complex main_term;
  double abs_error = 0.0;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
};

CountReport error_report(const ConfigurationSpec& spec, std::span<const GridFunction> fns);

/// E_{x,y,k} f_0(x) prod_{i<=m} f_i(x + v_i P_i(y)) conj(g_i(x + v_i P_i(y+k)))
///         prod_{i>m} e_p(phi_i(x) (P_i(y) - P_i(y+k))).
/// f holds f_0..f_m, g holds g_1..g_m, phases holds phi_{m+1}..phi_t.
Complex twisted_average(const ConfigurationSpec& spec, std::size_t m, std::span<const GridFunction> f,
                        std::span<const GridFunction> g, std::span<const PhaseFunction> phases);

// Inputs of the twisted product function and its dual.
struct DualSpec {
  std::size_t m = 0;
  std::vector<GridFunction> functions;  // f_1..f_m
  std::vector<PhaseFunction> phases;    // phi_{m+1}..phi_t
  SubsetMask mask;                      // U
};

/// G(x) = E_y prod_{i<=m} f_i(x + v_i P_i(y)) prod_{i>m} e_p(phi_i(x) P_i(y)) 1_U(x).
GridFunction g_function(const DualSpec& d, const ConfigurationSpec& spec);

/// The dual function F(x) whose inner product with f_m equals ||G||_2^2:
/// the average over y, k of the G-integrand for the pair (y, y+k), translated
/// by x -> x - v_m P_m(y+k).
GridFunction dual_function(const DualSpec& d, const ConfigurationSpec& spec);

struct SetCount {
  std::uint64_t nontrivial = 0;  // pairs (x, y) with y != 0
  std::uint64_t trivial = 0;     // pairs (x, 0)
};

SetCount count_in_set(const SubsetMask& set, const ConfigurationSpec& spec);

struct Witness {
  FpVec x;
  Residue y = 0;
};

// First (x, y), y != 0, in lexicographic order with the whole configuration in the set.
std::optional<Witness> find_config(const SubsetMask& set, const ConfigurationSpec& spec);

struct LowerBound {
  double lhs = 0.0;  // E_x f(x) prod_{i=1}^t E(f|V_i)(x)
  double rhs = 0.0;  // (E f)^{t+1}
};

// f must be real and nonnegative.
LowerBound product_lower_bound(const GridFunction& f, const ConfigurationSpec& spec);

struct VonNeumannSides {
  double lhs = 0.0;  // |E_{x,y} f_0(x) prod_i f_i(x + a_i y)|
  double rhs = 0.0;  // ||f_m||_{U^m}
};

/// One-dimensional linear configuration against the U^m norm of the last
/// function. f holds f_0..f_m on F_p (D = 1); a_m must be nonzero and differ
/// from a_1..a_{m-1}.
VonNeumannSides von_neumann_sides(std::span<const GridFunction> f, std::span<const Residue> multipliers);

}  // namespace addcomb
