#include "addcomb/counting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "addcomb/gowers.hpp"
#include "addcomb/summation.hpp"
#include "product_kernel.hpp"

namespace addcomb {

using detail::MaskFactor;
using detail::PhaseFactor;
using detail::ProductKernel;
using detail::ShiftedFactor;

ConfigurationSpec::ConfigurationSpec(std::size_t dim, std::vector<IntVec> vectors, std::vector<IntPoly> polys)
    : dim_(dim), vectors_(std::move(vectors)), polys_(std::move(polys)) {
  if (dim_ == 0) throw ContractError("dimension D must be at least 1");
  if (polys_.empty()) throw ContractError("configuration needs at least one polynomial");
  if (vectors_.size() != polys_.size()) {
    throw ContractError("got " + std::to_string(vectors_.size()) + " vectors for " + std::to_string(polys_.size()) +
                        " polynomials");
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& v = vectors_[i];
    if (v.size() != dim_) throw ContractError("vector v_" + std::to_string(i + 1) + " has wrong length");
    if (std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; })) {
      throw ContractError("vector v_" + std::to_string(i + 1) + " is zero");
    }
  }
  int prev = 0;
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const int d = polys_[i].degree();
    if (d <= prev) throw ContractError("degrees must satisfy 0 < deg P_1 < ... < deg P_t");
    prev = d;
  }
}

ConfigurationSpec ConfigurationSpec::square_corners() {
  return ConfigurationSpec(2, {{1, 0}, {0, 1}}, {IntPoly{0, 1}, IntPoly{0, 0, 1}});
}

ConfigurationSpec ConfigurationSpec::cubic_corners() {
  return ConfigurationSpec(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                           {IntPoly{0, 1}, IntPoly{0, 0, 1}, IntPoly{0, 0, 0, 1}});
}

std::vector<std::string> validate(const ConfigurationSpec& spec, const PrimeCtx& ctx) {
  std::vector<std::string> errors;
  const auto p = ctx.p();
  const int top = spec.polys().back().degree();
  if (static_cast<std::uint64_t>(top) >= p) {
    errors.push_back("p = " + std::to_string(p) + " does not exceed deg P_t = " + std::to_string(top));
  }
  for (std::size_t i = 0; i < spec.t(); ++i) {
    if (ctx.reduce(spec.polys()[i].leading()) == 0) {
      errors.push_back("P_" + std::to_string(i + 1) + ": leading coefficient vanishes mod p");
    }
    if (FpVec::reduce(spec.vectors()[i], ctx).is_zero()) {
      errors.push_back("v_" + std::to_string(i + 1) + ": vector vanishes mod p");
    }
  }
  int prev = 0;
  for (std::size_t i = 0; i < spec.t(); ++i) {
    const int d = spec.polys()[i].degree_mod(ctx);
    if (d <= prev) {
      errors.push_back("P_" + std::to_string(i + 1) + ": degrees not strictly increasing after reduction mod p");
      break;
    }
    prev = d;
  }
  return errors;
}

void require_valid(const ConfigurationSpec& spec, const PrimeCtx& ctx) {
  const auto errors = validate(spec, ctx);
  if (errors.empty()) return;
  std::ostringstream msg;
  msg << "configuration invalid for p = " << ctx.p() << ":";
  for (const auto& e : errors) msg << " " << e << ";";
  throw ContractError(msg.str());
}

namespace {

// Integer data of a configuration reduced into one evaluation context.
struct Reduced {
  GridShape shape;
  std::vector<FpVec> v;
  std::vector<std::vector<Residue>> values;  // values[i][y] = P_i(y) mod p

  // v_i P_i(y)
  FpVec offset(std::size_t i, Residue y) const { return v[i].scaled(values[i][y], shape.ctx()); }
};

Reduced reduce_spec(const ConfigurationSpec& spec, const GridShape& shape) {
  if (shape.dim() != spec.dim()) {
    throw ContractError("function dimension " + std::to_string(shape.dim()) + " does not match D = " +
                        std::to_string(spec.dim()));
  }
  require_valid(spec, shape.ctx());
  Reduced r{shape, {}, {}};
  for (std::size_t i = 0; i < spec.t(); ++i) {
    r.v.push_back(FpVec::reduce(spec.vectors()[i], shape.ctx()));
    r.values.push_back(spec.polys()[i].value_table(shape.ctx()));
  }
  return r;
}

template <typename T>
void require_same_shape(const GridShape& shape, std::span<const Grid<T>> grids, const char* what) {
  for (const auto& g : grids) {
    if (!(g.shape() == shape)) throw ContractError(std::string(what) + " live on different grids");
  }
}

void require_bounded_all(std::span<const GridFunction> fns, const char* name, std::size_t first) {
  for (std::size_t i = 0; i < fns.size(); ++i) {
    require_one_bounded(fns[i], name + std::to_string(i + first));
  }
}

Complex grid_mean(std::span<const Complex> acc, double scale) {
  return pairwise_mean<Complex>(acc) / scale;
}

}  // namespace

Complex counting_average(const ConfigurationSpec& spec, std::span<const GridFunction> fns) {
  if (fns.size() != spec.t() + 1) throw ContractError("counting_average needs t + 1 functions f_0..f_t");
  const GridShape& shape = fns[0].shape();
  require_same_shape(shape, fns, "functions");
  require_bounded_all(fns, "f_", 0);
  const Reduced r = reduce_spec(spec, shape);
  const ProductKernel kernel(shape);

  std::vector<Complex> acc(shape.size());
  std::vector<ShiftedFactor> factors(spec.t() + 1);
  factors[0] = {&fns[0], FpVec::zero(shape.dim())};
  for (Residue y = 0; y < shape.p(); ++y) {
    for (std::size_t i = 0; i < spec.t(); ++i) factors[i + 1] = {&fns[i + 1], r.offset(i, y)};
    kernel.accumulate(factors, {}, {}, acc);
  }
  return grid_mean(acc, static_cast<double>(shape.p()));
}

Complex main_term(const ConfigurationSpec& spec, std::span<const GridFunction> fns) {
  if (fns.size() != spec.t() + 1) throw ContractError("main_term needs t + 1 functions f_0..f_t");
  const GridShape& shape = fns[0].shape();
  require_same_shape(shape, fns, "functions");
  const Reduced r = reduce_spec(spec, shape);

  std::vector<Complex> prod(fns[0].values().begin(), fns[0].values().end());
  for (std::size_t i = 0; i < spec.t(); ++i) {
    const GridFunction e = conditional_expectation(fns[i + 1], r.v[i]);
    for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = detail::cmul(prod[x], e[x]);
  }
  return pairwise_mean<Complex>(prod);
}

CountReport error_report(const ConfigurationSpec& spec, std::span<const GridFunction> fns) {
  CountReport rep;
  rep.counting_value = counting_average(spec, fns);
  rep.main_term = main_term(spec, fns);
  rep.abs_error = std::abs(rep.counting_value - rep.main_term);
  rep.p = fns[0].shape().p();
  return rep;
}

Complex twisted_average(const ConfigurationSpec& spec, std::size_t m, std::span<const GridFunction> f,
                        std::span<const GridFunction> g, std::span<const PhaseFunction> phases) {
  if (m < 1 || m > spec.t()) throw ContractError("twisted_average needs 1 <= m <= t");
  if (f.size() != m + 1) throw ContractError("twisted_average needs f_0..f_m");
  if (g.size() != m) throw ContractError("twisted_average needs g_1..g_m");
  if (phases.size() != spec.t() - m) throw ContractError("twisted_average needs phases phi_{m+1}..phi_t");
  const GridShape& shape = f[0].shape();
  require_same_shape(shape, f, "functions");
  require_same_shape(shape, g, "functions");
  require_same_shape(shape, phases, "phases");
  require_bounded_all(f, "f_", 0);
  require_bounded_all(g, "g_", 1);
  const Reduced r = reduce_spec(spec, shape);
  const PrimeCtx& ctx = shape.ctx();
  const ProductKernel kernel(shape);
  const FpVec zero = FpVec::zero(shape.dim());

  std::vector<Complex> acc(shape.size());
  std::vector<ShiftedFactor> factors(2 * m + 1);
  std::vector<PhaseFactor> ph(phases.size());
  factors[0] = {&f[0], zero};
  for (Residue y = 0; y < shape.p(); ++y) {
    for (std::size_t i = 0; i < m; ++i) factors[1 + i] = {&f[i + 1], r.offset(i, y)};
    for (Residue k = 0; k < shape.p(); ++k) {
      const Residue yk = ctx.add(y, k);
      for (std::size_t i = 0; i < m; ++i) factors[1 + m + i] = {&g[i], r.offset(i, yk), true};
      for (std::size_t l = 0; l < phases.size(); ++l) {
        const std::size_t i = m + l;
        ph[l] = {&phases[l], zero, ctx.sub(r.values[i][y], r.values[i][yk])};
      }
      kernel.accumulate(factors, ph, {}, acc);
    }
  }
  const double p = static_cast<double>(shape.p());
  return grid_mean(acc, p * p);
}

namespace {

void check_dual(const DualSpec& d, const ConfigurationSpec& spec) {
  if (d.m < 1 || d.m > spec.t()) throw ContractError("dual spec needs 1 <= m <= t");
  if (d.functions.size() != d.m) throw ContractError("dual spec needs functions f_1..f_m");
  if (d.phases.size() != spec.t() - d.m) throw ContractError("dual spec needs phases phi_{m+1}..phi_t");
  const GridShape& shape = d.mask.shape();
  require_same_shape<Complex>(shape, d.functions, "functions");
  require_same_shape<Residue>(shape, d.phases, "phases");
  require_bounded_all(d.functions, "f_", 1);
}

}  // namespace

GridFunction g_function(const DualSpec& d, const ConfigurationSpec& spec) {
  check_dual(d, spec);
  const GridShape& shape = d.mask.shape();
  const Reduced r = reduce_spec(spec, shape);
  const ProductKernel kernel(shape);
  const FpVec zero = FpVec::zero(shape.dim());
  const MaskFactor mask{&d.mask, zero};

  std::vector<Complex> acc(shape.size());
  std::vector<ShiftedFactor> factors(d.m);
  std::vector<PhaseFactor> ph(d.phases.size());
  for (Residue y = 0; y < shape.p(); ++y) {
    for (std::size_t i = 0; i < d.m; ++i) factors[i] = {&d.functions[i], r.offset(i, y)};
    for (std::size_t l = 0; l < ph.size(); ++l) ph[l] = {&d.phases[l], zero, r.values[d.m + l][y]};
    kernel.accumulate(factors, ph, {&mask, 1}, acc);
  }
  const double p = static_cast<double>(shape.p());
  for (auto& a : acc) a /= p;
  return GridFunction(shape, std::move(acc));
}

GridFunction dual_function(const DualSpec& d, const ConfigurationSpec& spec) {
  check_dual(d, spec);
  const GridShape& shape = d.mask.shape();
  const PrimeCtx& ctx = shape.ctx();
  const Reduced r = reduce_spec(spec, shape);
  const ProductKernel kernel(shape);
  const std::size_t m = d.m;
  const std::size_t last = m - 1;

  std::vector<Complex> acc(shape.size());
  std::vector<ShiftedFactor> factors(2 * (m - 1) + 1);
  std::vector<PhaseFactor> ph(d.phases.size());
  for (Residue y = 0; y < shape.p(); ++y) {
    for (Residue k = 0; k < shape.p(); ++k) {
      const Residue yk = ctx.add(y, k);
      // -v_m P_m(y+k)
      const FpVec back = r.offset(last, yk).scaled(ctx.neg(1), ctx);
      for (std::size_t i = 0; i < last; ++i) {
        factors[2 * i] = {&d.functions[i], r.offset(i, y).plus(back, ctx)};
        factors[2 * i + 1] = {&d.functions[i], r.offset(i, yk).plus(back, ctx), true};
      }
      factors.back() = {&d.functions[last], r.offset(last, y).plus(back, ctx)};
      for (std::size_t l = 0; l < ph.size(); ++l) {
        const std::size_t i = m + l;
        ph[l] = {&d.phases[l], back, ctx.sub(r.values[i][y], r.values[i][yk])};
      }
      const MaskFactor mask{&d.mask, back};
      kernel.accumulate(factors, ph, {&mask, 1}, acc);
    }
  }
  const double p2 = static_cast<double>(shape.p()) * static_cast<double>(shape.p());
  for (auto& a : acc) a /= p2;
  return GridFunction(shape, std::move(acc));
}

SetCount count_in_set(const SubsetMask& set, const ConfigurationSpec& spec) {
  const GridShape& shape = set.shape();
  const Reduced r = reduce_spec(spec, shape);
  const ProductKernel kernel(shape);

  SetCount out;
  std::vector<Complex> acc(shape.size());
  std::vector<MaskFactor> masks(spec.t() + 1);
  masks[0] = {&set, FpVec::zero(shape.dim())};
  for (Residue y = 0; y < shape.p(); ++y) {
    std::fill(acc.begin(), acc.end(), Complex{});
    for (std::size_t i = 0; i < spec.t(); ++i) masks[i + 1] = {&set, r.offset(i, y)};
    kernel.accumulate({}, {}, masks, acc);
    std::uint64_t hits = 0;
    for (const auto& a : acc) hits += static_cast<std::uint64_t>(std::llround(a.real()));
    (y == 0 ? out.trivial : out.nontrivial) += hits;
  }
  return out;
}

std::optional<Witness> find_config(const SubsetMask& set, const ConfigurationSpec& spec) {
  const GridShape& shape = set.shape();
  const Reduced r = reduce_spec(spec, shape);

  std::vector<std::vector<FpVec>> offsets(shape.p());
  for (Residue y = 1; y < shape.p(); ++y) {
    for (std::size_t i = 0; i < spec.t(); ++i) offsets[y].push_back(r.offset(i, y));
  }
  // Index order is lexicographic order on x.
  for (std::size_t x = 0; x < shape.size(); ++x) {
    if (!set[x]) continue;
    for (Residue y = 1; y < shape.p(); ++y) {
      const bool all_in = std::all_of(offsets[y].begin(), offsets[y].end(),
                                      [&](const FpVec& o) { return set[shape.translate(x, o)] != 0; });
      if (all_in) return Witness{shape.point(x), y};
    }
  }
  return std::nullopt;
}

LowerBound product_lower_bound(const GridFunction& f, const ConfigurationSpec& spec) {
  const GridShape& shape = f.shape();
  for (const auto& z : f.values()) {
    if (z.imag() != 0.0 || z.real() < 0.0) throw ContractError("product_lower_bound needs f >= 0 pointwise");
  }
  const Reduced r = reduce_spec(spec, shape);

  std::vector<double> prod(shape.size());
  for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = f[x].real();
  for (std::size_t i = 0; i < spec.t(); ++i) {
    const GridFunction e = conditional_expectation(f, r.v[i]);
    for (std::size_t x = 0; x < prod.size(); ++x) prod[x] *= e[x].real();
  }
  LowerBound out;
  out.lhs = pairwise_mean<double>(prod);
  out.rhs = std::pow(mean(f).real(), static_cast<double>(spec.t() + 1));
  return out;
}

VonNeumannSides von_neumann_sides(std::span<const GridFunction> f, std::span<const Residue> multipliers) {
  if (f.size() < 2) throw ContractError("von_neumann_sides needs f_0..f_m with m >= 1");
  const std::size_t m = f.size() - 1;
  if (multipliers.size() != m) throw ContractError("von_neumann_sides needs multipliers a_1..a_m");
  const GridShape& shape = f[0].shape();
  if (shape.dim() != 1) throw ContractError("von_neumann_sides works on F_p (D = 1)");
  require_same_shape(shape, f, "functions");
  require_bounded_all(f, "f_", 0);
  const PrimeCtx& ctx = shape.ctx();
  const Residue am = ctx.reduce(static_cast<std::int64_t>(multipliers[m - 1] % ctx.p()));
  if (am == 0) throw ContractError("a_m must be nonzero mod p");
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (multipliers[i] % ctx.p() == am) throw ContractError("a_m must differ from a_1..a_{m-1} mod p");
  }

  const ProductKernel kernel(shape);
  std::vector<Complex> acc(shape.size());
  std::vector<ShiftedFactor> factors(m + 1);
  factors[0] = {&f[0], FpVec::zero(1)};
  for (Residue y = 0; y < shape.p(); ++y) {
    for (std::size_t i = 0; i < m; ++i) factors[i + 1] = {&f[i + 1], FpVec({ctx.mul(multipliers[i] % ctx.p(), y)})};
    kernel.accumulate(factors, {}, {}, acc);
  }
  VonNeumannSides out;
  out.lhs = std::abs(grid_mean(acc, static_cast<double>(shape.p())));
  out.rhs = gowers_norm(f[m], FpVec({1}), static_cast<unsigned>(m)).value;
  return out;
}

}  // namespace addcomb
