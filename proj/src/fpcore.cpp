#include "addcomb/fpcore.hpp"

#include <numbers>

#include "text_util.hpp"

namespace addcomb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeCtx::PrimeCtx(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw ContractError("p not prime (need an odd prime, got " + std::to_string(p) + ")");
  }
}

Residue PrimeCtx::reduce(const BigInt& a) const {
  BigInt r = a % p_;
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Complex ep(Residue a, const PrimeCtx& ctx) {
  const Residue r = a % ctx.p();
  if (r == 0) return {1.0, 0.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(ctx.p());
  return {std::cos(theta), std::sin(theta)};
}

std::vector<Complex> ep_table(const PrimeCtx& ctx) {
  std::vector<Complex> table(ctx.p());
  for (Residue a = 0; a < ctx.p(); ++a) table[a] = ep(a, ctx);
  return table;
}

FpVec FpVec::reduce(std::span<const std::int64_t> v, const PrimeCtx& ctx) {
  std::vector<Residue> c(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) c[j] = ctx.reduce(v[j]);
  return FpVec(std::move(c));
}

bool FpVec::is_zero() const noexcept {
  for (Residue c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

FpVec FpVec::plus(const FpVec& o, const PrimeCtx& ctx) const {
  if (o.dim() != dim()) throw ContractError("FpVec dimension mismatch");
  std::vector<Residue> c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = ctx.add(coords_[j], o.coords_[j]);
  return FpVec(std::move(c));
}

FpVec FpVec::minus(const FpVec& o, const PrimeCtx& ctx) const {
  if (o.dim() != dim()) throw ContractError("FpVec dimension mismatch");
  std::vector<Residue> c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = ctx.sub(coords_[j], o.coords_[j]);
  return FpVec(std::move(c));
}

FpVec FpVec::scaled(Residue s, const PrimeCtx& ctx) const {
  std::vector<Residue> c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = ctx.mul(coords_[j], s % ctx.p());
  return FpVec(std::move(c));
}

std::string to_string(const FpVec& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.dim(); ++j) {
    if (j) out += ",";
    out += std::to_string(v[j]);
  }
  return out + ")";
}

IntVec parse_int_vector(std::string_view text) {
  IntVec out;
  for (auto tok : detail::split(text, ',')) out.push_back(detail::parse_i64(tok));
  return out;
}

std::vector<IntVec> parse_int_vector_list(std::string_view text) {
  std::vector<IntVec> out;
  for (auto tok : detail::split(text, ';')) out.push_back(parse_int_vector(tok));
  return out;
}

}  // namespace addcomb
