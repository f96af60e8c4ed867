#pragma once

// Prime-field scalars, vectors and the additive character e_p.

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcomb {

using BigInt = boost::multiprecision::cpp_int;
using Residue = std::uint64_t;
using Complex = std::complex<double>;

// Integer vector in Z^D, before reduction mod p.
using IntVec = std::vector<std::int64_t>;

// Raised when an operation's precondition is violated by the caller's data.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

// The field F_p for an odd prime p.
class PrimeCtx {
 public:
  explicit PrimeCtx(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }

  Residue reduce(std::int64_t a) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    const std::int64_t r = a % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue reduce(const BigInt& a) const;

  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }

  bool operator==(const PrimeCtx&) const = default;

 private:
  std::uint64_t p_;
};

// e_p(a) = exp(2 pi i a / p).
Complex ep(Residue a, const PrimeCtx& ctx);

// Table of e_p(0), ..., e_p(p-1); inner loops index it instead of calling ep.
std::vector<Complex> ep_table(const PrimeCtx& ctx);

// A point of F_p^D with coordinates in canonical range [0, p).
class FpVec {
 public:
  FpVec() = default;
  explicit FpVec(std::vector<Residue> coords) : coords_(std::move(coords)) {}
  static FpVec zero(std::size_t dim) { return FpVec(std::vector<Residue>(dim, 0)); }
  static FpVec reduce(std::span<const std::int64_t> v, const PrimeCtx& ctx);

  std::size_t dim() const noexcept { return coords_.size(); }
  Residue operator[](std::size_t j) const { return coords_[j]; }
  std::span<const Residue> coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  FpVec plus(const FpVec& o, const PrimeCtx& ctx) const;
  FpVec minus(const FpVec& o, const PrimeCtx& ctx) const;
  FpVec scaled(Residue c, const PrimeCtx& ctx) const;

  bool operator==(const FpVec&) const = default;

 private:
  std::vector<Residue> coords_;
};

std::string to_string(const FpVec& v);

// Vector literal "1,0" and vector-list literal "1,0;0,1".
IntVec parse_int_vector(std::string_view text);
std::vector<IntVec> parse_int_vector_list(std::string_view text);

}  // namespace addcomb
