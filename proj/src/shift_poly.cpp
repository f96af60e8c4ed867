#include "addcomb/shift_poly.hpp"

#include <algorithm>

namespace addcomb {

namespace {

const HPoly kZeroH;

HPoly::Monomial trimmed(HPoly::Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

unsigned total_degree(const HPoly::Monomial& m) {
  unsigned s = 0;
  for (unsigned e : m) s += e;
  return s;
}

std::string monomial_string(const HPoly::Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "h" + std::to_string(k + 1);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

BigInt int_pow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

HPoly::HPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

HPoly HPoly::symbol(ShiftSymbol h) {
  if (h.index == 0) throw ContractError("shift symbols are numbered from 1");
  HPoly out;
  Monomial m(h.index, 0);
  m.back() = 1;
  out.terms_.emplace(std::move(m), BigInt(1));
  return out;
}

bool HPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

unsigned HPoly::max_symbol() const noexcept {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<unsigned>(m.size()));
  return best;
}

BigInt HPoly::max_abs_coefficient() const {
  BigInt best = 0;
  for (const auto& [m, c] : terms_) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (a > best) best = a;
  }
  return best;
}

bool HPoly::depends_on(ShiftSymbol h) const noexcept {
  for (const auto& [m, c] : terms_) {
    if (m.size() >= h.index && m[h.index - 1] != 0) return true;
  }
  return false;
}

void HPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HPoly HPoly::substitute(ShiftSymbol h, const BigInt& value) const {
  HPoly out;
  const std::size_t k = h.index - 1;
  for (const auto& [m, c] : terms_) {
    if (m.size() <= k || m[k] == 0) {
      out.add_term(m, c);
      continue;
    }
    Monomial rest = m;
    const unsigned e = rest[k];
    rest[k] = 0;
    out.add_term(trimmed(std::move(rest)), c * int_pow(value, e));
  }
  return out;
}

HPoly HPoly::operator-() const {
  HPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

HPoly operator+(const HPoly& a, const HPoly& b) {
  HPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

HPoly operator-(const HPoly& a, const HPoly& b) { return a + (-b); }

HPoly operator*(const HPoly& a, const HPoly& b) {
  HPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      HPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
      for (std::size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool operator<(const HPoly& a, const HPoly& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                      b.terms_.end());
}

std::string HPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, BigInt>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return total_degree(x.first) > total_degree(y.first);
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += monomial_string(m);
    }
  }
  return out;
}

ShiftPoly::ShiftPoly(const IntPoly& p) {
  for (const BigInt& c : p.coeffs()) coeffs_.emplace_back(c);
  trim();
}

ShiftPoly::ShiftPoly(std::vector<HPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ShiftPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const HPoly& ShiftPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZeroH;
}

const HPoly& ShiftPoly::leading() const {
  return coeffs_.empty() ? kZeroH : coeffs_.back();
}

unsigned ShiftPoly::max_symbol() const noexcept {
  unsigned best = 0;
  for (const auto& c : coeffs_) best = std::max(best, c.max_symbol());
  return best;
}

ShiftPoly ShiftPoly::shifted(const HPoly& s) const {
  std::vector<HPoly> acc;
  for (int a = degree(); a >= 0; --a) {
    std::vector<HPoly> next(acc.size() + 1);
    for (std::size_t b = 0; b < acc.size(); ++b) {
      next[b + 1] = next[b + 1] + acc[b];
      next[b] = next[b] + acc[b] * s;
    }
    next[0] = next[0] + coeffs_[a];
    acc = std::move(next);
  }
  return ShiftPoly(std::move(acc));
}

ShiftPoly ShiftPoly::substitute(ShiftSymbol h, const BigInt& value) const {
  std::vector<HPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.substitute(h, value));
  return ShiftPoly(std::move(c));
}

ShiftPoly ShiftPoly::operator-() const {
  std::vector<HPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return ShiftPoly(std::move(c));
}

ShiftPoly operator+(const ShiftPoly& a, const ShiftPoly& b) {
  std::vector<HPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return ShiftPoly(std::move(c));
}

ShiftPoly operator-(const ShiftPoly& a, const ShiftPoly& b) { return a + (-b); }

bool operator<(const ShiftPoly& a, const ShiftPoly& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

std::string ShiftPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const HPoly& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs;
    bool negative = false;
    if (c.is_constant()) {
      const BigInt& v = c.terms().begin()->second;
      negative = v < 0;
      BigInt mag = negative ? BigInt(-v) : v;
      if (!(mag == 1 && k > 0)) cs = mag.str();
    } else if (c.terms().size() == 1) {
      const BigInt& v = c.terms().begin()->second;
      negative = v < 0;
      cs = (negative ? -c : c).to_string();
    } else {
      cs = "(" + c.to_string() + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += cs;
    if (k > 0) {
      if (!cs.empty()) out += "*";
      out += "y";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

ShiftPoly poly_shift(const IntPoly& poly, ShiftSymbol h) {
  return ShiftPoly(poly).shifted(HPoly::symbol(h));
}

ShiftPoly poly_partial(const IntPoly& poly, ShiftSymbol h) {
  return ShiftPoly(poly) - poly_shift(poly, h);
}

}  // namespace addcomb
