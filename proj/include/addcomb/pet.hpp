#pragma once

// PET induction on polynomial families: type matrices, niceness and the
// van der Corput descent step, with shifts kept as symbols h1, h2, ...

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addcomb/shift_poly.hpp"

namespace addcomb {

// Rows P_j = (P_j1, ..., P_jm) for j = 1..t.
class PolyFamily {
 public:
  PolyFamily() = default;
  explicit PolyFamily(std::vector<std::vector<ShiftPoly>> rows);
  // Row j holds P_j in column j and zeros elsewhere (t = m).
  static PolyFamily diagonal(const std::vector<IntPoly>& polys);

  std::size_t t() const noexcept { return rows_.size(); }
  std::size_t m() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
  // 1-based indices.
  const ShiftPoly& at(std::size_t j, std::size_t i) const { return rows_[j - 1][i - 1]; }
  const std::vector<std::vector<ShiftPoly>>& rows() const noexcept { return rows_; }
  int max_degree() const noexcept;
  unsigned max_symbol() const noexcept;

  // Columns i with P_ji constant in y for every j, 1-based.
  std::vector<std::size_t> constant_columns() const;
  PolyFamily without_columns(const std::vector<std::size_t>& columns) const;

  bool operator==(const PolyFamily&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::vector<ShiftPoly>> rows_;
};

// Plain-text family: "t=<t> m=<m>", then t lines of m literals separated by '|'.
PolyFamily read_family(std::istream& in);
PolyFamily load_family(const std::string& path);

// Nonconstant P, Q: deg(P - Q) < min(deg P, deg Q).
bool poly_equiv(const ShiftPoly& p, const ShiftPoly& q);

// P'_j: the entries P_ji whose later entries P_j'i (j' > j) are all constant.
std::vector<std::vector<ShiftPoly>> derived_sets(const PolyFamily& fam);

struct TypeMatrix {
  // w[j-1][k-1] for 1 <= j <= t, 1 <= k <= d.
  std::vector<std::vector<unsigned>> w;

  std::size_t t() const noexcept { return w.size(); }
  std::size_t d() const noexcept { return w.empty() ? 0 : w.front().size(); }
  bool operator==(const TypeMatrix&) const = default;
  std::string to_string() const;  // "[[1,0],[0,1]]"
};

// At least one column even when every entry is constant.
TypeMatrix type_of(const PolyFamily& fam);
// Reverse-lexicographic: (t,d), (t,d-1), ..., (t,1), (t-1,d), ...
bool type_less(const TypeMatrix& a, const TypeMatrix& b);

struct NicenessReport {
  bool dominant_last = true;   // deg P_tm >= deg P_ti
  bool last_row_tops = true;   // deg P_tm > deg P_ji for j < t (deg P_tm >= 1 when t = 1)
  bool differences = true;     // deg(P_tm - P_ti) > deg(P_jm - P_ji) for j < t, i < m
  // (j, i) pairs, 1-based, that break each condition.
  std::vector<std::pair<std::size_t, std::size_t>> dominant_last_failures;
  std::vector<std::pair<std::size_t, std::size_t>> last_row_tops_failures;
  std::vector<std::pair<std::size_t, std::size_t>> differences_failures;

  bool nice() const noexcept { return dominant_last && last_row_tops && differences; }
};

NicenessReport is_nice(const PolyFamily& fam);

// Integer values of the new shift at which a generically nonzero leading
// coefficient of S_h P (or of a difference within a row) vanishes.
struct Degeneracy {
  ShiftSymbol symbol;
  std::vector<BigInt> values;
  std::vector<HPoly> polys;  // the leading coefficients that depend on the shift
  std::string to_string() const;
};

struct VdcStep {
  std::vector<std::size_t> dropped_columns;  // constant columns removed from the input, 1-based
  std::vector<ShiftPoly> q;                  // Q_1..Q_t
  ShiftSymbol symbol;                        // the new shift h
  PolyFamily family;                         // S_h P, 2m columns
  TypeMatrix type_before;
  TypeMatrix type_after;
  Degeneracy degenerate_h;
};

// Throws ContractError on non-nice input or max degree < 2 ("descent terminated").
VdcStep vdc_step(const PolyFamily& fam);

enum class TraceStatus { terminated, max_steps_exceeded, non_nice, column_limit_exceeded };
std::string to_string(TraceStatus s);

struct PetTrace {
  TraceStatus status = TraceStatus::terminated;
  std::vector<VdcStep> steps;
  PolyFamily final_family;
  std::optional<NicenessReport> failure;  // set when an intermediate family is not nice
};

constexpr std::size_t kDefaultMaxSteps = 50;
// Every step doubles the number of columns; the trace stops before a step
// would produce more than this many.
constexpr std::size_t kDefaultMaxColumns = 256;

PetTrace pet_trace(const PolyFamily& fam, std::size_t max_steps = kDefaultMaxSteps,
                   std::size_t max_columns = kDefaultMaxColumns);

}  // namespace addcomb
