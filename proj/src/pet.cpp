#include "addcomb/pet.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "addcomb/grid_io.hpp"
#include "text_util.hpp"

namespace addcomb {

PolyFamily::PolyFamily(std::vector<std::vector<ShiftPoly>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.empty()) throw ContractError("polynomial family needs m >= 1 columns");
    if (r.size() != rows_.front().size()) throw ContractError("family rows have different lengths");
  }
}

PolyFamily PolyFamily::diagonal(const std::vector<IntPoly>& polys) {
  const std::size_t t = polys.size();
  std::vector<std::vector<ShiftPoly>> rows(t, std::vector<ShiftPoly>(t));
  for (std::size_t j = 0; j < t; ++j) rows[j][j] = ShiftPoly(polys[j]);
  return PolyFamily(std::move(rows));
}

int PolyFamily::max_degree() const noexcept {
  int d = -1;
  for (const auto& r : rows_)
    for (const auto& p : r) d = std::max(d, p.degree());
  return d;
}

unsigned PolyFamily::max_symbol() const noexcept {
  unsigned s = 0;
  for (const auto& r : rows_)
    for (const auto& p : r) s = std::max(s, p.max_symbol());
  return s;
}

std::vector<std::size_t> PolyFamily::constant_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m(); ++i) {
    const bool constant =
        std::all_of(rows_.begin(), rows_.end(), [i](const auto& r) { return r[i].is_constant(); });
    if (constant) out.push_back(i + 1);
  }
  return out;
}

PolyFamily PolyFamily::without_columns(const std::vector<std::size_t>& columns) const {
  std::vector<std::vector<ShiftPoly>> rows(t());
  for (std::size_t j = 0; j < t(); ++j) {
    for (std::size_t i = 0; i < m(); ++i) {
      if (std::find(columns.begin(), columns.end(), i + 1) == columns.end()) rows[j].push_back(rows_[j][i]);
    }
  }
  return PolyFamily(std::move(rows));
}

std::string PolyFamily::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < t(); ++j) {
    out << "P" << j + 1 << " = (";
    for (std::size_t i = 0; i < m(); ++i) out << (i ? ", " : "") << rows_[j][i].to_string();
    out << ")";
    if (j + 1 < t()) out << "\n";
  }
  return out.str();
}

PolyFamily read_family(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!detail::trim(line).empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, "missing header 't=<t> m=<m>'");
  std::size_t t = 0;
  std::size_t m = 0;
  bool have_t = false;
  bool have_m = false;
  for (auto tok : detail::split(detail::trim(line), ' ')) {
    tok = detail::trim(tok);
    if (tok.empty()) continue;
    try {
      if (tok.starts_with("t=")) {
        t = detail::parse_u64(tok.substr(2));
        have_t = true;
      } else if (tok.starts_with("m=")) {
        m = detail::parse_u64(tok.substr(2));
        have_m = true;
      } else {
        throw ContractError("unknown header field '" + std::string(tok) + "'");
      }
    } catch (const ContractError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_t || !have_m || t == 0 || m == 0) throw ParseError(lineno, "header needs t >= 1 and m >= 1");

  std::vector<std::vector<ShiftPoly>> rows;
  for (std::size_t j = 0; j < t; ++j) {
    if (!next_line()) throw ParseError(lineno + 1, "expected " + std::to_string(t) + " family rows");
    std::vector<IntPoly> polys;
    try {
      polys = parse_poly_list(detail::trim(line));
    } catch (const ContractError& e) {
      throw ParseError(lineno, e.what());
    }
    if (polys.size() != m) {
      throw ParseError(lineno, "expected " + std::to_string(m) + " polynomials, got " + std::to_string(polys.size()));
    }
    std::vector<ShiftPoly> row;
    for (const auto& p : polys) row.emplace_back(p);
    rows.push_back(std::move(row));
  }
  if (next_line()) throw ParseError(lineno, "trailing content after the family rows");
  return PolyFamily(std::move(rows));
}

PolyFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file " + path);
  return read_family(in);
}

bool poly_equiv(const ShiftPoly& p, const ShiftPoly& q) {
  if (p.is_constant() || q.is_constant()) throw ContractError("poly_equiv is defined for nonconstant polynomials");
  return (p - q).degree() < std::min(p.degree(), q.degree());
}

std::vector<std::vector<ShiftPoly>> derived_sets(const PolyFamily& fam) {
  std::vector<std::vector<ShiftPoly>> out(fam.t());
  for (std::size_t i = 1; i <= fam.m(); ++i) {
    // Column i lands in P'_j for every j at or after its last nonconstant row.
    std::size_t last = 0;
    for (std::size_t j = 1; j <= fam.t(); ++j) {
      if (!fam.at(j, i).is_constant()) last = j;
    }
    for (std::size_t j = std::max<std::size_t>(last, 1); j <= fam.t(); ++j) out[j - 1].push_back(fam.at(j, i));
  }
  return out;
}

std::string TypeMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t j = 0; j < w.size(); ++j) {
    out << (j ? "," : "") << "[";
    for (std::size_t k = 0; k < w[j].size(); ++k) out << (k ? "," : "") << w[j][k];
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

// Number of poly_equiv classes among the given nonconstant polynomials.
unsigned count_classes(const std::vector<const ShiftPoly*>& members) {
  std::vector<const ShiftPoly*> reps;
  for (const ShiftPoly* p : members) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const ShiftPoly* r) { return poly_equiv(*r, *p); });
    if (!seen) reps.push_back(p);
  }
  return static_cast<unsigned>(reps.size());
}

}  // namespace

TypeMatrix type_of(const PolyFamily& fam) {
  const auto sets = derived_sets(fam);
  const std::size_t d = static_cast<std::size_t>(std::max(fam.max_degree(), 1));
  TypeMatrix w;
  w.w.assign(fam.t(), std::vector<unsigned>(d, 0));
  for (std::size_t j = 0; j < fam.t(); ++j) {
    for (std::size_t k = 1; k <= d; ++k) {
      std::vector<const ShiftPoly*> members;
      for (const auto& p : sets[j]) {
        if (p.degree() == static_cast<int>(k)) members.push_back(&p);
      }
      w.w[j][k - 1] = count_classes(members);
    }
  }
  return w;
}

bool type_less(const TypeMatrix& a, const TypeMatrix& b) {
  if (a.t() != b.t()) throw ContractError("type matrices have different numbers of rows");
  const std::size_t d = std::max(a.d(), b.d());
  auto cell = [](const TypeMatrix& m, std::size_t j, std::size_t k) -> unsigned {
    return k < m.w[j].size() ? m.w[j][k] : 0u;
  };
  for (std::size_t j = a.t(); j-- > 0;) {
    for (std::size_t k = d; k-- > 0;) {
      const unsigned x = cell(a, j, k);
      const unsigned y = cell(b, j, k);
      if (x != y) return x < y;
    }
  }
  return false;
}

NicenessReport is_nice(const PolyFamily& fam) {
  NicenessReport r;
  const std::size_t t = fam.t();
  const std::size_t m = fam.m();
  if (t == 0) return r;
  const int top = fam.at(t, m).degree();
  for (std::size_t i = 1; i <= m; ++i) {
    if (top < fam.at(t, i).degree()) {
      r.dominant_last = false;
      r.dominant_last_failures.emplace_back(t, i);
    }
  }
  if (t == 1) {
    if (top < 1) {
      r.last_row_tops = false;
      r.last_row_tops_failures.emplace_back(t, m);
    }
  } else {
    for (std::size_t j = 1; j < t; ++j) {
      for (std::size_t i = 1; i <= m; ++i) {
        if (!(top > fam.at(j, i).degree())) {
          r.last_row_tops = false;
          r.last_row_tops_failures.emplace_back(j, i);
        }
      }
    }
  }
  for (std::size_t j = 1; j < t; ++j) {
    for (std::size_t i = 1; i < m; ++i) {
      if (!((fam.at(t, m) - fam.at(t, i)).degree() > (fam.at(j, m) - fam.at(j, i)).degree())) {
        r.differences = false;
        r.differences_failures.emplace_back(j, i);
      }
    }
  }
  return r;
}

std::string Degeneracy::to_string() const {
  std::ostringstream out;
  out << "h" << symbol.index << " in {";
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? ", " : "") << values[k];
  out << "}";
  return out.str();
}

namespace {

// Smallest degree first, then the smallest coefficient tuple.
bool q_order(const ShiftPoly& a, const ShiftPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a < b;
}

std::vector<ShiftPoly> choose_q(const PolyFamily& fam) {
  const std::size_t t = fam.t();
  const std::size_t m = fam.m();
  const auto sets = derived_sets(fam);
  std::size_t l = 0;
  while (l < t && sets[l].empty()) ++l;
  std::vector<ShiftPoly> q(t);
  if (l + 1 < t) {
    q[l] = *std::min_element(sets[l].begin(), sets[l].end(), q_order);
    return q;
  }
  const bool all_equiv = std::all_of(fam.rows().back().begin(), fam.rows().back().end(),
                                     [&](const ShiftPoly& p) { return poly_equiv(p, fam.at(t, m)); });
  std::size_t pick = m;
  if (!all_equiv) {
    // Among the minimal-degree entries of row t, one not equivalent to P_tm,
    // so that P_tm keeps the top degree after subtracting Q_t.
    pick = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      const ShiftPoly& p = fam.at(t, i);
      if (poly_equiv(p, fam.at(t, m))) continue;
      if (pick == 0 || q_order(p, fam.at(t, pick))) pick = i;
    }
  }
  for (std::size_t j = 1; j <= t; ++j) q[j - 1] = fam.at(j, pick);
  return q;
}

Degeneracy find_degeneracy(const PolyFamily& fam, ShiftSymbol h) {
  std::set<HPoly, decltype([](const HPoly& a, const HPoly& b) { return a < b; })> polys;
  auto consider = [&](const ShiftPoly& p) {
    if (!p.is_zero() && p.leading().depends_on(h)) polys.insert(p.leading());
  };
  for (const auto& row : fam.rows()) {
    for (std::size_t a = 0; a < row.size(); ++a) {
      consider(row[a]);
      for (std::size_t b = a + 1; b < row.size(); ++b) consider(row[a] - row[b]);
    }
  }
  Degeneracy out;
  out.symbol = h;
  std::set<BigInt> roots;
  for (const auto& poly : polys) {
    out.polys.push_back(poly);
    const BigInt bound = 10 * poly.max_abs_coefficient();
    for (BigInt v = -bound; v <= bound; ++v) {
      if (poly.substitute(h, v).is_zero()) roots.insert(v);
    }
  }
  out.values.assign(roots.begin(), roots.end());
  return out;
}

}  // namespace

VdcStep vdc_step(const PolyFamily& fam) {
  if (fam.max_degree() < 2) throw ContractError("descent terminated: family has degree at most 1");
  const NicenessReport nice = is_nice(fam);
  if (!nice.nice()) throw ContractError("vdc_step needs a nice family");

  VdcStep step;
  step.dropped_columns = fam.constant_columns();
  // Functions whose shifts are constant in y join f_0 and drop out of the descent.
  const PolyFamily core = fam.without_columns(step.dropped_columns);
  step.type_before = type_of(fam);
  step.q = choose_q(core);
  step.symbol = ShiftSymbol{core.max_symbol() + 1};
  const HPoly h = HPoly::symbol(step.symbol);

  std::vector<std::vector<ShiftPoly>> rows(core.t());
  for (std::size_t j = 1; j <= core.t(); ++j) {
    const ShiftPoly& q = step.q[j - 1];
    for (std::size_t i = 1; i <= core.m(); ++i) {
      const ShiftPoly& p = core.at(j, i);
      rows[j - 1].push_back(p - q);
      rows[j - 1].push_back(p.shifted(h) - q);
    }
  }
  step.family = PolyFamily(std::move(rows));
  step.type_after = type_of(step.family);
  if (!type_less(step.type_after, step.type_before)) {
    throw std::logic_error("vdc_step did not lower the type: " + step.type_before.to_string() + " -> " +
                           step.type_after.to_string());
  }
  step.degenerate_h = find_degeneracy(step.family, step.symbol);
  return step;
}

std::string to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::terminated:
      return "terminated";
    case TraceStatus::max_steps_exceeded:
      return "max_steps_exceeded";
    case TraceStatus::non_nice:
      return "non_nice";
    case TraceStatus::column_limit_exceeded:
      return "column_limit_exceeded";
  }
  return "unknown";
}

PetTrace pet_trace(const PolyFamily& fam, std::size_t max_steps, std::size_t max_columns) {
  const NicenessReport start = is_nice(fam);
  if (!start.nice()) throw ContractError("pet_trace needs a nice family");
  PetTrace trace;
  trace.final_family = fam;
  while (trace.final_family.max_degree() >= 2) {
    if (trace.steps.size() >= max_steps) {
      trace.status = TraceStatus::max_steps_exceeded;
      return trace;
    }
    const PolyFamily& cur = trace.final_family;
    if (2 * (cur.m() - cur.constant_columns().size()) > max_columns) {
      trace.status = TraceStatus::column_limit_exceeded;
      return trace;
    }
    trace.steps.push_back(vdc_step(trace.final_family));
    trace.final_family = trace.steps.back().family;
    const NicenessReport r = is_nice(trace.final_family);
    if (!r.nice()) {
      trace.status = TraceStatus::non_nice;
      trace.failure = r;
      return trace;
    }
  }
  trace.status = TraceStatus::terminated;
  return trace;
}

}  // namespace addcomb
