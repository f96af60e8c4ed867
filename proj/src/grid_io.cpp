#include "addcomb/grid_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "text_util.hpp"

namespace addcomb {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_header(std::ostream& out, const char* magic, const GridShape& shape) {
  out << magic << " 1\n" << "p=" << shape.p() << " D=" << shape.dim() << "\n";
}

struct Header {
  GridShape shape;
};

Header read_header(std::istream& in, const std::string& magic, std::size_t& line_no) {
  std::string line;
  line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  line_no = 1;
  if (detail::trim(line).empty()) throw ParseError(1, "missing header");
  if (detail::trim(line) != magic + " 1") {
    throw ParseError(1, "expected '" + magic + " 1', got '" + std::string(detail::trim(line)) + "'");
  }
  if (!std::getline(in, line)) throw ParseError(2, "missing 'p=<p> D=<D>' line");
  line_no = 2;
  const auto fields = detail::split(detail::trim(line), ' ');
  std::uint64_t p = 0;
  std::uint64_t dim = 0;
  bool have_p = false;
  bool have_d = false;
  for (auto f : fields) {
    if (f.empty()) continue;
    try {
      if (f.starts_with("p=")) {
        p = detail::parse_u64(f.substr(2));
        have_p = true;
      } else if (f.starts_with("D=")) {
        dim = detail::parse_u64(f.substr(2));
        have_d = true;
      } else {
        throw ParseError(2, "unexpected header field '" + std::string(f) + "'");
      }
    } catch (const ContractError& e) {
      throw ParseError(2, e.what());
    }
  }
  if (!have_p || !have_d) throw ParseError(2, "malformed header, expected 'p=<p> D=<D>'");
  if (p < 3 || !is_prime(p)) throw ParseError(2, "p not prime");
  if (dim == 0) throw ParseError(2, "D must be at least 1");
  try {
    return Header{GridShape(PrimeCtx(p), dim)};
  } catch (const ContractError& e) {
    throw ParseError(2, e.what());
  }
}

// Reads exactly shape.size() non-empty payload lines, parsing each with `parse`.
template <typename T, typename Parse>
std::vector<T> read_payload(std::istream& in, const GridShape& shape, std::size_t line_no, Parse parse) {
  std::vector<T> values;
  values.reserve(shape.size());
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    if (values.size() == shape.size()) {
      throw ParseError(line_no, "wrong value count: more than p^D = " + std::to_string(shape.size()) + " values");
    }
    try {
      values.push_back(parse(body));
    } catch (const ContractError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (values.size() != shape.size()) {
    throw ParseError(line_no, "wrong value count: got " + std::to_string(values.size()) + ", expected p^D = " +
                                  std::to_string(shape.size()));
  }
  return values;
}

double parse_double(std::string_view s) {
  std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) throw ContractError("not a number: '" + tmp + "'");
  return v;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_grid(std::ostream& out, const GridFunction& f) {
  write_header(out, "gridfn", f.shape());
  for (const Complex& z : f.values()) out << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
}

void write_grid(std::ostream& out, const PhaseFunction& f) {
  write_header(out, "phase", f.shape());
  for (Residue r : f.values()) out << r << '\n';
}

void write_grid(std::ostream& out, const SubsetMask& f) {
  write_header(out, "mask", f.shape());
  for (std::uint8_t b : f.values()) out << static_cast<int>(b) << '\n';
}

GridFunction read_grid_function(std::istream& in) {
  std::size_t line_no = 0;
  const Header h = read_header(in, "gridfn", line_no);
  auto values = read_payload<Complex>(in, h.shape, line_no, [](std::string_view body) {
    std::vector<std::string_view> parts;
    for (auto tok : detail::split(body, ' ')) {
      if (!detail::trim(tok).empty()) parts.push_back(detail::trim(tok));
    }
    if (parts.size() != 2) throw ContractError("expected '<re> <im>'");
    return Complex(parse_double(parts[0]), parse_double(parts[1]));
  });
  return GridFunction(h.shape, std::move(values));
}

PhaseFunction read_phase_function(std::istream& in) {
  std::size_t line_no = 0;
  const Header h = read_header(in, "phase", line_no);
  const std::uint64_t p = h.shape.p();
  auto values = read_payload<Residue>(in, h.shape, line_no, [p](std::string_view body) {
    const Residue r = detail::parse_u64(body);
    if (r >= p) throw ContractError("phase value outside [0, p)");
    return r;
  });
  return PhaseFunction(h.shape, std::move(values));
}

SubsetMask read_subset_mask(std::istream& in) {
  std::size_t line_no = 0;
  const Header h = read_header(in, "mask", line_no);
  auto values = read_payload<std::uint8_t>(in, h.shape, line_no, [](std::string_view body) {
    if (body == "0") return std::uint8_t{0};
    if (body == "1") return std::uint8_t{1};
    throw ContractError("mask value must be 0 or 1");
  });
  return SubsetMask(h.shape, std::move(values));
}

void save(const std::filesystem::path& path, const GridFunction& f) {
  auto out = open_out(path);
  write_grid(out, f);
}
void save(const std::filesystem::path& path, const PhaseFunction& f) {
  auto out = open_out(path);
  write_grid(out, f);
}
void save(const std::filesystem::path& path, const SubsetMask& f) {
  auto out = open_out(path);
  write_grid(out, f);
}

GridFunction load_grid_function(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_grid_function(in);
}
PhaseFunction load_phase_function(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_phase_function(in);
}
SubsetMask load_subset_mask(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_subset_mask(in);
}

}  // namespace addcomb
