#pragma once

// Text formats for grids:
//
//   gridfn 1            (or "mask 1" / "phase 1")
//   p=<p> D=<D>
//   <re> <im>           (p^D lines in index order; masks carry 0/1, phases a residue)
//
// Doubles are written with 17 significant digits so a write/read cycle is exact.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "addcomb/grid.hpp"

namespace addcomb {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

void write_grid(std::ostream& out, const GridFunction& f);
void write_grid(std::ostream& out, const PhaseFunction& f);
void write_grid(std::ostream& out, const SubsetMask& f);

GridFunction read_grid_function(std::istream& in);
PhaseFunction read_phase_function(std::istream& in);
SubsetMask read_subset_mask(std::istream& in);

// File wrappers; an unreadable path raises std::runtime_error.
void save(const std::filesystem::path& path, const GridFunction& f);
void save(const std::filesystem::path& path, const PhaseFunction& f);
void save(const std::filesystem::path& path, const SubsetMask& f);
GridFunction load_grid_function(const std::filesystem::path& path);
PhaseFunction load_phase_function(const std::filesystem::path& path);
SubsetMask load_subset_mask(const std::filesystem::path& path);

}  // namespace addcomb
