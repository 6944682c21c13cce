#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "leplab/grid_function.hpp"

namespace leplab {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// GridFunction file format: header "x,re,im", one row per node, values in
/// shortest round-trip representation so that write/read is value-exact.
void write_grid_csv(const std::filesystem::path& path, const GridFunction& f);

/// Reads the format written by write_grid_csv. The half-width is taken from
/// the last x entry and the kind is real iff every im entry is exactly zero.
GridFunction read_grid_csv(const std::filesystem::path& path);

/// Small helper for experiment data files: fixed header, double-valued rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  void add_row(std::initializer_list<double> row) { rows.emplace_back(row); }
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);

}  // namespace leplab
