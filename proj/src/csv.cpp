#include "leplab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace leplab {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& field, const std::filesystem::path& path) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::runtime_error("csv: malformed number '" + field + "' in " + path.string());
  }
  return v;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

void write_grid_csv(const std::filesystem::path& path, const GridFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path.string() + " for writing");
  out << "x,re,im\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    out << format_double(f.node(k)) << ',' << format_double(f.value(k).real()) << ','
        << format_double(f.value(k).imag()) << '\n';
  }
  if (!out) throw std::runtime_error("csv: write failed for " + path.string());
}

GridFunction read_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "x,re,im") {
    throw std::runtime_error("csv: expected header 'x,re,im' in " + path.string());
  }
  std::vector<double> xs;
  std::vector<std::complex<double>> values;
  bool any_imag = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (fields.size() != 3) {
      throw std::runtime_error("csv: expected 3 columns per row in " + path.string());
    }
    xs.push_back(parse_double(fields[0], path));
    const double re = parse_double(fields[1], path);
    const double im = parse_double(fields[2], path);
    any_imag = any_imag || im != 0.0;
    values.emplace_back(re, im);
  }
  if (xs.size() < 3) throw std::runtime_error("csv: too few rows in " + path.string());
  const double half_width = xs.back();
  const std::size_t num_points = values.size();
  GridFunction f(half_width, num_points, std::move(values),
                 any_imag ? Kind::complex : Kind::real);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (std::abs(xs[k] - f.node(k)) > 1e-9 * std::max(1.0, half_width)) {
      throw std::runtime_error("csv: nodes are not a uniform grid on [-L, L] in " +
                               path.string());
    }
  }
  return f;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << table.header[i] << (i + 1 < table.header.size() ? ',' : '\n');
  }
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::runtime_error("csv: row width does not match header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << format_double(row[i]) << (i + 1 < row.size() ? ',' : '\n');
    }
  }
  if (!out) throw std::runtime_error("csv: write failed for " + path.string());
}

}  // namespace leplab
