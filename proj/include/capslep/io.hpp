#pragma once

// Plain-text artifacts: CSV tables with '#' config lines and the versioned
// JSON solution file. Floats are written with 17 significant digits so every
// value parses back to the same bits.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capslep/slepian.hpp"

namespace capslep::io {

inline constexpr std::string_view kSolutionSchema = "capslep-solution/1";

/// %.17g.
std::string format_double(double v);

/// Whole-string decimal parse; throws DomainError on trailing garbage.
double parse_double(std::string_view s);

/// Degrees to radians, exact at 90 and 180.
double degrees_to_radians(double deg);

struct CsvTable {
  std::vector<std::pair<std::string, std::string>> header;  ///< "# key=value" lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);

struct SolutionFile {
  std::string schema{kSolutionSchema};
  int L = 1;
  double theta_degrees = 90.0;
  int m = 0;
  std::vector<double> chi;
  std::vector<double> eta;
  std::vector<std::vector<double>> g;
  std::string ordering = "eta-descending";
  std::string sign = "largest-magnitude-coefficient-positive";
  std::string degrees = "lmin..L";

  bool operator==(const SolutionFile&) const = default;
};

SolutionFile to_solution_file(const slepian::FixedOrderSolution& solution, double theta_degrees);

/// Rebuilds the solution; the stored coefficients are used as-is.
slepian::FixedOrderSolution from_solution_file(const SolutionFile& file);

std::string to_json(const SolutionFile& file);

/// Throws DomainError on schema mismatch, unknown or missing fields, or
/// inconsistent sizes.
SolutionFile from_json(std::string_view text);

}  // namespace capslep::io
