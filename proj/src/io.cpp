#include "capslep/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace capslep::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view s) {
  const std::string str(s);
  if (str.empty()) throw DomainError("parse_double: empty field");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(str.c_str(), &end);
  // ERANGE on gradual underflow still yields the correctly rounded subnormal.
  const bool overflow = errno == ERANGE && std::isinf(v);
  if (end != str.c_str() + str.size() || overflow) {
    throw DomainError("parse_double: not a number: '" + str + "'");
  }
  return v;
}

double degrees_to_radians(double deg) {
  if (deg == 180.0) return std::numbers::pi;
  if (deg == 90.0) return std::numbers::pi / 2;
  return deg * (std::numbers::pi / 180.0);
}

void write_csv(std::ostream& os, const CsvTable& table) {
  for (const auto& [k, v] : table.header) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

CsvTable read_csv(std::istream& is) {
  CsvTable t;
  std::string line;
  bool have_columns = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = line.size() > 2 && line[1] == ' ' ? line.substr(2) : line.substr(1);
      const auto eq = body.find('=');
      if (eq == std::string::npos) {
        t.header.emplace_back(body, "");
      } else {
        t.header.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      }
      continue;
    }
    if (!have_columns) {
      t.columns = split(line);
      have_columns = true;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != t.columns.size()) throw DomainError("read_csv: ragged row");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_double(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

SolutionFile to_solution_file(const slepian::FixedOrderSolution& solution, double theta_degrees) {
  SolutionFile f;
  f.L = solution.problem().cap().bandlimit();
  f.theta_degrees = theta_degrees;
  f.m = solution.problem().order();
  f.chi = solution.chi();
  f.eta = solution.eta();
  f.g = solution.g();
  return f;
}

slepian::FixedOrderSolution from_solution_file(const SolutionFile& file) {
  const capop::CapProblem cap(file.L, degrees_to_radians(file.theta_degrees));
  return slepian::FixedOrderSolution(capop::FixedOrderProblem(cap, file.m), file.chi, file.eta, file.g);
}

namespace {

std::string json_string(const std::string& v) { return nlohmann::json(v).dump(); }

std::string json_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_double(v[i]);
  return out + "]";
}

}  // namespace

// Written by hand so every float carries 17 significant digits.
std::string to_json(const SolutionFile& file) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema\": " << json_string(file.schema) << ",\n";
  os << "  \"L\": " << file.L << ",\n";
  os << "  \"theta_degrees\": " << format_double(file.theta_degrees) << ",\n";
  os << "  \"m\": " << file.m << ",\n";
  os << "  \"chi\": " << json_array(file.chi) << ",\n";
  os << "  \"eta\": " << json_array(file.eta) << ",\n";
  os << "  \"g\": [";
  for (std::size_t i = 0; i < file.g.size(); ++i) os << (i ? ",\n    " : "\n    ") << json_array(file.g[i]);
  os << (file.g.empty() ? "],\n" : "\n  ],\n");
  os << "  \"conventions\": {\n";
  os << "    \"ordering\": " << json_string(file.ordering) << ",\n";
  os << "    \"sign\": " << json_string(file.sign) << ",\n";
  os << "    \"degrees\": " << json_string(file.degrees) << "\n";
  os << "  }\n}\n";
  return os.str();
}

namespace {

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& allowed, const char* where) {
  if (!obj.is_object()) throw DomainError(std::string("solution file: ") + where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw DomainError(std::string("solution file: unknown field '") + key + "' in " + where);
    }
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) throw DomainError(std::string("solution file: missing field '") + key + "' in " + where);
  }
}

}  // namespace

SolutionFile from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("solution file: ") + e.what());
  }
  reject_unknown(j, {"schema", "L", "theta_degrees", "m", "chi", "eta", "g", "conventions"}, "top level");
  reject_unknown(j["conventions"], {"ordering", "sign", "degrees"}, "conventions");

  for (const char* key : {"L", "m"}) {
    if (j.contains(key) && !j[key].is_number_integer()) {
      throw DomainError(std::string("solution file: '") + key + "' must be an integer");
    }
  }

  SolutionFile f;
  try {
    f.schema = j["schema"].get<std::string>();
    f.L = j["L"].get<int>();
    f.theta_degrees = j["theta_degrees"].get<double>();
    f.m = j["m"].get<int>();
    f.chi = j["chi"].get<std::vector<double>>();
    f.eta = j["eta"].get<std::vector<double>>();
    f.g = j["g"].get<std::vector<std::vector<double>>>();
    f.ordering = j["conventions"]["ordering"].get<std::string>();
    f.sign = j["conventions"]["sign"].get<std::string>();
    f.degrees = j["conventions"]["degrees"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("solution file: ") + e.what());
  }
  const SolutionFile defaults;
  if (f.schema != kSolutionSchema) throw DomainError("solution file: unsupported schema '" + f.schema + "'");
  if (f.ordering != defaults.ordering || f.sign != defaults.sign || f.degrees != defaults.degrees) {
    throw DomainError("solution file: unsupported conventions");
  }
  // Size checks happen in FixedOrderSolution; run them now so a bad file fails at load.
  (void)from_solution_file(f);
  return f;
}

}  // namespace capslep::io
