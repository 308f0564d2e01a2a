#include "capslep/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "capslep/capop.hpp"
#include "capslep/errors.hpp"
#include "capslep/flm.hpp"
#include "capslep/harmonics.hpp"
#include "capslep/io.hpp"
#include "capslep/slepian.hpp"
#include "capslep/verify.hpp"

namespace capslep::cli {

std::vector<double> GridSpec::values() const {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    v.push_back(start);
    return v;
  }
  for (int i = 0; i < count; ++i) {
    // Hit the stop value exactly.
    v.push_back(i == count - 1 ? stop : start + (stop - start) * i / (count - 1));
  }
  return v;
}

GridSpec parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
  if (b == std::string::npos || text.find(':', b + 1) != std::string::npos) {
    throw DomainError("grid must look like start:stop:count, got '" + text + "'");
  }
  GridSpec g;
  g.start = io::parse_double(text.substr(0, a));
  g.stop = io::parse_double(text.substr(a + 1, b - a - 1));
  const double count = io::parse_double(text.substr(b + 1));
  if (!std::isfinite(g.start) || !std::isfinite(g.stop)) throw DomainError("grid bounds must be finite");
  if (count != std::floor(count) || count < 1 || count > 1e6) {
    throw DomainError("grid count must be an integer in [1, 1000000]");
  }
  g.count = static_cast<int>(count);
  return g;
}

namespace {

struct RunConfig {
  std::string command;
  int L = 0;
  double theta_deg = 0.0;
  int m = 0;
  int n = 1;
  int l = 1;
  std::string matrix = "K";
  std::string grid;
  std::string out;
  std::string format;
  int threads = 0;
  std::string solution;
  std::string sign = "+";
  double phi_deg = 0.0;
  std::string field;
  bool has_L = false;
  bool has_theta = false;
  bool has_m = false;
  bool has_n = false;
  bool has_grid = false;
};

using Header = std::vector<std::pair<std::string, std::string>>;

std::string fmt(double v) { return io::format_double(v); }

/// cos of an angle in degrees, exact at the grid angles that matter.
double cos_degrees(double deg) {
  if (deg == 0.0) return 1.0;
  if (deg == 90.0) return 0.0;
  if (deg == 180.0) return -1.0;
  return std::cos(io::degrees_to_radians(deg));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

capop::CapProblem cap_of(const RunConfig& c) {
  require(c.has_L, "--L is required");
  require(c.has_theta, "--theta is required");
  require(std::isfinite(c.theta_deg) && c.theta_deg > 0.0 && c.theta_deg <= 180.0,
          "--theta must lie in (0, 180] degrees");
  return capop::CapProblem(c.L, io::degrees_to_radians(c.theta_deg));
}

Header base_header(const RunConfig& c) {
  Header h{{"command", c.command}};
  if (c.has_L) h.emplace_back("L", std::to_string(c.L));
  if (c.has_theta) h.emplace_back("theta_deg", fmt(c.theta_deg));
  return h;
}

/// Solves every order of the cap on a pool of worker threads. Results land in
/// slots indexed by m, so the output never depends on scheduling.
std::vector<slepian::FixedOrderSolution> solve_all_orders(const capop::CapProblem& cap, int threads) {
  const int L = cap.bandlimit();
  const int count = 2 * L + 1;
  std::vector<std::optional<slepian::FixedOrderSolution>> slots(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(slepian::solve_order(capop::FixedOrderProblem(cap, i - L)));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int nthreads = std::max(1, std::min(threads, count));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<slepian::FixedOrderSolution> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Output {
  Header header;
  io::CsvTable table;
  std::string raw;  ///< preformatted output, used instead of the table when set
};

std::string render(const Output& o, const std::string& format) {
  if (!o.raw.empty()) return o.raw;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "capslep-table/1";
    nlohmann::ordered_json h = nlohmann::ordered_json::object();
    for (const auto& [k, v] : o.header) h[k] = v;
    j["header"] = h;
    j["columns"] = o.table.columns;
    j["rows"] = o.table.rows;
    return j.dump(1) + "\n";
  }
  io::CsvTable t = o.table;
  t.header = o.header;
  std::ostringstream ss;
  io::write_csv(ss, t);
  return ss.str();
}

Output cmd_shannon(const RunConfig& c) {
  const auto cap = cap_of(c);
  Output o;
  o.table.columns = {"m", "N_m"};
  double sum = 0.0;
  const int L = cap.bandlimit();
  for (int m = -L; m <= L; ++m) {
    const double nm = capop::partial_shannon(capop::FixedOrderProblem(cap, m));
    sum += nm;
    o.table.rows.push_back({double(m), nm});
  }
  const double n = capop::shannon(cap);
  o.header = base_header(c);
  o.header.emplace_back("N", fmt(n));
  o.header.emplace_back("sum_N_m", fmt(sum));
  o.header.emplace_back("abs_diff", fmt(std::abs(sum - n)));
  return o;
}

Output cmd_spectrum(const RunConfig& c) {
  const auto cap = cap_of(c);
  require(c.matrix == "K" || c.matrix == "J", "--matrix must be K or J");
  const auto sols = solve_all_orders(cap, c.threads);
  struct Entry {
    double value;
    int m, n;
  };
  std::vector<Entry> entries;
  for (const auto& s : sols) {
    for (int n = 1; n <= s.size(); ++n) {
      const auto i = static_cast<std::size_t>(n - 1);
      entries.push_back({c.matrix == "K" ? s.eta()[i] : s.chi()[i], s.problem().order(), n});
    }
  }
  const bool k = c.matrix == "K";
  std::sort(entries.begin(), entries.end(), [k](const Entry& a, const Entry& b) {
    if (a.value != b.value) return k ? a.value > b.value : a.value < b.value;
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
  });
  Output o;
  o.header = base_header(c);
  o.header.emplace_back("matrix", c.matrix);
  o.header.emplace_back("ordering", k ? "eta descending" : "chi ascending");
  o.header.emplace_back("N", fmt(capop::shannon(cap)));
  o.table.columns = {"rank", "m", "n", k ? "eta" : "chi"};
  for (std::size_t r = 0; r < entries.size(); ++r) {
    o.table.rows.push_back({double(r + 1), double(entries[r].m), double(entries[r].n), entries[r].value});
  }
  return o;
}

slepian::FixedOrderSolution solution_of(RunConfig& c) {
  if (!c.solution.empty()) {
    std::ifstream in(c.solution);
    require(static_cast<bool>(in), "cannot read solution file '" + c.solution + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const auto file = io::from_json(ss.str());
    require(!c.has_L || c.L == file.L, "--L conflicts with the solution file");
    require(!c.has_theta || c.theta_deg == file.theta_degrees, "--theta conflicts with the solution file");
    require(!c.has_m || c.m == file.m, "--m conflicts with the solution file");
    c.L = file.L;
    c.theta_deg = file.theta_degrees;
    c.m = file.m;
    c.has_L = c.has_theta = c.has_m = true;
    return io::from_solution_file(file);
  }
  const auto cap = cap_of(c);
  require(c.has_m, "--m is required");
  return slepian::solve_order(capop::FixedOrderProblem(cap, c.m));
}

void check_m(const RunConfig& c) {
  const auto cap = cap_of(c);
  require(c.has_m, "--m is required");
  (void)capop::FixedOrderProblem(cap, c.m);
}

Output cmd_solve(RunConfig& c) {
  check_m(c);
  const auto sol = solution_of(c);
  Output o;
  if (c.format == "json") {
    o.raw = io::to_json(io::to_solution_file(sol, c.theta_deg));
    return o;
  }
  o.header = base_header(c);
  o.header.emplace_back("m", std::to_string(c.m));
  o.header.emplace_back("lmin", std::to_string(sol.problem().min_degree()));
  o.table.columns = {"n", "chi", "eta"};
  for (int l = sol.problem().min_degree(); l <= sol.problem().cap().bandlimit(); ++l) {
    o.table.columns.push_back("g_" + std::to_string(l));
  }
  for (int n = 1; n <= sol.size(); ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    std::vector<double> row{double(n), sol.chi()[i], sol.eta()[i]};
    for (double g : sol.coefficients(n)) row.push_back(g);
    o.table.rows.push_back(std::move(row));
  }
  return o;
}

Output cmd_eval(RunConfig& c) {
  if (c.solution.empty()) check_m(c);
  require(c.sign == "+" || c.sign == "-", "--sign must be + or -");
  require(c.field.empty() || c.field == "tau" || c.field == "polar", "--field must be tau or polar");
  require(std::isfinite(c.phi_deg), "--phi must be finite");
  const GridSpec grid = parse_grid(c.has_grid ? c.grid : "0:180:181");
  for (double t : grid.values()) require(t >= 0.0 && t <= 180.0, "eval grid angles must lie in [0, 180]");
  const auto sol = solution_of(c);
  require(c.n >= 1 && c.n <= sol.size(), "--n must lie in 1.." + std::to_string(sol.size()));

  Output o;
  o.header = base_header(c);
  o.header.emplace_back("m", std::to_string(c.m));
  o.header.emplace_back("n", std::to_string(c.n));
  o.header.emplace_back("eta", fmt(sol.eta()[static_cast<std::size_t>(c.n - 1)]));
  o.header.emplace_back("chi", fmt(sol.chi()[static_cast<std::size_t>(c.n - 1)]));
  if (c.field.empty()) {
    o.table.columns = {"theta_deg", "x", "G"};
    for (double t : grid.values()) {
      const double x = cos_degrees(t);
      o.table.rows.push_back({t, x, slepian::eval_G(sol, c.n, x)});
    }
    return o;
  }
  const slepian::VectorEigenfield field{&sol, c.n, c.sign == "+" ? harmonics::Sign::plus : harmonics::Sign::minus};
  o.header.emplace_back("sign", c.sign);
  o.header.emplace_back("realized_order", std::to_string(field.realized_order()));
  o.header.emplace_back("phi_deg", fmt(c.phi_deg));
  o.header.emplace_back("basis", c.field);
  if (c.field == "tau") {
    o.table.columns = {"theta_deg", "x", "re_tau_plus", "im_tau_plus", "re_tau_minus", "im_tau_minus"};
  } else {
    o.table.columns = {"theta_deg", "x", "re_theta", "im_theta", "re_phi", "im_phi"};
  }
  const double phi = io::degrees_to_radians(c.phi_deg);
  for (double t : grid.values()) {
    const double theta = t == 180.0 ? std::numbers::pi : io::degrees_to_radians(t);
    const harmonics::SpherePoint p{theta, phi};
    const auto raw = slepian::eval_eigenfield(field, p);
    const auto v = c.field == "tau" ? harmonics::to_tau(raw, p) : harmonics::to_polar(raw, p);
    o.table.rows.push_back({t, cos_degrees(t), v.components[0].real(), v.components[0].imag(),
                            v.components[1].real(), v.components[1].imag()});
  }
  return o;
}

Output cmd_flm(const RunConfig& c) {
  require(c.has_m, "--m is required");
  require(c.l >= flm::min_degree(c.m), "--l must be at least max(1, |m|)");
  const GridSpec grid = parse_grid(c.has_grid ? c.grid : "-1:1:201");
  for (double x : grid.values()) require(x >= -1.0 && x <= 1.0, "flm grid values must lie in [-1, 1]");
  Output o;
  o.header = {{"command", c.command}, {"l", std::to_string(c.l)}, {"m", std::to_string(c.m)}};
  o.table.columns = {"x", "F"};
  for (double x : grid.values()) o.table.rows.push_back({x, flm::eval_F(c.l, c.m, x)});
  return o;
}

Output cmd_error_analysis(RunConfig& c) {
  if (!c.has_m) {
    c.m = 1;
    c.has_m = true;
  }
  check_m(c);
  const auto ea = slepian::error_analysis(cap_of(c), c.m);
  const double eps = std::ldexp(1.0, -53);
  Output o;
  o.header = base_header(c);
  o.header.emplace_back("m", std::to_string(c.m));
  o.header.emplace_back("reference", "100-digit Jacobi on K_m");
  o.header.emplace_back("eta_pairing", std::string("K ") + (ea.k_pairing_bijective ? "bijective" : "by overlap") +
                                           ", J " + (ea.j_pairing_bijective ? "bijective" : "by overlap"));
  o.header.emplace_back("max_err_K_over_eps", fmt(ea.max_err_K() / eps));
  o.header.emplace_back("max_err_J_over_eps", fmt(ea.max_err_J() / eps));
  o.table.columns = {"n", "eta", "chi", "gap_eta", "gap_chi", "err_K", "err_J"};
  for (const auto& r : ea.rows) {
    o.table.rows.push_back({double(r.n), r.eta, r.chi, r.gap_eta, r.gap_chi, r.err_K, r.err_J});
  }
  return o;
}

int cmd_verify(const RunConfig& c, std::string& text) {
  const auto report = verify::run_invariants(cap_of(c));
  std::ostringstream ss;
  ss << "# command=verify\n# L=" << c.L << "\n# theta_deg=" << fmt(c.theta_deg) << "\n";
  int failed = 0;
  for (const auto& r : report.results) {
    const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    if (!r.skipped && !r.passed) ++failed;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e (tol %.1e)", r.value, r.tolerance);
    ss << status << "  [" << r.group << "] " << r.name << ": " << (r.skipped ? r.note : std::string(buf)) << "\n";
  }
  ss << "groups=" << report.groups().size() << " invariants=" << report.results.size() << " failed=" << failed
     << "\n";
  text = ss.str();
  return report.passed() ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& c, bool cap, bool with_m, bool with_n) {
  if (cap) {
    sub->add_option("--L", c.L, "bandlimit");
    sub->add_option("--theta", c.theta_deg, "cap half-angle in degrees");
  }
  if (with_m) sub->add_option("--m", c.m, "order");
  if (with_n) sub->add_option("--n", c.n, "rank by concentration (1 = best)");
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--threads", c.threads, "worker threads for per-order solves");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  CLI::App app{"Tangential vector Slepian functions on a spherical cap", "capslep"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* shannon = app.add_subcommand("shannon", "Shannon number and partial Shannon numbers");
  add_common(shannon, c, true, false, false);
  auto* spectrum = app.add_subcommand("spectrum", "rank-ordered eta (K) or chi (J) over all orders");
  add_common(spectrum, c, true, false, false);
  spectrum->add_option("--matrix", c.matrix, "K or J");
  auto* solve = app.add_subcommand("solve", "solve one order");
  add_common(solve, c, true, true, false);
  auto* eval = app.add_subcommand("eval", "evaluate G_mn or its vector fields on a theta grid");
  add_common(eval, c, true, true, true);
  eval->add_option("--grid", c.grid, "theta grid in degrees, start:stop:count");
  eval->add_option("--solution", c.solution, "solution file written by solve");
  eval->add_option("--field", c.field, "emit vector-field components in this basis (tau or polar)");
  eval->add_option("--sign", c.sign, "field sign, + or -");
  eval->add_option("--phi", c.phi_deg, "azimuth in degrees for --field");
  auto* flm = app.add_subcommand("flm", "F_lm on an x grid");
  add_common(flm, c, false, true, false);
  flm->add_option("--l", c.l, "degree");
  flm->add_option("--grid", c.grid, "x grid, start:stop:count");
  auto* ea = app.add_subcommand("error-analysis", "eigenvector errors of the K and J routes");
  add_common(ea, c, true, true, false);
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  add_common(ver, c, true, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "capslep: " << e.what() << "\n";
    return kConfigError;
  }

  CLI::App* active = app.get_subcommands().front();
  c.command = active->get_name();
  auto given = [&](const char* name) {
    try {
      return active->get_option(name)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  c.has_L = given("--L");
  c.has_theta = given("--theta");
  c.has_m = given("--m");
  c.has_n = given("--n");
  c.has_grid = given("--grid");
  if (c.format.empty()) c.format = c.command == "solve" ? "json" : "csv";

  // Configuration checks that need no computation.
  try {
    require(c.threads >= 1, "--threads must be at least 1");
    require(!c.has_L || c.L >= 1, "--L must be at least 1");
    if (c.has_theta) {
      require(std::isfinite(c.theta_deg) && c.theta_deg > 0.0 && c.theta_deg <= 180.0,
              "--theta must lie in (0, 180] degrees");
    }
    if (c.command == "verify" && c.format == "json") throw DomainError("verify writes a text report only");
  } catch (const std::exception& e) {
    err << "capslep: " << e.what() << "\n";
    return kConfigError;
  }

  std::string text;
  int code = kOk;
  try {
    Output o;
    // Validation errors raised before any heavy work still count as config errors:
    // they surface as DomainError/IndexError from the problem constructors.
    try {
      if (c.command == "shannon" || c.command == "spectrum" || c.command == "verify") (void)cap_of(c);
      if (c.command == "solve" || c.command == "error-analysis") {
        if (c.command == "error-analysis" && !c.has_m) {
          c.m = 1;
          c.has_m = true;
        }
        check_m(c);
      }
      if (c.command == "eval" && c.solution.empty()) check_m(c);
    } catch (const std::exception& e) {
      err << "capslep: " << e.what() << "\n";
      return kConfigError;
    }
    if (c.command == "shannon") o = cmd_shannon(c);
    else if (c.command == "spectrum") o = cmd_spectrum(c);
    else if (c.command == "solve") o = cmd_solve(c);
    else if (c.command == "eval") o = cmd_eval(c);
    else if (c.command == "flm") o = cmd_flm(c);
    else if (c.command == "error-analysis") o = cmd_error_analysis(c);
    else code = cmd_verify(c, text);
    if (c.command != "verify") text = render(o, c.format);
  } catch (const DomainError& e) {
    err << "capslep: " << e.what() << "\n";
    return kConfigError;
  } catch (const IndexError& e) {
    err << "capslep: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "capslep: computation failed: " << e.what() << "\n";
    return kComputeError;
  }

  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      err << "capslep: cannot write '" << c.out << "'\n";
      return kConfigError;
    }
    f << text;
  }
  return code;
}

}  // namespace capslep::cli
