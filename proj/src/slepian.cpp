#include "capslep/slepian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "capslep/eigensolvers.hpp"
#include "capslep/flm.hpp"
#include "capslep/high_precision.hpp"
#include "capslep/quadrature.hpp"

namespace capslep::slepian {

namespace {

using capslep::DoubleDouble;

double quad_form(const capop::DenseSym& k, std::span<const double> g) {
  double sum = 0.0;
  for (int i = 0; i < k.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < k.size(); ++j) row += k(i, j) * g[static_cast<std::size_t>(j)];
    sum += g[static_cast<std::size_t>(i)] * row;
  }
  return sum;
}

template <class Real>
Real quad_form_ext(const capop::DenseSymT<Real>& k, std::span<const double> g) {
  Real sum(0.0);
  for (int i = 0; i < k.size(); ++i) {
    Real row(0.0);
    for (int j = 0; j < k.size(); ++j) row += k(i, j) * Real(g[static_cast<std::size_t>(j)]);
    sum += Real(g[static_cast<std::size_t>(i)]) * row;
  }
  return sum;
}

template <class Real>
double abs_diff(const Real& a, const Real& b) {
  const Real d = a - b;
  return std::abs(static_cast<double>(d < Real(0.0) ? -d : d));
}

double abs_diff(const DoubleDouble& a, const DoubleDouble& b) {
  return std::abs((a - b).to_double());
}

template <class Real>
double overlap(std::span<const double> v, const std::vector<Real>& ref) {
  Real dot(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) dot += Real(v[i]) * ref[i];
  return std::abs(static_cast<double>(dot));
}

double overlap(std::span<const double> v, const std::vector<DoubleDouble>& ref) {
  DoubleDouble dot(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) dot += DoubleDouble(v[i]) * ref[i];
  return std::abs(dot.to_double());
}

/// Assigns each route vector to the reference with the closest eta. When that
/// map is not a bijection (route Rayleigh quotients cannot separate the tail),
/// pairs greedily by largest overlap |<v, ref>| instead.
template <class Real>
std::vector<int> pair_by_eta(const std::vector<Real>& route, const std::vector<Real>& ref,
                             const std::vector<std::vector<double>>& route_vectors,
                             const std::vector<std::vector<Real>>& ref_vectors, bool& bijective) {
  const std::size_t n = route.size();
  std::vector<int> assign(n, -1);
  std::vector<int> used(n, 0);
  bijective = true;
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double d = abs_diff(route[i], ref[j]);
      if (d < best) {
        best = d;
        assign[i] = static_cast<int>(j);
      }
    }
    if (used[static_cast<std::size_t>(assign[i])]++) bijective = false;
  }
  if (bijective) return assign;

  struct Cand {
    double ov;
    std::size_t i, j;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cands.push_back({overlap(route_vectors[i], ref_vectors[j]), i, j});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.ov > b.ov; });
  std::fill(assign.begin(), assign.end(), -1);
  std::vector<char> taken(n, 0);
  for (const auto& c : cands) {
    if (assign[c.i] < 0 && !taken[c.j]) {
      assign[c.i] = static_cast<int>(c.j);
      taken[c.j] = 1;
    }
  }
  return assign;
}

template <class Real>
double error_vs_reference(std::span<const double> v, std::span<const Real> ref) {
  Real minus(0.0);
  Real plus(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Real a = Real(v[i]) - ref[i];
    const Real b = Real(v[i]) + ref[i];
    minus += a * a;
    plus += b * b;
  }
  const Real best = minus < plus ? minus : plus;
  return std::sqrt(static_cast<double>(best));
}

double error_vs_reference(std::span<const double> v, std::span<const DoubleDouble> ref) {
  DoubleDouble minus(0.0);
  DoubleDouble plus(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const DoubleDouble a = DoubleDouble(v[i]) - ref[i];
    const DoubleDouble b = DoubleDouble(v[i]) + ref[i];
    minus += a * a;
    plus += b * b;
  }
  return std::sqrt(std::min(minus, plus).to_double());
}

double to_plain(const DoubleDouble& x) { return x.to_double(); }
double to_plain(const HighPrecision& x) { return static_cast<double>(x); }

template <class Real>
ErrorAnalysis error_analysis_with(const capop::FixedOrderProblem& problem,
                                  const capop::DenseSymT<Real>& kx,
                                  const eigen::EigenDecompositionT<Real>& ref) {
  const auto k = capop::assemble_K(problem);
  const auto j = capop::assemble_J(problem);
  const auto kdec = eigen::eigh_dense(k);
  const auto jdec = eigen::eigh_tridiag(j);
  const std::size_t n = static_cast<std::size_t>(problem.size());

  std::vector<Real> eta_k(n), eta_j(n);
  for (std::size_t i = 0; i < n; ++i) {
    eta_k[i] = quad_form_ext(kx, kdec.vectors[i]);
    eta_j[i] = quad_form_ext(kx, jdec.vectors[i]);
  }
  ErrorAnalysis out;
  const auto k_to_ref = pair_by_eta(eta_k, ref.values, kdec.vectors, ref.vectors, out.k_pairing_bijective);
  const auto j_to_ref = pair_by_eta(eta_j, ref.values, jdec.vectors, ref.vectors, out.j_pairing_bijective);
  std::vector<std::size_t> k_of(n), j_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    k_of[static_cast<std::size_t>(k_to_ref[i])] = i;
    j_of[static_cast<std::size_t>(j_to_ref[i])] = i;
  }

  // Gaps of the reference eta in extended precision (they fall far below ulp(1)).
  std::vector<double> gap_eta(n, std::numeric_limits<double>::infinity());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) gap_eta[a] = std::min(gap_eta[a], abs_diff(ref.values[a], ref.values[b]));
    }
  }
  const auto gap_chi = n >= 2 ? eigen::eigval_gap(jdec.values) : std::vector<double>(n, 0.0);
  if (n < 2) gap_eta.assign(n, 0.0);

  // Reference is ascending in eta; rank 1 is the last.
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t r = n - 1 - rank;
    ErrorRow row;
    row.n = static_cast<int>(rank + 1);
    row.eta = to_plain(ref.values[r]);
    row.chi = jdec.values[j_of[r]];
    row.gap_eta = gap_eta[r];
    row.gap_chi = gap_chi[j_of[r]];
    row.err_K = error_vs_reference(kdec.vectors[k_of[r]], std::span<const Real>(ref.vectors[r]));
    row.err_J = error_vs_reference(jdec.vectors[j_of[r]], std::span<const Real>(ref.vectors[r]));
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace

FixedOrderSolution::FixedOrderSolution(capop::FixedOrderProblem problem, std::vector<double> chi,
                                       std::vector<double> eta, std::vector<std::vector<double>> g)
    : problem_(problem), chi_(std::move(chi)), eta_(std::move(eta)), g_(std::move(g)) {
  const std::size_t n = static_cast<std::size_t>(problem_.size());
  if (chi_.size() != n || eta_.size() != n || g_.size() != n) {
    throw DomainError("FixedOrderSolution: size mismatch with problem");
  }
  for (const auto& row : g_) {
    if (row.size() != n) throw DomainError("FixedOrderSolution: coefficient row length mismatch");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(eta_[i] - eta_[i + 1]) < kTieGap) {
      if (near_ties_.empty() || near_ties_.back() != static_cast<int>(i + 1)) {
        near_ties_.push_back(static_cast<int>(i + 1));
      }
      near_ties_.push_back(static_cast<int>(i + 2));
    }
  }
}

std::span<const double> FixedOrderSolution::coefficients(int n) const {
  if (n < 1 || n > size()) throw IndexError("FixedOrderSolution: rank out of range");
  return g_[static_cast<std::size_t>(n - 1)];
}

FixedOrderSolution solve_order(const capop::FixedOrderProblem& problem) {
  const auto j = capop::assemble_J(problem);
  const auto k = capop::assemble_K(problem);
  const auto dec = eigen::eigh_tridiag(j);
  const std::size_t n = static_cast<std::size_t>(dec.size());

  std::vector<double> eta(n);
  for (std::size_t i = 0; i < n; ++i) eta[i] = quad_form(k, dec.vectors[i]);

  // Ascending chi is expected to be descending eta; reorder by eta only when a
  // violation exceeds the tie tolerance.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  bool opposite = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (eta[i + 1] > eta[i] + kTieGap) opposite = false;
  }
  if (!opposite) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eta[a] > eta[b]; });
  }
  std::vector<double> chi_r, eta_r;
  std::vector<std::vector<double>> g_r;
  for (std::size_t i : order) {
    chi_r.push_back(dec.values[i]);
    eta_r.push_back(eta[i]);
    g_r.push_back(dec.vectors[i]);
  }
  FixedOrderSolution sol(problem, std::move(chi_r), std::move(eta_r), std::move(g_r));
  sol.opposite_ordering_ = opposite;
  return sol;
}

double eval_G(const FixedOrderSolution& solution, int n, double x) {
  const auto g = solution.coefficients(n);
  const auto f = flm::eval_F_column(solution.problem().order(), solution.problem().cap().bandlimit(), x);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) sum += g[i] * f[i];
  return sum;
}

double concentration_ratio(const FixedOrderSolution& solution, int n) {
  return quad_form(capop::assemble_K(solution.problem()), solution.coefficients(n));
}

double concentration_ratio_by_quadrature(const FixedOrderSolution& solution, int n) {
  const auto& cap = solution.problem().cap();
  const auto rule =
      quadrature::map_interval(quadrature::gauss_legendre(cap.bandlimit() + 1), cap.cos_theta(), 1.0);
  double sum = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    const double gv = eval_G(solution, n, rule.nodes[static_cast<std::size_t>(q)]);
    sum += rule.weights[static_cast<std::size_t>(q)] * gv * gv;
  }
  return sum;
}

int VectorEigenfield::realized_order() const {
  const int m = solution->problem().order();
  return sign == harmonics::Sign::plus ? m : -m;
}

harmonics::TangentValue eval_eigenfield(const VectorEigenfield& field,
                                        const harmonics::SpherePoint& point) {
  using harmonics::Sign;
  using harmonics::TangentValue;
  if (field.solution == nullptr) throw DomainError("eval_eigenfield: missing solution");
  const auto& sol = *field.solution;
  const int order = field.realized_order();
  if (point.theta == 0.0 || point.theta == std::numbers::pi) {
    // G^+_m = sum g_l Q+_{l,m}, G^-_{-m} = sum g_l Q-_{l,-m}.
    const auto g = sol.coefficients(field.n);
    const int lmin = sol.problem().min_degree();
    TangentValue sum = TangentValue::cartesian(0.0, 0.0, 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto q = harmonics::eval_Q(lmin + static_cast<int>(i), order, field.sign, point);
      for (std::size_t c = 0; c < 3; ++c) sum.components[c] += g[i] * q.components[c];
    }
    return sum;
  }
  const double gv = eval_G(sol, field.n, std::cos(point.theta));
  const harmonics::Complex value =
      gv * std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi), order * point.phi);
  return field.sign == Sign::plus ? TangentValue::tau(value, 0.0) : TangentValue::tau(0.0, value);
}

double verify_fredholm(const FixedOrderSolution& solution, int n, std::span<const double> samples) {
  const auto& cap = solution.problem().cap();
  const int L = cap.bandlimit();
  const int m = solution.problem().order();
  const double eta = solution.eta()[static_cast<std::size_t>(n - 1)];
  const auto rule = quadrature::map_interval(quadrature::gauss_legendre(L + 1), cap.cos_theta(), 1.0);
  std::vector<double> g_nodes;
  for (double xq : rule.nodes) g_nodes.push_back(eval_G(solution, n, xq));
  double worst = 0.0;
  for (double x : samples) {
    double lhs = 0.0;
    for (int q = 0; q < rule.size(); ++q) {
      lhs += rule.weights[static_cast<std::size_t>(q)] *
             flm::kernel_K(m, L, x, rule.nodes[static_cast<std::size_t>(q)]) *
             g_nodes[static_cast<std::size_t>(q)];
    }
    worst = std::max(worst, std::abs(lhs - eta * eval_G(solution, n, x)));
  }
  return worst;
}

GramPair gram_matrices(const FixedOrderSolution& solution) {
  const auto& cap = solution.problem().cap();
  const int L = cap.bandlimit();
  const int size = solution.size();
  const auto full = quadrature::gauss_legendre(L + 1);
  const auto part = quadrature::map_interval(full, cap.cos_theta(), 1.0);
  auto gram = [&](const quadrature::QuadRule<double>& rule) {
    std::vector<double> out(static_cast<std::size_t>(size * size), 0.0);
    for (int q = 0; q < rule.size(); ++q) {
      std::vector<double> gv(static_cast<std::size_t>(size));
      for (int n = 1; n <= size; ++n) gv[static_cast<std::size_t>(n - 1)] = eval_G(solution, n, rule.nodes[static_cast<std::size_t>(q)]);
      for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
          out[static_cast<std::size_t>(a * size + b)] +=
              rule.weights[static_cast<std::size_t>(q)] * gv[static_cast<std::size_t>(a)] * gv[static_cast<std::size_t>(b)];
        }
      }
    }
    return out;
  };
  return {gram(full), gram(part)};
}

std::vector<double> eigvec_residuals(const FixedOrderSolution& solution) {
  const auto k = capop::assemble_K(solution.problem());
  const int n = solution.size();
  double kmax = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) kmax = std::max(kmax, std::abs(k(i, j)));
  }
  const auto& eta = solution.eta();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < n; ++r) {
    const auto g = solution.coefficients(r + 1);
    std::vector<double> kg(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) kg[static_cast<std::size_t>(i)] += k(i, j) * g[static_cast<std::size_t>(j)];
    }
    // Cluster of ranks with eta within kDegenerateGap of this one.
    std::vector<int> cluster;
    for (int s = 0; s < n; ++s) {
      if (std::abs(eta[static_cast<std::size_t>(s)] - eta[static_cast<std::size_t>(r)]) < kDegenerateGap) cluster.push_back(s);
    }
    std::vector<double> residual = kg;
    if (cluster.size() == 1) {
      for (int i = 0; i < n; ++i) residual[static_cast<std::size_t>(i)] -= eta[static_cast<std::size_t>(r)] * g[static_cast<std::size_t>(i)];
    } else {
      for (int s : cluster) {
        const auto gs = solution.coefficients(s + 1);
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += gs[static_cast<std::size_t>(i)] * kg[static_cast<std::size_t>(i)];
        for (int i = 0; i < n; ++i) residual[static_cast<std::size_t>(i)] -= proj * gs[static_cast<std::size_t>(i)];
      }
    }
    double worst = 0.0;
    for (double v : residual) worst = std::max(worst, std::abs(v));
    out[static_cast<std::size_t>(r)] = kmax > 0.0 ? worst / kmax : worst;
  }
  return out;
}

double ErrorAnalysis::max_err_K() const {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.err_K);
  return worst;
}

double ErrorAnalysis::max_err_J() const {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.err_J);
  return worst;
}

ErrorAnalysis error_analysis(const capop::CapProblem& cap, int m, Reference reference) {
  const capop::FixedOrderProblem problem(cap, m);
  if (reference == Reference::double_double) {
    const auto kdd = capop::assemble_K_dd(problem);
    return error_analysis_with<DoubleDouble>(problem, kdd, eigen::eigh_dense_dd(kdd));
  }
  const auto khp = capop::assemble_K_hp(problem);
  return error_analysis_with<HighPrecision>(problem, khp, eigen::eigh_dense_hp(khp));
}

}  // namespace capslep::slepian
