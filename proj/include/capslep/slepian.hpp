#pragma once

// Per-order Slepian solutions. The eigenvectors g come from the tridiagonal
// commuting matrix J_m; the concentration ratios eta = g^T K_m g from the
// concentration matrix. The scalar eigenfunction of rank n is
//
//   G_mn(x) = sum_{l=lmin}^{L} g_{n,l} F_lm(x),
//
// and each G_mn yields the two tangential fields
//   G(cos theta) exp(+i m phi) / sqrt(2 pi) tau+   and
//   G(cos theta) exp(-i m phi) / sqrt(2 pi) tau-.

#include <span>
#include <vector>

#include "capslep/capop.hpp"
#include "capslep/harmonics.hpp"

namespace capslep::slepian {

/// Concentration-ratio gaps below this are reported as near-degenerate.
inline constexpr double kTieGap = 1e-12;
/// Below this eta gap, per-vector residual checks switch to the spanned subspace.
inline constexpr double kDegenerateGap = 1e-6;

class FixedOrderSolution {
 public:
  FixedOrderSolution(capop::FixedOrderProblem problem, std::vector<double> chi,
                     std::vector<double> eta, std::vector<std::vector<double>> g);

  [[nodiscard]] const capop::FixedOrderProblem& problem() const { return problem_; }
  [[nodiscard]] int size() const { return static_cast<int>(eta_.size()); }

  /// Ranked by eta descending: index 0 is rank n = 1.
  [[nodiscard]] const std::vector<double>& chi() const { return chi_; }
  [[nodiscard]] const std::vector<double>& eta() const { return eta_; }
  /// Coefficients of rank n (1-based) for l = lmin .. L.
  [[nodiscard]] std::span<const double> coefficients(int n) const;
  [[nodiscard]] const std::vector<std::vector<double>>& g() const { return g_; }

  /// True when ascending chi gave descending eta without reordering.
  [[nodiscard]] bool opposite_ordering() const { return opposite_ordering_; }
  /// Ranks n (1-based) whose eta gap to a neighbour is below kTieGap.
  [[nodiscard]] const std::vector<int>& near_ties() const { return near_ties_; }

 private:
  friend FixedOrderSolution solve_order(const capop::FixedOrderProblem& problem);
  capop::FixedOrderProblem problem_;
  std::vector<double> chi_;
  std::vector<double> eta_;
  std::vector<std::vector<double>> g_;
  bool opposite_ordering_ = true;
  std::vector<int> near_ties_;
};

/// Diagonalizes J_m, computes eta from K_m and ranks by eta descending.
FixedOrderSolution solve_order(const capop::FixedOrderProblem& problem);

/// G_mn(x), n 1-based, |x| <= 1.
double eval_G(const FixedOrderSolution& solution, int n, double x);

/// eta_n = g^T K g.
double concentration_ratio(const FixedOrderSolution& solution, int n);

/// eta_n = int_{cos Theta}^{1} G_mn(x)^2 dx by (L+1)-point quadrature.
double concentration_ratio_by_quadrature(const FixedOrderSolution& solution, int n);

struct VectorEigenfield {
  const FixedOrderSolution* solution = nullptr;
  int n = 1;
  harmonics::Sign sign = harmonics::Sign::plus;

  /// Azimuthal order realized by the field: +m for sign plus, -m for minus.
  [[nodiscard]] int realized_order() const;
};

/// Field value: tau basis in the interior, cartesian at the poles.
harmonics::TangentValue eval_eigenfield(const VectorEigenfield& field,
                                        const harmonics::SpherePoint& point);

/// max over samples x of |int_{cos Theta}^{1} K_m(x, x') G(x') dx' - eta G(x)|.
double verify_fredholm(const FixedOrderSolution& solution, int n, std::span<const double> samples);

/// Gram matrices of the G_mn over [-1, 1] and over [cos Theta, 1].
struct GramPair {
  std::vector<double> sphere;  ///< row-major size x size
  std::vector<double> cap;
};
GramPair gram_matrices(const FixedOrderSolution& solution);

/// Per-rank residual ||K g - eta g||_inf / ||K||_max; for ranks in a cluster
/// whose eta gaps are below kDegenerateGap the residual is taken after
/// projecting K g onto the cluster span instead.
std::vector<double> eigvec_residuals(const FixedOrderSolution& solution);

/// One row of the eigenvector stability comparison.
struct ErrorRow {
  int n = 0;              ///< rank by reference eta, descending
  double eta = 0.0;       ///< reference eta
  double chi = 0.0;       ///< J eigenvalue paired with this rank
  double gap_eta = 0.0;
  double gap_chi = 0.0;
  double err_K = 0.0;     ///< double-precision K eigenvector vs reference
  double err_J = 0.0;     ///< double-precision J eigenvector vs reference
};

struct ErrorAnalysis {
  std::vector<ErrorRow> rows;
  bool k_pairing_bijective = true;
  bool j_pairing_bijective = true;
  [[nodiscard]] double max_err_K() const;
  [[nodiscard]] double max_err_J() const;
};

/// Precision of the reference K_m eigenvectors.
enum class Reference { double_double, high_precision };

/// Compares eigenvectors of K_m (Jacobi, double) and J_m (QL, double) with a
/// Jacobi reference on K_m assembled and diagonalized in extended precision.
/// Route vectors are paired with reference vectors by closest eta (extended
/// precision Rayleigh quotients); see the *_pairing_bijective flags.
///
/// Double-double cannot resolve the tail of K_m once its eigenvalues drop
/// under ~1e-32, so the default reference is the 100-digit one.
ErrorAnalysis error_analysis(const capop::CapProblem& cap, int m,
                             Reference reference = Reference::high_precision);

}  // namespace capslep::slepian
