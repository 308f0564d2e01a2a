#include "capslep/high_precision.hpp"

#include "capslep/detail/jacobi.hpp"

namespace capslep {

capop::DenseSymHP capop::assemble_K_hp(const FixedOrderProblem& problem) {
  const int L = problem.cap().bandlimit();
  // Newton from a double guess: 4 steps reach well past 100 digits.
  const auto base = quadrature::gauss_legendre_refined<HighPrecision>(L + 1, 4);
  const auto rule = quadrature::map_interval_refined<HighPrecision>(
      base, HighPrecision(problem.cap().cos_theta()), HighPrecision(1.0));
  return detail::assemble_K_with<HighPrecision>(problem, rule);
}

eigen::EigenDecompositionHP eigen::eigh_dense_hp(const capop::DenseSymHP& a) {
  return detail::jacobi<HighPrecision>(a.to_full(), a.size(), HighPrecision(1e-95));
}

}  // namespace capslep
