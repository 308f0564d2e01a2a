#pragma once

// 100-digit reference path for the eigenvector stability comparison. The tail
// eigenvalues of K_m drop far below double-double resolution, so the reference
// eigenvectors there need a wider format.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "capslep/capop.hpp"
#include "capslep/eigensolvers.hpp"

namespace capslep {

using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                                    boost::multiprecision::et_off>;

namespace capop {
using DenseSymHP = DenseSymT<HighPrecision>;

/// K_m assembled in 100-digit arithmetic for the same cos(Theta) as assemble_K.
DenseSymHP assemble_K_hp(const FixedOrderProblem& problem);
}  // namespace capop

namespace eigen {
using EigenDecompositionHP = EigenDecompositionT<HighPrecision>;

/// Cyclic Jacobi in 100-digit arithmetic, converged to 1e-95 relative.
EigenDecompositionHP eigh_dense_hp(const capop::DenseSymHP& a);
}  // namespace eigen

}  // namespace capslep
