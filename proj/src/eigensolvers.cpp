#include "capslep/eigensolvers.hpp"
#include "capslep/detail/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace capslep::eigen {

using detail::finalize;
using detail::jacobi;

EigenDecomposition eigh_tridiag(const capop::TriDiagSym& t) {
  const int n = t.size();
  if (n == 0) return {};
  if (static_cast<int>(t.offdiag.size()) != n - 1) {
    throw DomainError("eigh_tridiag: off-diagonal length must be n - 1");
  }
  std::vector<double> d = t.diag;
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());
  for (double x : d) {
    if (!std::isfinite(x)) throw DomainError("eigh_tridiag: non-finite entry");
  }
  for (double x : e) {
    if (!std::isfinite(x)) throw DomainError("eigh_tridiag: non-finite entry");
  }
  // z holds the accumulated rotations, row-major; column i ends up as the
  // eigenvector of d[i].
  std::vector<double> z(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i * n + i)] = 1.0;
  auto zat = [&](int r, int c) -> double& { return z[static_cast<std::size_t>(r * n + c)]; };
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[static_cast<std::size_t>(m)]) + std::abs(d[static_cast<std::size_t>(m + 1)]);
        if (std::abs(e[static_cast<std::size_t>(m)]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 30) throw ConvergenceError("eigh_tridiag: too many QL iterations");
        // Wilkinson shift from the leading 2x2 block.
        double g = (d[static_cast<std::size_t>(l + 1)] - d[static_cast<std::size_t>(l)]) /
                   (2.0 * e[static_cast<std::size_t>(l)]);
        double r = std::hypot(g, 1.0);
        g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
            e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[static_cast<std::size_t>(i)];
          const double b = c * e[static_cast<std::size_t>(i)];
          r = std::hypot(f, g);
          e[static_cast<std::size_t>(i + 1)] = r;
          if (r == 0.0) {
            d[static_cast<std::size_t>(i + 1)] -= p;
            e[static_cast<std::size_t>(m)] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[static_cast<std::size_t>(i + 1)] - p;
          r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
          p = s * r;
          d[static_cast<std::size_t>(i + 1)] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = zat(k, i + 1);
            zat(k, i + 1) = s * zat(k, i) + c * f;
            zat(k, i) = c * zat(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[static_cast<std::size_t>(l)] -= p;
        e[static_cast<std::size_t>(l)] = g;
        e[static_cast<std::size_t>(m)] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::vector<double>> vectors(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = zat(k, i);
  }
  return finalize(std::move(d), std::move(vectors));
}

EigenDecomposition eigh_dense(const capop::DenseSym& a) {
  const auto full = a.to_full();
  for (double x : full) {
    if (!std::isfinite(x)) throw DomainError("eigh_dense: non-finite entry");
  }
  return jacobi<double>(full, a.size(), std::numeric_limits<double>::epsilon());
}

EigenDecompositionDD eigh_dense_dd(const capop::DenseSymDD& a) {
  return jacobi<DoubleDouble>(a.to_full(), a.size(), DoubleDouble(kDoubleDoubleEps));
}

EigenDecompositionDD eigh_dense_dd(const capop::DenseSym& a) {
  capop::DenseSymDD promoted(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i; j < a.size(); ++j) promoted.set(i, j, DoubleDouble(a(i, j)));
  }
  return eigh_dense_dd(promoted);
}

EigenDecomposition round_to_double(const EigenDecompositionDD& d) {
  EigenDecomposition out;
  for (const auto& v : d.values) out.values.push_back(v.to_double());
  for (const auto& vec : d.vectors) {
    std::vector<double> r;
    r.reserve(vec.size());
    for (const auto& x : vec) r.push_back(x.to_double());
    out.vectors.push_back(std::move(r));
  }
  return out;
}

std::vector<double> eigval_gap(std::span<const double> values) {
  if (values.size() < 2) throw DomainError("eigval_gap: needs at least two values");
  std::vector<double> gaps(values.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (i != j) gaps[i] = std::min(gaps[i], std::abs(values[i] - values[j]));
    }
  }
  return gaps;
}

double vector_error(std::span<const double> v, std::span<const double> ref) {
  if (v.size() != ref.size()) throw DomainError("vector_error: length mismatch");
  double nv = 0.0;
  double nr = 0.0;
  double minus = 0.0;
  double plus = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    nv += v[i] * v[i];
    nr += ref[i] * ref[i];
    minus += (v[i] - ref[i]) * (v[i] - ref[i]);
    plus += (v[i] + ref[i]) * (v[i] + ref[i]);
  }
  if (std::abs(std::sqrt(nv) - 1.0) > 1e-12 || std::abs(std::sqrt(nr) - 1.0) > 1e-12) {
    throw DomainError("vector_error: inputs must be unit vectors");
  }
  return std::sqrt(std::min(minus, plus));
}

}  // namespace capslep::eigen
