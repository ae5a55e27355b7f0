#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsd/errors.hpp"

namespace lsd {

// Dense kernels for real symmetric tridiagonal matrices, templated on the
// scalar type in the Eigen style. diag holds the n diagonal entries, sub the
// n-1 subdiagonal couplings.

/// Implicit-shift QL iteration. On return diag holds the (unsorted)
/// eigenvalues; if `accumulate` is non-null it must enter as the orthogonal
/// basis the tridiagonal form is expressed in (identity for a matrix that is
/// tridiagonal already) and leaves with its columns rotated into the
/// eigenvectors. An off-diagonal entry e is treated as zero once
/// |e| <= eps*(|d_i|+|d_{i+1}|); each eigenvalue gets at most `max_sweeps`
/// QL sweeps before ConvergenceError is thrown.
template <typename Scalar>
void ql_implicit_shift(Eigen::Vector<Scalar, Eigen::Dynamic>& diag,
                       Eigen::Vector<Scalar, Eigen::Dynamic>& sub,
                       Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>* accumulate,
                       int max_sweeps = 50) {
  using std::abs;
  using std::copysign;
  using std::hypot;

  const Eigen::Index n = diag.size();
  if (n <= 1) return;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  Eigen::Vector<Scalar, Eigen::Dynamic> e(n);
  e.head(n - 1) = sub;
  e[n - 1] = Scalar(0);

  for (Eigen::Index l = 0; l < n; ++l) {
    int sweeps = 0;
    Eigen::Index m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const Scalar dd = abs(diag[m]) + abs(diag[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (sweeps++ == max_sweeps)
          throw ConvergenceError("tridiagonal QL failed to converge", static_cast<long>(l));
        Scalar g = (diag[l + 1] - diag[l]) / (2 * e[l]);
        Scalar r = hypot(g, Scalar(1));
        g = diag[m] - diag[l] + e[l] / (g + copysign(r, g));
        Scalar s = Scalar(1), c = Scalar(1), p = Scalar(0);
        Eigen::Index i = m - 1;
        for (; i >= l; --i) {
          Scalar f = s * e[i];
          const Scalar b = c * e[i];
          r = hypot(f, g);
          e[i + 1] = r;
          if (r == Scalar(0)) {  // underflow: deflate and restart this sweep
            diag[i + 1] -= p;
            e[m] = Scalar(0);
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          if (accumulate) {
            for (Eigen::Index k = 0; k < accumulate->rows(); ++k) {
              f = (*accumulate)(k, i + 1);
              (*accumulate)(k, i + 1) = s * (*accumulate)(k, i) + c * f;
              (*accumulate)(k, i) = c * (*accumulate)(k, i) - s * f;
            }
          }
        }
        if (r == Scalar(0) && i >= l) continue;
        diag[l] -= p;
        e[l] = g;
        e[m] = Scalar(0);
      }
    } while (m != l);
  }
  sub.setZero();
}

/// Number of eigenvalues strictly below x, by the Sturm sign count of the
/// LDL^T pivots. Near-zero pivots are nudged to -pivmin, the LAPACK-style
/// safeguard, which keeps the count monotone in x.
template <typename Scalar>
Eigen::Index eigenvalues_below(const Eigen::Vector<Scalar, Eigen::Dynamic>& diag,
                               const Eigen::Vector<Scalar, Eigen::Dynamic>& sub,
                               Scalar x) {
  using std::abs;
  const Eigen::Index n = diag.size();
  Scalar max_sq = Scalar(1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) max_sq = std::max(max_sq, sub[i] * sub[i]);
  const Scalar pivmin = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon() * max_sq;

  Eigen::Index count = 0;
  Scalar q = diag[0] - x;
  if (q < Scalar(0)) ++count;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (abs(q) < pivmin) q = -pivmin;
    q = diag[i] - x - sub[i - 1] * sub[i - 1] / q;
    if (q < Scalar(0)) ++count;
  }
  return count;
}

/// All eigenvalues by index-wise bisection of the Sturm count, each
/// bracketed to width <= tol inside the Gershgorin bounds. Ascending.
template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> bisect_eigenvalues(
    const Eigen::Vector<Scalar, Eigen::Dynamic>& diag,
    const Eigen::Vector<Scalar, Eigen::Dynamic>& sub, Scalar tol) {
  using std::abs;
  const Eigen::Index n = diag.size();
  Eigen::Vector<Scalar, Eigen::Dynamic> values(n);
  if (n == 0) return values;

  Scalar lo = diag[0], hi = diag[0];
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar r = Scalar(0);
    if (i > 0) r += abs(sub[i - 1]);
    if (i + 1 < n) r += abs(sub[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const Scalar margin = std::numeric_limits<Scalar>::epsilon() *
                        std::max(Scalar(1), std::max(abs(lo), abs(hi)));
  lo -= margin;
  hi += margin;

  for (Eigen::Index k = 0; k < n; ++k) {
    Scalar a = lo, b = hi;
    while (b - a > tol) {
      const Scalar mid = a + (b - a) / 2;
      if (mid <= a || mid >= b) break;  // interval at floating point resolution
      if (eigenvalues_below(diag, sub, mid) > k)
        b = mid;
      else
        a = mid;
    }
    values[k] = a + (b - a) / 2;
  }
  return values;
}

}  // namespace lsd
