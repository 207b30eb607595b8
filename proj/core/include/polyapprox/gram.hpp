#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "polyapprox/series.hpp"

namespace polyapprox {

// Monomial Gram matrix G[j,k] = <z^j, z^k>, 0 <= j,k <= horizon.
//
// Inner products are conjugate-linear in the first slot, so for
// f = sum f_j z^j and g = sum g_k z^k,
//
//   <f, g> = sum_{j,k} conj(f_j) G[j,k] g_k = f^* G g.
//
// Construction checks Hermitian symmetry (relative 1e-12) and positive
// definiteness; the Cholesky factor G = L L^* is cached and reused for every
// leading-block solve.
class GramMatrix {
 public:
  // Throws Error(kNotPositiveDefinite) when the matrix is not Hermitian or the
  // factorization meets a nonpositive pivot.
  explicit GramMatrix(Eigen::MatrixXcd entries);

  static GramMatrix identity(std::size_t horizon);
  static GramMatrix diagonal(const Eigen::VectorXd& diag);

  std::size_t horizon() const { return static_cast<std::size_t>(g_.rows()) - 1; }
  std::size_t size() const { return static_cast<std::size_t>(g_.rows()); }

  Complex operator()(std::size_t j, std::size_t k) const { return g_(j, k); }
  const Eigen::MatrixXcd& matrix() const { return g_; }

  // Lower-triangular L with G = L L^*. The leading (n+1)x(n+1) block of L is
  // the Cholesky factor of the leading block of G.
  const Eigen::MatrixXcd& cholesky_factor() const { return l_; }

  // Smallest diagonal entry of L (the factorization pivot).
  double min_pivot() const;

  // f^* G g; throws kDegreeExceedsHorizon if either has degree > horizon.
  Complex inner(const TaylorPoly& f, const TaylorPoly& g) const;

  // Solve G_n x = rhs for the leading (n+1)x(n+1) block; rhs.size() == n+1.
  Eigen::VectorXcd solve_leading(std::size_t n, const Eigen::VectorXcd& rhs) const;

 private:
  Eigen::MatrixXcd g_;
  Eigen::MatrixXcd l_;
};

// Coefficient vector of f padded to `length`; throws kDegreeExceedsHorizon if
// deg f >= length.
Eigen::VectorXcd coefficient_vector(const TaylorPoly& f, std::size_t length);

}  // namespace polyapprox
