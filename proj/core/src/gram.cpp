#include "polyapprox/gram.hpp"

#include <cmath>
#include <string>

#include "polyapprox/errors.hpp"

namespace polyapprox {

GramMatrix::GramMatrix(Eigen::MatrixXcd entries) : g_(std::move(entries)) {
  if (g_.rows() == 0 || g_.rows() != g_.cols()) {
    throw Error(ErrorKind::kNotPositiveDefinite, "Gram matrix must be square and nonempty");
  }
  if (!g_.allFinite()) {
    throw Error(ErrorKind::kNonFiniteValue, "Gram matrix has non-finite entries");
  }
  const double scale = std::max(g_.cwiseAbs().maxCoeff(), 1e-300);
  const double asym = (g_ - g_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw Error(ErrorKind::kNotPositiveDefinite,
                "Gram matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
  }
  // Symmetrize away rounding before factoring.
  g_ = 0.5 * (g_ + g_.adjoint()).eval();
  Eigen::LLT<Eigen::MatrixXcd> llt(g_);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::kNotPositiveDefinite, "Cholesky factorization failed");
  }
  l_ = llt.matrixL();
  if (!(min_pivot() > 0.0)) {
    throw Error(ErrorKind::kNotPositiveDefinite, "nonpositive Cholesky pivot");
  }
}

GramMatrix GramMatrix::identity(std::size_t horizon) {
  const auto n = static_cast<Eigen::Index>(horizon + 1);
  return GramMatrix(Eigen::MatrixXcd::Identity(n, n));
}

GramMatrix GramMatrix::diagonal(const Eigen::VectorXd& diag) {
  return GramMatrix(diag.cast<Complex>().asDiagonal().toDenseMatrix());
}

double GramMatrix::min_pivot() const { return l_.diagonal().real().minCoeff(); }

Complex GramMatrix::inner(const TaylorPoly& f, const TaylorPoly& g) const {
  const Eigen::VectorXcd fv = coefficient_vector(f, size());
  const Eigen::VectorXcd gv = coefficient_vector(g, size());
  return fv.dot(g_ * gv);
}

Eigen::VectorXcd GramMatrix::solve_leading(std::size_t n,
                                           const Eigen::VectorXcd& rhs) const {
  if (n > horizon()) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "leading block " + std::to_string(n) + " beyond horizon " +
                    std::to_string(horizon()));
  }
  const auto m = static_cast<Eigen::Index>(n + 1);
  const auto lower = l_.topLeftCorner(m, m).triangularView<Eigen::Lower>();
  Eigen::VectorXcd y = lower.solve(rhs);
  Eigen::VectorXcd x = lower.adjoint().solve(y);
  if (!x.allFinite()) {
    throw Error(ErrorKind::kSingularGram, "leading Gram block solve produced non-finite values");
  }
  return x;
}

Eigen::VectorXcd coefficient_vector(const TaylorPoly& f, std::size_t length) {
  const auto d = f.degree();
  if (d && *d >= length) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "degree " + std::to_string(*d) + " exceeds horizon " +
                    std::to_string(length - 1));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(length));
  const std::size_t n = d ? *d + 1 : 0;
  for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k)) = f[k];
  return v;
}

}  // namespace polyapprox
