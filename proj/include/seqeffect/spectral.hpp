#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "seqeffect/matrix.hpp"
#include "seqeffect/tolerance.hpp"

namespace seqeffect {

/// Orthonormal eigenpairs of a Hermitian matrix, ascending eigenvalues.
/// Column k of `vectors` belongs to `values[k]`.
struct EigenPairs {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Stops once the off-diagonal Frobenius norm falls
/// below 1e-13 * ||M||_F; throws NoConvergence after 100 sweeps.
/// The input is hermitized first, callers check the Hermitian precondition.
EigenPairs jacobi_eigenpairs(const ComplexMatrix& m);

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelativeStop = 1e-13;

struct SpectralCluster {
  double eigenvalue;
  std::size_t multiplicity;
  ComplexMatrix projection;
};

/// Distinct spectral points of a Hermitian operator with their orthogonal
/// projections: M = sum_k eigenvalue_k * projection_k.
class SpectralDecomposition {
 public:
  SpectralDecomposition(std::size_t dim, std::vector<SpectralCluster> clusters,
                        std::vector<double> eigenvalues);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<SpectralCluster>& clusters() const noexcept { return clusters_; }
  /// All eigenvalues with multiplicity, ascending.
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  double min_eigenvalue() const { return eigenvalues_.front(); }
  double max_eigenvalue() const { return eigenvalues_.back(); }

  ComplexMatrix reconstruct() const;

 private:
  std::size_t dim_;
  std::vector<SpectralCluster> clusters_;
  std::vector<double> eigenvalues_;
};

/// Hermitian eigendecomposition with eigenvalue clustering.
///
/// Adjacent sorted eigenvalues closer than tol.cluster_gap share one cluster
/// whose eigenvalue is the mean of its members and whose projection is the
/// sum of their rank-one projectors.
/// Throws NotHermitian if ||M - M^dagger||_F > eq_tol * max(1, ||M||_F).
SpectralDecomposition eigh(const ComplexMatrix& m, const Tolerance& tol);

/// Builds the decomposition from explicit (already snapped) eigenpairs.
SpectralDecomposition cluster_eigenpairs(const EigenPairs& pairs, const Tolerance& tol);

using ScalarFunction = std::function<Complex(double)>;

/// sum_k f(lambda_k) P_k. A non-finite value of f is a DomainError.
ComplexMatrix apply_function(const SpectralDecomposition& s, const ScalarFunction& f);

bool is_psd(const ComplexMatrix& m, const Tolerance& tol);

/// Smallest eigenvalue of a Hermitian matrix (NotHermitian otherwise).
double min_eigenvalue(const ComplexMatrix& m, const Tolerance& tol);

/// Principal square root of a PSD matrix; NotPSD when is_psd fails.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, const Tolerance& tol);

/// Largest singular value, via the eigenvalues of D^dagger D.
double operator_norm(const ComplexMatrix& d);

/// Positivity of [[A11, A12], [A21, A22]] through the block criterion:
/// A11, A22 >= 0, A21 = A12^dagger, and A12 = A11^{1/2} D A22^{1/2} for a
/// contraction D. D is recovered with pseudo-inverses of the block roots.
bool block_psd_check(const ComplexMatrix& a11, const ComplexMatrix& a12, const ComplexMatrix& a21,
                     const ComplexMatrix& a22, const Tolerance& tol);

/// Returns xi with |xi| = 1 and A = xi B when one exists. Two (near-)zero
/// operators are phase-equal with xi = 1.
std::optional<Complex> phase_equal(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol);

}  // namespace seqeffect
