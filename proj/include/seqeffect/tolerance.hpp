#pragma once

namespace seqeffect {

/// Numerical thresholds shared by every comparison in the library.
///
/// eq_tol is applied to Frobenius norms relative to max(1, ||reference||_F);
/// psd_tol is the slack allowed on negative eigenvalues (scaled the same
/// way); cluster_gap is the width under which eigenvalues are treated as one
/// spectral point.
struct Tolerance {
  double eq_tol = 1e-9;
  double psd_tol = 1e-10;
  double cluster_gap = 1e-8;

  /// Throws Error(InvalidSpec) unless all fields are positive and
  /// cluster_gap > eq_tol.
  void validate() const;
};

}  // namespace seqeffect
