#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqeffect/effect.hpp"
#include "seqeffect/io.hpp"
#include "seqeffect/spectral.hpp"

namespace seqeffect {

/// An assignment A -> f_A of a complex function on sp(A) to every effect.
///
/// Families are extensional: `function_for(A)` returns something evaluable
/// at the cluster eigenvalues of A, and the same effect always yields the
/// same function. `spec()` is the JSON description the family was built
/// from, so reports can embed it and reruns can rebuild it.
class ProductFamily {
 public:
  using Assignment = std::function<ScalarFunction(const Effect&)>;

  ProductFamily(std::string label, Json spec, Assignment assign,
                std::optional<std::size_t> required_dim = std::nullopt);

  const std::string& label() const noexcept { return label_; }
  const Json& spec() const noexcept { return spec_; }
  std::optional<std::size_t> required_dim() const noexcept { return required_dim_; }

  ScalarFunction function_for(const Effect& a) const;
  /// f_A(A)
  ComplexMatrix operator_for(const Effect& a) const;
  /// conj(f_A)(A)
  ComplexMatrix conjugate_operator_for(const Effect& a) const;

 private:
  std::string label_;
  Json spec_;
  Assignment assign_;
  std::optional<std::size_t> required_dim_;
};

/// A binary operation on E(H) together with the family that realizes it
/// (the square-root family for the standard product).
class SeqProduct {
 public:
  using Apply = std::function<Effect(const Effect&, const Effect&)>;

  SeqProduct(std::string label, Json spec, ProductFamily family, Apply apply)
      : label_(std::move(label)), spec_(std::move(spec)), family_(std::move(family)), apply_(std::move(apply)) {}

  Effect operator()(const Effect& a, const Effect& b) const { return apply_(a, b); }

  const std::string& label() const noexcept { return label_; }
  const Json& spec() const noexcept { return spec_; }
  const ProductFamily& family() const noexcept { return family_; }

 private:
  std::string label_;
  Json spec_;
  ProductFamily family_;
  Apply apply_;
};

/// A^{1/2} B A^{1/2}
Effect standard_product(const Effect& a, const Effect& b, const Tolerance& tol);

/// f_A(A) B conj(f_A)(A)
Effect family_product(const ProductFamily& f, const Effect& a, const Effect& b, const Tolerance& tol);

/// L B L^dagger for a precomputed left factor L = f_A(A).
Effect sandwich(const ComplexMatrix& left, const Effect& b, const Tolerance& tol);

SeqProduct standard_seq_product(const Tolerance& tol);
SeqProduct family_seq_product(ProductFamily family, const Tolerance& tol);

ProductFamily sqrt_family();

/// g(t) = t^{1/2 + i lambda} with g(0) = 0, the same function for every A.
/// lambda = 1 gives the exp(z ln t) product with z = i on top of A^{1/2}.
ProductFamily borel_family(double lambda);

/// f_A(t) = t. Violates |f_A(t)| = sqrt(t); used to exercise the checkers.
ProductFamily linear_family();

/// f_A(t) = sqrt(t) * exp(i * kappa * tr(A) * ln t). Moduli are right but
/// the phase depends on A through its trace, which breaks phase
/// compatibility on commuting pairs.
ProductFamily trace_phase_family(double kappa);

/// Canonical label of a decomposition of I into two rank-one projections:
/// the Bloch axis of the eigenbasis, unit length, first component with
/// magnitude above eq_tol positive.
struct DecompositionKey {
  std::array<double, 3> axis;
};

/// Bloch axis of a non-scalar 2x2 effect; std::nullopt for A in span{I}.
/// NotDim2 for any other dimension.
std::optional<DecompositionKey> canonical_gamma(const Effect& a, const Tolerance& tol);

/// Per-decomposition phase exponents xi(gamma).
///
/// Explicit entries are keyed on the axis rounded to a 1e-6 grid. Axes
/// without an entry get a value in [-2, 2] hashed from (seed, grid key), so
/// repeated lookups of the same decomposition agree.
class Dim2PhaseTable {
 public:
  explicit Dim2PhaseTable(std::uint64_t seed = 0, Tolerance tol = {});

  /// Registers xi for the decomposition with Bloch axis `axis` (any sign,
  /// any nonzero length).
  void set(std::array<double, 3> axis, double xi);
  double xi(const DecompositionKey& key) const;
  bool has_entry(const DecompositionKey& key) const;

  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<std::pair<std::array<double, 3>, double>>& entries() const noexcept { return entries_; }

 private:
  using GridKey = std::array<std::int64_t, 3>;
  static GridKey grid_key(const std::array<double, 3>& axis);

  std::uint64_t seed_;
  Tolerance tol_;
  std::map<GridKey, double> table_;
  std::vector<std::pair<std::array<double, 3>, double>> entries_;
};

/// f_A(t) = t^{1/2 + i xi(gamma_A)} for non-scalar A, sqrt(t) for A = lambda I.
ProductFamily dim2_family(Dim2PhaseTable table, const Tolerance& tol);

struct ConditionReport {
  bool pass = false;
  double residual = 0.0;
  /// Condition (i): first cluster eigenvalue where |f_A(t)| != sqrt(t).
  std::optional<double> offending_eigenvalue;
  /// Condition (ii): xi with f_A(A) f_B(B) = xi f_{AB}(AB).
  std::optional<Complex> phase;
};

/// |f_A(t)| = sqrt(t) on sp(A).
ConditionReport check_condition_i(const ProductFamily& f, const Effect& a, const Tolerance& tol);

/// f_A(A) f_B(B) ≈ f_{AB}(AB) for commuting A, B; NotCommuting otherwise.
ConditionReport check_condition_ii(const ProductFamily& f, const Effect& a, const Effect& b, const Tolerance& tol);

/// {"kind": "sqrt"} | {"kind": "borel", "lambda": x}
/// | {"kind": "dim2", "seed": n, "xi": [{"axis": [x, y, z], "value": v}, ...]}
/// | {"kind": "linear"} | {"kind": "trace_phase", "kappa": k}
ProductFamily family_from_json(const Json& spec, const Tolerance& tol);

/// "standard" or a family spec object.
SeqProduct product_from_json(const Json& spec, const Tolerance& tol);

}  // namespace seqeffect
