#include "seqeffect/products.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seqeffect/error.hpp"

namespace seqeffect {

namespace {

constexpr double kGridStep = 1e-6;

void require_same_dim(const Effect& a, const Effect& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::ShapeMismatch,
                "effects of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

/// t^{1/2 + i xi}, with 0 -> 0.
Complex complex_power(double t, double xi) {
  if (t <= 0.0) return 0.0;
  return std::exp(Complex(0.5, xi) * std::log(t));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::array<double, 3> canonical_axis(std::array<double, 3> axis, double sign_threshold) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(norm > 0.0)) throw Error(ErrorCode::InvalidSpec, "decomposition axis must be nonzero");
  for (auto& v : axis) v /= norm;
  for (double v : axis) {
    if (std::abs(v) > sign_threshold) {
      if (v < 0.0) {
        for (auto& w : axis) w = -w;
      }
      break;
    }
  }
  return axis;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

ProductFamily::ProductFamily(std::string label, Json spec, Assignment assign,
                             std::optional<std::size_t> required_dim)
    : label_(std::move(label)), spec_(std::move(spec)), assign_(std::move(assign)), required_dim_(required_dim) {}

ScalarFunction ProductFamily::function_for(const Effect& a) const {
  if (required_dim_ && a.dim() != *required_dim_) {
    throw Error(*required_dim_ == 2 ? ErrorCode::NotDim2 : ErrorCode::FamilyDomainError,
                label_ + " is only defined in dimension " + std::to_string(*required_dim_));
  }
  return assign_(a);
}

ComplexMatrix ProductFamily::operator_for(const Effect& a) const {
  const auto f = function_for(a);
  try {
    return apply_function(a.spectrum(), f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError) throw Error(ErrorCode::FamilyDomainError, label_ + ": " + e.what());
    throw;
  }
}

ComplexMatrix ProductFamily::conjugate_operator_for(const Effect& a) const {
  const auto f = function_for(a);
  try {
    return apply_function(a.spectrum(), [&f](double t) { return std::conj(f(t)); });
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError) throw Error(ErrorCode::FamilyDomainError, label_ + ": " + e.what());
    throw;
  }
}

Effect standard_product(const Effect& a, const Effect& b, const Tolerance& tol) {
  require_same_dim(a, b);
  // the validated spectrum has its endpoints snapped, so 0 maps to 0 exactly
  const auto root = apply_function(a.spectrum(), [](double t) { return Complex(std::sqrt(std::max(t, 0.0))); });
  return make_effect(hermitize(root * b.matrix() * root), tol);
}

Effect family_product(const ProductFamily& f, const Effect& a, const Effect& b, const Tolerance& tol) {
  require_same_dim(a, b);
  return make_effect(hermitize(f.operator_for(a) * b.matrix() * f.conjugate_operator_for(a)), tol);
}

Effect sandwich(const ComplexMatrix& left, const Effect& b, const Tolerance& tol) {
  return make_effect(hermitize(left * b.matrix() * left.adjoint()), tol);
}

SeqProduct standard_seq_product(const Tolerance& tol) {
  return SeqProduct("standard", Json("standard"), sqrt_family(),
                    [tol](const Effect& a, const Effect& b) { return standard_product(a, b, tol); });
}

SeqProduct family_seq_product(ProductFamily family, const Tolerance& tol) {
  auto label = family.label();
  auto spec = family.spec();
  return SeqProduct(std::move(label), std::move(spec), family,
                    [family, tol](const Effect& a, const Effect& b) { return family_product(family, a, b, tol); });
}

ProductFamily sqrt_family() {
  return ProductFamily("sqrt", Json{{"kind", "sqrt"}}, [](const Effect&) -> ScalarFunction {
    return [](double t) { return Complex(t <= 0.0 ? 0.0 : std::sqrt(t)); };
  });
}

ProductFamily borel_family(double lambda) {
  return ProductFamily("borel(lambda=" + format_double(lambda) + ")", Json{{"kind", "borel"}, {"lambda", lambda}},
                       [lambda](const Effect&) -> ScalarFunction {
                         return [lambda](double t) { return complex_power(t, lambda); };
                       });
}

ProductFamily linear_family() {
  return ProductFamily("linear", Json{{"kind", "linear"}}, [](const Effect&) -> ScalarFunction {
    return [](double t) { return Complex(t); };
  });
}

ProductFamily trace_phase_family(double kappa) {
  return ProductFamily("trace_phase(kappa=" + format_double(kappa) + ")",
                       Json{{"kind", "trace_phase"}, {"kappa", kappa}}, [kappa](const Effect& a) -> ScalarFunction {
                         const double xi = kappa * a.matrix().trace().real();
                         return [xi](double t) { return complex_power(t, xi); };
                       });
}

std::optional<DecompositionKey> canonical_gamma(const Effect& a, const Tolerance& tol) {
  if (a.dim() != 2) throw Error(ErrorCode::NotDim2, "canonical_gamma needs a 2x2 effect");
  if (a.spectrum().clusters().size() < 2) return std::nullopt;
  const auto& m = a.matrix();
  // A = c0 I + cx sx + cy sy + cz sz with sy = [[0, -i], [i, 0]]
  const std::array<double, 3> c{m(0, 1).real(), -m(0, 1).imag(), 0.5 * (m(0, 0).real() - m(1, 1).real())};
  return DecompositionKey{canonical_axis(c, tol.eq_tol)};
}

Dim2PhaseTable::Dim2PhaseTable(std::uint64_t seed, Tolerance tol) : seed_(seed), tol_(tol) {}

Dim2PhaseTable::GridKey Dim2PhaseTable::grid_key(const std::array<double, 3>& axis) {
  GridKey key{};
  for (std::size_t i = 0; i < 3; ++i) key[i] = std::llround(axis[i] / kGridStep);
  return key;
}

void Dim2PhaseTable::set(std::array<double, 3> axis, double xi) {
  if (!std::isfinite(xi)) throw Error(ErrorCode::InvalidSpec, "xi must be finite");
  const auto canonical = canonical_axis(axis, tol_.eq_tol);
  table_[grid_key(canonical)] = xi;
  entries_.emplace_back(axis, xi);
}

bool Dim2PhaseTable::has_entry(const DecompositionKey& key) const { return table_.count(grid_key(key.axis)) > 0; }

double Dim2PhaseTable::xi(const DecompositionKey& key) const {
  const auto grid = grid_key(key.axis);
  if (auto it = table_.find(grid); it != table_.end()) return it->second;
  std::uint64_t h = splitmix64(seed_);
  for (auto component : grid) h = splitmix64(h ^ static_cast<std::uint64_t>(component));
  const double unit = static_cast<double>(h >> 11) * 0x1.0p-53;
  return -2.0 + 4.0 * unit;
}

ProductFamily dim2_family(Dim2PhaseTable table, const Tolerance& tol) {
  Json xi = Json::array();
  for (const auto& [axis, value] : table.entries()) xi.push_back(Json{{"axis", axis}, {"value", value}});
  Json spec{{"kind", "dim2"}, {"seed", table.seed()}, {"xi", std::move(xi)}};
  std::string label = "dim2(seed=" + std::to_string(table.seed()) + ", entries=" +
                      std::to_string(table.entries().size()) + ")";
  return ProductFamily(
      std::move(label), std::move(spec),
      [table = std::move(table), tol](const Effect& a) -> ScalarFunction {
        const auto gamma = canonical_gamma(a, tol);
        if (!gamma) return [](double t) { return Complex(t <= 0.0 ? 0.0 : std::sqrt(t)); };
        const double xi = table.xi(*gamma);
        return [xi](double t) { return complex_power(t, xi); };
      },
      2);
}

ConditionReport check_condition_i(const ProductFamily& f, const Effect& a, const Tolerance& tol) {
  const auto fn = f.function_for(a);
  ConditionReport report;
  report.pass = true;
  for (const auto& cluster : a.spectrum().clusters()) {
    const double t = cluster.eigenvalue;
    const Complex value = fn(t);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw Error(ErrorCode::FamilyDomainError, f.label() + " undefined at " + std::to_string(t));
    }
    const double residual = std::abs(std::abs(value) - std::sqrt(std::max(t, 0.0)));
    report.residual = std::max(report.residual, residual);
    if (residual > tol.eq_tol && report.pass) {
      report.pass = false;
      report.offending_eigenvalue = t;
    }
  }
  return report;
}

ConditionReport check_condition_ii(const ProductFamily& f, const Effect& a, const Effect& b, const Tolerance& tol) {
  require_same_dim(a, b);
  const auto ab = a.matrix() * b.matrix();
  const double gap = distance(ab, b.matrix() * a.matrix());
  if (gap > tol.eq_tol * std::max(1.0, a.matrix().frobenius_norm() * b.matrix().frobenius_norm())) {
    throw Error(ErrorCode::NotCommuting, "||AB - BA||_F = " + std::to_string(gap));
  }
  const auto product = make_effect(hermitize(ab), tol);
  const auto lhs = f.operator_for(a) * f.operator_for(b);
  const auto rhs = f.operator_for(product);

  ConditionReport report;
  report.phase = phase_equal(lhs, rhs, tol);
  report.pass = report.phase.has_value();
  if (report.phase) {
    report.residual = distance(lhs, *report.phase * rhs) / std::max(1.0, rhs.frobenius_norm());
  } else {
    // best unimodular fit, for the failure record
    Complex num = 0.0;
    const auto el = lhs.entries();
    const auto er = rhs.entries();
    for (std::size_t i = 0; i < el.size(); ++i) num += std::conj(er[i]) * el[i];
    const Complex xi = std::abs(num) > 0.0 ? num / std::abs(num) : Complex(1.0);
    report.residual = distance(lhs, xi * rhs) / std::max(1.0, rhs.frobenius_norm());
  }
  return report;
}

ProductFamily family_from_json(const Json& spec, const Tolerance& tol) {
  try {
    if (!spec.is_object() || !spec.contains("kind")) {
      throw Error(ErrorCode::InvalidSpec, "family spec must be an object with a \"kind\"");
    }
    const auto kind = spec.at("kind").get<std::string>();
    if (kind == "sqrt") return sqrt_family();
    if (kind == "borel") return borel_family(spec.at("lambda").get<double>());
    if (kind == "linear") return linear_family();
    if (kind == "trace_phase") return trace_phase_family(spec.value("kappa", 1.0));
    if (kind == "dim2") {
      Dim2PhaseTable table(spec.value("seed", std::uint64_t{0}), tol);
      if (spec.contains("xi")) {
        for (const auto& entry : spec.at("xi")) {
          table.set(entry.at("axis").get<std::array<double, 3>>(), entry.at("value").get<double>());
        }
      }
      return dim2_family(std::move(table), tol);
    }
    throw Error(ErrorCode::InvalidSpec, "unknown family kind \"" + kind + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, std::string("family spec: ") + e.what());
  }
}

SeqProduct product_from_json(const Json& spec, const Tolerance& tol) {
  if (spec.is_string()) {
    if (spec.get<std::string>() == "standard") return standard_seq_product(tol);
    throw Error(ErrorCode::InvalidSpec, "unknown product \"" + spec.get<std::string>() + "\"");
  }
  return family_seq_product(family_from_json(spec, tol), tol);
}

}  // namespace seqeffect
