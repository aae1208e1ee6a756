#include "seqeffect/io.hpp"

#include <string>

#include "seqeffect/error.hpp"

namespace seqeffect {

Json matrix_to_json(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& z : m.entries()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
      throw Error(ErrorCode::ParseError, "matrix literal needs \"dim\" and \"re\"");
    }
    const auto n = j.at("dim").get<std::size_t>();
    if (n == 0) throw Error(ErrorCode::ParseError, "dim must be >= 1");
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.contains("im") ? j.at("im").get<std::vector<double>>() : std::vector<double>(re.size());
    if (re.size() != n * n || im.size() != n * n) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(n * n) + " entries in re/im");
    }
    std::vector<Complex> entries(n * n);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = Complex(re[i], im[i]);
    return ComplexMatrix(n, n, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json effect_to_json(const Effect& e) {
  Json j = matrix_to_json(e.matrix());
  j["kind"] = "effect";
  return j;
}

Effect effect_from_json(const Json& j, const Tolerance& tol) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != "effect") {
    throw Error(ErrorCode::ParseError, "expected kind \"effect\"");
  }
  return make_effect(matrix_from_json(j), tol);
}

}  // namespace seqeffect
