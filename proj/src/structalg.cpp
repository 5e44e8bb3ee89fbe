#include "symlab/structalg.hpp"

#include <json.hpp>

#include "symlab/parse.hpp"

namespace symlab {

std::optional<Matrix<RationalFunction>> limit_matrix(const Matrix<RationalFunction>& m, const std::string& symbol,
                                                     const FieldElement& value) {
  Matrix<RationalFunction> out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto l = limit_at(m(i, j), symbol, value);
      if (std::holds_alternative<Pole>(l)) return std::nullopt;
      out(i, j) = std::get<RationalFunction>(l);
    }
  return out;
}

FStructAlgebra product_algebra(const Field& f, int copies) {
  if (copies < 1) throw InputError("need at least one factor");
  // Basis {1, u_2, ..., u_n} with u_i the unit vector of factor i.
  const std::size_t n = copies;
  std::vector<std::vector<std::vector<FieldElement>>> tab(
      n, std::vector<std::vector<FieldElement>>(n, std::vector<FieldElement>(n, f.zero())));
  for (std::size_t i = 0; i < n; ++i) {
    tab[0][i][i] = f.one();
    tab[i][0][i] = f.one();
    tab[i][i][i] = f.one();
  }
  std::vector<FieldElement> unit(n, f.zero());
  unit[0] = f.one();
  return FStructAlgebra(std::move(tab), std::move(unit));
}

std::vector<Matrix<FieldElement>> brute_force_algebra_automorphisms(const FStructAlgebra& A, Exec exec,
                                                                    std::uint64_t budget) {
  const Field f = A.proto().field();
  if (!f.is_finite()) throw InputError("brute force needs a finite field");
  if (!(A.unit() == A.basis(0))) throw InputError("brute force expects the unit to be the first basis vector");
  const std::size_t n = A.dim();
  const std::uint64_t q = f.size();
  const std::uint64_t count = checked_power(q, static_cast<int>(n * (n - 1)), budget);
  auto src = std::make_shared<const FStructAlgebra>(A);
  auto candidate = [&](std::uint64_t idx) {
    Matrix<FieldElement> m(n, n, f.zero());
    m(0, 0) = f.one();
    const auto d = digits(idx, q, static_cast<int>(n * (n - 1)));
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = f.element(d[(j - 1) * n + i]);
    return m;
  };
  auto hit = [&](std::uint64_t idx) {
    const auto m = candidate(idx);
    if (m.determinant().is_zero()) return false;
    return is_algebra_morphism(FMap(src, src, m));
  };
  std::vector<Matrix<FieldElement>> out;
  for (auto idx : filter_indices(count, hit, exec)) out.push_back(candidate(idx));
  return out;
}

FStructAlgebra parse_struct_algebra(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad algebra description: ") + e.what());
  }
  if (!j.is_object() || !j.contains("table")) throw InputError("algebra description needs a \"table\"");
  const Field f = Field::parse(j.value("field", std::string("Q")));
  auto scalar = [&](const nlohmann::json& v) {
    if (v.is_number_integer()) return f.from_int(v.get<long>());
    if (v.is_string()) return parse_scalar(v.get<std::string>(), f);
    throw InputError("structure constants must be integers or strings");
  };
  auto vec = [&](const nlohmann::json& v) {
    if (!v.is_array()) throw InputError("expected an array of constants");
    std::vector<FieldElement> out;
    for (const auto& x : v) out.push_back(scalar(x));
    return out;
  };
  const auto& t = j["table"];
  if (!t.is_array()) throw InputError("\"table\" must be an array");
  std::vector<std::vector<std::vector<FieldElement>>> tab;
  for (const auto& row : t) {
    if (!row.is_array()) throw InputError("\"table\" rows must be arrays");
    std::vector<std::vector<FieldElement>> r;
    for (const auto& v : row) r.push_back(vec(v));
    tab.push_back(std::move(r));
  }
  const std::size_t n = tab.size();
  std::vector<FieldElement> unit(n, f.zero());
  if (j.contains("unit"))
    unit = vec(j["unit"]);
  else if (n > 0)
    unit[0] = f.one();
  return FStructAlgebra(std::move(tab), std::move(unit));
}

}  // namespace symlab
