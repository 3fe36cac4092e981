#include "parinv/json_io.hpp"

#include <stdexcept>

namespace parinv {

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw std::invalid_argument("matrix rows must be arrays of equal length");
    for (const auto& v : row) {
      if (!v.is_string()) throw std::invalid_argument("matrix entries must be strings");
      data.push_back(Rational::parse(v.get<std::string>()));
    }
  }
  return RationalMatrix(rows, cols, std::move(data));
}

Json to_json(const FlagShape& shape) {
  return Json{{"kind", to_string(shape.kind())}, {"n", shape.n()}, {"parts", shape.parts()}};
}

FlagShape shape_from_json(const Json& j) {
  return make_shape(parse_group_kind(j.at("kind").get<std::string>()), j.at("n").get<int>(),
                    j.at("parts").get<std::vector<int>>());
}

namespace {

const char* role_name(Role r) {
  switch (r) {
    case Role::J: return "J";
    case Role::M0: return "M0";
    case Role::M: return "M";
    case Role::P: return "P";
  }
  return "J";
}

Role role_from_name(const std::string& s) {
  if (s == "J") return Role::J;
  if (s == "M0") return Role::M0;
  if (s == "M") return Role::M;
  if (s == "P") return Role::P;
  throw std::invalid_argument("unknown descriptor role \"" + s + "\"");
}

Json minor_json(const MinorRecipe& m) {
  return Json{{"kind", "minor"}, {"x_rows", m.rows}, {"adj_rows", Json::array()}, {"cols", m.cols}};
}

MinorRecipe minor_from(const Json& j) {
  if (j.at("kind").get<std::string>() != "minor") throw std::invalid_argument("ratio parts must be minors");
  return {j.at("x_rows").get<std::vector<int>>(), j.at("cols").get<std::vector<int>>()};
}

}  // namespace

Json to_json(const GeneratorDescriptor& d) {
  Json out;
  out["pair"] = d.pair ? Json{d.pair->i, d.pair->j} : Json(nullptr);
  out["role"] = role_name(d.role);
  if (const auto* m = std::get_if<MinorRecipe>(&d.recipe)) {
    const Json mj = minor_json(*m);
    for (const auto& [k, v] : mj.items()) out[k] = v;
  } else if (const auto* s = std::get_if<StackedRecipe>(&d.recipe)) {
    out["kind"] = "stacked";
    out["x_rows"] = s->x_rows;
    out["adj_rows"] = s->adj_rows;
    out["cols"] = s->cols;
  } else {
    const auto& r = std::get<RatioRecipe>(d.recipe);
    out["kind"] = "ratio";
    out["numerator"] = minor_json(r.numerator);
    out["denominator"] = minor_json(r.denominator);
  }
  return out;
}

GeneratorDescriptor descriptor_from_json(const Json& j) {
  GeneratorDescriptor d;
  if (j.contains("pair") && !j.at("pair").is_null()) {
    const auto p = j.at("pair").get<std::vector<int>>();
    if (p.size() != 2) throw std::invalid_argument("pair must have two entries");
    d.pair = IndexPair{p[0], p[1]};
  }
  if (j.contains("role")) d.role = role_from_name(j.at("role").get<std::string>());
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "minor") {
    d.recipe = minor_from(j);
  } else if (kind == "stacked") {
    d.recipe = StackedRecipe{j.at("x_rows").get<std::vector<int>>(), j.at("adj_rows").get<std::vector<int>>(),
                             j.at("cols").get<std::vector<int>>()};
  } else if (kind == "ratio") {
    d.recipe = RatioRecipe{minor_from(j.at("numerator")), minor_from(j.at("denominator"))};
  } else {
    throw std::invalid_argument("unknown descriptor kind \"" + kind + "\"");
  }
  return d;
}

}  // namespace parinv
