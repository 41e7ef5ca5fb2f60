#pragma once

#include <nlohmann/json.hpp>

#include "casimir/casimir.hpp"

namespace casimir {

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Form& f);
nlohmann::json to_json(const std::vector<Scalar>& multiset);
nlohmann::json to_json(const Matrix& m);

Scalar scalar_from_json(const nlohmann::json& j);
Form form_from_json(const nlohmann::json& j, int dim);
std::vector<Scalar> multiset_from_json(const nlohmann::json& j);
MetricReductiveAlgebra lie_from_json(const nlohmann::json& j);
nlohmann::json lie_to_json(const MetricReductiveAlgebra& L);

struct ParsedGeometry {
    GeometryRecord record;
    nlohmann::json expected = nlohmann::json::object();
};

/// Geometry JSON: name, dim, torsion, dtorsion | "lie", deltatorsion, lie, scal_g | "lie", flags, expected.
ParsedGeometry geometry_from_json(const nlohmann::json& j);

}  // namespace casimir
