#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parlaw/identities.hpp"
#include "parlaw/matrix.hpp"

namespace parlaw {

using nlohmann::json;

// Matrix literal: {"dim": n, "entries": [[re, im], ...]} with n*n pairs in
// row-major order. Vectors use the same shape with n pairs.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

json alpha_to_json(const AlphaField& a);
AlphaField alpha_from_json(const json& j);

// One generated trial's inputs; which fields are present depends on the
// suite. Serialized keys: As, Bs, xs, ys, weights, measure, alpha, alphas, t.
struct Instance {
    std::vector<Matrix> as;
    std::vector<Matrix> bs;
    std::vector<Vector> xs;
    std::vector<Vector> ys;
    std::vector<double> weights;          // r-weights
    std::vector<double> measure_weights;  // node masses
    std::vector<double> alphas;           // convex-combination weights
    std::optional<AlphaField> alpha;
    std::optional<double> t;
};

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

}  // namespace parlaw
