#include "parlaw/io.hpp"

#include <stdexcept>

namespace parlaw {

namespace {

json pairs_to_json(const std::vector<Complex>& v) {
    json e = json::array();
    for (const Complex& z : v) e.push_back(json::array({z.real(), z.imag()}));
    return e;
}

std::vector<Complex> pairs_from_json(const json& e) {
    std::vector<Complex> v;
    v.reserve(e.size());
    for (const json& p : e) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("entries must be [re, im] pairs");
        v.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return v;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    return json{{"dim", m.dim()}, {"entries", pairs_to_json(m.entries())}};
}

Matrix matrix_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    return Matrix(dim, pairs_from_json(j.at("entries")));
}

json vector_to_json(const Vector& v) {
    return json{{"dim", v.dim()}, {"entries", pairs_to_json(v.entries())}};
}

Vector vector_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<Complex> e = pairs_from_json(j.at("entries"));
    if (static_cast<int>(e.size()) != dim)
        throw std::invalid_argument("vector entries: expected dim values");
    return Vector(std::move(e));
}

json alpha_to_json(const AlphaField& a) {
    return json{{"m", a.m}, {"values", pairs_to_json(a.values)}};
}

AlphaField alpha_from_json(const json& j) {
    AlphaField a;
    a.m = j.at("m").get<int>();
    a.values = pairs_from_json(j.at("values"));
    a.validate();
    return a;
}

json instance_to_json(const Instance& inst) {
    json j = json::object();
    auto matrices = [](const std::vector<Matrix>& ms) {
        json arr = json::array();
        for (const Matrix& m : ms) arr.push_back(matrix_to_json(m));
        return arr;
    };
    auto vectors = [](const std::vector<Vector>& vs) {
        json arr = json::array();
        for (const Vector& v : vs) arr.push_back(vector_to_json(v));
        return arr;
    };
    if (!inst.as.empty()) j["As"] = matrices(inst.as);
    if (!inst.bs.empty()) j["Bs"] = matrices(inst.bs);
    if (!inst.xs.empty()) j["xs"] = vectors(inst.xs);
    if (!inst.ys.empty()) j["ys"] = vectors(inst.ys);
    if (!inst.weights.empty()) j["weights"] = inst.weights;
    if (!inst.measure_weights.empty()) j["measure"] = json{{"weights", inst.measure_weights}};
    if (!inst.alphas.empty()) j["alphas"] = inst.alphas;
    if (inst.alpha) j["alpha"] = alpha_to_json(*inst.alpha);
    if (inst.t) j["t"] = *inst.t;
    return j;
}

Instance instance_from_json(const json& j) {
    Instance inst;
    if (j.contains("As"))
        for (const json& m : j.at("As")) inst.as.push_back(matrix_from_json(m));
    if (j.contains("Bs"))
        for (const json& m : j.at("Bs")) inst.bs.push_back(matrix_from_json(m));
    if (j.contains("xs"))
        for (const json& v : j.at("xs")) inst.xs.push_back(vector_from_json(v));
    if (j.contains("ys"))
        for (const json& v : j.at("ys")) inst.ys.push_back(vector_from_json(v));
    if (j.contains("weights")) inst.weights = j.at("weights").get<std::vector<double>>();
    if (j.contains("measure"))
        inst.measure_weights = j.at("measure").at("weights").get<std::vector<double>>();
    if (j.contains("alphas")) inst.alphas = j.at("alphas").get<std::vector<double>>();
    if (j.contains("alpha")) inst.alpha = alpha_from_json(j.at("alpha"));
    if (j.contains("t")) inst.t = j.at("t").get<double>();
    return inst;
}

}  // namespace parlaw
