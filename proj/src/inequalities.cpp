#include "parlaw/inequalities.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "parlaw/spectral.hpp"

namespace parlaw {

namespace {

constexpr int kProbePoints = 50;
constexpr double kProbeUpper = 100.0;

double probe_point(int i) { return kProbeUpper * i / (kProbePoints - 1); }

void require_psd_inputs(const std::vector<Matrix>& as, double tol, const char* where) {
    if (as.empty()) throw std::invalid_argument(std::string(where) + ": empty operator list");
    for (const Matrix& a : as) {
        if (a.dim() != as.front().dim())
            throw std::invalid_argument(std::string(where) + ": mixed matrix dimensions");
        if (!is_psd(a, tol).psd)
            throw std::invalid_argument(std::string(where) + ": inputs must be PSD");
    }
}

void require_constraint(const WeightVector& r, const char* where) {
    r.validate();
    double s = 0.0;
    for (double v : r.r) s += 1.0 / v;
    if (std::abs(s - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(where) + ": weights must satisfy sum 1/r_i = 1");
}

void require_norm(const NormSpec& spec, const char* where) {
    if (spec.quasi_norm())
        throw std::invalid_argument(std::string(where) +
                                    ": a genuine norm is required (schatten p < 1 is not)");
}

void require_zero_at_zero(const ScalarFn& g, const char* where) {
    if (std::abs(g.value_at_zero()) > 1e-12)
        throw std::invalid_argument(std::string(where) + ": g(0) = 0 required");
}

std::function<double(double)> as_fn(const ScalarFn& g) {
    return [g](double t) { return g(t); };
}

}  // namespace

double ScalarFn::operator()(double t) const {
    switch (kind) {
        case Kind::power: return std::pow(t, param);
        case Kind::hinge: return std::max(t - param, 0.0);
        case Kind::linear: return t;
    }
    return t;
}

ScalarFn ScalarFn::power(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("ScalarFn::power requires p > 0");
    ScalarFn f;
    f.kind = Kind::power;
    f.param = p;
    f.convexity = p > 1.0 ? Convexity::convex : (p < 1.0 ? Convexity::concave : Convexity::both);
    return f;
}

ScalarFn ScalarFn::hinge(double c) {
    if (!(c >= 0.0)) throw std::invalid_argument("ScalarFn::hinge requires c >= 0");
    ScalarFn f;
    f.kind = Kind::hinge;
    f.param = c;
    f.convexity = Convexity::convex;
    return f;
}

ScalarFn ScalarFn::linear() {
    ScalarFn f;
    f.kind = Kind::linear;
    f.convexity = Convexity::both;
    return f;
}

std::string ScalarFn::str() const {
    char buf[64];
    switch (kind) {
        case Kind::power:
            std::snprintf(buf, sizeof(buf), "power:%g", param);
            return buf;
        case Kind::hinge:
            std::snprintf(buf, sizeof(buf), "hinge:%g", param);
            return buf;
        case Kind::linear:
            return "linear";
    }
    return "";
}

ScalarFn ScalarFn::parse(std::string_view s) {
    if (s == "linear") return linear();
    const auto colon = s.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view head = s.substr(0, colon);
        const std::string tail{s.substr(colon + 1)};
        try {
            if (head == "power") return power(std::stod(tail));
            if (head == "hinge") return hinge(std::stod(tail));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw std::invalid_argument("unknown scalar function: '" + std::string(s) + "'");
}

void ScalarFn::validate_convexity() const {
    for (int i = 0; i < kProbePoints; ++i) {
        for (int j = i; j < kProbePoints; ++j) {
            const double s = probe_point(i), t = probe_point(j);
            const double mid = (*this)((s + t) / 2.0);
            const double avg = ((*this)(s) + (*this)(t)) / 2.0;
            const double eps = 1e-9 * (1.0 + std::abs((*this)(s)) + std::abs((*this)(t)));
            const bool convex_ok = mid <= avg + eps;
            const bool concave_ok = mid >= avg - eps;
            switch (convexity) {
                case Convexity::convex:
                    if (!convex_ok)
                        throw std::invalid_argument("ScalarFn '" + str() +
                                                    "': declared convex, probe disagrees");
                    break;
                case Convexity::concave:
                    if (!concave_ok)
                        throw std::invalid_argument("ScalarFn '" + str() +
                                                    "': declared concave, probe disagrees");
                    break;
                case Convexity::both:
                    if (!convex_ok || !concave_ok)
                        throw std::invalid_argument("ScalarFn '" + str() +
                                                    "': declared linear, probe disagrees");
                    break;
            }
        }
    }
}

void ScalarFn::validate_nonnegative() const {
    for (int i = 0; i < kProbePoints; ++i)
        if ((*this)(probe_point(i)) < -1e-12)
            throw std::invalid_argument("ScalarFn '" + str() + "': negative value on [0, 100]");
}

double sign_violation(const Margin& m) {
    switch (m.required_sign) {
        case RequiredSign::nonnegative: return -m.value / m.scale;
        case RequiredSign::nonpositive: return m.value / m.scale;
        case RequiredSign::zero: return std::abs(m.value) / m.scale;
    }
    return 0.0;
}

Margin judge_margin(double lhs, double rhs, RequiredSign required, double tol) {
    Margin m;
    m.lhs = lhs;
    m.rhs = rhs;
    m.value = lhs - rhs;
    m.scale = 1.0 + std::abs(lhs) + std::abs(rhs);
    m.required_sign = required;
    m.pass = sign_violation(m) <= tol;
    return m;
}

RequiredSign required_sign_for(ScalarFn::Convexity c) {
    switch (c) {
        case ScalarFn::Convexity::convex: return RequiredSign::nonnegative;
        case ScalarFn::Convexity::concave: return RequiredSign::nonpositive;
        case ScalarFn::Convexity::both: return RequiredSign::zero;
    }
    return RequiredSign::zero;
}

std::pair<Matrix, Matrix> convex_combination_arguments(const std::vector<Matrix>& as,
                                                       const std::vector<double>& alphas,
                                                       const ScalarFn& g, double tol) {
    require_psd_inputs(as, tol, "convex_combination_ineq");
    if (alphas.size() != as.size())
        throw std::invalid_argument("convex_combination_ineq: weight count mismatch");
    double sum = 0.0;
    for (double a : alphas) {
        if (a < 0.0) throw std::invalid_argument("convex_combination_ineq: negative weight");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("convex_combination_ineq: weights must sum to 1");
    if (g.convexity == ScalarFn::Convexity::concave)
        throw std::invalid_argument("convex_combination_ineq: g must be convex");
    g.validate_convexity();
    g.validate_nonnegative();

    const int d = as.front().dim();
    Matrix mix(d), lhs_arg(d);
    for (std::size_t j = 0; j < as.size(); ++j) {
        mix += alphas[j] * as[j];
        lhs_arg += alphas[j] * apply_scalar_fn(as[j], as_fn(g), tol);
    }
    return {std::move(lhs_arg), apply_scalar_fn(mix, as_fn(g), tol)};
}

std::pair<Matrix, Matrix> superadditivity_arguments(const std::vector<Matrix>& as,
                                                    const ScalarFn& g, double tol) {
    require_psd_inputs(as, tol, "superadditivity_ineq");
    require_zero_at_zero(g, "superadditivity_ineq");
    g.validate_convexity();
    g.validate_nonnegative();

    const int d = as.front().dim();
    Matrix total(d), rhs_arg(d);
    for (const Matrix& a : as) {
        total += a;
        rhs_arg += apply_scalar_fn(a, as_fn(g), tol);
    }
    return {apply_scalar_fn(total, as_fn(g), tol), std::move(rhs_arg)};
}

std::pair<Matrix, Matrix> theorem_main_arguments(const std::vector<Matrix>& as,
                                                 const WeightVector& r, const ScalarFn& g,
                                                 double tol) {
    if (as.empty()) throw std::invalid_argument("theorem_main_margin: empty operator list");
    const int n = static_cast<int>(as.size());
    for (const Matrix& a : as)
        if (a.dim() != as.front().dim())
            throw std::invalid_argument("theorem_main_margin: mixed matrix dimensions");
    if (r.size() != n) throw std::invalid_argument("theorem_main_margin: length mismatch");
    require_constraint(r, "theorem_main_margin");
    require_zero_at_zero(g, "theorem_main_margin");
    g.validate_convexity();
    g.validate_nonnegative();

    // f(|X|) = g(|X|^2), so both sides are g applied to squared absolute values
    const int d = as.front().dim();
    Matrix lhs_arg(d), rhs_arg(d), total(d);
    for (int i = 0; i < n; ++i) {
        lhs_arg += (1.0 / r.r[i]) * apply_scalar_fn(abs_squared(r.r[i] * as[i]), as_fn(g), tol);
        total += as[i];
        for (int j = i + 1; j < n; ++j) {
            const Matrix diff =
                std::sqrt(r.r[i] / r.r[j]) * as[i] - std::sqrt(r.r[j] / r.r[i]) * as[j];
            rhs_arg += apply_scalar_fn(abs_squared(diff), as_fn(g), tol);
        }
    }
    rhs_arg += apply_scalar_fn(abs_squared(total), as_fn(g), tol);
    return {std::move(lhs_arg), std::move(rhs_arg)};
}

Margin convex_combination_ineq(const std::vector<Matrix>& as, const std::vector<double>& alphas,
                               const ScalarFn& g, const NormSpec& spec, double tol) {
    require_norm(spec, "convex_combination_ineq");
    const auto [lhs_arg, rhs_arg] = convex_combination_arguments(as, alphas, g, tol);
    return judge_margin(norm(lhs_arg, spec), norm(rhs_arg, spec),
                        required_sign_for(g.convexity), tol);
}

Margin superadditivity_ineq(const std::vector<Matrix>& as, const ScalarFn& g,
                            const NormSpec& spec, double tol) {
    require_norm(spec, "superadditivity_ineq");
    const auto [lhs_arg, rhs_arg] = superadditivity_arguments(as, g, tol);
    return judge_margin(norm(lhs_arg, spec), norm(rhs_arg, spec),
                        required_sign_for(g.convexity), tol);
}

Margin theorem_main_margin(const std::vector<Matrix>& as, const WeightVector& r,
                           const ScalarFn& g, const NormSpec& spec, double tol) {
    require_norm(spec, "theorem_main_margin");
    const auto [lhs_arg, rhs_arg] = theorem_main_arguments(as, r, g, tol);
    return judge_margin(norm(lhs_arg, spec), norm(rhs_arg, spec),
                        required_sign_for(g.convexity), tol);
}

std::vector<Margin> schatten_weighted_margins(const std::vector<Matrix>& as,
                                              const WeightVector& r,
                                              const std::vector<double>& ps, double tol) {
    if (as.empty()) throw std::invalid_argument("schatten_weighted_ineq: empty operator list");
    const int n = static_cast<int>(as.size());
    for (const Matrix& a : as)
        if (a.dim() != as.front().dim())
            throw std::invalid_argument("schatten_weighted_ineq: mixed matrix dimensions");
    if (r.size() != n) throw std::invalid_argument("schatten_weighted_ineq: length mismatch");
    require_constraint(r, "schatten_weighted_ineq");
    for (double p : ps)
        if (!(p > 0.0)) throw std::invalid_argument("schatten_weighted_ineq: p > 0 required");

    // singular values once per matrix, then every exponent from the same sets
    std::vector<std::vector<double>> sv_terms;
    sv_terms.reserve(as.size());
    Matrix total(as.front().dim());
    for (int i = 0; i < n; ++i) {
        sv_terms.push_back(singular_values(as[i]));
        total += as[i];
    }
    std::vector<std::vector<double>> sv_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sv_pairs.push_back(singular_values(std::sqrt(r.r[i] / r.r[j]) * as[i] -
                                               std::sqrt(r.r[j] / r.r[i]) * as[j]));
    const std::vector<double> sv_total = singular_values(total);

    std::vector<Margin> out;
    out.reserve(ps.size());
    for (double p : ps) {
        double lhs = 0.0, rhs = 0.0;
        for (int i = 0; i < n; ++i)
            lhs += std::pow(r.r[i], p - 1.0) * schatten_pth_power(sv_terms[i], p);
        for (const auto& sv : sv_pairs) rhs += schatten_pth_power(sv, p);
        rhs += schatten_pth_power(sv_total, p);

        RequiredSign required = RequiredSign::zero;
        if (std::abs(p - 2.0) > 1e-12)
            required = p > 2.0 ? RequiredSign::nonnegative : RequiredSign::nonpositive;
        out.push_back(judge_margin(lhs, rhs, required, tol));
    }
    return out;
}

Margin schatten_weighted_ineq(const std::vector<Matrix>& as, const WeightVector& r, double p,
                              double tol) {
    return schatten_weighted_margins(as, r, {p}, tol).front();
}

}  // namespace parlaw
