#include "parlaw/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "parlaw/eig.hpp"
#include "parlaw/spectral.hpp"

namespace parlaw {

NormSpec NormSpec::schatten(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten norm requires p > 0");
    NormSpec s;
    s.kind = Kind::schatten;
    s.p = p;
    return s;
}

NormSpec NormSpec::kyfan(int k) {
    if (k < 1) throw std::invalid_argument("kyfan norm requires k >= 1");
    NormSpec s;
    s.kind = Kind::kyfan;
    s.k = k;
    return s;
}

NormSpec NormSpec::operator_norm() {
    NormSpec s;
    s.kind = Kind::op;
    return s;
}

NormSpec NormSpec::trace_norm() {
    NormSpec s;
    s.kind = Kind::trace;
    return s;
}

std::string NormSpec::str() const {
    char buf[64];
    switch (kind) {
        case Kind::schatten:
            std::snprintf(buf, sizeof(buf), "schatten:%g", p);
            return buf;
        case Kind::kyfan:
            std::snprintf(buf, sizeof(buf), "kyfan:%d", k);
            return buf;
        case Kind::op:
            return "operator";
        case Kind::trace:
            return "trace";
    }
    return "";
}

NormSpec NormSpec::parse(std::string_view s) {
    if (s == "operator") return operator_norm();
    if (s == "trace") return trace_norm();
    const auto colon = s.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view head = s.substr(0, colon);
        const std::string tail{s.substr(colon + 1)};
        try {
            if (head == "schatten") return schatten(std::stod(tail));
            if (head == "kyfan") return kyfan(std::stoi(tail));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw std::invalid_argument("unknown norm spec: '" + std::string(s) + "'");
}

std::vector<double> singular_values(const Matrix& a) {
    HermitianEigen e = hermitian_eig(abs_squared(a));
    std::vector<double> sv(e.eigenvalues.size());
    for (std::size_t i = 0; i < sv.size(); ++i)
        sv[i] = std::sqrt(std::max(0.0, e.eigenvalues[i]));
    return sv;  // eigenvalues descending => singular values descending
}

double schatten_pth_power(const std::vector<double>& sv, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten power requires p > 0");
    double s = 0.0;
    for (double v : sv) s += std::pow(v, p);
    return s;
}

double norm(const std::vector<double>& sv, const NormSpec& spec) {
    switch (spec.kind) {
        case NormSpec::Kind::schatten:
            return std::pow(schatten_pth_power(sv, spec.p), 1.0 / spec.p);
        case NormSpec::Kind::kyfan: {
            if (spec.k < 1 || static_cast<std::size_t>(spec.k) > sv.size())
                throw std::invalid_argument("kyfan norm: k out of range");
            double s = 0.0;
            for (int i = 0; i < spec.k; ++i) s += sv[static_cast<std::size_t>(i)];
            return s;
        }
        case NormSpec::Kind::op:
            return sv.empty() ? 0.0 : sv.front();
        case NormSpec::Kind::trace: {
            double s = 0.0;
            for (double v : sv) s += v;
            return s;
        }
    }
    return 0.0;
}

double norm(const Matrix& a, const NormSpec& spec) { return norm(singular_values(a), spec); }

std::vector<NormSpec> norm_test_family(int dim, const std::vector<double>& p_grid) {
    std::vector<NormSpec> fam;
    for (double p : p_grid)
        if (p >= 1.0) fam.push_back(NormSpec::schatten(p));
    fam.push_back(NormSpec::operator_norm());
    fam.push_back(NormSpec::trace_norm());
    for (int k = 1; k <= dim; ++k) fam.push_back(NormSpec::kyfan(k));
    return fam;
}

ScalarIdentityResult trace_identity_check(const Matrix& a, double p, double tol) {
    if (!(p > 0.0)) throw std::invalid_argument("trace_identity_check requires p > 0");
    // path one: |A| by spectral square root, then the spectral p-th power,
    // then the trace norm of the resulting PSD matrix
    const Matrix abs_a = abs_op(a);
    const Matrix abs_p = apply_scalar_fn(abs_a, [p](double t) { return std::pow(t, p); });
    const double lhs = norm(abs_p, NormSpec::trace_norm());
    // path two: singular values of A directly
    const double rhs = schatten_pth_power(singular_values(a), p);

    ScalarIdentityResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = identity_residual(lhs, rhs);
    r.pass = r.residual <= tol;
    return r;
}

}  // namespace parlaw
