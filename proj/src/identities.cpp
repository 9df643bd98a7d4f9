#include "parlaw/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "parlaw/spectral.hpp"

namespace parlaw {

namespace {

void require_nonempty_same_dim(const std::vector<Matrix>& ms, const char* where) {
    if (ms.empty()) throw std::invalid_argument(std::string(where) + ": empty operator list");
    for (const Matrix& m : ms)
        if (m.dim() != ms.front().dim())
            throw std::invalid_argument(std::string(where) + ": mixed matrix dimensions");
}

void require_constraint(const WeightVector& r, const char* where) {
    r.validate();
    double s = 0.0;
    for (double v : r.r) s += 1.0 / v;
    if (std::abs(s - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(where) +
                                    ": weights must satisfy sum 1/r_i = 1 (got " +
                                    std::to_string(s) + ")");
}

// sqrt(ri/rj) Ai - sqrt(rj/ri) Aj
Matrix weighted_diff(double ri, double rj, const Matrix& ai, const Matrix& aj) {
    return std::sqrt(ri / rj) * ai - std::sqrt(rj / ri) * aj;
}

IdentityResult finish(Matrix lhs, Matrix rhs, double tol) {
    IdentityResult res;
    res.residual = identity_residual(lhs, rhs);
    res.pass = res.residual <= tol;
    res.lhs = std::move(lhs);
    res.rhs = std::move(rhs);
    return res;
}

ScalarIdentityResult finish(double lhs, double rhs, double tol) {
    ScalarIdentityResult res;
    res.lhs = lhs;
    res.rhs = rhs;
    res.residual = identity_residual(lhs, rhs);
    res.pass = res.residual <= tol;
    return res;
}

}  // namespace

void QuadratureMeasure::validate() const {
    if (weights.empty()) throw std::invalid_argument("measure: at least one node required");
    for (double w : weights)
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("measure: weights must be positive and finite");
}

void AlphaField::validate() const {
    if (m < 1 || values.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("alpha field: bad table size");
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            const Complex v = (*this)(k, l);
            if (v == Complex(0.0, 0.0) || !std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument("alpha field: values must be finite and nonzero");
            if (std::abs(std::conj(v) * (*this)(l, k) - Complex(1.0, 0.0)) > 1e-12)
                throw std::invalid_argument(
                    "alpha field: conj(alpha(k,l)) * alpha(l,k) = 1 violated");
        }
    }
}

AlphaField AlphaField::from_weights(const std::vector<double>& r) {
    AlphaField a;
    a.m = static_cast<int>(r.size());
    a.values.assign(r.size() * r.size(), Complex(0.0, 0.0));
    for (int k = 0; k < a.m; ++k)
        for (int l = 0; l < a.m; ++l)
            a.values[static_cast<std::size_t>(k) * a.m + l] = std::sqrt(r[k] / r[l]);
    return a;
}

void WeightVector::validate() const {
    if (r.empty()) throw std::invalid_argument("weights: at least one entry required");
    for (double v : r)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("weights: entries must be positive and finite");
    if (constraint == Constraint::sum_reciprocal_one) {
        double s = 0.0;
        for (double v : r) s += 1.0 / v;
        if (std::abs(s - 1.0) > 1e-12)
            throw std::invalid_argument("weights: sum 1/r_i = 1 violated");
    }
}

IdentityResult lemma_parallelogram(const Matrix& a, const Matrix& b, double tol) {
    Matrix lhs = abs_squared(a + b) + abs_squared(a - b);
    Matrix rhs = 2.0 * abs_squared(a) + 2.0 * abs_squared(b);
    return finish(std::move(lhs), std::move(rhs), tol);
}

IdentityResult lemma_polarization(const Matrix& a, const Matrix& b, double tol) {
    Matrix lhs = abs_squared(a + b) - abs_squared(a - b);
    Matrix rhs = 4.0 * real_part(a.adjoint() * b);
    return finish(std::move(lhs), std::move(rhs), tol);
}

IdentityResult field_parallelogram(const OperatorField& as, const OperatorField& bs,
                                   const QuadratureMeasure& mu, const AlphaField& alpha,
                                   double tol) {
    mu.validate();
    alpha.validate();
    require_nonempty_same_dim(as, "field_parallelogram");
    require_nonempty_same_dim(bs, "field_parallelogram");
    const int m = mu.size();
    if (static_cast<int>(as.size()) != m || static_cast<int>(bs.size()) != m || alpha.m != m)
        throw std::invalid_argument("field_parallelogram: node count mismatch");
    if (as.front().dim() != bs.front().dim())
        throw std::invalid_argument("field_parallelogram: dimension mismatch");

    const int d = as.front().dim();
    Matrix lhs(d), cross(d), total(d);
    for (int k = 0; k < m; ++k) total += mu.weights[k] * (as[k] - bs[k]);
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            const double w = mu.weights[k] * mu.weights[l];
            const Complex akl = alpha(k, l), alk = alpha(l, k);
            lhs += w * (abs_squared(akl * as[k] - alk * as[l]) +
                        abs_squared(akl * bs[k] - alk * bs[l]));
            cross += w * abs_squared(akl * as[k] - alk * bs[l]);
        }
    }
    Matrix rhs = 2.0 * cross - 2.0 * abs_squared(total);
    return finish(std::move(lhs), std::move(rhs), tol);
}

IdentityResult generalized_parallelogram(const std::vector<Matrix>& as,
                                         const std::vector<Matrix>& bs, const WeightVector& r,
                                         double tol) {
    require_nonempty_same_dim(as, "generalized_parallelogram");
    require_nonempty_same_dim(bs, "generalized_parallelogram");
    const int n = static_cast<int>(as.size());
    if (static_cast<int>(bs.size()) != n || r.size() != n)
        throw std::invalid_argument("generalized_parallelogram: length mismatch");
    if (as.front().dim() != bs.front().dim())
        throw std::invalid_argument("generalized_parallelogram: dimension mismatch");
    r.validate();

    const int d = as.front().dim();
    Matrix lhs(d), cross(d), total(d);
    for (int i = 0; i < n; ++i) total += as[i] - bs[i];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > i)
                lhs += abs_squared(weighted_diff(r.r[i], r.r[j], as[i], as[j])) +
                       abs_squared(weighted_diff(r.r[i], r.r[j], bs[i], bs[j]));
            cross += abs_squared(weighted_diff(r.r[i], r.r[j], as[i], bs[j]));
        }
    }
    Matrix rhs = cross - abs_squared(total);
    return finish(std::move(lhs), std::move(rhs), tol);
}

IdentityResult zhang_fu_identity(const std::vector<Matrix>& as, const WeightVector& r,
                                 double tol) {
    require_nonempty_same_dim(as, "zhang_fu_identity");
    const int n = static_cast<int>(as.size());
    if (r.size() != n) throw std::invalid_argument("zhang_fu_identity: length mismatch");
    require_constraint(r, "zhang_fu_identity");

    const int d = as.front().dim();
    Matrix lhs(d), rhs(d), total(d);
    for (int i = 0; i < n; ++i) {
        rhs += r.r[i] * abs_squared(as[i]);
        total += as[i];
        for (int j = i + 1; j < n; ++j)
            lhs += abs_squared(weighted_diff(r.r[i], r.r[j], as[i], as[j]));
    }
    rhs -= abs_squared(total);
    return finish(std::move(lhs), std::move(rhs), tol);
}

IdentityResult two_term_identity(const Matrix& a1, const Matrix& a2, double t, double tol) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("two_term_identity: t must be positive");
    Matrix lhs = abs_squared(a1 + a2) + (1.0 / t) * abs_squared(t * a1 - a2);
    Matrix rhs = (1.0 + t) * abs_squared(a1) + (1.0 + 1.0 / t) * abs_squared(a2);
    return finish(std::move(lhs), std::move(rhs), tol);
}

GapResult bohr_gap(const std::vector<Matrix>& as, const WeightVector& r, double tol) {
    require_nonempty_same_dim(as, "bohr_gap");
    const int n = static_cast<int>(as.size());
    if (r.size() != n) throw std::invalid_argument("bohr_gap: length mismatch");
    require_constraint(r, "bohr_gap");

    const int d = as.front().dim();
    Matrix gap(d), total(d);
    for (int i = 0; i < n; ++i) {
        gap += r.r[i] * abs_squared(as[i]);
        total += as[i];
    }
    gap -= abs_squared(total);

    GapResult res;
    const PsdCheck c = is_psd(gap, tol);
    res.gap = std::move(gap);
    res.lambda_min = c.lambda_min;
    res.psd = c.psd;
    return res;
}

GapResult field_bohr_gap(const OperatorField& as, const OperatorField& bs,
                         const QuadratureMeasure& mu, const AlphaField& alpha, double tol) {
    mu.validate();
    alpha.validate();
    require_nonempty_same_dim(as, "field_bohr_gap");
    require_nonempty_same_dim(bs, "field_bohr_gap");
    const int m = mu.size();
    if (static_cast<int>(as.size()) != m || static_cast<int>(bs.size()) != m || alpha.m != m)
        throw std::invalid_argument("field_bohr_gap: node count mismatch");
    if (as.front().dim() != bs.front().dim())
        throw std::invalid_argument("field_bohr_gap: dimension mismatch");

    const int d = as.front().dim();
    Matrix gap(d), total(d);
    for (int k = 0; k < m; ++k) total += mu.weights[k] * (as[k] - bs[k]);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            gap += (mu.weights[k] * mu.weights[l]) *
                   abs_squared(alpha(k, l) * as[k] - alpha(l, k) * bs[l]);
    gap -= abs_squared(total);

    GapResult res;
    const PsdCheck c = is_psd(gap, tol);
    res.gap = std::move(gap);
    res.lambda_min = c.lambda_min;
    res.psd = c.psd;
    return res;
}

ScalarIdentityResult hilbert_schmidt_identity(const std::vector<Matrix>& as,
                                              const std::vector<Matrix>& bs, double tol) {
    require_nonempty_same_dim(as, "hilbert_schmidt_identity");
    require_nonempty_same_dim(bs, "hilbert_schmidt_identity");
    const int n = static_cast<int>(as.size());
    if (static_cast<int>(bs.size()) != n)
        throw std::invalid_argument("hilbert_schmidt_identity: length mismatch");
    if (as.front().dim() != bs.front().dim())
        throw std::invalid_argument("hilbert_schmidt_identity: dimension mismatch");

    Matrix total(as.front().dim());
    double mass = 1.0;
    for (int i = 0; i < n; ++i) {
        total += as[i] - bs[i];
        mass += as[i].frobenius_norm() + bs[i].frobenius_norm();
    }
    if (total.frobenius_norm() > 1e-12 * mass)
        throw std::invalid_argument("hilbert_schmidt_identity: sum (A_i - B_i) = 0 violated");

    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double da = (as[i] - as[j]).frobenius_norm();
            const double db = (bs[i] - bs[j]).frobenius_norm();
            const double dc = (as[i] - bs[j]).frobenius_norm();
            lhs += da * da + db * db;
            rhs += 2.0 * dc * dc;
        }
    }
    return finish(lhs, rhs, tol);
}

ScalarIdentityResult vector_weighted_identity(const std::vector<Vector>& xs,
                                              const std::vector<Vector>& ys,
                                              const WeightVector& r, double tol) {
    if (xs.empty() || ys.size() != xs.size())
        throw std::invalid_argument("vector_weighted_identity: length mismatch");
    const int n = static_cast<int>(xs.size());
    if (r.size() != n) throw std::invalid_argument("vector_weighted_identity: length mismatch");
    const int d = xs.front().dim();
    for (const Vector& v : xs)
        if (v.dim() != d) throw std::invalid_argument("vector_weighted_identity: mixed dims");
    for (const Vector& v : ys)
        if (v.dim() != d) throw std::invalid_argument("vector_weighted_identity: mixed dims");
    r.validate();

    double lhs = 0.0, cross = 0.0;
    Vector total(d);
    for (int i = 0; i < n; ++i) total += xs[i] - ys[i];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double sij = std::sqrt(r.r[i] / r.r[j]), sji = std::sqrt(r.r[j] / r.r[i]);
            if (j > i) {
                const double dx = (sij * xs[i] - sji * xs[j]).norm();
                const double dy = (sij * ys[i] - sji * ys[j]).norm();
                lhs += dx * dx + dy * dy;
            }
            const double dc = (sij * xs[i] - sji * ys[j]).norm();
            cross += dc * dc;
        }
    }
    const double tn = total.norm();
    ScalarIdentityResult res = finish(lhs, cross - tn * tn, tol);

    // second route: embed v -> v (x) e for a unit basis vector e, run the
    // operator identity, and read the scalars back off the traces
    Vector e(d);
    e[0] = 1.0;
    std::vector<Matrix> as, bs;
    as.reserve(xs.size());
    bs.reserve(ys.size());
    for (int i = 0; i < n; ++i) {
        as.push_back(rank_one(xs[i], e));
        bs.push_back(rank_one(ys[i], e));
    }
    const IdentityResult op = generalized_parallelogram(as, bs, r, tol);
    res.alt_route_residual = std::max(identity_residual(res.lhs, op.lhs.trace().real()),
                                      identity_residual(res.rhs, op.rhs.trace().real()));
    res.pass = res.pass && res.alt_route_residual <= tol;
    return res;
}

ScalarIdentityResult vector_identity(const std::vector<Vector>& xs, const std::vector<Vector>& ys,
                                     double tol) {
    if (xs.empty() || ys.size() != xs.size())
        throw std::invalid_argument("vector_identity: length mismatch");
    const int n = static_cast<int>(xs.size());
    const int d = xs.front().dim();
    for (const Vector& v : xs)
        if (v.dim() != d) throw std::invalid_argument("vector_identity: mixed dims");
    for (const Vector& v : ys)
        if (v.dim() != d) throw std::invalid_argument("vector_identity: mixed dims");

    double lhs = 0.0, cross = 0.0;
    Vector total(d);
    for (int i = 0; i < n; ++i) total += xs[i] - ys[i];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double dx = (xs[i] - xs[j]).norm();
            const double dy = (ys[i] - ys[j]).norm();
            const double dc = (xs[i] - ys[j]).norm();
            lhs += dx * dx + dy * dy;
            cross += dc * dc;
        }
    }
    const double tn = total.norm();
    return finish(lhs, 2.0 * cross - 2.0 * tn * tn, tol);
}

}  // namespace parlaw
