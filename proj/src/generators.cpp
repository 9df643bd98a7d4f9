#include "parlaw/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "parlaw/eig.hpp"

namespace parlaw {

namespace {

Matrix ginibre(int dim, Rng& rng) {
    Matrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.cgaussian();
    return g;
}

}  // namespace

Vector gen_vector(int dim, Rng& rng) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.cgaussian();
    return v;
}

Matrix gen_matrix(MatrixKind kind, int dim, Rng& rng) {
    if (dim < 1) throw std::invalid_argument("gen_matrix: dim must be >= 1");
    switch (kind) {
        case MatrixKind::ginibre:
            return ginibre(dim, rng);
        case MatrixKind::hermitian:
            return real_part(ginibre(dim, rng));
        case MatrixKind::psd:
            return abs_squared(ginibre(dim, rng));
        case MatrixKind::unitary:
            return hermitian_eig(real_part(ginibre(dim, rng))).vectors;
        case MatrixKind::rank_one: {
            const Vector x = gen_vector(dim, rng);
            const Vector y = gen_vector(dim, rng);
            return rank_one(x, y);
        }
    }
    throw std::invalid_argument("gen_matrix: unknown kind");
}

WeightVector gen_weights(int n, WeightVector::Constraint constraint, Rng& rng) {
    if (n < 1) throw std::invalid_argument("gen_weights: n must be >= 1");
    WeightVector w;
    w.constraint = constraint;
    w.r.resize(n);
    if (constraint == WeightVector::Constraint::sum_reciprocal_one) {
        std::vector<double> u(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            u[i] = rng.uniform(0.1, 1.1);
            total += u[i];
        }
        for (int i = 0; i < n; ++i) w.r[i] = total / u[i];
    } else {
        for (int i = 0; i < n; ++i) w.r[i] = rng.uniform(0.1, 10.0);
    }
    return w;
}

AlphaField gen_alpha(int m, AlphaMode mode, Rng& rng) {
    if (m < 1) throw std::invalid_argument("gen_alpha: m must be >= 1");
    if (mode == AlphaMode::phase_weight) {
        const WeightVector w = gen_weights(m, WeightVector::Constraint::none, rng);
        return AlphaField::from_weights(w.r);
    }
    AlphaField a;
    a.m = m;
    a.values.assign(static_cast<std::size_t>(m) * m, Complex(0.0, 0.0));
    for (int k = 0; k < m; ++k) {
        const double phi = rng.uniform(0.0, 6.283185307179586);
        a.values[static_cast<std::size_t>(k) * m + k] = Complex(std::cos(phi), std::sin(phi));
        for (int l = k + 1; l < m; ++l) {
            const double mod = rng.uniform(0.25, 4.0);
            const double theta = rng.uniform(0.0, 6.283185307179586);
            const Complex v = mod * Complex(std::cos(theta), std::sin(theta));
            a.values[static_cast<std::size_t>(k) * m + l] = v;
            a.values[static_cast<std::size_t>(l) * m + k] = 1.0 / std::conj(v);
        }
    }
    return a;
}

QuadratureMeasure gen_measure(int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("gen_measure: m must be >= 1");
    QuadratureMeasure mu;
    mu.weights.resize(m);
    for (int k = 0; k < m; ++k) mu.weights[k] = rng.uniform(0.05, 2.0);
    return mu;
}

std::vector<double> gen_convex_weights(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("gen_convex_weights: n must be >= 1");
    std::vector<double> u(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        u[i] = rng.uniform(0.01, 1.01);
        total += u[i];
    }
    for (int i = 0; i < n; ++i) u[i] /= total;
    return u;
}

}  // namespace parlaw
