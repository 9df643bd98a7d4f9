#include "parlaw/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace parlaw {

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Givens rotation zeroing a(p, q). With a(p,q) = r e^{i phi},
// the plane rotation is
//   U = [[ c,           s e^{i phi} ],
//        [ -s e^{-i phi}, c         ]]
// where (c, s) is the classical symmetric Jacobi pair for [[a, r], [r, b]].
void rotate(Matrix& a, Matrix& v, int p, int q) {
    const Complex h = a(p, q);
    const double r = std::abs(h);
    if (r == 0.0) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    double t;
    if (std::isinf(tau)) {
        t = 0.0;
    } else {
        t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                         : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex phase = h / r;  // e^{i phi}

    const int n = a.dim();
    // column update: A <- A U, V <- V U
    for (int i = 0; i < n; ++i) {
        const Complex aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(phase) * aiq;
        a(i, q) = s * phase * aip + c * aiq;
        const Complex vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(phase) * viq;
        v(i, q) = s * phase * vip + c * viq;
    }
    // row update: A <- U* A
    for (int j = 0; j < n; ++j) {
        const Complex apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s * phase * aqj;
        a(q, j) = s * std::conj(phase) * apj + c * aqj;
    }
    // pin what the rotation made exact
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

HermitianEigen hermitian_eig(const Matrix& h) {
    const int n = h.dim();
    if (n < 1) throw std::invalid_argument("hermitian_eig: empty matrix");
    if (!h.finite()) throw std::invalid_argument("hermitian_eig: non-finite entry");

    const double scale = std::max(1.0, h.frobenius_norm());
    if ((h - h.adjoint()).frobenius_norm() > 1e-12 * scale)
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");

    // iterate on the Hermitian part; callers' products carry eps-level skew
    Matrix a = real_part(h);
    Matrix v = Matrix::identity(n);

    const double target = 1e-14 * scale;
    const int max_sweeps = 40;
    bool converged = offdiag_norm(a) <= target;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
        converged = offdiag_norm(a) <= target;
    }
    if (!converged) {
        const double off = offdiag_norm(a);
        throw EigenError("hermitian_eig: no convergence after 40 sweeps (off-diagonal " +
                             std::to_string(off) + ")",
                         off);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigen out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

}  // namespace parlaw
