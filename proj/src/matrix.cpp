#include "parlaw/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace parlaw {

namespace {

void require_positive_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

void require_finite(const std::vector<Complex>& v, const char* what) {
    for (const Complex& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Matrix::Matrix(int dim) : dim_(dim) {
    require_positive_dim(dim);
    a_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

Matrix::Matrix(int dim, std::vector<Complex> entries) : dim_(dim), a_(std::move(entries)) {
    require_positive_dim(dim);
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("matrix entries: expected dim*dim values");
    require_finite(a_, "matrix entries");
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<Complex>& d) {
    Matrix m(static_cast<int>(d.size()));
    require_finite(d, "diagonal entries");
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    std::vector<Complex> c(d.begin(), d.end());
    return diag(c);
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Complex Matrix::trace() const {
    Complex t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

bool Matrix::finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex c) {
    for (Complex& z : a_) z *= c;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    Matrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator*(Complex c, Matrix a) { return a *= c; }
Matrix operator*(Matrix a, Complex c) { return a *= c; }
Matrix operator-(Matrix a) { return a *= Complex(-1.0, 0.0); }

Matrix real_part(const Matrix& x) {
    const int n = x.dim();
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
    return m;
}

Matrix abs_squared(const Matrix& a) { return a.adjoint() * a; }

double identity_residual(const Matrix& lhs, const Matrix& rhs) {
    return (lhs - rhs).frobenius_norm() / (1.0 + lhs.frobenius_norm() + rhs.frobenius_norm());
}

double identity_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

Vector::Vector(int dim) {
    require_positive_dim(dim);
    v_.assign(static_cast<std::size_t>(dim), Complex(0.0, 0.0));
}

Vector::Vector(std::vector<Complex> entries) : v_(std::move(entries)) {
    require_positive_dim(static_cast<int>(v_.size()));
    require_finite(v_, "vector entries");
}

double Vector::norm() const {
    double s = 0.0;
    for (const Complex& z : v_) s += std::norm(z);
    return std::sqrt(s);
}

bool Vector::finite() const {
    for (const Complex& z : v_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

Vector& Vector::operator*=(Complex c) {
    for (Complex& z : v_) z *= c;
    return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(Complex c, Vector a) { return a *= c; }

Complex inner(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
    Complex s(0.0, 0.0);
    for (int i = 0; i < x.dim(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

Matrix rank_one(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("rank_one: dimension mismatch");
    Matrix m(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < y.dim(); ++j) m(i, j) = x[i] * std::conj(y[j]);
    return m;
}

}  // namespace parlaw
