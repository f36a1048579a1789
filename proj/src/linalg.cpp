#include "rdt/linalg.hpp"

#include <algorithm>
#include <ostream>

#include "rdt/error.hpp"

namespace rdt {

QVector QVector::unit(std::size_t n, std::size_t i) {
    QVector v(n);
    v[i] = Rational(1);
    return v;
}

bool QVector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool QVector::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_integer(); });
}

QVector QVector::operator-() const {
    QVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -c_[i];
    return r;
}

QVector& QVector::operator+=(const QVector& o) {
    if (dim() != o.dim()) throw DimensionError("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) c_[i] += o[i];
    return *this;
}

QVector& QVector::operator-=(const QVector& o) {
    if (dim() != o.dim()) throw DimensionError("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) c_[i] -= o[i];
    return *this;
}

QVector& QVector::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Rational QVector::dot(const QVector& o) const {
    if (dim() != o.dim()) throw DimensionError("vector dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < dim(); ++i) s += c_[i] * o[i];
    return s;
}

bool operator<(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os << ')';
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

QVector QMatrix::col(std::size_t j) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

QVector QMatrix::row(std::size_t i) const {
    QVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void QMatrix::set_col(std::size_t j, const QVector& v) {
    if (v.dim() != rows_) throw DimensionError("column dimension mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void QMatrix::push_col(const QVector& v) {
    if (rows_ == 0 && cols_ == 0) {
        rows_ = v.dim();
    } else if (v.dim() != rows_) {
        throw DimensionError("column dimension mismatch");
    }
    std::vector<Rational> n(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) n[i * (cols_ + 1) + j] = e_[i * cols_ + j];
        n[i * (cols_ + 1) + cols_] = v[i];
    }
    e_ = std::move(n);
    ++cols_;
}

bool QMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool QMatrix::is_integral() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_integer(); });
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

QVector QMatrix::operator*(const QVector& v) const {
    if (cols_ != v.dim()) throw DimensionError("matrix-vector shape mismatch");
    QVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool operator<(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] < b.e_[i]) return true;
        if (b.e_[i] < a.e_[i]) return false;
    }
    return false;
}

Rational QMatrix::det() const {
    if (!is_square()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = rows_;
    QMatrix a = *this;
    Rational d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

namespace {

// Row echelon form in place; returns pivot column indices.
std::vector<std::size_t> echelon(QMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
    QMatrix a = *this;
    return echelon(a).size();
}

QMatrix QMatrix::inverse() const {
    if (!is_square()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = rows_;
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = Rational(1);
    }
    auto pivots = echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw DomainError("singular matrix");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
    }
    return os << ']';
}

bool is_positive_definite(const QMatrix& G) {
    if (!G.is_symmetric()) return false;
    const std::size_t n = G.rows();
    // Leading principal minors must all be positive.
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = G(i, j);
        if (m.det().sign() <= 0) return false;
    }
    return true;
}

Rational inner(const QMatrix& G, const QVector& x, const QVector& y) {
    if (G.rows() != x.dim() || G.cols() != y.dim())
        throw DimensionError("inner product dimension mismatch");
    if (!is_positive_definite(G))
        throw DomainError("Gram matrix is not symmetric positive definite");
    Rational s;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.dim(); ++j) s += x[i] * G(i, j) * y[j];
    }
    return s;
}

std::optional<QVector> solve(const QMatrix& A, const QVector& b) {
    if (A.rows() != b.dim()) throw DimensionError("solve: shape mismatch");
    QMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
    QVector x(A.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());
    return x;
}

std::optional<QVector> integer_solve(const QMatrix& B, const QVector& v) {
    if (B.rank() != B.cols()) throw DomainError("integer_solve: dependent columns");
    auto x = solve(B, v);
    if (!x) return std::nullopt;
    if (!x->is_integral()) return std::nullopt;
    return x;
}

QMatrix nullspace(const QMatrix& A) {
    QMatrix a = A;
    auto pivots = echelon(a);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    QMatrix K(A.cols(), 0);
    for (std::size_t c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        QVector k(A.cols());
        k[c] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -a(r, c);
        K.push_col(k);
    }
    return K;
}

}  // namespace rdt
