#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rdt/rational.hpp"

namespace rdt {

/// Fixed-length vector of exact rationals. Represents both points of the
/// ambient space and covectors (functionals in the dual basis).
class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t n) : c_(n) {}
    QVector(std::initializer_list<Rational> init) : c_(init) {}
    explicit QVector(std::vector<Rational> coords) : c_(std::move(coords)) {}

    static QVector unit(std::size_t n, std::size_t i);
    static QVector zero(std::size_t n) { return QVector(n); }

    std::size_t dim() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_integral() const;

    QVector operator-() const;
    QVector& operator+=(const QVector& o);
    QVector& operator-=(const QVector& o);
    QVector& operator*=(const Rational& s);
    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    friend QVector operator*(const Rational& s, QVector a) { return a *= s; }

    /// Plain coordinate pairing (no Gram matrix): sum x_i * y_i.
    Rational dot(const QVector& o) const;

    friend bool operator==(const QVector& a, const QVector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }
    /// Lexicographic order on coordinates; total, used for canonical sorting.
    friend bool operator<(const QVector& a, const QVector& b);

private:
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const QVector& v);

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> init);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    QVector col(std::size_t j) const;
    QVector row(std::size_t i) const;
    void set_col(std::size_t j, const QVector& v);
    /// Appends a column on the right.
    void push_col(const QVector& v);

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_integral() const;

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QVector operator*(const QVector& v) const;
    QMatrix operator-(const QMatrix& o) const;
    friend bool operator==(const QMatrix& a, const QMatrix& b);
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }
    /// Lexicographic order on (rows, cols, row-major entries).
    friend bool operator<(const QMatrix& a, const QMatrix& b);

    Rational det() const;
    std::size_t rank() const;
    /// Exact inverse; throws DomainError if singular.
    QMatrix inverse() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

/// True iff G is symmetric positive definite (exact leading-minor test).
bool is_positive_definite(const QMatrix& G);

/// Inner product x^T G y for a symmetric positive definite Gram matrix G.
/// Throws DimensionError on shape mismatch and DomainError if G is not SPD.
Rational inner(const QMatrix& G, const QVector& x, const QVector& y);

/// Solves A x = b exactly. Returns a solution (free variables set to zero)
/// or nullopt when the system is inconsistent.
std::optional<QVector> solve(const QMatrix& A, const QVector& b);

/// Integer solution of B x = v when the columns of B are linearly
/// independent: the unique rational solution if it exists and is integral,
/// nullopt otherwise. Throws DomainError when the columns are dependent.
std::optional<QVector> integer_solve(const QMatrix& B, const QVector& v);

/// Columns span the rational kernel {x : A x = 0}.
QMatrix nullspace(const QMatrix& A);

}  // namespace rdt
