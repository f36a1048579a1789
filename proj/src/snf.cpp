#include "rdt/snf.hpp"

#include "rdt/error.hpp"

namespace rdt {

std::vector<Integer> SNFResult::invariant_factors() const {
    std::vector<Integer> f;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (!D(i, i).is_zero()) f.push_back(D(i, i).num());
    return f;
}

namespace {

void swap_rows(QMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(QMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(QMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// row[dst] += f * row[src]
void add_row(QMatrix& m, std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

// col[dst] += f * col[src]
void add_col(QMatrix& m, std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

// Smallest |entry| != 0 in the submatrix [t.., t..], row-major tie break.
bool find_pivot(const QMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Rational best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            Rational v = a(i, j).abs();
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

Rational floor_quot(const Rational& a, const Rational& b) {
    return Rational((a / b).floor());
}

}  // namespace

SNFResult smith_normal_form(const QMatrix& A) {
    if (!A.is_integral()) throw DomainError("smith_normal_form requires integer entries");
    const std::size_t m = A.rows(), n = A.cols();
    QMatrix a = A;
    QMatrix U = QMatrix::identity(m);
    QMatrix V = QMatrix::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(a, t, pi, pj)) break;  // remaining submatrix is zero
            if (pi != t) {
                swap_rows(a, t, pi);
                swap_rows(U, t, pi);
            }
            if (pj != t) {
                swap_cols(a, t, pj);
                swap_cols(V, t, pj);
            }
            if (a(t, t).is_negative()) {
                negate_row(a, t);
                negate_row(U, t);
            }

            // Clear column t below the pivot and row t right of it by
            // floor division; nonzero remainders shrink the next pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t).is_zero()) continue;
                Rational q = floor_quot(a(i, t), a(t, t));
                add_row(a, i, t, -q);
                add_row(U, i, t, -q);
                if (!a(i, t).is_zero()) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j).is_zero()) continue;
                Rational q = floor_quot(a(t, j), a(t, t));
                add_col(a, j, t, -q);
                add_col(V, j, t, -q);
                if (!a(t, j).is_zero()) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide every entry of the interior; otherwise
            // pull the offending row up and keep reducing. This yields
            // the divisibility chain without a separate fixup pass.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j) {
                    Rational r = a(i, j) - a(t, t) * floor_quot(a(i, j), a(t, t));
                    if (!r.is_zero()) {
                        add_row(a, t, i, Rational(1));
                        add_row(U, t, i, Rational(1));
                        divides = false;
                    }
                }
            if (divides) break;
        }
    }
    return SNFResult{U, a, V};
}

QMatrix integer_kernel(const QMatrix& A) {
    SNFResult s = smith_normal_form(A);
    const std::size_t n = A.cols();
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(A.rows(), n); ++i)
        if (!s.D(i, i).is_zero()) ++r;
    QMatrix K(n, 0);
    for (std::size_t j = r; j < n; ++j) K.push_col(s.V.col(j));
    return K;
}

}  // namespace rdt
