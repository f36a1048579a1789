#pragma once

#include <vector>

#include "rdt/linalg.hpp"

namespace rdt {

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// nonnegative, each diagonal entry dividing the next.
struct SNFResult {
    QMatrix U, D, V;
    /// Nonzero diagonal entries of D, in order.
    std::vector<Integer> invariant_factors() const;
};

/// Smith normal form of an integer matrix. Pivot selection is the smallest
/// nonzero entry in absolute value, ties broken by row-major position, so
/// the output is deterministic. Throws DomainError on non-integer input.
SNFResult smith_normal_form(const QMatrix& A);

/// Basis of {x integer : A x = 0} for an integer matrix A, as columns.
/// The basis is primitive: it generates the full integer kernel.
QMatrix integer_kernel(const QMatrix& A);

}  // namespace rdt
