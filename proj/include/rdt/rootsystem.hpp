#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rdt/exec.hpp"
#include "rdt/lattice.hpp"
#include "rdt/linalg.hpp"

namespace rdt {

/// Finite set of nonzero rational covectors in a fixed Euclidean space.
/// Roots are stored in ambient dual coordinates, sorted and deduplicated;
/// the Gram matrix identifies covectors with vectors where needed.
struct RootSystem {
    QMatrix gram;
    std::vector<QVector> roots;

    RootSystem(QMatrix g, std::vector<QVector> rs);
    std::size_t ambient_dim() const { return gram.rows(); }
    bool contains(const QVector& alpha) const;
    bool empty() const { return roots.empty(); }
};

/// Result of the root-system axiom check; message names the first violated
/// axiom together with a witness.
struct RootSystemDiagnostics {
    bool ok = true;
    std::string message;
};

/// The vector H_alpha with alpha(.) = <H_alpha, .>.
QVector root_vector(const RootSystem& R, const QVector& alpha);

/// Coroot 2 H_alpha / |H_alpha|^2; alpha evaluates to 2 on it.
/// Throws DomainError when alpha is not a root of R.
QVector coroot(const RootSystem& R, const QVector& alpha);

/// Exact matrix of the reflection H -> H - alpha(H) coroot(alpha).
QMatrix reflection(const RootSystem& R, const QVector& alpha);

/// Checks negation closure, reflection closure and integrality
/// beta(coroot(alpha)) in Z for all pairs.
RootSystemDiagnostics validate_root_system(const RootSystem& R);

/// Finite reflection group as exact matrices, closed under products, with
/// a deterministic (lexicographic) element ordering.
struct WeylGroup {
    std::vector<QMatrix> elements;
    std::vector<QMatrix> generators;
    std::size_t order() const { return elements.size(); }
};

/// Default closure cap; RDT_MAX_WEYL overrides.
std::size_t weyl_closure_cap();

/// Breadth-first closure of the generating reflections. Throws
/// ResourceError if the closure exceeds the cap (cap = 0 uses the default).
WeylGroup weyl_group(const RootSystem& R, std::size_t cap = 0, Exec exec = Exec::Auto);

/// Exact orbit {w v : w in W}, sorted lexicographically.
std::vector<QVector> weyl_orbit(const WeylGroup& W, const QVector& v);

/// Integer span of the half-coroots; rank equals dim span(R).
Lattice gamma0(const RootSystem& R);

/// True iff 2 alpha(gamma) is an integer for every root alpha and every
/// basis vector gamma of G. (The enclosing half-integrality region is not
/// discrete when R is not full rank, so it is never materialized.)
bool gamma1_contains(const RootSystem& R, const Lattice& G);

/// Sign vector (+-1 per basis vector) making eps_i - eps_j a doubled root
/// for all i < j, grown index by index in ascending order, flipping only
/// the newly adjoined index. Throws DomainError when no assignment exists.
std::vector<int> normalize_signs(const RootSystem& R, const OrthogonalBasis& basis);

enum class Family { A, B, C, D, BC };

std::string family_name(Family f);

/// Classical family tag; rank_parameter is the subscript (r-1 for family A
/// in an r-dimensional space, r otherwise; 0 denotes the empty rank-1 case).
struct FamilyTag {
    Family family;
    std::size_t rank_parameter;
    friend bool operator==(const FamilyTag& a, const FamilyTag& b) {
        return a.family == b.family && a.rank_parameter == b.rank_parameter;
    }
};

/// Classifies the doubled root set against the five classical patterns in
/// the dual coordinates of the sign-normalized cubic basis. Throws
/// DomainError on a shape violation or pattern mismatch.
FamilyTag classify_family(const RootSystem& R, const OrthogonalBasis& basis,
                          const std::vector<int>& signs);

enum class RootShape { Short, Long, Sum, Difference };

struct PositiveRoot {
    QVector root;
    RootShape shape;
    std::size_t j, k;  // k only meaningful for Sum/Difference
};

/// Positive system: roots whose doubles are eps_j, 2 eps_j, eps_j + eps_k
/// or eps_j - eps_k (j < k), tagged by shape for multiplicity assignment.
std::vector<PositiveRoot> positive_roots(const RootSystem& R, const OrthogonalBasis& basis,
                                         const std::vector<int>& signs);

/// Connected components of the root graph (edges where the root vectors are
/// not orthogonal), their spanned subspaces, and the common kernel.
struct RootComponents {
    std::vector<std::vector<QVector>> components;
    std::vector<QMatrix> spans;
    QMatrix kernel;
};

RootComponents irreducible_components(const RootSystem& R);

}  // namespace rdt
