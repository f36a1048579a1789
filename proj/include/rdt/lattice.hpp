#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdt/exec.hpp"
#include "rdt/linalg.hpp"
#include "rdt/snf.hpp"

namespace rdt {

/// Orthogonal basis of a lattice together with the exact squared lengths of
/// its vectors. `cubic` is true when all squared lengths coincide.
struct OrthogonalBasis {
    std::vector<QVector> vectors;
    std::vector<Rational> squared_lengths;
    bool cubic = false;
};

/// Finitely generated abelian group: free rank plus invariant factors
/// (each >= 2, each dividing the next).
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string str() const;

    friend bool operator==(const AbelianGroupStructure& a, const AbelianGroupStructure& b) {
        return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
    }
};

/// Lattice in a Euclidean space: integer span of independent basis columns,
/// with the ambient inner product given by a Gram matrix. Full when the
/// basis column count equals the ambient dimension.
class Lattice {
public:
    Lattice(QMatrix gram, QMatrix basis);

    const QMatrix& gram() const { return gram_; }
    const QMatrix& basis() const { return basis_; }
    std::size_t ambient_dim() const { return gram_.rows(); }
    std::size_t rank() const { return basis_.cols(); }
    bool full() const { return rank() == ambient_dim(); }

    /// Squared length of an ambient vector under this lattice's Gram form.
    Rational norm2(const QVector& v) const;

private:
    QMatrix gram_;
    QMatrix basis_;
};

/// True iff v is an integer combination of the basis columns.
bool membership(const Lattice& L, const QVector& v);

/// Dual lattice of covectors integral on L (inverse-transpose basis); the
/// dual Gram is the inverse Gram, so the double dual is L itself.
Lattice dual_lattice(const Lattice& L);

/// All nonzero lattice vectors of minimal squared length, in ambient
/// coordinates, closed under negation and sorted lexicographically.
/// Rank capped at 8 (ResourceError beyond).
std::vector<QVector> shortest_vectors(const Lattice& L, Exec exec = Exec::Auto);

/// All lattice vectors v (up to sign: one of +-v reported, v before -v is
/// not guaranteed; the canonical representative has positive first nonzero
/// coefficient) with norm2(v) == q exactly.
std::vector<QVector> vectors_of_norm(const Lattice& L, const Rational& q, Exec exec = Exec::Auto);

/// Orthogonal lattice basis if one exists (the lattice is rectangular),
/// nullopt otherwise. Deterministic: the result depends only on the lattice,
/// not on the presented basis. Rank capped at 8.
std::optional<OrthogonalBasis> orthogonal_basis(const Lattice& L, Exec exec = Exec::Auto);

/// Structure of L/S for a sublattice S of L (possibly of lower rank).
/// Throws DomainError when some basis vector of S is not in L.
AbelianGroupStructure quotient_group(const Lattice& L, const Lattice& S);

/// Lattice of all lattice vectors lying in the column span of P.
Lattice intersect_with_subspace(const Lattice& L, const QMatrix& P);

/// True iff L is the direct sum of its intersections with the given
/// pairwise orthogonal spanning subspaces (the sum has index 1 in L).
bool splits_across(const Lattice& L, const std::vector<QMatrix>& subspaces);

/// Integer span of an arbitrary finite set of rational generators.
Lattice lattice_from_generators(const QMatrix& gram, const std::vector<QVector>& gens);

}  // namespace rdt
