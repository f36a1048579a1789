#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdt/error.hpp"
#include "rdt/lattice.hpp"
#include "rdt/rootsystem.hpp"

namespace rdt {

/// Euclidean root datum (V, Gamma, R): a full lattice and a root system in
/// a common Euclidean space, with Gamma sandwiched between the half-coroot
/// span and the half-integrality region of R.
struct EuclideanRootDatum {
    QMatrix gram;
    Lattice lattice;
    RootSystem roots;

    EuclideanRootDatum(QMatrix g, QMatrix lattice_basis, std::vector<QVector> root_covectors);
    std::size_t ambient_dim() const { return gram.rows(); }
};

/// Type of a rectangular-lattice datum: family (hat implied), torus rank
/// and the common squared basis length L^2. The empty rank-1 datum is
/// canonically family A (the A0/D1 coincidence).
struct DatumType {
    Family family;
    std::size_t rank;
    Rational length_sq;

    /// Subscript as conventionally displayed: rank-1 for family A.
    std::size_t display_rank() const { return family == Family::A ? rank - 1 : rank; }
    std::string str() const;

    friend bool operator==(const DatumType& a, const DatumType& b) {
        return a.family == b.family && a.rank == b.rank && a.length_sq == b.length_sq;
    }
};

/// Parses e.g. "B3-hat" or "BC2-hat" (rank shown is the display rank).
std::optional<Family> parse_family(const std::string& s);

struct DatumDiagnostics {
    bool ok = true;
    std::vector<std::string> issues;
};

/// Checks lattice fullness, the root axioms and the two lattice inclusions;
/// failures are reported with witnesses, never thrown.
DatumDiagnostics validate(const EuclideanRootDatum& d);

/// Standard datum of the given type: Gram L^2 * I, lattice Z^r, roots the
/// matching classical family in the dual basis (sorted canonically).
EuclideanRootDatum make_standard(const DatumType& t);

enum class OrbitCase { I, II };

struct ClassificationReport {
    DatumType datum_type;
    OrthogonalBasis cubic_basis;
    std::vector<int> sign_vector;
    AbelianGroupStructure fundamental_group;
    OrbitCase orbit_case;
};

struct NotRectangularError : DomainError {
    explicit NotRectangularError(const std::string& m) : DomainError(m) {}
};

/// Classification refused because the datum is a nontrivial product; the
/// factors are attached.
struct DecomposableError : DomainError {
    std::vector<EuclideanRootDatum> factors;
    explicit DecomposableError(std::vector<EuclideanRootDatum> fs)
        : DomainError("datum is decomposable into " + std::to_string(fs.size()) + " factors"),
          factors(std::move(fs)) {}
};

/// Full classification of a valid indecomposable datum: cubic basis, sign
/// normalization, family, orbit case and fundamental group.
ClassificationReport classify(const EuclideanRootDatum& d);

/// Gamma / Gamma_0(R).
AbelianGroupStructure fundamental_group(const EuclideanRootDatum& d);

/// Finest decomposition into orthogonal sub-data compatible with the root
/// components and the lattice; a singleton list iff indecomposable.
std::vector<EuclideanRootDatum> split(const EuclideanRootDatum& d);

/// True iff the lattice is rectangular and the fundamental group trivial.
bool admits_polysphere(const EuclideanRootDatum& d);

/// Searches for a linear isometry matching lattices and root sets; returns
/// the matrix of the first witness (deterministic) or nullopt. Rank capped
/// at 6.
std::optional<QMatrix> is_isomorphic(const EuclideanRootDatum& d1, const EuclideanRootDatum& d2);

}  // namespace rdt
