#pragma once

#include <vector>

#include "rdt/exec.hpp"
#include "rdt/rootdatum.hpp"

namespace rdt {

/// Root multiplicities (complex root-space dimensions) for the four shapes
/// eps_j, 2 eps_j, eps_j + eps_k, eps_j - eps_k.
struct MultiplicitySet {
    long m1 = 0, m2 = 0, m_plus = 0, m_minus = 0;
};

/// Throws DomainError unless the multiplicities are consistent with the
/// type: positive exactly for the shapes the family/rank provides, and
/// m_plus == m_minus except for families A and D2.
void check_multiplicities(const DatumType& t, const MultiplicitySet& m);

/// Coefficients of twice the half-sum of positive roots (with
/// multiplicities) in the eps basis.
QVector two_rho(const DatumType& t, const MultiplicitySet& m);

/// Type-dependent dominance chain for integer eps-coordinates.
bool is_dominant(const DatumType& t, const std::vector<long>& k);

/// Laplace eigenvalue of the spherical representation with highest weight
/// sum k_j eps_j, in units of 4 pi^2 / L^2 (an exact rational). Computed
/// through the per-type closed form and independently through
/// <omega + 2 rho, omega> in the dual Gram; the two must agree.
Rational eigenvalue(const DatumType& t, const MultiplicitySet& m, const std::vector<long>& k);

struct SpectrumEntry {
    std::vector<long> k;
    Rational lambda_scaled;
    friend bool operator==(const SpectrumEntry& a, const SpectrumEntry& b) {
        return a.k == b.k && a.lambda_scaled == b.lambda_scaled;
    }
};

/// All dominant weights with scaled eigenvalue <= bound, sorted by value
/// then lexicographically by coordinates.
std::vector<SpectrumEntry> enumerate_spectrum(const DatumType& t, const MultiplicitySet& m,
                                              const Rational& bound, Exec exec = Exec::Auto);

/// True iff the eigenvalue at eps_1 is minimal among the nonzero spectrum:
/// false exactly for family A (rank >= 2) with m_minus > 2 and for D2 with
/// |m_plus - m_minus| > 2. The closed form is cross-checked against
/// enumeration.
bool first_eigenspace_check(const DatumType& t, const MultiplicitySet& m);

/// Dominant representative of the Weyl orbit of the given eps-coordinates.
std::vector<long> dominant_representative(const DatumType& t, std::vector<long> k);

/// Presentation-only conversion: the absolute eigenvalue as a float,
/// scaled * 4 pi^2 / L^2. All comparisons stay exact; this is for display.
double eigenvalue_absolute(const DatumType& t, const Rational& scaled);

}  // namespace rdt
