#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rdt/exec.hpp"
#include "rdt/rootdatum.hpp"

namespace rdt {

/// Numeric model of the extrinsically symmetric embedding restricted to a
/// maximal torus: a sum of unit-circle harmonics Phi(H) = v_0 +
/// sum_w e^{2 pi i mu_w(H)} v_w with weights mu_w = freq * eps_axis.
///
/// The built model uses the canonical hermitian-orthonormal frame; the
/// fields are mutable so tests can perturb radii, directions or
/// frequencies and watch the corresponding check fail.
struct TorusEmbedding {
    struct Weight {
        std::size_t axis;
        long freq;  // mu(e_axis); +-1 when built
    };

    std::size_t rank = 0;
    double side_length = 0.0;  // L
    OrbitCase orbit_case = OrbitCase::I;
    std::vector<Weight> weights;
    std::vector<double> amplitudes;  // |v_w|
    std::vector<std::vector<std::complex<double>>> directions;  // unit v_w / |v_w|
    double zero_component = 0.0;  // a >= 0

    std::size_t complex_dim() const { return weights.size(); }
    std::size_t real_dim() const { return 2 * complex_dim() + 1; }
};

/// Canonical torus embedding for a classified datum. Case I uses a pair of
/// weights +-eps_j per circle with amplitude L/(2 pi sqrt 2) each; Case II
/// a single weight eps_j with amplitude L/(2 pi). Either way the generating
/// circles have radius L/(2 pi) and speed L.
TorusEmbedding build_torus_embedding(const ClassificationReport& report, double a = 0.0);

/// Realified image point: (Re z_1, Im z_1, ..., Re z_m, Im z_m, a).
/// 1-periodic in every coordinate of H.
std::vector<double> phi_torus(const TorusEmbedding& e, const std::vector<double>& H);

/// Analytic derivative of order 1..3 of H_j -> Phi(H), realified.
std::vector<double> phi_derivative(const TorusEmbedding& e, const std::vector<double>& H,
                                   std::size_t j, int order);

struct CheckReport {
    double max_planarity_residual = 0.0;     // |c''' + 4 pi^2 c'| / |c'|
    double max_orthogonality_residual = 0.0; // <c_j', c_k'> across circles
    double max_metric_distortion = 0.0;      // |pullback - L^2 I|, entrywise
    double lattice_closure_residual = 0.0;   // |Phi(H) - Phi(0)| over lattice H
    bool pass = false;
};

/// Samples the generating circles and a coordinate grid and verifies circle
/// planarity, pairwise orthogonality, the isometry condition and that the
/// image closes up exactly on lattice points. A failing report is returned,
/// not thrown.
CheckReport run_checks(const TorusEmbedding& e, std::size_t samples, double tol,
                       Exec exec = Exec::Auto);

/// Spherical-function value: a + 2 sum cos(2 pi H_j) in Case I,
/// a + sum e^{-2 pi i H_j} in Case II.
std::complex<double> spherical_function(const TorusEmbedding& e, const std::vector<double>& H);

/// The same function evaluated as the hermitian pairing of the base point
/// weight data against Phi(H), normalized per weight; agrees with
/// spherical_function for built embeddings.
std::complex<double> spherical_function_inner(const TorusEmbedding& e,
                                              const std::vector<double>& H);

/// True iff the circle blocks of the partition occupy hermitian-orthogonal
/// coordinate subspaces and every block is itself a Clifford torus
/// (pairwise orthogonal nonzero circle data).
bool check_clifford_splitting(const TorusEmbedding& e,
                              const std::vector<std::vector<std::size_t>>& partition,
                              double tol = 1e-9);

}  // namespace rdt
