#include "rdt/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "rdt/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<std::complex<double>> phi_complex(const TorusEmbedding& e,
                                              const std::vector<double>& H) {
    std::vector<std::complex<double>> z(e.complex_dim(), 0.0);
    for (std::size_t w = 0; w < e.weights.size(); ++w) {
        const double phase = kTwoPi * e.weights[w].freq * H[e.weights[w].axis];
        const std::complex<double> f = e.amplitudes[w] * std::polar(1.0, phase);
        for (std::size_t d = 0; d < z.size(); ++d) z[d] += f * e.directions[w][d];
    }
    return z;
}

std::vector<double> realify(const std::vector<std::complex<double>>& z, double zero) {
    std::vector<double> out(2 * z.size() + 1);
    for (std::size_t d = 0; d < z.size(); ++d) {
        out[2 * d] = z[d].real();
        out[2 * d + 1] = z[d].imag();
    }
    out.back() = zero;
    return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> diff(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

std::complex<double> herm(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

}  // namespace

TorusEmbedding build_torus_embedding(const ClassificationReport& report, double a) {
    if (a < 0.0) throw DomainError("zero-weight radius must be nonnegative");
    TorusEmbedding e;
    e.rank = report.datum_type.rank;
    e.side_length = std::sqrt(report.datum_type.length_sq.to_double());
    e.orbit_case = report.orbit_case;
    e.zero_component = a;

    const std::size_t per_circle = (e.orbit_case == OrbitCase::I) ? 2 : 1;
    const std::size_t m = per_circle * e.rank;
    const double amp = (e.orbit_case == OrbitCase::I)
                           ? e.side_length / (kTwoPi * std::sqrt(2.0))
                           : e.side_length / kTwoPi;
    for (std::size_t j = 0; j < e.rank; ++j) {
        e.weights.push_back({j, 1});
        if (per_circle == 2) e.weights.push_back({j, -1});
    }
    for (std::size_t w = 0; w < m; ++w) {
        e.amplitudes.push_back(amp);
        std::vector<std::complex<double>> dir(m, 0.0);
        dir[w] = 1.0;
        e.directions.push_back(std::move(dir));
    }
    return e;
}

std::vector<double> phi_torus(const TorusEmbedding& e, const std::vector<double>& H) {
    if (H.size() != e.rank) throw DimensionError("phi_torus: H length must equal the rank");
    return realify(phi_complex(e, H), e.zero_component);
}

std::vector<double> phi_derivative(const TorusEmbedding& e, const std::vector<double>& H,
                                   std::size_t j, int order) {
    if (H.size() != e.rank) throw DimensionError("phi_derivative: H length must equal the rank");
    if (order < 1 || order > 3) throw DomainError("derivative order must be 1..3");
    std::vector<std::complex<double>> z(e.complex_dim(), 0.0);
    for (std::size_t w = 0; w < e.weights.size(); ++w) {
        const long f = (e.weights[w].axis == j) ? e.weights[w].freq : 0;
        if (f == 0) continue;
        const double phase = kTwoPi * e.weights[w].freq * H[e.weights[w].axis];
        std::complex<double> factor = std::complex<double>(0.0, kTwoPi * f);
        std::complex<double> pow = factor;
        for (int o = 1; o < order; ++o) pow *= factor;
        const std::complex<double> c = e.amplitudes[w] * pow * std::polar(1.0, phase);
        for (std::size_t d = 0; d < z.size(); ++d) z[d] += c * e.directions[w][d];
    }
    return realify(z, 0.0);
}

namespace {

// Deterministic sample grid for the multi-coordinate checks: a regular
// g^r product grid shifted off the lattice plus the lattice corners.
std::vector<std::vector<double>> metric_grid(std::size_t rank, std::size_t samples) {
    std::size_t g = 2;
    while (std::pow(static_cast<double>(g + 1), static_cast<double>(rank)) <=
           static_cast<double>(samples) && g < 8)
        ++g;
    std::vector<std::vector<double>> pts;
    std::vector<std::size_t> idx(rank, 0);
    for (;;) {
        std::vector<double> H(rank);
        for (std::size_t d = 0; d < rank; ++d)
            H[d] = (static_cast<double>(idx[d]) + 0.318309886183790672) / static_cast<double>(g);
        pts.push_back(H);
        std::size_t d = 0;
        while (d < rank && ++idx[d] == g) idx[d++] = 0;
        if (d == rank) break;
    }
    return pts;
}

}  // namespace

CheckReport run_checks(const TorusEmbedding& e, std::size_t samples, double tol, Exec exec) {
    if (samples < 8) throw DomainError("run_checks needs at least 8 samples");
    if (tol <= 0.0) throw DomainError("run_checks needs a positive tolerance");
    CheckReport rep;
    const std::size_t r = e.rank;
    const std::vector<double> zero(r, 0.0);
    const std::vector<double> base = phi_torus(e, zero);
    const bool par = use_parallel(exec);

    // (a) circle planarity: c''' = -4 pi^2 c' along each generating circle.
    {
        std::vector<double> res(r * samples, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
        for (long long t = 0; t < static_cast<long long>(r * samples); ++t) {
            const std::size_t j = t / samples, s = t % samples;
            std::vector<double> H(r, 0.0);
            H[j] = static_cast<double>(s) / static_cast<double>(samples);
            auto d1 = phi_derivative(e, H, j, 1);
            auto d3 = phi_derivative(e, H, j, 3);
            double num = 0.0;
            for (std::size_t i = 0; i < d1.size(); ++i) {
                const double v = d3[i] + kTwoPi * kTwoPi * d1[i];
                num += v * v;
            }
            const double speed = norm(d1);
            res[t] = speed > 0.0 ? std::sqrt(num) / speed : std::sqrt(num);
        }
        rep.max_planarity_residual = *std::max_element(res.begin(), res.end());
    }

    // (b) orthogonality of velocities of distinct generating circles.
    if (r > 1) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k) pairs.emplace_back(j, k);
        std::vector<double> res(pairs.size(), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
        for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p) {
            const auto [j, k] = pairs[p];
            double worst = 0.0;
            for (std::size_t s = 0; s < samples; ++s)
                for (std::size_t u = 0; u < samples; ++u) {
                    std::vector<double> Hj(r, 0.0), Hk(r, 0.0);
                    Hj[j] = static_cast<double>(s) / static_cast<double>(samples);
                    Hk[k] = static_cast<double>(u) / static_cast<double>(samples);
                    worst = std::max(worst,
                                     std::fabs(dot(phi_derivative(e, Hj, j, 1),
                                                   phi_derivative(e, Hk, k, 1))));
                }
            res[p] = worst;
        }
        rep.max_orthogonality_residual = *std::max_element(res.begin(), res.end());
    }

    // (c) isometry: the pullback metric equals L^2 * identity.
    {
        const double L2 = e.side_length * e.side_length;
        auto grid = metric_grid(r, samples);
        std::vector<double> res(grid.size(), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
        for (long long g = 0; g < static_cast<long long>(grid.size()); ++g) {
            std::vector<std::vector<double>> jac;
            for (std::size_t j = 0; j < r; ++j) jac.push_back(phi_derivative(e, grid[g], j, 1));
            double worst = 0.0;
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = j; k < r; ++k) {
                    const double want = (j == k) ? L2 : 0.0;
                    worst = std::max(worst, std::fabs(dot(jac[j], jac[k]) - want));
                }
            res[g] = worst;
        }
        rep.max_metric_distortion = grid.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
    }

    // (d) closure exactly on the unit lattice: Phi(H) = Phi(0) iff every
    // coordinate of H is an integer.
    bool closure_ok = true;
    {
        double worst = 0.0;
        std::vector<std::vector<double>> lattice_pts;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<double> H(r, 0.0);
            H[j] = 1.0;
            lattice_pts.push_back(H);
        }
        lattice_pts.push_back(std::vector<double>(r, 1.0));
        lattice_pts.push_back(std::vector<double>(r, 2.0));
        for (const auto& H : lattice_pts)
            worst = std::max(worst, norm(diff(phi_torus(e, H), base)));
        rep.lattice_closure_residual = worst;
        if (worst > tol) closure_ok = false;

        // Converse direction: points safely off the lattice must not map
        // back to the base point.
        for (const auto& H : metric_grid(r, samples)) {
            bool integral = true;
            for (double h : H)
                if (std::fabs(h - std::round(h)) > 0.05) integral = false;
            if (integral) continue;
            if (norm(diff(phi_torus(e, H), base)) <= tol) closure_ok = false;
        }
    }

    rep.pass = rep.max_planarity_residual <= tol && rep.max_orthogonality_residual <= tol &&
               rep.max_metric_distortion <= tol && rep.lattice_closure_residual <= tol &&
               closure_ok;
    return rep;
}

std::complex<double> spherical_function(const TorusEmbedding& e, const std::vector<double>& H) {
    if (H.size() != e.rank) throw DimensionError("spherical_function: H length must equal the rank");
    std::complex<double> s = e.zero_component;
    if (e.orbit_case == OrbitCase::I) {
        for (std::size_t j = 0; j < e.rank; ++j) s += 2.0 * std::cos(kTwoPi * H[j]);
    } else {
        for (std::size_t j = 0; j < e.rank; ++j) s += std::polar(1.0, -kTwoPi * H[j]);
    }
    return s;
}

std::complex<double> spherical_function_inner(const TorusEmbedding& e,
                                              const std::vector<double>& H) {
    if (H.size() != e.rank) throw DimensionError("spherical_function_inner: H length mismatch");
    auto z = phi_complex(e, H);
    std::complex<double> s = e.zero_component;  // normalized zero-weight term
    for (std::size_t w = 0; w < e.weights.size(); ++w) {
        const double amp = e.amplitudes[w];
        if (amp == 0.0) continue;
        std::complex<double> vz = 0.0;
        for (std::size_t d = 0; d < z.size(); ++d)
            vz += amp * e.directions[w][d] * std::conj(z[d]);
        s += vz / (amp * amp);
    }
    return s;
}

bool check_clifford_splitting(const TorusEmbedding& e,
                              const std::vector<std::vector<std::size_t>>& partition,
                              double tol) {
    std::vector<bool> seen(e.rank, false);
    for (const auto& block : partition)
        for (auto j : block) {
            if (j >= e.rank || seen[j]) throw DomainError("invalid circle partition");
            seen[j] = true;
        }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw DomainError("partition does not cover all circles");

    // Across blocks, hermitian-orthogonal circle data is exactly extrinsic
    // splitting; inside a block it is what makes the block a Clifford torus.
    // Either way all distinct circle data must sit in orthogonal planes and
    // no circle may be degenerate.
    for (std::size_t w = 0; w < e.weights.size(); ++w) {
        if (e.amplitudes[w] <= 0.0) return false;
        for (std::size_t u = w + 1; u < e.weights.size(); ++u) {
            const double overlap =
                std::abs(herm(e.directions[w], e.directions[u])) * e.amplitudes[w] * e.amplitudes[u];
            if (overlap > tol) return false;
        }
    }
    return true;
}

}  // namespace rdt
