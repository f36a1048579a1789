// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rdt/embedding.hpp"
#include "rdt/error.hpp"
#include "rdt/rootdatum.hpp"
#include "rdt/snf.hpp"
#include "rdt/spectrum.hpp"

using namespace rdt;

namespace {

struct Failure : std::runtime_error {
    explicit Failure(const std::string& m) : std::runtime_error(m) {}
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

const std::vector<Family> kFamilies{Family::A, Family::B, Family::C, Family::D, Family::BC};

std::size_t min_rank(Family f) { return f == Family::D ? 2 : 1; }

EuclideanRootDatum hexagonal_datum() {
    QMatrix g(2, 2);
    g(0, 0) = Rational(1);
    g(1, 1) = Rational(1);
    g(0, 1) = Rational(1, 2);
    g(1, 0) = Rational(1, 2);
    std::vector<QVector> roots;
    for (const auto& v : {QVector{Rational(1), Rational(0)}, QVector{Rational(0), Rational(1)},
                          QVector{Rational(1), Rational(-1)}}) {
        QVector a = g * v;
        roots.push_back(a);
        roots.push_back(-a);
    }
    return EuclideanRootDatum(g, QMatrix::identity(2), roots);
}

std::vector<MultiplicitySet> consistent_mults(const DatumType& t, long cap) {
    std::vector<MultiplicitySet> out;
    const bool shorts = (t.family == Family::B || t.family == Family::BC);
    const bool longs = (t.family == Family::C || t.family == Family::BC);
    const bool sums = (t.family != Family::A) && t.rank >= 2;
    const bool diffs = t.rank >= 2;
    const bool d2 = (t.family == Family::D && t.rank == 2);
    for (long m1 = shorts ? 1 : 0; m1 <= (shorts ? cap : 0); ++m1)
        for (long m2 = longs ? 1 : 0; m2 <= (longs ? cap : 0); ++m2) {
            if (t.family == Family::A) {
                for (long mm = diffs ? 1 : 0; mm <= (diffs ? cap : 0); ++mm)
                    out.push_back({m1, m2, 0, mm});
            } else if (d2) {
                for (long mp = 1; mp <= cap; ++mp)
                    for (long mm = 1; mm <= cap; ++mm) out.push_back({m1, m2, mp, mm});
            } else if (sums) {
                for (long mpm = 1; mpm <= cap; ++mpm) out.push_back({m1, m2, mpm, mpm});
            } else {
                out.push_back({m1, m2, 0, 0});
            }
        }
    return out;
}

// Index of the sum of the intersection lattices inside L (0 = deficient).
Integer blocking_index(const EuclideanRootDatum& d, const std::vector<QMatrix>& subspaces) {
    QMatrix C(d.ambient_dim(), 0);
    for (const auto& P : subspaces) {
        Lattice Li = intersect_with_subspace(d.lattice, P);
        for (std::size_t j = 0; j < Li.rank(); ++j) {
            auto x = integer_solve(d.lattice.basis(), Li.basis().col(j));
            require(x.has_value(), "intersection lattice escaped");
            C.push_col(*x);
        }
    }
    auto factors = smith_normal_form(C).invariant_factors();
    if (factors.size() != d.ambient_dim()) return 0;
    Integer idx(1);
    for (const auto& f : factors) idx *= f;
    return idx;
}

// ---------------------------------------------------------------- criteria

// Fundamental-group table: {1} for C and BC, Z/2 for B and D, Z for A.
void criterion_pi1_table() {
    for (Family f : kFamilies)
        for (std::size_t r = min_rank(f); r <= 6; ++r) {
            AbelianGroupStructure g = fundamental_group(make_standard({f, r, Rational(1)}));
            std::string got = g.str();
            std::string want = (f == Family::C || f == Family::BC) ? "1"
                               : (f == Family::B || f == Family::D) ? "Z/2"
                                                                    : "Z";
            require(got == want, "pi1(" + family_name(f) + std::to_string(r) + ") = " + got +
                                     ", expected " + want);
        }
}

// Weyl-orbit dichotomy: signed basis for B, C, D, BC; unsigned basis for A.
void criterion_orbit_dichotomy() {
    for (Family f : kFamilies)
        for (std::size_t r = std::max<std::size_t>(min_rank(f), 2); r <= 5; ++r) {
            EuclideanRootDatum d = make_standard({f, r, Rational(1)});
            WeylGroup W = weyl_group(d.roots);
            auto orbit = weyl_orbit(W, QVector::unit(r, 0));
            std::set<QVector> got(orbit.begin(), orbit.end());
            std::set<QVector> want;
            for (std::size_t j = 0; j < r; ++j) {
                want.insert(QVector::unit(r, j));
                if (f != Family::A) want.insert(-QVector::unit(r, j));
            }
            require(got == want, "orbit mismatch for " + family_name(f) + std::to_string(r));
        }
}

// Classification round trip plus rejection of the hexagonal lattice.
void criterion_round_trip() {
    for (Family f : kFamilies)
        for (std::size_t r = min_rank(f); r <= 6; ++r)
            for (long l2 : {1L, 2L, 4L}) {
                DatumType t{f, r, Rational(l2)};
                ClassificationReport rep = classify(make_standard(t));
                require(rep.datum_type == t, "round trip failed for " + t.str());
            }
    bool rejected = false;
    try {
        classify(hexagonal_datum());
    } catch (const NotRectangularError&) {
        rejected = true;
    }
    require(rejected, "hexagonal datum was not rejected as non-rectangular");
}

// Lattice sandwich: standard data validate; the two corrupted data fail
// with the correct witnessed inclusion.
void criterion_sandwich() {
    for (Family f : kFamilies)
        for (std::size_t r = min_rank(f); r <= 6; ++r)
            require(validate(make_standard({f, r, Rational(1)})).ok,
                    "standard datum failed validation");

    EuclideanRootDatum c2 = make_standard({Family::C, 2, Rational(1)});
    QMatrix three = QMatrix::identity(2);
    three(0, 0) = Rational(3);
    three(1, 1) = Rational(3);
    auto diag1 = validate(EuclideanRootDatum(c2.gram, three, c2.roots.roots));
    require(!diag1.ok && diag1.issues.front().find("Gamma0") != std::string::npos,
            "C2 over 3Z^2 must fail the Gamma0 inclusion");

    EuclideanRootDatum b2 = make_standard({Family::B, 2, Rational(1)});
    QMatrix quarter = QMatrix::identity(2);
    quarter(0, 0) = Rational(1, 4);
    quarter(1, 1) = Rational(1, 4);
    auto diag2 = validate(EuclideanRootDatum(b2.gram, quarter, b2.roots.roots));
    require(!diag2.ok && diag2.issues.front().find("Gamma1") != std::string::npos,
            "B2 over (1/4)Z^2 must fail the Gamma1 inclusion");
}

// Closed-form eigenvalues equal the Gram-route values on the full grid.
void criterion_eigenvalue_oracle() {
    std::size_t cases = 0;
    for (Family f : kFamilies)
        for (std::size_t r = min_rank(f); r <= 5; ++r) {
            DatumType t{f, r, Rational(1)};
            auto mults = consistent_mults(t, 4);
            std::vector<std::vector<long>> weights;
            std::vector<long> k(r, -3);
            for (;;) {
                long ss = 0;
                for (long v : k) ss += v * v;
                if (ss <= 9 && is_dominant(t, k)) weights.push_back(k);
                std::size_t d = 0;
                while (d < r && ++k[d] > 3) k[d++] = -3;
                if (d == r) break;
            }
            for (const auto& m : mults)
                for (const auto& w : weights) {
                    eigenvalue(t, m, w);  // throws if the two routes disagree
                    ++cases;
                }
        }
    require(cases > 3000, "expected several thousand oracle cases, got " + std::to_string(cases));
}

// First-eigenspace criterion over the two exceptional grids, with the
// quoted threshold values at m- = 4.
void criterion_first_eigenspace() {
    for (std::size_t r = 2; r <= 5; ++r)
        for (long mm = 1; mm <= 4; ++mm) {
            bool got = first_eigenspace_check({Family::A, r, Rational(1)}, {0, 0, 0, mm});
            require(got == (mm <= 2), "A-family first-eigenspace grid mismatch");
        }
    for (long mp = 1; mp <= 5; ++mp)
        for (long mm = 1; mm <= 5; ++mm) {
            bool got = first_eigenspace_check({Family::D, 2, Rational(1)}, {0, 0, mp, mm});
            require(got == (std::labs(mp - mm) <= 2), "D2 first-eigenspace grid mismatch");
        }
    for (std::size_t r = 2; r <= 5; ++r) {
        DatumType t{Family::A, r, Rational(1)};
        MultiplicitySet m{0, 0, 0, 4};
        std::vector<long> ones(r, 1), e1(r, 0);
        e1[0] = 1;
        require(eigenvalue(t, m, ones) == Rational(static_cast<long>(r)),
                "lambda at the all-ones weight must be r");
        require(eigenvalue(t, m, e1) == Rational(1 + 2 * (static_cast<long>(r) - 1)),
                "lambda at eps1 must be 1 + 2(r-1)");
    }
}

// Splitting: the C1 x C1 product splits; A (r = 2..5) and D2 are blocked
// by lattice indices r and 2.
void criterion_splitting() {
    QMatrix g2 = QMatrix::identity(2);
    EuclideanRootDatum prod(g2, QMatrix::identity(2),
                            {QVector{Rational(1), Rational(0)}, QVector{Rational(-1), Rational(0)},
                             QVector{Rational(0), Rational(1)}, QVector{Rational(0), Rational(-1)}});
    require(split(prod).size() == 2, "C1 x C1 must split into two factors");

    for (std::size_t r = 2; r <= 5; ++r) {
        EuclideanRootDatum d = make_standard({Family::A, r, Rational(1)});
        require(split(d).size() == 1, "standard A datum must be indecomposable");
        auto rc = irreducible_components(d.roots);
        require(rc.components.size() == 1 && rc.kernel.cols() == 1, "unexpected A components");
        Integer idx = blocking_index(d, {rc.spans[0], rc.kernel});
        require(idx == Integer(static_cast<long>(r)),
                "A split must be blocked by index r, got " + idx.get_str());
    }

    EuclideanRootDatum d2 = make_standard({Family::D, 2, Rational(1)});
    require(split(d2).size() == 1, "standard D2 datum must be indecomposable");
    auto rc = irreducible_components(d2.roots);
    require(rc.components.size() == 2, "D2 must have two root components");
    Integer idx = blocking_index(d2, {rc.spans[0], rc.spans[1]});
    require(idx == 2, "D2 split must be blocked by index 2, got " + idx.get_str());
}

// Embedding checks at 64 samples and tolerance 1e-9, plus targeted
// perturbation failures.
void criterion_embedding() {
    const double tol = 1e-9;
    for (Family f : kFamilies)
        for (std::size_t r = min_rank(f); r <= 4; ++r) {
            TorusEmbedding e =
                build_torus_embedding(classify(make_standard({f, r, Rational(2)})));
            CheckReport rep = run_checks(e, 64, tol);
            require(rep.pass, "embedding checks failed for " + family_name(f) + std::to_string(r));
        }

    TorusEmbedding base = build_torus_embedding(classify(make_standard({Family::C, 2, Rational(1)})));
    {
        TorusEmbedding e = base;
        e.amplitudes[0] *= 1.0 + 1e-3;
        CheckReport rep = run_checks(e, 64, tol);
        require(!rep.pass && rep.max_metric_distortion > tol,
                "radius perturbation must fail the isometry check");
    }
    {
        TorusEmbedding e = base;
        e.directions[0][2] = 0.1;
        CheckReport rep = run_checks(e, 64, tol);
        require(!rep.pass && rep.max_orthogonality_residual > tol,
                "direction perturbation must fail the orthogonality check");
    }
    {
        TorusEmbedding e = base;
        e.weights[0].freq = 2;
        CheckReport rep = run_checks(e, 64, tol);
        require(!rep.pass && rep.max_planarity_residual > tol,
                "frequency perturbation must fail the planarity check");
    }
    {
        TorusEmbedding e = base;
        e.weights[1].freq = 0;  // kill the conjugate harmonic: image no longer closes only on the lattice
        CheckReport rep = run_checks(e, 64, tol);
        require(!rep.pass, "degenerate harmonic must fail the checks");
    }
}

// Polysphere predicate: true exactly for families C and BC.
void criterion_polysphere() {
    for (Family f : kFamilies)
        for (std::size_t r = min_rank(f); r <= 5; ++r) {
            bool got = admits_polysphere(make_standard({f, r, Rational(1)}));
            bool want = (f == Family::C || f == Family::BC);
            require(got == want, "polysphere predicate wrong for " + family_name(f));
        }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> fn;
        double limit_s;
    };
    const std::vector<Criterion> criteria{
        {"1. fundamental-group table (five types, ranks 1-6)", criterion_pi1_table, 5.0},
        {"2. Weyl-orbit dichotomy (ranks <= 5)", criterion_orbit_dichotomy, 10.0},
        {"3. classification round trip + hexagonal rejection", criterion_round_trip, 0.0},
        {"4. lattice sandwich with corrupted witnesses", criterion_sandwich, 0.0},
        {"5. eigenvalue closed form vs Gram route (grid)", criterion_eigenvalue_oracle, 30.0},
        {"6. first-eigenspace criterion grids", criterion_first_eigenspace, 0.0},
        {"7. splitting and blocking indices", criterion_splitting, 0.0},
        {"8. torus embedding checks at 1e-9", criterion_embedding, 10.0},
        {"9. polysphere predicate", criterion_polysphere, 0.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.fn();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool timed_out = c.limit_s > 0 && secs > c.limit_s;
        if (error.empty() && !timed_out) {
            std::printf("[PASS] %s (%.2f s)\n", c.name, secs);
        } else {
            ++failures;
            if (!error.empty())
                std::printf("[FAIL] %s (%.2f s): %s\n", c.name, secs, error.c_str());
            else
                std::printf("[FAIL] %s (%.2f s): exceeded %.0f s budget\n", c.name, secs, c.limit_s);
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
