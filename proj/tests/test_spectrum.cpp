#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "rdt/error.hpp"
#include "rdt/spectrum.hpp"
#include "test_util.hpp"

using namespace rdt;
using namespace rdt::testutil;

namespace {

DatumType dt(Family f, std::size_t r) { return DatumType{f, r, Rational(1)}; }

// Consistent multiplicity sets for a type, entries bounded by cap.
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

// Dominant weights with coordinates bounded by `box`, via the library
// dominance predicate over a plain coordinate product.
std::vector<std::vector<long>> dominant_box(const DatumType& t, long box) {
    std::vector<std::vector<long>> out;
    std::vector<long> k(t.rank, -box);
    for (;;) {
        if (is_dominant(t, k)) out.push_back(k);
        std::size_t d = 0;
        while (d < t.rank && ++k[d] > box) k[d++] = -box;
        if (d == t.rank) break;
    }
    return out;
}

}  // namespace

TEST_CASE("check_multiplicities: consistency rules") {
    CHECK_NOTHROW(check_multiplicities(dt(Family::C, 2), {0, 1, 1, 1}));
    CHECK_THROWS_AS(check_multiplicities(dt(Family::C, 2), {1, 1, 1, 1}), DomainError);   // m1 must be 0
    CHECK_THROWS_AS(check_multiplicities(dt(Family::C, 2), {0, 1, 1, 2}), DomainError);   // m+ == m-
    CHECK_THROWS_AS(check_multiplicities(dt(Family::C, 2), {0, 0, 1, 1}), DomainError);   // m2 must be > 0
    CHECK_NOTHROW(check_multiplicities(dt(Family::D, 2), {0, 0, 5, 1}));                  // D2 may differ
    CHECK_THROWS_AS(check_multiplicities(dt(Family::D, 3), {0, 0, 5, 1}), DomainError);
    CHECK_NOTHROW(check_multiplicities(dt(Family::A, 3), {0, 0, 0, 2}));
    CHECK_THROWS_AS(check_multiplicities(dt(Family::A, 3), {0, 0, 2, 2}), DomainError);   // no sums in A
    CHECK_NOTHROW(check_multiplicities(dt(Family::A, 1), {0, 0, 0, 0}));
    CHECK_NOTHROW(check_multiplicities(dt(Family::B, 2), {1, 0, 1, 1}));
    CHECK_THROWS_AS(check_multiplicities(dt(Family::B, 2), {0, 0, 1, 1}), DomainError);  // m1 required
}

TEST_CASE("two_rho: examples") {
    SUBCASE("A1 at rank 2 with m- = 2 gives eps1 - eps2") {
        QVector c = two_rho(dt(Family::A, 2), {0, 0, 0, 2});
        CHECK(c[0] == Rational(1));
        CHECK(c[1] == Rational(-1));
    }
    SUBCASE("D2 branch") {
        QVector c = two_rho(dt(Family::D, 2), {0, 0, 3, 1});
        CHECK(c[0] == Rational(2));
        CHECK(c[1] == Rational(1));
    }
    SUBCASE("C1 with m2 = 1 gives eps1") {
        QVector c = two_rho(dt(Family::C, 1), {0, 1, 0, 0});
        CHECK(c[0] == Rational(1));
    }
}

TEST_CASE("is_dominant: examples") {
    CHECK(is_dominant(dt(Family::A, 3), {2, 0, -1}));
    CHECK(!is_dominant(dt(Family::A, 3), {0, 2, -1}));
    CHECK(is_dominant(dt(Family::B, 2), {1, 0}));
    CHECK(!is_dominant(dt(Family::B, 2), {1, -1}));
    CHECK(is_dominant(dt(Family::D, 3), {2, 1, -1}));
    CHECK(!is_dominant(dt(Family::D, 3), {2, 1, -2}));
    CHECK_THROWS_AS(is_dominant(dt(Family::B, 2), {1, 0, 0}), DimensionError);
}

TEST_CASE("eigenvalue: examples") {
    SUBCASE("C_r at eps1") {
        for (std::size_t r = 2; r <= 4; ++r) {
            MultiplicitySet m{0, 1, 2, 2};
            std::vector<long> k(r, 0);
            k[0] = 1;
            CHECK(eigenvalue(dt(Family::C, r), m, k) ==
                  Rational(1) + Rational(1) + Rational(2 * static_cast<long>(r - 1)));
        }
    }
    SUBCASE("zero weight has eigenvalue zero") {
        CHECK(eigenvalue(dt(Family::B, 3), {1, 0, 1, 1}, {0, 0, 0}).is_zero());
    }
    SUBCASE("A1 at rank 2, m- = 2, k = (1,0)") {
        CHECK(eigenvalue(dt(Family::A, 2), {0, 0, 0, 2}, {1, 0}) == Rational(2));
    }
    SUBCASE("non-dominant weights are rejected") {
        CHECK_THROWS_AS(eigenvalue(dt(Family::B, 2), {1, 0, 1, 1}, {0, 1}), DomainError);
    }
}

TEST_CASE("eigenvalue: closed form equals the Gram route on a large grid") {
    // Exhaustive agreement for every type, rank <= 5, consistent
    // multiplicities <= 4 and dominant weights with sum of squares <= 9.
    std::size_t cases = 0;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC}) {
        for (std::size_t r = (f == Family::D ? 2u : 1u); r <= 5; ++r) {
            DatumType t = dt(f, r);
            auto weights = dominant_box(t, 3);
            for (const auto& m : consistent_mults(t, 4))
                for (const auto& k : weights) {
                    long ss = 0;
                    for (long v : k) ss += v * v;
                    if (ss > 9) continue;
                    CHECK_NOTHROW(eigenvalue(t, m, k));  // internal dual-route comparison
                    ++cases;
                }
        }
    }
    CHECK(cases > 2000);
}

TEST_CASE("eigenvalue: Weyl-orbit members evaluate through their dominant representative") {
    std::mt19937 rng(29);
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC}) {
        std::size_t r = (f == Family::D) ? 3 : 3;
        DatumType t = dt(f, r);
        MultiplicitySet m = consistent_mults(t, 3).front();
        for (const auto& k : dominant_box(t, 2)) {
            // Random signed permutation consistent with the family action.
            std::vector<long> w = k;
            std::shuffle(w.begin(), w.end(), rng);
            if (f != Family::A) {
                long flips = 0;
                for (auto& v : w)
                    if (rand_int(rng, 0, 1)) { v = -v; ++flips; }
                if (f == Family::D && flips % 2 == 1) w[0] = -w[0];
            }
            CHECK(dominant_representative(t, w) == dominant_representative(t, k));
            CHECK(eigenvalue(t, m, dominant_representative(t, w)) == eigenvalue(t, m, k));
        }
    }
}

TEST_CASE("eigenvalue: doubling a nonzero weight strictly increases it") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC}) {
        std::size_t r = (f == Family::D) ? 2 : 2;
        DatumType t = dt(f, r);
        MultiplicitySet m = consistent_mults(t, 2).front();
        for (const auto& k : dominant_box(t, 2)) {
            if (std::all_of(k.begin(), k.end(), [](long v) { return v == 0; })) continue;
            std::vector<long> k2 = k;
            for (auto& v : k2) v *= 2;
            CHECK(eigenvalue(t, m, k2) > eigenvalue(t, m, k));
        }
    }
}

TEST_CASE("enumerate_spectrum: examples") {
    SUBCASE("B1 with m1 = 1 and bound 4 keeps k = 0, 1") {
        auto entries = enumerate_spectrum(dt(Family::B, 1), {1, 0, 0, 0}, Rational(4));
        REQUIRE(entries.size() == 2);
        CHECK(entries[0].k == std::vector<long>{0});
        CHECK(entries[0].lambda_scaled.is_zero());
        CHECK(entries[1].k == std::vector<long>{1});
        CHECK(entries[1].lambda_scaled == Rational(3, 2));
    }
    SUBCASE("bound 0 keeps only the zero weight") {
        auto entries = enumerate_spectrum(dt(Family::BC, 2), {1, 1, 1, 1}, Rational(0));
        REQUIRE(entries.size() == 1);
        CHECK(entries[0].lambda_scaled.is_zero());
    }
    SUBCASE("A1 at rank 2, m- = 2, bound 2: frozen oracle list") {
        // Independent oracle: brute force over the coordinate box [-5,5]^2
        // with the literal formula k1(k1+1) + k2(k2-1).
        std::vector<SpectrumEntry> oracle;
        for (long k1 = -5; k1 <= 5; ++k1)
            for (long k2 = -5; k2 <= k1; ++k2) {
                Rational v = Rational(k1) * Rational(k1 + 1) + Rational(k2) * Rational(k2 - 1);
                if (v <= Rational(2)) oracle.push_back({{k1, k2}, v});
            }
        std::sort(oracle.begin(), oracle.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
            if (a.lambda_scaled != b.lambda_scaled) return a.lambda_scaled < b.lambda_scaled;
            return a.k < b.k;
        });

        auto entries = enumerate_spectrum(dt(Family::A, 2), {0, 0, 0, 2}, Rational(2));
        CHECK(entries == oracle);

        // Frozen values from the oracle: zero plus four entries at level 2.
        REQUIRE(entries.size() == 5);
        CHECK(entries[0].k == std::vector<long>{0, 0});
        std::set<std::vector<long>> level2;
        for (std::size_t i = 1; i < entries.size(); ++i) {
            CHECK(entries[i].lambda_scaled == Rational(2));
            level2.insert(entries[i].k);
        }
        std::set<std::vector<long>> expect{{1, 0}, {1, 1}, {0, -1}, {-1, -1}};
        CHECK(level2 == expect);
    }
}

TEST_CASE("enumerate_spectrum: agrees with brute force over a larger box") {
    for (Family f : {Family::A, Family::B, Family::D}) {
        std::size_t r = (f == Family::D) ? 2 : 2;
        DatumType t = dt(f, r);
        MultiplicitySet m = f == Family::A   ? MultiplicitySet{0, 0, 0, 3}
                            : f == Family::B ? MultiplicitySet{2, 0, 1, 1}
                                             : MultiplicitySet{0, 0, 4, 2};
        Rational bound(7);
        auto entries = enumerate_spectrum(t, m, bound);
        std::vector<SpectrumEntry> brute;
        for (const auto& k : dominant_box(t, 25)) {
            Rational v = eigenvalue(t, m, k);
            if (v <= bound) brute.push_back({k, v});
        }
        std::sort(brute.begin(), brute.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
            if (a.lambda_scaled != b.lambda_scaled) return a.lambda_scaled < b.lambda_scaled;
            return a.k < b.k;
        });
        CHECK(entries == brute);
    }
}

TEST_CASE("enumerate_spectrum: zero appears exactly once, at k = 0") {
    for (Family f : {Family::A, Family::C, Family::BC}) {
        auto entries = enumerate_spectrum(dt(f, 3),
                                          f == Family::A    ? MultiplicitySet{0, 0, 0, 2}
                                          : f == Family::C  ? MultiplicitySet{0, 1, 1, 1}
                                                            : MultiplicitySet{1, 1, 1, 1},
                                          Rational(5));
        std::size_t zeros = 0;
        for (const auto& e : entries)
            if (e.lambda_scaled.is_zero()) {
                ++zeros;
                CHECK(e.k == std::vector<long>(3, 0));
            }
        CHECK(zeros == 1);
    }
}

TEST_CASE("first_eigenspace_check: examples") {
    CHECK(first_eigenspace_check(dt(Family::A, 4), {0, 0, 0, 2}));
    CHECK(!first_eigenspace_check(dt(Family::A, 2), {0, 0, 0, 4}));
    CHECK(!first_eigenspace_check(dt(Family::D, 2), {0, 0, 5, 1}));
    CHECK(first_eigenspace_check(dt(Family::D, 2), {0, 0, 3, 1}));
    CHECK(first_eigenspace_check(dt(Family::B, 3), {1, 0, 2, 2}));

    // The A-family threshold values, in L = 2 pi units: at m- = 4 the
    // all-ones weight undercuts eps1.
    DatumType t = dt(Family::A, 3);
    MultiplicitySet m{0, 0, 0, 4};
    std::vector<long> ones(3, 1), e1{1, 0, 0};
    CHECK(eigenvalue(t, m, ones) == Rational(3));
    CHECK(eigenvalue(t, m, e1) == Rational(1 + 2 * 2));
}

TEST_CASE("eigenvalue_absolute: presentation scaling") {
    DatumType c1{Family::C, 1, Rational(1)};
    const double four_pi_sq = 39.478417604357434;
    CHECK(eigenvalue_absolute(c1, Rational(3, 2)) ==
          doctest::Approx(1.5 * four_pi_sq).epsilon(1e-12));
    DatumType c4{Family::C, 1, Rational(4)};
    CHECK(eigenvalue_absolute(c4, Rational(1)) == doctest::Approx(four_pi_sq / 4).epsilon(1e-12));
}

TEST_CASE("first_eigenspace_check: grid agreement with enumeration") {
    // The check itself cross-verifies closed form vs enumeration and throws
    // on disagreement, so running the grid is the assertion.
    for (std::size_t r = 2; r <= 5; ++r)
        for (long mm = 1; mm <= 4; ++mm) {
            bool expect = mm <= 2;
            CHECK(first_eigenspace_check(dt(Family::A, r), {0, 0, 0, mm}) == expect);
        }
    for (long mp = 1; mp <= 5; ++mp)
        for (long mm = 1; mm <= 5; ++mm) {
            bool expect = std::labs(mp - mm) <= 2;
            CHECK(first_eigenspace_check(dt(Family::D, 2), {0, 0, mp, mm}) == expect);
        }
}
