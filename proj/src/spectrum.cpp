#include "rdt/spectrum.hpp"

#include <algorithm>
#include <cstdlib>

#include "rdt/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdt {

void check_multiplicities(const DatumType& t, const MultiplicitySet& m) {
    if (m.m1 < 0 || m.m2 < 0 || m.m_plus < 0 || m.m_minus < 0)
        throw DomainError("multiplicities must be nonnegative");
    const bool shorts = (t.family == Family::B || t.family == Family::BC);
    const bool longs = (t.family == Family::C || t.family == Family::BC);
    const bool sums = (t.family != Family::A) && t.rank >= 2;
    const bool diffs = t.rank >= 2;
    auto demand = [&](bool present, long v, const char* name) {
        if (present && v <= 0)
            throw DomainError(std::string("multiplicity ") + name + " must be positive for " + t.str());
        if (!present && v != 0)
            throw DomainError(std::string("multiplicity ") + name + " must be zero for " + t.str());
    };
    demand(shorts, m.m1, "m1");
    demand(longs, m.m2, "m2");
    demand(sums, m.m_plus, "m+");
    demand(diffs, m.m_minus, "m-");
    const bool d2 = (t.family == Family::D && t.rank == 2);
    if (sums && !d2 && m.m_plus != m.m_minus)
        throw DomainError("m+ and m- must agree except for families A and D2");
}

QVector two_rho(const DatumType& t, const MultiplicitySet& m) {
    check_multiplicities(t, m);
    const std::size_t r = t.rank;
    QVector c(r);
    if (t.family == Family::A) {
        for (std::size_t j = 1; j <= r; ++j)
            c[j - 1] = Rational(m.m_minus, 2) * Rational(static_cast<long>(r) - 2 * static_cast<long>(j) + 1);
    } else if (t.family == Family::D && r == 2) {
        c[0] = Rational(m.m_plus + m.m_minus, 2);
        c[1] = Rational(m.m_plus - m.m_minus, 2);
    } else {
        for (std::size_t j = 1; j <= r; ++j)
            c[j - 1] = Rational(m.m1, 2) + Rational(m.m2) +
                       Rational(m.m_plus) * Rational(static_cast<long>(r - j));
    }
    return c;
}

bool is_dominant(const DatumType& t, const std::vector<long>& k) {
    if (k.size() != t.rank) throw DimensionError("weight length does not match the rank");
    const std::size_t r = k.size();
    if (t.family == Family::A) {
        for (std::size_t j = 1; j < r; ++j)
            if (k[j - 1] < k[j]) return false;
        return true;
    }
    if (t.family == Family::D) {
        for (std::size_t j = 1; j + 1 < r; ++j)
            if (k[j - 1] < k[j]) return false;
        return k[r - 2] >= std::labs(k[r - 1]);
    }
    for (std::size_t j = 1; j < r; ++j)
        if (k[j - 1] < k[j]) return false;
    return k[r - 1] >= 0;
}

Rational eigenvalue(const DatumType& t, const MultiplicitySet& m, const std::vector<long>& k) {
    if (!is_dominant(t, k)) throw DomainError("eigenvalue requires a dominant weight");
    const std::size_t r = t.rank;

    Rational closed;
    if (t.family == Family::A) {
        for (std::size_t j = 1; j <= r; ++j)
            closed += Rational(k[j - 1]) *
                      (Rational(k[j - 1]) + Rational(m.m_minus, 2) *
                                                Rational(static_cast<long>(r) - 2 * static_cast<long>(j) + 1));
    } else if (t.family == Family::D && r == 2) {
        closed = Rational(k[0]) * (Rational(k[0]) + Rational(m.m_plus + m.m_minus, 2)) +
                 Rational(k[1]) * (Rational(k[1]) + Rational(m.m_plus - m.m_minus, 2));
    } else {
        for (std::size_t j = 1; j <= r; ++j)
            closed += Rational(k[j - 1]) * (Rational(k[j - 1]) + Rational(m.m1, 2) + Rational(m.m2) +
                                            Rational(m.m_plus) * Rational(static_cast<long>(r - j)));
    }

    // Independent route: <omega + 2 rho, omega> with the dual Gram
    // (squared eps lengths 1/L^2, no cross terms), scaled by L^2.
    QVector c = two_rho(t, m);
    Rational general;
    for (std::size_t j = 0; j < r; ++j)
        general += (Rational(k[j]) + c[j]) * Rational(k[j]);
    if (general != closed)
        throw Error("internal: eigenvalue closed form disagrees with the Gram route");
    return closed;
}

namespace {

Rational term_value(long k, const Rational& c) {
    return Rational(k) * (Rational(k) + c);
}

// min over integer k in [lo, hi] of k (k + c): the parabola vertex is at
// -c/2, so it suffices to test the clamped floor/ceil of the vertex.
Rational term_min(long lo, long hi, const Rational& c) {
    Rational half = -c / Rational(2);
    std::vector<long> cands{lo, hi};
    Integer f = half.floor();
    if (f.fits_slong_p()) {
        long fv = f.get_si();
        for (long d : {0L, 1L})
            if (fv + d >= lo && fv + d <= hi) cands.push_back(fv + d);
    }
    Rational best = term_value(cands.front(), c);
    for (long k : cands) best = std::min(best, term_value(k, c));
    return best;
}

struct EnumCtx {
    const DatumType& t;
    const std::vector<Rational>& c;
    Rational bound;
    long box;
    std::vector<Rational> suffix_min;  // suffix_min[j] = min possible sum of terms j..r-1
};

void enum_weights(const EnumCtx& ctx, std::vector<long>& k, std::size_t j, long prev,
                  const Rational& partial, std::vector<SpectrumEntry>& out) {
    const std::size_t r = ctx.c.size();
    if (j == r) {
        out.push_back({k, partial});
        return;
    }
    long lo, hi;
    const bool last_d = (ctx.t.family == Family::D && j + 1 == r);
    if (ctx.t.family == Family::A) {
        lo = -ctx.box;
        hi = std::min(prev, ctx.box);
    } else if (last_d) {
        long cap = std::min(prev, ctx.box);
        lo = -cap;
        hi = cap;
    } else {
        lo = 0;
        hi = std::min(prev, ctx.box);
    }
    for (long v = lo; v <= hi; ++v) {
        Rational p = partial + term_value(v, ctx.c[j]);
        if (p + ctx.suffix_min[j + 1] > ctx.bound) continue;
        k[j] = v;
        enum_weights(ctx, k, j + 1, v, p, out);
    }
    k[j] = 0;
}

}  // namespace

std::vector<SpectrumEntry> enumerate_spectrum(const DatumType& t, const MultiplicitySet& m,
                                              const Rational& bound, Exec exec) {
    check_multiplicities(t, m);
    std::vector<SpectrumEntry> out;
    if (bound.is_negative()) return out;
    const std::size_t r = t.rank;
    QVector tr = two_rho(t, m);
    std::vector<Rational> c(r);
    for (std::size_t j = 0; j < r; ++j) c[j] = tr[j];

    // Conservative coefficient box: quadratic growth in k against linear
    // growth of the multiplicity terms.
    Rational mixed = Rational(m.m1, 2) + Rational(m.m2) +
                     Rational(std::max(m.m_plus, m.m_minus)) * Rational(static_cast<long>(r));
    Rational diffs = Rational(m.m_minus) * Rational(static_cast<long>(r));
    Integer box_i = 1 + isqrt_floor(bound) + std::max(mixed, diffs).ceil();
    if (!box_i.fits_slong_p() || box_i.get_si() > 100000)
        throw ResourceError("spectrum enumeration box too large");
    const long box = box_i.get_si();

    EnumCtx ctx{t, c, bound, box, {}};
    ctx.suffix_min.assign(r + 1, Rational(0));
    for (std::size_t j = r; j-- > 0;) {
        const bool nonneg = (t.family != Family::A) && !(t.family == Family::D && j + 1 == r);
        ctx.suffix_min[j] = ctx.suffix_min[j + 1] + term_min(nonneg ? 0 : -box, box, c[j]);
    }

    // Split on the first coordinate; each task enumerates its subtree and
    // the parts are merged in coordinate order, so the output does not
    // depend on the thread count.
    long lo0, hi0;
    if (t.family == Family::A) {
        lo0 = -box;
        hi0 = box;
    } else if (t.family == Family::D && r == 1) {
        lo0 = -box;
        hi0 = box;
    } else {
        lo0 = 0;
        hi0 = box;
    }
    const long n0 = hi0 - lo0 + 1;
    std::vector<std::vector<SpectrumEntry>> parts(n0);
    const bool par = use_parallel(exec);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (long i = 0; i < n0; ++i) {
        const long v = lo0 + i;
        std::vector<long> k(r, 0);
        Rational p = term_value(v, c[0]);
        if (r == 1) {
            if (p <= bound) parts[i].push_back({{v}, p});
        } else if (p + ctx.suffix_min[1] <= bound) {
            k[0] = v;
            enum_weights(ctx, k, 1, v, p, parts[i]);
        }
    }
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.lambda_scaled != b.lambda_scaled) return a.lambda_scaled < b.lambda_scaled;
        return a.k < b.k;
    });
    return out;
}

bool first_eigenspace_check(const DatumType& t, const MultiplicitySet& m) {
    check_multiplicities(t, m);
    MultiplicitySet mm = m;
    // For D2 the roles of m+ and m- swap under eps_2 -> -eps_2, so assume
    // m- <= m+ without loss of generality.
    if (t.family == Family::D && t.rank == 2 && mm.m_minus > mm.m_plus)
        std::swap(mm.m_plus, mm.m_minus);

    const bool closed =
        !((t.family == Family::A && t.rank >= 2 && mm.m_minus > 2) ||
          (t.family == Family::D && t.rank == 2 && mm.m_plus - mm.m_minus > 2));

    std::vector<long> e1(t.rank, 0);
    e1[0] = 1;
    const Rational lambda1 = eigenvalue(t, mm, e1);
    bool enumerated = true;
    for (const auto& entry : enumerate_spectrum(t, mm, lambda1)) {
        const bool zero = std::all_of(entry.k.begin(), entry.k.end(), [](long v) { return v == 0; });
        if (!zero && entry.lambda_scaled < lambda1) {
            enumerated = false;
            break;
        }
    }
    if (enumerated != closed)
        throw Error("internal: first-eigenspace closed form disagrees with enumeration");
    return closed;
}

double eigenvalue_absolute(const DatumType& t, const Rational& scaled) {
    constexpr double four_pi_sq = 39.478417604357434475337963999505;
    return scaled.to_double() * four_pi_sq / t.length_sq.to_double();
}

std::vector<long> dominant_representative(const DatumType& t, std::vector<long> k) {
    if (k.size() != t.rank) throw DimensionError("weight length does not match the rank");
    if (t.family == Family::A) {
        std::sort(k.begin(), k.end(), std::greater<long>());
        return k;
    }
    if (t.family == Family::D) {
        long negatives = 0;
        bool has_zero = false;
        for (auto& v : k) {
            if (v < 0) { ++negatives; v = -v; }
            if (v == 0) has_zero = true;
        }
        std::sort(k.begin(), k.end(), std::greater<long>());
        if (!has_zero && negatives % 2 == 1) k.back() = -k.back();
        return k;
    }
    for (auto& v : k) v = std::labs(v);
    std::sort(k.begin(), k.end(), std::greater<long>());
    return k;
}

}  // namespace rdt
