#include "rdt/rootsystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "rdt/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdt {

RootSystem::RootSystem(QMatrix g, std::vector<QVector> rs) : gram(std::move(g)), roots(std::move(rs)) {
    if (!is_positive_definite(gram))
        throw DomainError("Gram matrix is not symmetric positive definite");
    for (const auto& a : roots) {
        if (a.dim() != ambient_dim()) throw DimensionError("root dimension mismatch");
        if (a.is_zero()) throw DomainError("zero covector cannot be a root");
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

bool RootSystem::contains(const QVector& alpha) const {
    return std::binary_search(roots.begin(), roots.end(), alpha);
}

QVector root_vector(const RootSystem& R, const QVector& alpha) {
    return R.gram.inverse() * alpha;
}

QVector coroot(const RootSystem& R, const QVector& alpha) {
    if (!R.contains(alpha)) throw DomainError("coroot: covector is not a root");
    QVector h = root_vector(R, alpha);
    Rational n2 = alpha.dot(h);  // |H_alpha|^2 = alpha(H_alpha)
    h *= Rational(2) / n2;
    return h;
}

QMatrix reflection(const RootSystem& R, const QVector& alpha) {
    if (!R.contains(alpha)) throw DomainError("reflection: covector is not a root");
    const std::size_t n = R.ambient_dim();
    QVector cv = coroot(R, alpha);
    QMatrix S = QMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) S(i, j) -= cv[i] * alpha[j];
    return S;
}

namespace {

// Action of a reflection on a covector: beta -> beta - beta(coroot) alpha.
QVector reflect_covector(const QVector& beta, const QVector& alpha, const QVector& cv) {
    QVector r = beta;
    Rational f = beta.dot(cv);
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= f * alpha[i];
    return r;
}

std::string vec_str(const QVector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

RootSystemDiagnostics validate_root_system(const RootSystem& R) {
    for (const auto& a : R.roots) {
        if (!R.contains(-a))
            return {false, "negation closure violated: missing " + vec_str(-a)};
    }
    std::vector<QVector> coroots;
    coroots.reserve(R.roots.size());
    for (const auto& a : R.roots) coroots.push_back(coroot(R, a));
    for (std::size_t i = 0; i < R.roots.size(); ++i)
        for (std::size_t j = 0; j < R.roots.size(); ++j) {
            Rational c = R.roots[j].dot(coroots[i]);
            if (!c.is_integer())
                return {false, "integrality violated: " + vec_str(R.roots[j]) + " on coroot of " +
                                   vec_str(R.roots[i]) + " gives " + c.str()};
            QVector im = reflect_covector(R.roots[j], R.roots[i], coroots[i]);
            if (!R.contains(im))
                return {false, "reflection closure violated: s_" + vec_str(R.roots[i]) +
                                   " maps " + vec_str(R.roots[j]) + " to " + vec_str(im)};
        }
    return {true, ""};
}

std::size_t weyl_closure_cap() {
    if (const char* env = std::getenv("RDT_MAX_WEYL")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 10000;
}

WeylGroup weyl_group(const RootSystem& R, std::size_t cap, Exec exec) {
    if (cap == 0) cap = weyl_closure_cap();
    std::set<QMatrix> gen_set;
    for (const auto& a : R.roots) gen_set.insert(reflection(R, a));
    WeylGroup W;
    W.generators.assign(gen_set.begin(), gen_set.end());

    const QMatrix id = QMatrix::identity(R.ambient_dim());
    std::set<QMatrix> elems{id};
    std::vector<QMatrix> frontier{id};
    const bool par = use_parallel(exec);

    while (!frontier.empty()) {
        const std::size_t nf = frontier.size(), ng = W.generators.size();
        std::vector<QMatrix> products(nf * ng);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
        for (long long t = 0; t < static_cast<long long>(nf * ng); ++t) {
            products[t] = W.generators[t % ng] * frontier[t / ng];
        }
        std::vector<QMatrix> next;
        for (auto& p : products) {
            if (elems.insert(p).second) next.push_back(std::move(p));
        }
        if (elems.size() > cap)
            throw ResourceError("Weyl closure exceeded the element cap (" + std::to_string(cap) +
                                "); set RDT_MAX_WEYL to raise it");
        frontier = std::move(next);
    }
    W.elements.assign(elems.begin(), elems.end());
    return W;
}

std::vector<QVector> weyl_orbit(const WeylGroup& W, const QVector& v) {
    std::set<QVector> orbit{v};
    std::vector<QVector> frontier{v};
    while (!frontier.empty()) {
        std::vector<QVector> next;
        for (const auto& x : frontier)
            for (const auto& g : W.generators) {
                QVector y = g * x;
                if (orbit.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {orbit.begin(), orbit.end()};
}

Lattice gamma0(const RootSystem& R) {
    std::vector<QVector> gens;
    gens.reserve(R.roots.size() / 2);
    for (const auto& a : R.roots) {
        if (a < -a) continue;  // one generator per +- pair spans the same lattice
        QVector half = coroot(R, a);
        half *= Rational(1, 2);
        gens.push_back(half);
    }
    return lattice_from_generators(R.gram, gens);
}

bool gamma1_contains(const RootSystem& R, const Lattice& G) {
    if (G.ambient_dim() != R.ambient_dim())
        throw DimensionError("gamma1_contains: dimension mismatch");
    for (const auto& a : R.roots)
        for (std::size_t j = 0; j < G.rank(); ++j) {
            Rational v = Rational(2) * a.dot(G.basis().col(j));
            if (!v.is_integer()) return false;
        }
    return true;
}

namespace {

// Dual covectors of a full basis given by columns: row i of the inverse.
std::vector<QVector> dual_covectors(const std::vector<QVector>& basis) {
    const std::size_t r = basis.size();
    QMatrix F(basis.front().dim(), 0);
    for (const auto& v : basis) F.push_col(v);
    if (F.rows() != r) throw DomainError("dual basis requires a full basis");
    QMatrix Finv = F.inverse();
    std::vector<QVector> eps;
    eps.reserve(r);
    for (std::size_t i = 0; i < r; ++i) eps.push_back(Finv.row(i));
    return eps;
}

}  // namespace

std::vector<int> normalize_signs(const RootSystem& R, const OrthogonalBasis& basis) {
    const std::size_t r = basis.vectors.size();
    auto eps = dual_covectors(basis.vectors);

    std::set<QVector> doubled;
    for (const auto& a : R.roots) {
        QVector d = a;
        d *= Rational(2);
        doubled.insert(d);
    }

    std::vector<int> sign(r, 1);
    std::vector<bool> in(r, false);
    in[0] = true;
    std::size_t count = 1;
    while (count < r) {
        bool adjoined = false;
        for (std::size_t m = 0; m < r && !adjoined; ++m) {
            if (in[m]) continue;
            for (std::size_t l = 0; l < r && !adjoined; ++l) {
                if (!in[l]) continue;
                QVector el = eps[l];
                el *= Rational(sign[l]);
                if (doubled.count(el - eps[m])) {
                    in[m] = true;
                    ++count;
                    adjoined = true;
                } else if (doubled.count(el + eps[m])) {
                    sign[m] = -1;
                    in[m] = true;
                    ++count;
                    adjoined = true;
                }
            }
        }
        if (!adjoined)
            throw DomainError(
                "normalize_signs: no valid sign assignment (roots decomposable "
                "relative to the basis)");
    }
    // The inductive step guarantees this for valid inputs; verify anyway.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            QVector ei = eps[i], ej = eps[j];
            ei *= Rational(sign[i]);
            ej *= Rational(sign[j]);
            if (!doubled.count(ei - ej))
                throw DomainError("normalize_signs: eps_" + std::to_string(i + 1) + " - eps_" +
                                  std::to_string(j + 1) + " is not a doubled root after normalization");
        }
    return sign;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
    }
    return "?";
}

namespace {

// Integer coordinate rows of the doubled roots w.r.t. the signed dual basis.
// Throws on a shape violation.
std::set<std::vector<long>> doubled_root_patterns(const RootSystem& R,
                                                  const OrthogonalBasis& basis,
                                                  const std::vector<int>& signs) {
    const std::size_t r = basis.vectors.size();
    std::set<std::vector<long>> out;
    for (const auto& a : R.roots) {
        std::vector<long> c(r, 0);
        long nonzero = 0;
        bool shape_ok = true;
        for (std::size_t j = 0; j < r; ++j) {
            Rational v = Rational(2L * signs[j]) * a.dot(basis.vectors[j]);
            if (!v.is_integer()) { shape_ok = false; break; }
            Integer iv = v.num();
            if (!iv.fits_slong_p()) { shape_ok = false; break; }
            c[j] = iv.get_si();
            if (c[j] != 0) ++nonzero;
        }
        if (shape_ok) {
            // Admissible patterns: +-eps_j, +-2 eps_j, +-eps_j +- eps_k.
            if (nonzero == 1) {
                long v = 0;
                for (long x : c) if (x != 0) v = x;
                shape_ok = (std::labs(v) == 1 || std::labs(v) == 2);
            } else if (nonzero == 2) {
                shape_ok = std::all_of(c.begin(), c.end(), [](long x) { return std::labs(x) <= 1; });
            } else {
                shape_ok = false;
            }
        }
        if (!shape_ok)
            throw DomainError("shape violation: doubled root " + vec_str(a) +
                              " is not of the form +-eps_j, +-2eps_j, +-eps_j+-eps_k");
        out.insert(c);
    }
    return out;
}

std::set<std::vector<long>> family_pattern(Family f, std::size_t r) {
    std::set<std::vector<long>> s;
    auto unit = [&](std::size_t j, long v) {
        std::vector<long> c(r, 0);
        c[j] = v;
        return c;
    };
    auto pair = [&](std::size_t j, std::size_t k, long vj, long vk) {
        std::vector<long> c(r, 0);
        c[j] = vj;
        c[k] = vk;
        return c;
    };
    const bool shorts = (f == Family::B || f == Family::BC);
    const bool longs = (f == Family::C || f == Family::BC);
    if (f == Family::A) {
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (j != k) s.insert(pair(j, k, 1, -1));
        return s;
    }
    for (std::size_t j = 0; j < r; ++j) {
        if (shorts) { s.insert(unit(j, 1)); s.insert(unit(j, -1)); }
        if (longs) { s.insert(unit(j, 2)); s.insert(unit(j, -2)); }
    }
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = j + 1; k < r; ++k)
            for (long vj : {1L, -1L})
                for (long vk : {1L, -1L}) s.insert(pair(j, k, vj, vk));
    return s;
}

}  // namespace

FamilyTag classify_family(const RootSystem& R, const OrthogonalBasis& basis,
                          const std::vector<int>& signs) {
    const std::size_t r = basis.vectors.size();
    if (!basis.cubic) throw DomainError("classify_family requires a cubic basis");
    auto patterns = doubled_root_patterns(R, basis, signs);

    if (patterns.empty()) {
        if (r == 1) return FamilyTag{Family::A, 0};
        throw DomainError("pattern mismatch: empty root system in rank > 1 is decomposable");
    }
    bool shorts = false, longs = false, sums = false, diffs = false;
    for (const auto& c : patterns) {
        long nz = 0, sum = 0;
        for (long x : c) {
            if (x != 0) ++nz;
            sum += x;
        }
        if (nz == 1) (std::abs(sum) == 1 ? shorts : longs) = true;
        else (sum == 0 ? diffs : sums) = true;
    }
    Family f;
    if (shorts && longs) f = Family::BC;
    else if (shorts) f = Family::B;
    else if (longs) f = Family::C;
    else if (sums) f = Family::D;
    else f = Family::A;

    if (patterns != family_pattern(f, r))
        throw DomainError("pattern mismatch: doubled roots do not form a full " +
                          family_name(f) + " system");
    return FamilyTag{f, f == Family::A ? r - 1 : r};
}

std::vector<PositiveRoot> positive_roots(const RootSystem& R, const OrthogonalBasis& basis,
                                         const std::vector<int>& signs) {
    const std::size_t r = basis.vectors.size();
    std::vector<PositiveRoot> out;
    for (const auto& a : R.roots) {
        std::vector<long> c(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
            Rational v = Rational(2L * signs[j]) * a.dot(basis.vectors[j]);
            if (!v.is_integer()) throw DomainError("positive_roots: unclassified root system");
            c[j] = static_cast<long>(v.num().get_si());
        }
        std::size_t first = r, second = r;
        for (std::size_t j = 0; j < r; ++j)
            if (c[j] != 0) { if (first == r) first = j; else second = j; }
        if (second != r) {
            if (c[first] == 1 && c[second] == 1) out.push_back({a, RootShape::Sum, first, second});
            else if (c[first] == 1 && c[second] == -1)
                out.push_back({a, RootShape::Difference, first, second});
        } else if (first != r) {
            if (c[first] == 1) out.push_back({a, RootShape::Short, first, first});
            else if (c[first] == 2) out.push_back({a, RootShape::Long, first, first});
        }
    }
    std::sort(out.begin(), out.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        if (a.shape != b.shape) return static_cast<int>(a.shape) < static_cast<int>(b.shape);
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    });
    return out;
}

RootComponents irreducible_components(const RootSystem& R) {
    const std::size_t n = R.ambient_dim();
    const std::size_t m = R.roots.size();
    RootComponents rc;

    std::vector<QVector> hvec;
    hvec.reserve(m);
    QMatrix Ginv = R.gram.inverse();
    for (const auto& a : R.roots) hvec.push_back(Ginv * a);

    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!R.roots[i].dot(hvec[j]).is_zero()) parent[find(i)] = find(j);

    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < m; ++i)
        if (std::find(reps.begin(), reps.end(), find(i)) == reps.end()) reps.push_back(find(i));

    for (auto rep : reps) {
        std::vector<QVector> comp;
        QMatrix span(n, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (find(i) != rep) continue;
            comp.push_back(R.roots[i]);
            QMatrix trial = span;
            trial.push_col(hvec[i]);
            if (trial.rank() > span.rank()) span = trial;
        }
        rc.components.push_back(std::move(comp));
        rc.spans.push_back(std::move(span));
    }
    // Order components by their lexicographically least root.
    std::vector<std::size_t> idx(rc.components.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return rc.components[a].front() < rc.components[b].front();
    });
    RootComponents sorted;
    for (auto i : idx) {
        sorted.components.push_back(std::move(rc.components[i]));
        sorted.spans.push_back(std::move(rc.spans[i]));
    }

    QMatrix root_rows(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) root_rows(i, j) = R.roots[i][j];
    sorted.kernel = m ? nullspace(root_rows) : QMatrix::identity(n);
    return sorted;
}

}  // namespace rdt
