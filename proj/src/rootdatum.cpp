#include "rdt/rootdatum.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "rdt/error.hpp"

namespace rdt {

EuclideanRootDatum::EuclideanRootDatum(QMatrix g, QMatrix lattice_basis,
                                       std::vector<QVector> root_covectors)
    : gram(g), lattice(g, std::move(lattice_basis)), roots(std::move(g), std::move(root_covectors)) {}

std::string DatumType::str() const {
    return family_name(family) + std::to_string(display_rank()) + "-hat";
}

std::optional<Family> parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "BC") return Family::BC;
    return std::nullopt;
}

namespace {

std::string vec_str(const QVector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void check_type(const DatumType& t) {
    if (t.rank < 1) throw DomainError("datum type needs rank >= 1");
    if (t.family == Family::D && t.rank < 2)
        throw DomainError("family D needs rank >= 2 (rank 1 is reported as A0)");
    if (t.length_sq.sign() <= 0) throw DomainError("length_sq must be positive");
}

}  // namespace

DatumDiagnostics validate(const EuclideanRootDatum& d) {
    DatumDiagnostics diag;
    if (!d.lattice.full()) {
        diag.ok = false;
        diag.issues.push_back("lattice is not full in the ambient space");
        return diag;
    }
    auto rs = validate_root_system(d.roots);
    if (!rs.ok) {
        diag.ok = false;
        diag.issues.push_back("root axioms: " + rs.message);
        return diag;
    }
    Lattice g0 = gamma0(d.roots);
    for (std::size_t j = 0; j < g0.rank(); ++j) {
        QVector v = g0.basis().col(j);
        if (!membership(d.lattice, v)) {
            diag.ok = false;
            diag.issues.push_back("Gamma0 not contained in Gamma: witness " + vec_str(v));
        }
    }
    if (!gamma1_contains(d.roots, d.lattice)) {
        for (const auto& a : d.roots.roots)
            for (std::size_t j = 0; j < d.lattice.rank(); ++j) {
                Rational v = Rational(2) * a.dot(d.lattice.basis().col(j));
                if (!v.is_integer()) {
                    diag.ok = false;
                    diag.issues.push_back("Gamma not contained in Gamma1: 2*(" + vec_str(a) +
                                          ")(" + vec_str(d.lattice.basis().col(j)) + ") = " +
                                          v.str());
                    return diag;
                }
            }
    }
    return diag;
}

EuclideanRootDatum make_standard(const DatumType& t) {
    check_type(t);
    const std::size_t r = t.rank;
    QMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i) gram(i, i) = t.length_sq;

    // Doubled roots in the dual basis, halved into actual covectors.
    std::vector<QVector> roots;
    auto add = [&](std::vector<long> c) {
        QVector v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = Rational(c[i], 2);
        roots.push_back(v);
    };
    const bool shorts = (t.family == Family::B || t.family == Family::BC);
    const bool longs = (t.family == Family::C || t.family == Family::BC);
    if (t.family == Family::A) {
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (j != k) {
                    std::vector<long> c(r, 0);
                    c[j] = 1;
                    c[k] = -1;
                    add(c);
                }
    } else {
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<long> c(r, 0);
            if (shorts) { c[j] = 1; add(c); c[j] = -1; add(c); }
            if (longs) { c[j] = 2; add(c); c[j] = -2; add(c); }
        }
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k)
                for (long vj : {1L, -1L})
                    for (long vk : {1L, -1L}) {
                        std::vector<long> c(r, 0);
                        c[j] = vj;
                        c[k] = vk;
                        add(c);
                    }
    }
    return EuclideanRootDatum(gram, QMatrix::identity(r), std::move(roots));
}

AbelianGroupStructure fundamental_group(const EuclideanRootDatum& d) {
    return quotient_group(d.lattice, gamma0(d.roots));
}

namespace {

// Base blocks for the splitting search: one subspace per irreducible root
// component, plus the kernel split into orthogonal lattice axes when the
// kernel intersection lattice is rectangular (a single block otherwise).
struct SplitBlocks {
    std::vector<QMatrix> subspaces;
    std::vector<int> component_of;  // index into components, -1 for kernel blocks
    RootComponents rc;
};

SplitBlocks split_blocks(const EuclideanRootDatum& d) {
    SplitBlocks sb;
    sb.rc = irreducible_components(d.roots);
    for (std::size_t c = 0; c < sb.rc.components.size(); ++c) {
        sb.subspaces.push_back(sb.rc.spans[c]);
        sb.component_of.push_back(static_cast<int>(c));
    }
    if (sb.rc.kernel.cols() > 0) {
        Lattice K = intersect_with_subspace(d.lattice, sb.rc.kernel);
        auto ob = orthogonal_basis(K);
        if (ob) {
            for (const auto& v : ob->vectors) {
                QMatrix axis(d.ambient_dim(), 0);
                axis.push_col(v);
                sb.subspaces.push_back(axis);
                sb.component_of.push_back(-1);
            }
        } else {
            sb.subspaces.push_back(sb.rc.kernel);
            sb.component_of.push_back(-1);
        }
    }
    return sb;
}

// All set partitions of {0..n-1} as restricted growth strings, finest first.
std::vector<std::vector<std::size_t>> partitions_finest_first(std::size_t n) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> a(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t maxv) {
        if (i == n) {
            all.push_back(a);
            return;
        }
        for (std::size_t v = 0; v <= maxv + 1; ++v) {
            a[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (n > 0) rec(1, 0);
    std::stable_sort(all.begin(), all.end(),
                     [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
                         auto blocks = [](const std::vector<std::size_t>& g) {
                             return *std::max_element(g.begin(), g.end()) + 1;
                         };
                         return blocks(x) > blocks(y);
                     });
    return all;
}

}  // namespace

std::vector<EuclideanRootDatum> split(const EuclideanRootDatum& d) {
    SplitBlocks sb = split_blocks(d);
    const std::size_t nb = sb.subspaces.size();
    std::vector<EuclideanRootDatum> out;
    if (nb <= 1) {
        out.push_back(d);
        return out;
    }

    for (const auto& part : partitions_finest_first(nb)) {
        const std::size_t groups = *std::max_element(part.begin(), part.end()) + 1;
        if (groups == 1) break;  // trivial partition: indecomposable
        std::vector<QMatrix> merged(groups, QMatrix(d.ambient_dim(), 0));
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t j = 0; j < sb.subspaces[b].cols(); ++j)
                merged[part[b]].push_col(sb.subspaces[b].col(j));
        if (!splits_across(d.lattice, merged)) continue;

        // Finest valid partition found; build one sub-datum per group.
        for (std::size_t g = 0; g < groups; ++g) {
            Lattice Lg = intersect_with_subspace(d.lattice, merged[g]);
            const QMatrix& B = Lg.basis();
            QMatrix gram_g = B.transpose() * (d.gram * B);
            std::vector<QVector> roots_g;
            for (std::size_t b = 0; b < nb; ++b) {
                if (part[b] != g || sb.component_of[b] < 0) continue;
                for (const auto& alpha : sb.rc.components[sb.component_of[b]])
                    roots_g.push_back(B.transpose() * alpha);
            }
            out.emplace_back(gram_g, QMatrix::identity(Lg.rank()), std::move(roots_g));
        }
        return out;
    }
    out.push_back(d);
    return out;
}

ClassificationReport classify(const EuclideanRootDatum& d) {
    auto diag = validate(d);
    if (!diag.ok) throw DomainError("classify: invalid datum: " + diag.issues.front());

    auto ob = orthogonal_basis(d.lattice);
    if (!ob)
        throw NotRectangularError("classify: the unit lattice is not rectangular");

    auto factors = split(d);
    if (factors.size() > 1) throw DecomposableError(std::move(factors));

    if (!ob->cubic)
        throw DomainError("classify: indecomposable datum with non-cubic orthogonal basis");

    ClassificationReport rep;
    rep.cubic_basis = *ob;
    rep.sign_vector = normalize_signs(d.roots, *ob);
    FamilyTag tag = classify_family(d.roots, *ob, rep.sign_vector);
    rep.datum_type = DatumType{tag.family, d.ambient_dim(), ob->squared_lengths.front()};
    rep.orbit_case = tag.family == Family::A ? OrbitCase::II : OrbitCase::I;
    rep.fundamental_group = fundamental_group(d);
    return rep;
}

bool admits_polysphere(const EuclideanRootDatum& d) {
    if (!orthogonal_basis(d.lattice)) return false;
    return fundamental_group(d).trivial();
}

namespace {

std::vector<Rational> sorted_root_norms(const EuclideanRootDatum& d) {
    std::vector<Rational> ns;
    QMatrix Ginv = d.gram.inverse();
    for (const auto& a : d.roots.roots) ns.push_back(a.dot(Ginv * a));
    std::sort(ns.begin(), ns.end());
    return ns;
}

Rational pairing(const QMatrix& G, const QVector& x, const QVector& y) {
    Rational s;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.dim(); ++j) s += x[i] * G(i, j) * y[j];
    }
    return s;
}

}  // namespace

std::optional<QMatrix> is_isomorphic(const EuclideanRootDatum& d1, const EuclideanRootDatum& d2) {
    if (d1.ambient_dim() > 6 || d2.ambient_dim() > 6)
        throw ResourceError("isomorphism search capped at rank 6");
    if (d1.ambient_dim() != d2.ambient_dim()) return std::nullopt;
    if (d1.roots.roots.size() != d2.roots.roots.size()) return std::nullopt;
    if (sorted_root_norms(d1) != sorted_root_norms(d2)) return std::nullopt;

    const std::size_t r = d1.ambient_dim();
    const QMatrix& B1 = d1.lattice.basis();
    QMatrix pair1(r, r);  // Gram matrix of the source basis
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) pair1(i, j) = pairing(d1.gram, B1.col(i), B1.col(j));

    // Candidate images per source basis vector: lattice vectors of d2 with
    // the same squared length, both signs, in lexicographic order.
    std::vector<std::vector<QVector>> cands(r);
    for (std::size_t i = 0; i < r; ++i) {
        auto half = vectors_of_norm(d2.lattice, pair1(i, i));
        for (const auto& v : half) {
            cands[i].push_back(v);
            cands[i].push_back(-v);
        }
        std::sort(cands[i].begin(), cands[i].end());
        if (cands[i].empty()) return std::nullopt;
    }

    std::set<QVector> roots2(d2.roots.roots.begin(), d2.roots.roots.end());
    std::vector<QVector> img;
    std::optional<QMatrix> witness;

    std::function<bool()> dfs = [&]() -> bool {
        const std::size_t i = img.size();
        if (i == r) {
            QMatrix W(r, 0);
            for (const auto& v : img) W.push_col(v);
            // Image lattice must be all of Gamma2, not a sublattice.
            QMatrix X(r, 0);
            for (std::size_t j = 0; j < r; ++j) {
                auto x = integer_solve(d2.lattice.basis(), W.col(j));
                if (!x) return false;
                X.push_col(*x);
            }
            Rational det = X.det();
            if (det != Rational(1) && det != Rational(-1)) return false;
            QMatrix phi = W * B1.inverse();
            QMatrix cov = phi.inverse().transpose();
            for (const auto& a : d1.roots.roots)
                if (!roots2.count(cov * a)) return false;
            witness = phi;
            return true;
        }
        for (const auto& w : cands[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (pairing(d2.gram, w, img[j]) != pair1(i, j)) ok = false;
            if (!ok) continue;
            img.push_back(w);
            if (dfs()) return true;
            img.pop_back();
        }
        return false;
    };
    dfs();
    return witness;
}

}  // namespace rdt
